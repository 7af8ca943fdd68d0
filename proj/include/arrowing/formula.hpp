#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace arrowing {

struct Literal {
    unsigned variable = 0; // 0-based
    bool positive = true;
    friend auto operator<=>(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

// A (2,2)-3SAT instance: three distinct variables per clause, every variable
// twice positive and twice negative.
struct Formula223 {
    unsigned variable_count = 0;
    std::vector<Clause> clauses;
    friend bool operator==(const Formula223&, const Formula223&) = default;
};

using Assignment = std::vector<bool>;

// Throws CONSTRAINT_VIOLATION naming the offending clause or variable.
void validate_formula(const Formula223& phi);

// Header "p 223sat <n> <m>", then m lines of three signed 1-based literals
// with an optional trailing 0.  Lines starting with 'c' or '#' are comments.
Formula223 parse_formula(std::string_view text);
std::string formula_to_text(const Formula223& phi);
Formula223 read_formula_file(const std::string& path);

bool literal_true(const Literal& l, const Assignment& a);
bool satisfies(const Formula223& phi, const Assignment& a);
std::optional<Assignment> sat_oracle(const Formula223& phi);

// Clauses with sorted literals, then sorted clause order.
Formula223 canonical_formula(const Formula223& phi);

// Deterministic stream of distinct random instances on n variables.
class FormulaGenerator {
  public:
    FormulaGenerator(unsigned n, std::uint64_t seed);

    // Empty once no new instance turned up in many consecutive draws.
    std::optional<Formula223> next();

  private:
    unsigned n_;
    std::mt19937_64 rng_;
    std::set<std::vector<std::int64_t>> seen_;
};

std::vector<Formula223> generate_formulas(unsigned n, std::uint64_t seed, std::size_t count);

} // namespace arrowing
