#include <arrowing/error.hpp>
#include <arrowing/formula.hpp>
#include <arrowing/graph.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace arrowing {

namespace {

constexpr int max_draws_without_news = 2000;
constexpr unsigned max_oracle_variables = 30;

std::vector<std::int64_t> key_of(const Formula223& phi)
{
    std::vector<std::int64_t> key{phi.variable_count};
    for (const auto& c : phi.clauses)
        for (const auto& l : c)
            key.push_back(l.positive ? static_cast<std::int64_t>(l.variable) + 1 : -static_cast<std::int64_t>(l.variable) - 1);
    return key;
}

std::vector<std::string_view> split(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long to_int(std::string_view s, std::size_t line_no)
{
    long long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        fail(ErrorCode::syntax, "line " + std::to_string(line_no) + ": '" + std::string(s) + "' is not an integer");
    return v;
}

} // namespace

void validate_formula(const Formula223& phi)
{
    if (phi.variable_count % 3 != 0)
        fail(ErrorCode::constraint_violation,
            std::to_string(phi.variable_count) + " variables cannot fill 3-literal clauses with 4 occurrences each");
    if (phi.clauses.size() * 3 != 4 * static_cast<std::size_t>(phi.variable_count))
        fail(ErrorCode::constraint_violation, "expected " + std::to_string(4 * phi.variable_count / 3) +
                " clauses, found " + std::to_string(phi.clauses.size()));
    std::vector<unsigned> pos(phi.variable_count, 0), neg(phi.variable_count, 0);
    for (std::size_t i = 0; i < phi.clauses.size(); ++i) {
        const auto& c = phi.clauses[i];
        for (std::size_t j = 0; j < 3; ++j) {
            if (c[j].variable >= phi.variable_count)
                fail(ErrorCode::constraint_violation,
                    "clause " + std::to_string(i + 1) + " uses variable " + std::to_string(c[j].variable + 1) +
                        " beyond " + std::to_string(phi.variable_count));
            for (std::size_t k = 0; k < j; ++k)
                if (c[k].variable == c[j].variable)
                    fail(ErrorCode::constraint_violation, "clause " + std::to_string(i + 1) + " repeats variable " +
                            std::to_string(c[j].variable + 1));
            ++(c[j].positive ? pos : neg)[c[j].variable];
        }
    }
    for (unsigned v = 0; v < phi.variable_count; ++v)
        if (pos[v] != 2 || neg[v] != 2)
            fail(ErrorCode::constraint_violation, "variable " + std::to_string(v + 1) + " occurs " +
                    std::to_string(pos[v]) + " times positive and " + std::to_string(neg[v]) +
                    " times negative");
}

Formula223 parse_formula(std::string_view text)
{
    Formula223 phi;
    bool header = false;
    long long declared = 0;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        auto line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto tokens = split(line);
        if (tokens.empty() || tokens[0] == "c")
            continue;
        if (!header) {
            if (tokens.size() != 4 || tokens[0] != "p" || tokens[1] != "223sat")
                fail(ErrorCode::syntax, "line " + std::to_string(line_no) + ": expected 'p 223sat <n> <m>'");
            auto n = to_int(tokens[2], line_no);
            declared = to_int(tokens[3], line_no);
            if (n < 0 || declared < 0)
                fail(ErrorCode::syntax, "negative counts in header");
            phi.variable_count = static_cast<unsigned>(n);
            header = true;
            continue;
        }
        if (tokens.size() == 4 && tokens[3] == "0")
            tokens.pop_back();
        if (tokens.size() != 3)
            fail(ErrorCode::syntax, "line " + std::to_string(line_no) + ": a clause has exactly three literals");
        Clause c;
        for (std::size_t j = 0; j < 3; ++j) {
            auto v = to_int(tokens[j], line_no);
            if (v == 0)
                fail(ErrorCode::syntax, "line " + std::to_string(line_no) + ": literal 0");
            c[j] = {static_cast<unsigned>((v > 0 ? v : -v) - 1), v > 0};
        }
        phi.clauses.push_back(c);
    }
    if (!header)
        fail(ErrorCode::syntax, "missing 'p 223sat' header");
    if (static_cast<long long>(phi.clauses.size()) != declared)
        fail(ErrorCode::syntax, "header declares " + std::to_string(declared) + " clauses, found " +
                std::to_string(phi.clauses.size()));
    validate_formula(phi);
    return phi;
}

std::string formula_to_text(const Formula223& phi)
{
    std::ostringstream out;
    out << "p 223sat " << phi.variable_count << ' ' << phi.clauses.size() << '\n';
    for (const auto& c : phi.clauses) {
        for (const auto& l : c)
            out << (l.positive ? "" : "-") << l.variable + 1 << ' ';
        out << "0\n";
    }
    return out.str();
}

Formula223 read_formula_file(const std::string& path) { return parse_formula(read_text_file(path)); }

bool literal_true(const Literal& l, const Assignment& a) { return a.at(l.variable) == l.positive; }

bool satisfies(const Formula223& phi, const Assignment& a)
{
    if (a.size() != phi.variable_count)
        return false;
    return std::all_of(phi.clauses.begin(), phi.clauses.end(), [&](const Clause& c) {
        return std::any_of(c.begin(), c.end(), [&](const Literal& l) { return literal_true(l, a); });
    });
}

std::optional<Assignment> sat_oracle(const Formula223& phi)
{
    if (phi.variable_count > max_oracle_variables)
        fail(ErrorCode::precondition, "brute-force oracle is limited to 30 variables");
    Assignment a(phi.variable_count);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << phi.variable_count); ++bits) {
        for (unsigned v = 0; v < phi.variable_count; ++v)
            a[v] = bits >> v & 1;
        if (satisfies(phi, a))
            return a;
    }
    return std::nullopt;
}

Formula223 canonical_formula(const Formula223& phi)
{
    Formula223 out = phi;
    for (auto& c : out.clauses)
        std::sort(c.begin(), c.end());
    std::sort(out.clauses.begin(), out.clauses.end());
    return out;
}

FormulaGenerator::FormulaGenerator(unsigned n, std::uint64_t seed) : n_(n), rng_(seed)
{
    if (n % 3 != 0)
        fail(ErrorCode::precondition, "the variable count must be divisible by 3, got " + std::to_string(n));
}

std::optional<Formula223> FormulaGenerator::next()
{
    std::vector<Literal> slots;
    for (unsigned v = 0; v < n_; ++v)
        for (bool positive : {true, true, false, false})
            slots.push_back({v, positive});
    for (int attempt = 0; attempt < max_draws_without_news; ++attempt) {
        std::shuffle(slots.begin(), slots.end(), rng_);
        Formula223 phi{n_, {}};
        bool ok = true;
        for (std::size_t i = 0; i + 2 < slots.size() && ok; i += 3) {
            Clause c{slots[i], slots[i + 1], slots[i + 2]};
            ok = c[0].variable != c[1].variable && c[0].variable != c[2].variable && c[1].variable != c[2].variable;
            phi.clauses.push_back(c);
        }
        if (!ok)
            continue;
        if (seen_.insert(key_of(canonical_formula(phi))).second) {
            validate_formula(phi);
            return phi;
        }
    }
    return std::nullopt;
}

std::vector<Formula223> generate_formulas(unsigned n, std::uint64_t seed, std::size_t count)
{
    FormulaGenerator gen(n, seed);
    std::vector<Formula223> out;
    while (out.size() < count) {
        auto phi = gen.next();
        if (!phi)
            break;
        out.push_back(std::move(*phi));
    }
    return out;
}

} // namespace arrowing
