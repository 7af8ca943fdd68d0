#include <arrowing/error.hpp>
#include <arrowing/formula.hpp>

#include <doctest.h>

#include <functional>
#include <set>

using namespace arrowing;

namespace {

const char* const example = "p 223sat 3 4\n"
                            "1 2 3 0\n"
                            "1 -2 -3 0\n"
                            "-1 2 -3 0\n"
                            "-1 -2 3 0\n";

ErrorCode code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const ArrowingError& e) {
        return e.code();
    }
    FAIL("expected an ArrowingError");
    return ErrorCode::precondition;
}

bool brute_satisfiable(const Formula223& phi)
{
    for (unsigned bits = 0; bits < (1u << phi.variable_count); ++bits) {
        bool all = true;
        for (const auto& c : phi.clauses) {
            bool any = false;
            for (const auto& l : c)
                any = any || (((bits >> l.variable) & 1u) == (l.positive ? 1u : 0u));
            all = all && any;
        }
        if (all)
            return true;
    }
    return false;
}

} // namespace

TEST_CASE("parse the three-variable example")
{
    auto phi = parse_formula(example);
    CHECK(phi.variable_count == 3);
    REQUIRE(phi.clauses.size() == 4);
    CHECK(phi.clauses[1][1] == Literal{1, false});
    CHECK(parse_formula(formula_to_text(phi)) == phi);
    CHECK(parse_formula("c comment\np 223sat 3 4\n1 2 3\n1 -2 -3\n-1 2 -3 0\n# x\n-1 -2 3\n") == phi);
}

TEST_CASE("formula constraint violations")
{
    CHECK(code_of([] { parse_formula("p 223sat 3 4\n1 1 3\n1 -2 -3\n-1 2 -3\n-1 -2 3\n"); }) ==
        ErrorCode::constraint_violation);
    CHECK(code_of([] { parse_formula("p 223sat 3 4\n1 2 3\n1 -2 -3\n1 2 -3\n-1 -2 3\n"); }) ==
        ErrorCode::constraint_violation);
    CHECK(code_of([] { parse_formula("p 223sat 3 3\n1 2 3\n1 -2 -3\n-1 2 -3\n"); }) ==
        ErrorCode::constraint_violation);
    CHECK(code_of([] { parse_formula("p 223sat 3 4\n1 2 4\n1 -2 -3\n-1 2 -3\n-1 -2 3\n"); }) ==
        ErrorCode::constraint_violation);
}

TEST_CASE("formula syntax errors")
{
    CHECK(code_of([] { parse_formula("1 2 3\n"); }) == ErrorCode::syntax);
    CHECK(code_of([] { parse_formula("p cnf 3 4\n"); }) == ErrorCode::syntax);
    CHECK(code_of([] { parse_formula("p 223sat 3 4\n1 2\n"); }) == ErrorCode::syntax);
    CHECK(code_of([] { parse_formula("p 223sat 3 4\n1 2 x\n"); }) == ErrorCode::syntax);
    CHECK(code_of([] { parse_formula("p 223sat 3 4\n1 2 3 0\n"); }) == ErrorCode::syntax);
    CHECK(code_of([] { parse_formula(""); }) == ErrorCode::syntax);
}

TEST_CASE("sat oracle examples")
{
    auto phi = parse_formula(example);
    CHECK(satisfies(phi, {true, true, true}));
    CHECK_FALSE(satisfies(phi, {false, false, false}));
    auto a = sat_oracle(phi);
    REQUIRE(a.has_value());
    CHECK(satisfies(phi, *a));

    Formula223 empty;
    auto e = sat_oracle(empty);
    REQUIRE(e.has_value());
    CHECK(e->empty());
    CHECK(parse_formula("p 223sat 0 0\n") == empty);
}

TEST_CASE("sat oracle agrees with an independent bit sweep")
{
    std::size_t unsat = 0;
    for (unsigned n : {3u, 6u, 9u})
        for (const auto& phi : generate_formulas(n, 17, 150)) {
            auto a = sat_oracle(phi);
            CHECK(a.has_value() == brute_satisfiable(phi));
            if (a)
                CHECK(satisfies(phi, *a));
            unsat += !a;
        }
    MESSAGE("unsatisfiable instances in sweep: " << unsat);
}

TEST_CASE("generator examples")
{
    for (const auto& phi : generate_formulas(3, 99, 10)) {
        CHECK(phi.clauses.size() == 4);
        CHECK_NOTHROW(validate_formula(phi));
    }
    auto six = generate_formulas(6, 1, 50);
    CHECK(six.size() == 50);
    std::set<std::string> distinct;
    for (const auto& phi : six) {
        CHECK(phi.clauses.size() == 8);
        CHECK_NOTHROW(validate_formula(phi));
        distinct.insert(formula_to_text(canonical_formula(phi)));
    }
    CHECK(distinct.size() == six.size());
    CHECK(generate_formulas(6, 1, 50) == six);
    CHECK(generate_formulas(6, 2, 50) != six);
    CHECK(code_of([] { FormulaGenerator(4, 0); }) == ErrorCode::precondition);
    CHECK(generate_formulas(0, 5, 3).size() == 1);
}
