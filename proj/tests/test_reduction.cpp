#include <arrowing/error.hpp>
#include <arrowing/reduction.hpp>
#include <arrowing/subgraph.hpp>

#include <doctest.h>

#include <functional>
#include <map>

using namespace arrowing;

namespace {

const Graph p3 = path_graph(3);

const GadgetSuite& suite(const std::string& name)
{
    static std::map<std::string, GadgetSuite> cache;
    auto it = cache.find(name);
    if (it == cache.end())
        it = cache.emplace(name, forge_p3_suite(graph_from_shorthand(name))).first;
    return it->second;
}

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

Formula223 example()
{
    return parse_formula("p 223sat 3 4\n1 2 3\n1 -2 -3\n-1 2 -3\n-1 -2 3\n");
}

} // namespace

TEST_CASE("G_phi for the three-variable example")
{
    auto out = build_g_phi(example(), ReductionGadgets::from_suite(suite("k4")));
    CHECK(out.variables.size() == 3);
    CHECK(out.clauses.size() == 4);
    CHECK(out.wiring.size() == 12);
    CHECK(out.g_phi.vertex_count() == expected_vertex_count(out));
    CHECK(reduction_copies_reconcile(out));
    CHECK(count_copies(out.g_phi, out.h) == out.intended_copies);

    std::map<Vertex, int> used;
    for (const auto& w : out.wiring) {
        ++used[w.output];
        const auto& vmap = out.variables[w.literal.variable].map;
        const auto& roles = out.variable.roles.at(w.literal.positive ? "unnegated_output" : "negated_output");
        CHECK((w.output == vmap[roles[0]] || w.output == vmap[roles[1]]));
        CHECK(w.input == out.clauses[w.clause].map[out.clause.role("input", w.slot)]);
    }
    CHECK(used.size() == 12);

    auto j = reduction_to_json(out);
    CHECK(j["wiring"].size() == 12);
    CHECK(j["inventory"]["clause_gadget"]["count"] == 4);
}

TEST_CASE("empty formula gives the empty graph")
{
    auto out = build_g_phi(Formula223{}, ReductionGadgets::from_suite(suite("k4")));
    CHECK(out.g_phi.vertex_count() == 0);
    CHECK(reduction_copies_reconcile(out));
    auto c = assignment_to_coloring(out, {});
    CHECK(coloring_to_assignment(out, c).empty());
}

TEST_CASE("missing gadgets are reported by kind")
{
    auto gadgets = ReductionGadgets::from_suite(suite("k4"));
    gadgets.clause.reset();
    try {
        build_g_phi(example(), gadgets);
        FAIL("expected MISSING_GADGET");
    } catch (const ArrowingError& e) {
        CHECK(e.code() == ErrorCode::missing_gadget);
        CHECK(std::string(e.what()).find("clause_gadget") != std::string::npos);
    }
    auto unverified = ReductionGadgets::from_suite(suite("k4"));
    unverified.variable->verified = false;
    CHECK(code_of([&] { build_g_phi(example(), unverified); }) == ErrorCode::missing_gadget);
}

TEST_CASE("round trip on generated satisfiable formulas")
{
    for (const char* name : {"k4", "c4", "j4", "c5"}) {
        auto gadgets = ReductionGadgets::from_suite(suite(name));
        for (unsigned n : {3u, 6u})
            for (const auto& phi : generate_formulas(n, 2024, 5)) {
                CAPTURE(name);
                CAPTURE(formula_to_text(phi));
                auto a = sat_oracle(phi);
                if (!a)
                    continue;
                auto out = build_g_phi(phi, gadgets);
                CHECK(reduction_copies_reconcile(out));
                CHECK(out.g_phi.vertex_count() == expected_vertex_count(out));
                auto c = assignment_to_coloring(out, *a);
                CHECK(is_good(c, p3, out.h));
                auto back = coloring_to_assignment(out, c);
                CHECK(satisfies(phi, back));
            }
    }
}

TEST_CASE("every satisfying assignment maps to a good colouring")
{
    auto phi = example();
    auto out = build_g_phi(phi, ReductionGadgets::from_suite(suite("c5")));
    int checked = 0;
    for (unsigned bits = 0; bits < 8; ++bits) {
        Assignment a{bool(bits & 1), bool(bits & 2), bool(bits & 4)};
        if (!satisfies(phi, a)) {
            CHECK(code_of([&] { assignment_to_coloring(out, a); }) == ErrorCode::precondition);
            continue;
        }
        ++checked;
        auto c = assignment_to_coloring(out, a);
        CHECK(is_good(c, p3, out.h));
        CHECK(coloring_to_assignment(out, c) == a);
    }
    CHECK(checked > 0);
}

TEST_CASE("independently found colourings decode to satisfying assignments")
{
    for (const char* name : {"k4", "j4"}) {
        auto out = build_g_phi(example(), ReductionGadgets::from_suite(suite(name)));
        auto r = find_good_coloring(out.g_phi, p3, out.h, SearchBudget{50'000'000});
        REQUIRE(r.status == SearchStatus::found);
        CHECK(satisfies(out.formula, coloring_to_assignment(out, *r.coloring)));
    }
}

TEST_CASE("decode rejects bad colourings and detects inconsistent outputs")
{
    auto out = build_g_phi(example(), ReductionGadgets::from_suite(suite("k4")));
    CHECK(code_of([&] { coloring_to_assignment(out, EdgeColoring::all_blue(out.g_phi)); }) ==
        ErrorCode::precondition);

    auto c = assignment_to_coloring(out, {true, true, true});
    auto crossed = out;
    crossed.variable.roles["negated_output"] = crossed.variable.roles["unnegated_output"];
    CHECK(code_of([&] { coloring_to_assignment(crossed, c); }) == ErrorCode::inconsistent_signals);
}

TEST_CASE("missing template colourings surface as TEMPLATE_GAP")
{
    auto out = build_g_phi(example(), ReductionGadgets::from_suite(suite("k4")));
    out.clause.templates.erase("row0");
    CHECK(code_of([&] { assignment_to_coloring(out, {true, true, true}); }) == ErrorCode::template_gap);
}

TEST_CASE("unsatisfiable instances, when the sweep finds any, do not get good colourings")
{
    std::size_t unsat = 0;
    std::size_t inconclusive = 0;
    auto gadgets = ReductionGadgets::from_suite(suite("k4"));
    for (unsigned n : {3u, 6u, 9u})
        for (const auto& phi : generate_formulas(n, 5, 200)) {
            if (sat_oracle(phi))
                continue;
            ++unsat;
            auto out = build_g_phi(phi, gadgets);
            auto r = find_good_coloring(out.g_phi, p3, out.h, SearchBudget{5'000'000});
            CHECK(r.status != SearchStatus::found);
            inconclusive += r.status == SearchStatus::budget_exceeded;
        }
    MESSAGE("unsatisfiable: " << unsat << ", inconclusive: " << inconclusive);
}
