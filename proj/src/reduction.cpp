#include <arrowing/archive.hpp>
#include <arrowing/error.hpp>
#include <arrowing/reduction.hpp>
#include <arrowing/subgraph.hpp>

#include <unordered_set>

namespace arrowing {

namespace {

const Gadget& require_gadget(const std::optional<Gadget>& g, GadgetKind kind)
{
    if (!g)
        fail(ErrorCode::missing_gadget, "no " + std::string(gadget_kind_name(kind)) + " available");
    if (g->kind != kind || !g->verified)
        fail(ErrorCode::missing_gadget, "no verified " + std::string(gadget_kind_name(kind)) + " available");
    return *g;
}

const std::vector<Color>& require_template(const Gadget& g, const std::string& name)
{
    auto it = g.templates.find(name);
    if (it == g.templates.end())
        fail(ErrorCode::template_gap,
            std::string(gadget_kind_name(g.kind)) + " has no stored colouring '" + name + "'");
    return it->second;
}

void paint(std::vector<Color>& colors, const Graph& host, const Gadget& piece, const Placement& at,
    const std::vector<Color>& pattern)
{
    for (EdgeId id = 0; id < piece.graph.edge_count(); ++id) {
        auto e = piece.graph.edge(id);
        colors[host.edge_id(at.map[e.u], at.map[e.v])] = pattern[id];
    }
}

// Whether v has a red edge to another vertex of the same placement.
bool red_inside(const EdgeColoring& c, Vertex v, const std::unordered_set<Vertex>& members)
{
    const auto& g = c.graph();
    auto nb = g.neighbors(v);
    auto ids = g.incident_edges(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
        if (members.count(nb[i]) && c.color(ids[i]) == Color::red)
            return true;
    return false;
}

} // namespace

ReductionGadgets ReductionGadgets::from_suite(const GadgetSuite& suite)
{
    return {suite.variable, suite.clause, suite.extender};
}

ReductionOutput build_g_phi(const Formula223& phi, const ReductionGadgets& gadgets, SearchBudget budget)
{
    validate_formula(phi);
    const auto& var = require_gadget(gadgets.variable, GadgetKind::variable_gadget);
    const auto& cl = require_gadget(gadgets.clause, GadgetKind::clause_gadget);
    const auto& ext = require_gadget(gadgets.extender, GadgetKind::signal_extender);
    if (!(var.h == cl.h) || !(var.h == ext.h))
        fail(ErrorCode::precondition, "gadgets belong to different patterns h");

    ReductionOutput out;
    out.formula = phi;
    out.h = var.h;
    out.variable = var;
    out.clause = cl;
    out.chain = extender_chain(ext, chain_length_for(var.h), budget);

    GraphBuilder b;
    for (unsigned v = 0; v < phi.variable_count; ++v) {
        out.variables.push_back({b.add_graph(var.graph)});
        out.intended_copies += var.intended_copies;
    }
    for (std::size_t c = 0; c < phi.clauses.size(); ++c) {
        out.clauses.push_back({b.add_graph(cl.graph)});
        out.intended_copies += cl.intended_copies;
    }
    std::vector<unsigned> pos_seen(phi.variable_count, 0), neg_seen(phi.variable_count, 0);
    for (unsigned c = 0; c < phi.clauses.size(); ++c)
        for (unsigned j = 0; j < 3; ++j) {
            const auto& lit = phi.clauses[c][j];
            auto& seen = lit.positive ? pos_seen : neg_seen;
            const char* role = lit.positive ? "unnegated_output" : "negated_output";
            Vertex output = out.variables[lit.variable].map[var.role(role, seen[lit.variable]++)];
            Vertex input = out.clauses[c].map[cl.role("input", j)];
            std::pair<Vertex, Vertex> glue[] = {{out.chain.role("in"), output}, {out.chain.role("out"), input}};
            out.wiring.push_back({c, j, lit, output, input, {b.add_graph(out.chain.graph, glue)}});
            out.intended_copies += out.chain.intended_copies;
        }
    out.g_phi = b.build();
    return out;
}

bool reduction_copies_reconcile(const ReductionOutput& out)
{
    return count_copies(out.g_phi, out.h) == out.intended_copies;
}

std::size_t expected_vertex_count(const ReductionOutput& out)
{
    return out.variables.size() * out.variable.graph.vertex_count() +
        out.clauses.size() * out.clause.graph.vertex_count() +
        out.wiring.size() * (out.chain.graph.vertex_count() - 2);
}

EdgeColoring assignment_to_coloring(const ReductionOutput& out, const Assignment& assignment)
{
    if (!satisfies(out.formula, assignment))
        fail(ErrorCode::precondition, "assignment does not satisfy the formula");
    std::vector<Color> colors(out.g_phi.edge_count(), Color::blue);
    for (unsigned v = 0; v < out.variables.size(); ++v)
        paint(colors, out.g_phi, out.variable, out.variables[v],
            require_template(out.variable, assignment[v] ? "true" : "false"));
    std::vector<unsigned> rows(out.clauses.size(), 0);
    for (const auto& w : out.wiring) {
        bool value = literal_true(w.literal, assignment);
        // A true literal leaves the clause input free of chain red; a false
        // one passes red on to it.
        paint(colors, out.g_phi, out.chain, w.chain, require_template(out.chain, value ? "out_free" : "in_free"));
        if (!value)
            rows[w.clause] |= 1u << w.slot;
    }
    for (unsigned c = 0; c < out.clauses.size(); ++c)
        paint(colors, out.g_phi, out.clause, out.clauses[c],
            require_template(out.clause, "row" + std::to_string(rows[c])));
    EdgeColoring coloring(out.g_phi, std::move(colors));
    if (!is_good(coloring, path_graph(3), out.h))
        fail(ErrorCode::construction_failed, "assembled colouring of G_phi is not good");
    return coloring;
}

Assignment coloring_to_assignment(const ReductionOutput& out, const EdgeColoring& coloring)
{
    if (!(coloring.graph() == out.g_phi))
        fail(ErrorCode::precondition, "colouring is not of this G_phi");
    if (!is_good(coloring, path_graph(3), out.h))
        fail(ErrorCode::precondition, "colouring is not (P3, h)-good");
    Assignment a(out.variables.size(), false);
    for (unsigned v = 0; v < out.variables.size(); ++v) {
        const auto& map = out.variables[v].map;
        std::unordered_set<Vertex> members(map.begin(), map.end());
        auto any_free = [&](const char* role) {
            for (auto x : out.variable.roles.at(role))
                if (!red_inside(coloring, map[x], members))
                    return true;
            return false;
        };
        bool u_free = any_free("unnegated_output");
        bool n_free = any_free("negated_output");
        if (u_free && n_free)
            fail(ErrorCode::inconsistent_signals,
                "variable " + std::to_string(v + 1) + " has a free unnegated and a free negated output");
        a[v] = u_free;
    }
    if (!satisfies(out.formula, a))
        fail(ErrorCode::inconsistent_signals, "decoded assignment does not satisfy the formula");
    return a;
}

nlohmann::json reduction_to_json(const ReductionOutput& out)
{
    nlohmann::json j;
    j["h"] = pattern_name(out.h);
    j["formula"] = formula_to_text(out.formula);
    j["graph"] = to_edge_list(out.g_phi);
    j["vertex_count"] = out.g_phi.vertex_count();
    j["edge_count"] = out.g_phi.edge_count();
    j["intended_copies"] = out.intended_copies;
    auto wiring = nlohmann::json::array();
    for (const auto& w : out.wiring)
        wiring.push_back({{"clause", w.clause}, {"slot", w.slot},
            {"literal", w.literal.positive ? static_cast<long long>(w.literal.variable) + 1
                                           : -static_cast<long long>(w.literal.variable) - 1},
            {"output", w.output}, {"input", w.input}, {"chain", w.chain.map}});
    j["wiring"] = wiring;
    auto placements = [](const std::vector<Placement>& ps) {
        auto arr = nlohmann::json::array();
        for (const auto& p : ps)
            arr.push_back(p.map);
        return arr;
    };
    j["inventory"] = {
        {"variable_gadget", {{"count", out.variables.size()}, {"vertices", out.variable.graph.vertex_count()},
                                {"copies_each", out.variable.intended_copies}, {"digest", out.variable.log.digest()},
                                {"placements", placements(out.variables)}}},
        {"clause_gadget", {{"count", out.clauses.size()}, {"vertices", out.clause.graph.vertex_count()},
                              {"copies_each", out.clause.intended_copies}, {"digest", out.clause.log.digest()},
                              {"placements", placements(out.clauses)}}},
        {"extender_chain", {{"count", out.wiring.size()}, {"vertices", out.chain.graph.vertex_count()},
                               {"copies_each", out.chain.intended_copies}, {"digest", out.chain.log.digest()}}},
    };
    return j;
}

} // namespace arrowing
