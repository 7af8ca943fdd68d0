#include <arrowing/arrowing.hpp>
#include <arrowing/subgraph.hpp>

#include <algorithm>

namespace arrowing {

std::optional<unsigned> star_size(const Graph& f)
{
    auto m = f.edge_count();
    if (m == 0 || f.vertex_count() != m + 1)
        return std::nullopt;
    for (Vertex v = 0; v < f.vertex_count(); ++v)
        if (f.degree(v) == m)
            return static_cast<unsigned>(m);
    return std::nullopt;
}

namespace {

std::vector<Lit> copy_clause(std::span<const EdgeId> copy, Color wanted)
{
    std::vector<Lit> lits;
    for (auto e : copy)
        lits.push_back(lit_for(e, wanted));
    return lits;
}

std::optional<std::vector<EdgeId>> first_copy_in(const Graph& g, std::span<const Color> colors, Color which,
    const Graph& pattern)
{
    std::vector<bool> keep(g.edge_count());
    for (EdgeId id = 0; id < g.edge_count(); ++id)
        keep[id] = colors[id] == which;
    auto sub = edge_subgraph(g, keep);
    auto copies = find_copies(sub.graph, pattern, 1);
    if (copies.empty())
        return std::nullopt;
    std::vector<EdgeId> out;
    for (auto id : copies.front())
        out.push_back(sub.edge_map[id]);
    return out;
}

} // namespace

GoodColoringOracle::GoodColoringOracle(const Graph& g, const Graph& f, const Graph& h,
    const SearchOptions& options) :
    g_(g), f_(f), h_(h), solver_(g)
{
    require_pattern(f, "F");
    require_pattern(h, "H");
    auto star = options.strategy == Strategy::automatic ? star_size(f) : std::nullopt;
    star_ = star.has_value();
    if (star_)
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            solver_.set_red_cap(v, *star - 1);
    for (auto [v, cap] : options.red_caps) {
        if (v >= g.vertex_count())
            fail(ErrorCode::precondition, "red-degree cap on a missing vertex");
        solver_.set_red_cap(v, cap);
    }

    auto cap = options.max_precomputed_copies;
    auto h_copies = find_copies(g, h, cap + 1);
    std::vector<std::vector<EdgeId>> f_copies;
    if (!star_)
        f_copies = find_copies(g, f, cap + 1);
    lazy_ = h_copies.size() > cap || f_copies.size() > cap;

    if (!lazy_) {
        h_copies_ = h_copies.size();
        std::vector<double> activity(g.edge_count(), 0.0);
        for (const auto& copy : h_copies) {
            for (auto e : copy)
                activity[e] += 1.0;
            solver_.add_clause(copy_clause(copy, Color::red));
        }
        for (const auto& copy : f_copies)
            solver_.add_clause(copy_clause(copy, Color::blue));
        double top = 1.0;
        for (auto a : activity)
            top = std::max(top, a);
        for (auto& a : activity)
            a = 0.5 * a / top;
        solver_.set_initial_activity(activity);
    } else {
        bool check_f = !star_;
        solver_.set_lazy_check([this, check_f](std::span<const Color> colors) {
            std::vector<std::vector<Lit>> violated;
            if (auto copy = first_copy_in(g_, colors, Color::blue, h_))
                violated.push_back(copy_clause(*copy, Color::red));
            if (check_f)
                if (auto copy = first_copy_in(g_, colors, Color::red, f_))
                    violated.push_back(copy_clause(*copy, Color::blue));
            return violated;
        });
    }
}

ColoringSearch GoodColoringOracle::query(std::span<const Lit> assumptions, SearchBudget budget)
{
    auto before = solver_.stats();
    auto result = solver_.solve(assumptions, budget.max_nodes);
    const auto& after = solver_.stats();
    ColoringSearch out;
    out.stats.nodes = after.decisions - before.decisions;
    out.stats.conflicts = after.conflicts - before.conflicts;
    out.stats.propagations = after.propagations - before.propagations;
    out.stats.lazy_clauses = after.lazy_clauses - before.lazy_clauses;
    switch (result) {
    case SolveResult::satisfiable: {
        EdgeColoring c(g_, solver_.model());
        if (!is_good(c, f_, h_))
            throw std::logic_error("search returned a colouring that is not good");
        out.status = SearchStatus::found;
        out.coloring = std::move(c);
        break;
    }
    case SolveResult::unsatisfiable: out.status = SearchStatus::none; break;
    case SolveResult::budget_exceeded: out.status = SearchStatus::budget_exceeded; break;
    }
    return out;
}

std::vector<Lit> free_vertex_lits(const Graph& g, Vertex v)
{
    std::vector<Lit> lits;
    for (auto e : g.incident_edges(v))
        lits.push_back(blue_lit(e));
    return lits;
}

ColoringSearch find_good_coloring(const Graph& g, const Graph& f, const Graph& h, SearchBudget budget,
    const SearchOptions& options)
{
    GoodColoringOracle oracle(g, f, h, options);
    return oracle.query(budget);
}

ArrowingInstance arrows(const Graph& g, const Graph& f, const Graph& h, SearchBudget budget,
    const SearchOptions& options)
{
    auto search = find_good_coloring(g, f, h, budget, options);
    ArrowingInstance out{g, f, h, std::nullopt, std::nullopt, search.stats};
    if (search.status == SearchStatus::found) {
        out.result = false;
        out.certificate = std::move(search.coloring);
    } else if (search.status == SearchStatus::none) {
        out.result = true;
    }
    return out;
}

PruneResult prune_non_h_edges(const Graph& g, const Graph& h)
{
    require_pattern(h, "H");
    PruneResult out{g, {}};
    while (true) {
        std::vector<bool> covered(out.graph.edge_count(), false);
        for (const auto& copy : find_copies(out.graph, h))
            for (auto e : copy)
                covered[e] = true;
        std::vector<EdgeId> drop;
        for (EdgeId id = 0; id < covered.size(); ++id)
            if (!covered[id]) {
                drop.push_back(id);
                out.removed.push_back(out.graph.edge(id));
            }
        if (drop.empty())
            break;
        out.graph = delete_edges(out.graph, drop);
    }
    std::sort(out.removed.begin(), out.removed.end());
    return out;
}

TkEquivalenceReport check_tk_equivalence(const Graph& g, unsigned n, SearchBudget budget)
{
    if (n < 3)
        fail(ErrorCode::precondition, "TK_n equivalence needs n >= 3");
    auto p3 = path_graph(3);
    TkEquivalenceReport report;
    report.n = n;
    report.tk_arrows = arrows(g, p3, tailed_complete(n), budget).result;
    report.k_arrows = arrows(g, p3, complete_graph(n), budget).result;
    if (!report.tk_arrows || !report.k_arrows)
        report.agreement = Agreement::inconclusive;
    else
        report.agreement = *report.tk_arrows == *report.k_arrows ? Agreement::agree : Agreement::disagree;
    return report;
}

std::optional<unsigned> min_red_degree_over_good(const Graph& g, Vertex v, const Graph& f, const Graph& h,
    SearchBudget budget)
{
    if (v >= g.vertex_count())
        fail(ErrorCode::invalid_graph, "vertex out of range");
    auto any = find_good_coloring(g, f, h, budget);
    if (any.status == SearchStatus::budget_exceeded)
        return std::nullopt;
    if (any.status == SearchStatus::none)
        fail(ErrorCode::no_good_coloring, "graph has no good colouring");
    auto upper = static_cast<unsigned>(red_degree(*any.coloring, v));
    for (unsigned k = 0; k < upper; ++k) {
        SearchOptions options;
        options.red_caps[v] = k;
        auto capped = find_good_coloring(g, f, h, budget, options);
        if (capped.status == SearchStatus::budget_exceeded)
            return std::nullopt;
        if (capped.status == SearchStatus::found)
            return k;
    }
    return upper;
}

} // namespace arrowing
