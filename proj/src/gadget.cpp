#include <arrowing/design.hpp>
#include <arrowing/enumerate.hpp>
#include <arrowing/error.hpp>
#include <arrowing/gadget.hpp>
#include <arrowing/subgraph.hpp>

#include <cstdio>

namespace arrowing {

namespace {

constexpr std::size_t max_enforcer_search_vertices = 8;
constexpr std::size_t max_complete_start = 12;

const char* status_name(SearchStatus s)
{
    switch (s) {
    case SearchStatus::found:
        return "good";
    case SearchStatus::none:
        return "none";
    case SearchStatus::budget_exceeded:
        return "budget";
    }
    return "?";
}

// The gadget graph with one fresh pendant vertex per anchor.
struct Pendants {
    Graph graph;
    std::vector<EdgeId> pendant;
    std::vector<EdgeId> base; // id in `graph` of each gadget edge
};

Pendants with_pendants(const Graph& g, std::span<const Vertex> anchors)
{
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    auto n = g.vertex_count();
    for (std::size_t i = 0; i < anchors.size(); ++i)
        edges.push_back(make_edge(anchors[i], static_cast<Vertex>(n + i)));
    Pendants p{Graph(n + anchors.size(), edges), {}, {}};
    for (std::size_t i = 0; i < anchors.size(); ++i)
        p.pendant.push_back(p.graph.edge_id(anchors[i], static_cast<Vertex>(n + i)));
    for (const auto& e : g.edges())
        p.base.push_back(p.graph.edge_id(e));
    return p;
}

std::vector<Color> restrict_colors(const EdgeColoring& c, std::span<const EdgeId> base)
{
    std::vector<Color> out;
    for (auto id : base)
        out.push_back(c.color(id));
    return out;
}

// Runs the queries of one verification against a single incremental oracle.
class Checker {
  public:
    Checker(const Graph& g, const Gadget& gadget, SearchBudget budget) :
        oracle_(g, gadget.f, gadget.h), remaining_(budget.max_nodes)
    {
    }

    std::optional<EdgeColoring> ask(Gadget& gadget, std::string name, std::span<const Lit> lits, bool expect_good,
        bool gating = true)
    {
        auto r = oracle_.query(lits, SearchBudget{remaining_});
        remaining_ -= std::min(remaining_, r.stats.nodes);
        gadget.log.queries.push_back({std::move(name), expect_good, gating, r.status, r.stats.nodes});
        if (r.status == SearchStatus::budget_exceeded)
            fail(ErrorCode::budget_exceeded, "verification of " + std::string(gadget_kind_name(gadget.kind)) +
                    " ran out of budget at query '" + gadget.log.queries.back().name + "'");
        if (!gadget.log.queries.back().passed())
            ok_ = false;
        return std::move(r.coloring);
    }

    bool ok() const { return ok_; }

  private:
    GoodColoringOracle oracle_;
    std::uint64_t remaining_;
    bool ok_ = true;
};

void start(Gadget& g, GadgetKind kind)
{
    if (g.kind != kind)
        fail(ErrorCode::precondition, "gadget is a " + std::string(gadget_kind_name(g.kind)) + ", not a " +
                std::string(gadget_kind_name(kind)));
    g.verified = false;
    g.log = {};
    g.templates.clear();
}

bool finish(Gadget& g, const Checker& c)
{
    g.verified = c.ok();
    return g.verified;
}

std::vector<Lit> concat(std::vector<Lit> a, const std::vector<Lit>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

void require_p3(const Graph& f, const char* what)
{
    if (star_size(f) != 2u)
        fail(ErrorCode::precondition, std::string(what) + " is built for F = P3 only");
}

void require_two_connected(const Graph& h)
{
    if (!is_k_connected(h, 2))
        fail(ErrorCode::not_2_connected, "pattern h must be 2-connected");
}

void require_verified(const Gadget& g, GadgetKind kind, const Graph& h)
{
    if (g.kind != kind || !g.verified)
        fail(ErrorCode::precondition, "a verified " + std::string(gadget_kind_name(kind)) + " is required");
    if (!(g.h == h))
        fail(ErrorCode::precondition, std::string(gadget_kind_name(kind)) + " belongs to a different h");
}

bool arrowing_or_throw(const Graph& g, const Graph& f, const Graph& h, SearchBudget budget)
{
    auto r = arrows(g, f, h, budget);
    if (!r.result)
        fail(ErrorCode::budget_exceeded, "arrowing check ran out of budget during enforcer search");
    return *r.result;
}

std::string vertex_list(std::span<const Vertex> vs)
{
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i)
        s += (i ? "," : "") + std::to_string(vs[i]);
    return s + "}";
}

std::vector<Vertex> open_vertices(design::Mask open)
{
    std::vector<Vertex> out;
    for (Vertex v = 0; open; ++v, open >>= 1)
        if (open & 1)
            out.push_back(v);
    return out;
}

// Enforcer from a minimally bad graph: either A - e itself, or a ring of
// copies of A - e glued end to end.
std::optional<Gadget> enforcer_from_bad_graph(const Graph& f, const Graph& h, const Graph& a, SearchBudget budget)
{
    for (EdgeId id = 0; id < a.edge_count(); ++id) {
        EdgeId drop[] = {id};
        auto base = delete_edges(a, drop);
        auto e = a.edge(id);
        for (Vertex s : {e.u, e.v}) {
            Gadget g;
            g.kind = GadgetKind::enforcer;
            g.graph = base;
            g.f = f;
            g.h = h;
            g.roles["signal"] = {s};
            g.intended_copies = count_copies(base, h);
            char buf[96];
            std::snprintf(buf, sizeof buf, "minimal bad graph on %zu vertices minus edge (%u,%u)", a.vertex_count(),
                e.u, e.v);
            g.construction = buf;
            if (verify_enforcer(g, budget))
                return g;
        }
    }

    std::size_t ring = 2 * h.vertex_count();
    for (EdgeId id = 0; id < a.edge_count(); ++id) {
        EdgeId drop[] = {id};
        auto base = delete_edges(a, drop);
        auto e = a.edge(id);
        GraphBuilder b;
        std::vector<Vertex> junctions;
        for (std::size_t i = 0; i < ring; ++i)
            junctions.push_back(b.add_vertex());
        Gadget g;
        g.kind = GadgetKind::enforcer;
        g.f = f;
        g.h = h;
        for (std::size_t i = 0; i < ring; ++i) {
            std::pair<Vertex, Vertex> glue[] = {{e.u, junctions[i]}, {e.v, junctions[(i + 1) % ring]}};
            auto map = b.add_graph(base, glue);
            g.parts.push_back({"ring_piece", map, junctions[i]});
        }
        g.graph = b.build();
        g.roles["signal"] = {junctions[0]};
        g.roles["junction"] = junctions;
        g.intended_copies = ring * count_copies(base, h);
        char buf[128];
        std::snprintf(buf, sizeof buf, "ring of %zu copies of a minimal bad graph on %zu vertices minus edge (%u,%u)",
            ring, a.vertex_count(), e.u, e.v);
        g.construction = buf;
        if (copies_reconcile(g) && verify_enforcer(g, budget))
            return g;
    }
    return std::nullopt;
}

// Attaches one enforcer per listed vertex.
void decorate(GraphBuilder& b, Gadget& g, const Gadget& enforcer, std::span<const Vertex> hosts)
{
    for (auto v : hosts) {
        g.parts.push_back(attach_enforcer(b, enforcer, v));
        g.intended_copies += enforcer.intended_copies;
    }
}

} // namespace

std::string_view gadget_kind_name(GadgetKind kind)
{
    switch (kind) {
    case GadgetKind::enforcer:
        return "enforcer";
    case GadgetKind::signal_extender:
        return "signal_extender";
    case GadgetKind::leaf_sender:
        return "leaf_sender";
    case GadgetKind::variable_gadget:
        return "variable_gadget";
    case GadgetKind::clause_gadget:
        return "clause_gadget";
    }
    return "?";
}

GadgetKind gadget_kind_from_name(std::string_view name)
{
    for (auto k : {GadgetKind::enforcer, GadgetKind::signal_extender, GadgetKind::leaf_sender,
             GadgetKind::variable_gadget, GadgetKind::clause_gadget})
        if (gadget_kind_name(k) == name)
            return k;
    if (name == "extender")
        return GadgetKind::signal_extender;
    if (name == "variable")
        return GadgetKind::variable_gadget;
    if (name == "clause")
        return GadgetKind::clause_gadget;
    fail(ErrorCode::syntax, "unknown gadget kind '" + std::string(name) + "'");
}

bool VerificationQuery::passed() const
{
    if (!gating)
        return status != SearchStatus::budget_exceeded;
    return (status == SearchStatus::found) == expect_good && status != SearchStatus::budget_exceeded;
}

std::uint64_t VerificationLog::total_nodes() const
{
    std::uint64_t n = 0;
    for (const auto& q : queries)
        n += q.nodes;
    return n;
}

std::string VerificationLog::digest() const
{
    std::uint64_t hash = 0xcbf29ce484222325ull;
    auto feed = [&](std::string_view s) {
        for (unsigned char ch : s) {
            hash ^= ch;
            hash *= 0x100000001b3ull;
        }
    };
    for (const auto& q : queries) {
        feed(q.name);
        feed(q.expect_good ? "|good|" : "|none|");
        feed(q.gating ? "gate|" : "info|");
        feed(status_name(q.status));
        feed("|" + std::to_string(q.nodes) + "\n");
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

Vertex Gadget::role(const std::string& name, std::size_t index) const
{
    auto it = roles.find(name);
    if (it == roles.end() || it->second.size() <= index)
        fail(ErrorCode::precondition, "gadget has no role '" + name + "' #" + std::to_string(index));
    if (it->second[index] >= graph.vertex_count())
        fail(ErrorCode::precondition, "role '" + name + "' names a vertex outside the gadget");
    return it->second[index];
}

bool verify_enforcer(Gadget& g, SearchBudget budget)
{
    start(g, GadgetKind::enforcer);
    Vertex s = g.role("signal");
    Vertex anchors[] = {s};
    auto ext = with_pendants(g.graph, anchors);
    Checker c(ext.graph, g, budget);
    Lit blue[] = {blue_lit(ext.pendant[0])};
    auto good = c.ask(g, "good with blue pendant at signal", blue, true);
    if (good)
        g.templates["good"] = restrict_colors(*good, ext.base);
    if (c.ok()) {
        Lit red[] = {red_lit(ext.pendant[0])};
        c.ask(g, "red pendant at signal", red, false);
    }
    auto junctions = g.roles.count("junction") ? g.roles.at("junction") : std::vector<Vertex>{};
    if (!c.ok() || junctions.size() < 2)
        return finish(g, c);

    // Every junction must be saturated, not just the signal.
    auto jext = with_pendants(g.graph, junctions);
    Checker jc(jext.graph, g, budget);
    for (std::size_t j = 0; j < junctions.size() && jc.ok(); ++j) {
        std::vector<Lit> lits;
        for (std::size_t k = 0; k < junctions.size(); ++k)
            lits.push_back(k == j ? red_lit(jext.pendant[k]) : blue_lit(jext.pendant[k]));
        jc.ask(g, "junction " + std::to_string(junctions[j]) + " accepts a red pendant", lits, false);
    }
    return finish(g, jc);
}

bool verify_extender(Gadget& g, SearchBudget budget)
{
    start(g, GadgetKind::signal_extender);
    Vertex in = g.role("in");
    Vertex out = g.role("out");
    if (in == out)
        fail(ErrorCode::precondition, "extender in and out coincide");
    Checker c(g.graph, g, budget);
    c.ask(g, "good", {}, true);
    auto in_free = free_vertex_lits(g.graph, in);
    auto out_free = free_vertex_lits(g.graph, out);
    if (c.ok())
        c.ask(g, "in free and out free", concat(in_free, out_free), false);
    if (c.ok()) {
        if (auto t = c.ask(g, "in free", in_free, true, false))
            g.templates["in_free"] = {t->colors().begin(), t->colors().end()};
        if (auto t = c.ask(g, "out free", out_free, true, false))
            g.templates["out_free"] = {t->colors().begin(), t->colors().end()};
    }
    return finish(g, c);
}

bool verify_leaf_sender(Gadget& g, SearchBudget budget)
{
    start(g, GadgetKind::leaf_sender);
    Vertex u = g.role("leaf_signal_u");
    Vertex v = g.role("leaf_signal_v");
    auto id = g.graph.find_edge(u, v);
    if (!id)
        fail(ErrorCode::missing_edge, "leaf signal vertices are not adjacent");
    Checker c(g.graph, g, budget);
    c.ask(g, "good", {}, true);
    if (c.ok()) {
        Lit blue[] = {blue_lit(*id)};
        c.ask(g, "leaf edge blue", blue, false);
    }
    if (c.ok()) {
        std::vector<Lit> lits{red_lit(*id)};
        for (auto w : {u, v})
            for (auto e : g.graph.incident_edges(w))
                if (e != *id)
                    lits.push_back(blue_lit(e));
        if (auto t = c.ask(g, "leaf edge red and isolated", lits, true))
            g.templates["isolated"] = {t->colors().begin(), t->colors().end()};
    }
    return finish(g, c);
}

bool verify_variable_gadget(Gadget& g, SearchBudget budget)
{
    start(g, GadgetKind::variable_gadget);
    std::array<Vertex, 2> u{g.role("unnegated_output", 0), g.role("unnegated_output", 1)};
    std::array<Vertex, 2> n{g.role("negated_output", 0), g.role("negated_output", 1)};
    Checker c(g.graph, g, budget);
    c.ask(g, "good", {}, true);
    for (std::size_t i = 0; i < 2 && c.ok(); ++i)
        for (std::size_t j = 0; j < 2 && c.ok(); ++j)
            c.ask(g, "u" + std::to_string(i + 1) + " free and n" + std::to_string(j + 1) + " free",
                concat(free_vertex_lits(g.graph, u[i]), free_vertex_lits(g.graph, n[j])), false);
    if (c.ok()) {
        auto t = c.ask(g, "u1 and u2 free", concat(free_vertex_lits(g.graph, u[0]), free_vertex_lits(g.graph, u[1])),
            true);
        if (t)
            g.templates["true"] = {t->colors().begin(), t->colors().end()};
    }
    if (c.ok()) {
        auto t = c.ask(g, "n1 and n2 free", concat(free_vertex_lits(g.graph, n[0]), free_vertex_lits(g.graph, n[1])),
            true);
        if (t)
            g.templates["false"] = {t->colors().begin(), t->colors().end()};
    }
    return finish(g, c);
}

bool verify_clause_gadget(Gadget& g, SearchBudget budget)
{
    start(g, GadgetKind::clause_gadget);
    std::array<Vertex, 3> in{g.role("input", 0), g.role("input", 1), g.role("input", 2)};
    auto ext = with_pendants(g.graph, in);
    Checker c(ext.graph, g, budget);
    for (unsigned row = 0; row < 8; ++row) {
        std::vector<Lit> lits;
        std::string name = "inputs ";
        for (unsigned j = 0; j < 3; ++j) {
            bool red = row >> j & 1;
            lits.push_back(red ? red_lit(ext.pendant[j]) : blue_lit(ext.pendant[j]));
            name += red ? 'R' : 'B';
        }
        auto t = c.ask(g, name, lits, row != 7);
        if (t)
            g.templates["row" + std::to_string(row)] = restrict_colors(*t, ext.base);
    }
    return finish(g, c);
}

bool verify_gadget(Gadget& g, SearchBudget budget)
{
    switch (g.kind) {
    case GadgetKind::enforcer:
        return verify_enforcer(g, budget);
    case GadgetKind::signal_extender:
        return verify_extender(g, budget);
    case GadgetKind::leaf_sender:
        return verify_leaf_sender(g, budget);
    case GadgetKind::variable_gadget:
        return verify_variable_gadget(g, budget);
    case GadgetKind::clause_gadget:
        return verify_clause_gadget(g, budget);
    }
    return false;
}

bool copies_reconcile(const Gadget& g) { return count_copies(g.graph, g.h) == g.intended_copies; }

Part attach_enforcer(GraphBuilder& builder, const Gadget& enforcer, Vertex host)
{
    std::pair<Vertex, Vertex> glue[] = {{enforcer.role("signal"), host}};
    return {"enforcer", builder.add_graph(enforcer.graph, glue), host};
}

std::optional<Gadget> search_enforcer(const Graph& f, const Graph& h, SearchBudget budget)
{
    require_two_connected(h);
    if (!star_size(f))
        fail(ErrorCode::precondition, "enforcers are searched for star patterns F only");

    std::optional<Graph> bad;
    for (std::size_t n = h.vertex_count(); n <= max_enforcer_search_vertices && !bad; ++n)
        for (const auto& g : nonisomorphic_graphs(n)) {
            if (g.edge_count() < h.edge_count() || !is_k_connected(g, 2) || !contains_copy(g, h))
                continue;
            if (arrowing_or_throw(g, f, h, budget)) {
                bad = g;
                break;
            }
        }
    // Past the enumerated sizes, start the deletion from complete graphs.
    for (std::size_t n = max_enforcer_search_vertices + 1; n <= max_complete_start && !bad; ++n) {
        auto k = complete_graph(n);
        if (arrowing_or_throw(k, f, h, budget))
            bad = k;
    }
    if (!bad)
        return std::nullopt;

    Graph a = *bad;
    for (EdgeId id = 0; id < a.edge_count();) {
        EdgeId drop[] = {id};
        auto smaller = delete_edges(a, drop);
        if (arrowing_or_throw(smaller, f, h, budget))
            a = smaller;
        else
            ++id;
    }
    a = drop_isolated_vertices(a);
    return enforcer_from_bad_graph(f, h, a, budget);
}

Gadget build_signal_extender(const Graph& h, const Gadget& enforcer, SearchBudget budget)
{
    require_two_connected(h);
    require_verified(enforcer, GadgetKind::enforcer, h);
    require_p3(enforcer.f, "a signal extender");
    for (Vertex mid = 0; mid < h.vertex_count(); ++mid) {
        auto nb = h.neighbors(mid);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = 0; j < nb.size(); ++j) {
                if (i == j)
                    continue;
                Vertex u1 = nb[i], u3 = nb[j];
                GraphBuilder b;
                Gadget g;
                g.kind = GadgetKind::signal_extender;
                g.f = enforcer.f;
                g.h = h;
                auto map = b.add_graph(h);
                g.parts.push_back({"h", map, map[mid]});
                g.intended_copies = 1;
                std::vector<Vertex> hosts;
                for (Vertex v = 0; v < h.vertex_count(); ++v)
                    if (v != u1 && v != mid && v != u3)
                        hosts.push_back(map[v]);
                decorate(b, g, enforcer, hosts);
                g.graph = b.build();
                g.roles["in"] = {map[u1]};
                g.roles["out"] = {map[u3]};
                g.construction = "h on path " + std::to_string(u1) + "-" + std::to_string(mid) + "-" +
                    std::to_string(u3) + " with enforcers on the remaining vertices";
                if (copies_reconcile(g) && verify_extender(g, budget))
                    return g;
            }
    }
    fail(ErrorCode::construction_failed, "no signal extender candidate verified");
}

Gadget chain_extenders(const Gadget& first, const Gadget& second, SearchBudget budget)
{
    require_verified(first, GadgetKind::signal_extender, first.h);
    require_verified(second, GadgetKind::signal_extender, first.h);
    if (!(first.f == second.f))
        fail(ErrorCode::precondition, "extenders belong to different settings");
    GraphBuilder b;
    Gadget g;
    g.kind = GadgetKind::signal_extender;
    g.f = first.f;
    g.h = first.h;
    auto a = b.add_graph(first.graph);
    std::pair<Vertex, Vertex> glue[] = {{second.role("in"), a[first.role("out")]}};
    auto c = b.add_graph(second.graph, glue);
    g.parts.push_back({"extender", a, a[first.role("in")]});
    g.parts.push_back({"extender", c, c[second.role("in")]});
    g.graph = b.build();
    g.roles["in"] = {a[first.role("in")]};
    g.roles["out"] = {c[second.role("out")]};
    g.intended_copies = first.intended_copies + second.intended_copies;
    g.construction = "chain of two extenders";
    if (!copies_reconcile(g))
        fail(ErrorCode::construction_failed, "chaining extenders created a rogue copy of h");
    if (!verify_extender(g, budget))
        fail(ErrorCode::construction_failed, "chained extender failed verification");
    return g;
}

std::size_t chain_length_for(const Graph& h)
{
    // The in-out path of l extenders has 2l + 1 vertices.
    std::size_t n = h.vertex_count();
    return std::max<std::size_t>(1, n / 2);
}

Gadget extender_chain(const Gadget& extender, std::size_t length, SearchBudget budget)
{
    require_verified(extender, GadgetKind::signal_extender, extender.h);
    if (length == 0)
        fail(ErrorCode::precondition, "an extender chain needs at least one extender");
    GraphBuilder b;
    Gadget g;
    g.kind = GadgetKind::signal_extender;
    g.f = extender.f;
    g.h = extender.h;
    Vertex in = 0, out = 0;
    for (std::size_t i = 0; i < length; ++i) {
        std::vector<std::pair<Vertex, Vertex>> glue;
        if (i > 0)
            glue.push_back({extender.role("in"), out});
        auto map = b.add_graph(extender.graph, glue);
        if (i == 0)
            in = map[extender.role("in")];
        out = map[extender.role("out")];
        g.parts.push_back({"extender", map, map[extender.role("in")]});
    }
    g.graph = b.build();
    g.roles["in"] = {in};
    g.roles["out"] = {out};
    g.intended_copies = length * extender.intended_copies;
    g.construction = "chain of " + std::to_string(length) + " extenders";
    if (!copies_reconcile(g))
        fail(ErrorCode::construction_failed, "extender chain contains a rogue copy of h");
    if (!verify_extender(g, budget))
        fail(ErrorCode::construction_failed, "extender chain failed verification");
    return g;
}

Gadget build_leaf_sender(const Graph& f, const Graph& h, const Gadget& enforcer, SearchBudget budget)
{
    require_two_connected(h);
    require_verified(enforcer, GadgetKind::enforcer, h);
    if (!(enforcer.f == f))
        fail(ErrorCode::precondition, "enforcer belongs to a different F");
    for (const auto& e : h.edges()) {
        GraphBuilder b;
        Gadget g;
        g.kind = GadgetKind::leaf_sender;
        g.f = f;
        g.h = h;
        auto map = b.add_graph(h);
        g.parts.push_back({"h", map, map[e.u]});
        g.intended_copies = 1;
        std::vector<Vertex> hosts;
        for (Vertex v = 0; v < h.vertex_count(); ++v)
            if (v != e.u && v != e.v)
                hosts.push_back(map[v]);
        decorate(b, g, enforcer, hosts);
        g.graph = b.build();
        g.roles["leaf_signal_u"] = {map[e.u]};
        g.roles["leaf_signal_v"] = {map[e.v]};
        g.construction = "h with enforcers on every vertex except " + std::to_string(e.u) + " and " +
            std::to_string(e.v);
        if (copies_reconcile(g) && verify_leaf_sender(g, budget))
            return g;
    }
    fail(ErrorCode::construction_failed, "no leaf sender candidate verified");
}

Gadget build_variable_gadget(const Graph& h, const Gadget& enforcer, const Gadget& extender, SearchBudget budget)
{
    require_two_connected(h);
    if (h.vertex_count() < 4)
        fail(ErrorCode::precondition, "variable gadgets need |V(h)| >= 4");
    require_verified(enforcer, GadgetKind::enforcer, h);
    require_verified(extender, GadgetKind::signal_extender, h);
    require_p3(enforcer.f, "a variable gadget");

    std::optional<Gadget> result;
    design::for_each_variable_layout(h, [&](const design::VariableLayout& layout) {
        GraphBuilder b;
        Gadget g;
        g.kind = GadgetKind::variable_gadget;
        g.f = enforcer.f;
        g.h = h;
        auto core_copies = count_copies(layout.core.graph, h);
        std::array<std::vector<Vertex>, 2> maps;
        auto open = open_vertices(layout.open);
        for (unsigned c = 0; c < 2; ++c) {
            maps[c] = b.add_graph(layout.core.graph);
            g.parts.push_back({"core", maps[c], maps[c][0]});
            g.intended_copies += core_copies;
        }
        for (unsigned c = 0; c < 2; ++c) {
            std::vector<Vertex> hosts;
            for (Vertex v = 0; v < layout.core.graph.vertex_count(); ++v)
                if (!(layout.open >> v & 1))
                    hosts.push_back(maps[c][v]);
            decorate(b, g, enforcer, hosts);
        }
        std::string links;
        for (const auto& [x, y] : layout.links) {
            std::pair<Vertex, Vertex> glue[] = {{extender.role("in"), maps[x.copy][x.vertex]},
                {extender.role("out"), maps[y.copy][y.vertex]}};
            g.parts.push_back({"extender", b.add_graph(extender.graph, glue), maps[x.copy][x.vertex]});
            g.intended_copies += extender.intended_copies;
            links += " " + std::to_string(x.copy) + ":" + std::to_string(x.vertex) + "->" + std::to_string(y.copy) +
                ":" + std::to_string(y.vertex);
        }
        g.graph = b.build();
        auto port = [&](const design::Port& p) { return maps[p.copy][p.vertex]; };
        g.roles["unnegated_output"] = {port(layout.unnegated[0]), port(layout.unnegated[1])};
        g.roles["negated_output"] = {port(layout.negated[0]), port(layout.negated[1])};
        g.construction = "two copies of " + layout.core.name() + " open on " + vertex_list(open) +
            ", extender links" + links;
        if (!copies_reconcile(g) || !verify_variable_gadget(g, budget))
            return false;
        result = std::move(g);
        return true;
    });
    if (!result)
        fail(ErrorCode::construction_failed, "no variable gadget candidate verified");
    return *result;
}

Gadget build_clause_gadget(const Graph& h, const Gadget& enforcer, SearchBudget budget)
{
    require_two_connected(h);
    if (h.vertex_count() < 4)
        fail(ErrorCode::precondition, "clause gadgets need |V(h)| >= 4");
    require_verified(enforcer, GadgetKind::enforcer, h);
    require_p3(enforcer.f, "a clause gadget");

    std::optional<Gadget> result;
    design::for_each_clause_layout(h, [&](const design::ClauseLayout& layout) {
        GraphBuilder b;
        Gadget g;
        g.kind = GadgetKind::clause_gadget;
        g.f = enforcer.f;
        g.h = h;
        auto map = b.add_graph(layout.core.graph);
        g.parts.push_back({"core", map, map[0]});
        g.intended_copies = count_copies(layout.core.graph, h);
        std::vector<Vertex> hosts;
        for (Vertex v = 0; v < layout.core.graph.vertex_count(); ++v)
            if (!(layout.open >> v & 1))
                hosts.push_back(map[v]);
        decorate(b, g, enforcer, hosts);
        g.graph = b.build();
        g.roles["input"] = {map[layout.inputs[0]], map[layout.inputs[1]], map[layout.inputs[2]]};
        g.construction = layout.core.name() + " open on " + vertex_list(open_vertices(layout.open)) +
            " with inputs " + vertex_list(layout.inputs);
        if (!copies_reconcile(g) || !verify_clause_gadget(g, budget))
            return false;
        result = std::move(g);
        return true;
    });
    if (!result)
        fail(ErrorCode::construction_failed, "no clause gadget candidate verified");
    return *result;
}

} // namespace arrowing

namespace arrowing {

GadgetSuite forge_p3_suite(const Graph& h, SearchBudget budget)
{
    auto enforcer = search_enforcer(path_graph(3), h, budget);
    if (!enforcer)
        fail(ErrorCode::construction_failed, "no (P3, h)-enforcer found");
    auto extender = build_signal_extender(h, *enforcer, budget);
    auto chain = extender_chain(extender, chain_length_for(h), budget);
    auto variable = build_variable_gadget(h, *enforcer, extender, budget);
    auto clause = build_clause_gadget(h, *enforcer, budget);
    return {std::move(*enforcer), std::move(extender), std::move(chain), std::move(variable), std::move(clause)};
}

} // namespace arrowing
