#include <arrowing/design.hpp>
#include <arrowing/error.hpp>
#include <arrowing/subgraph.hpp>

#include <algorithm>
#include <bit>
#include <set>

namespace arrowing::design {

namespace {

// Visits k-subsets of {0..n-1} in lexicographic order; stops when f returns true.
bool for_each_combination(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& f)
{
    if (k > n)
        return false;
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i)
        pick[i] = i;
    while (true) {
        if (f(pick))
            return true;
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return false;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j)
            pick[j] = pick[j - 1] + 1;
    }
}

Mask bit(std::size_t i) { return Mask{1} << i; }

Mask port_bit(const Port& p, std::size_t core_size) { return bit(p.copy * core_size + p.vertex); }

std::vector<Vertex> members(Mask m)
{
    std::vector<Vertex> out;
    for (Vertex v = 0; m; ++v, m >>= 1)
        if (m & 1)
            out.push_back(v);
    return out;
}

} // namespace

std::string Core::name() const
{
    if (!glued_on)
        return "h";
    return "A_{h,(" + std::to_string(glued_on->u) + "," + std::to_string(glued_on->v) + ")}";
}

std::vector<Core> candidate_cores(const Graph& h)
{
    std::vector<Core> cores{{h, std::nullopt}};
    for (const auto& e : h.edges())
        cores.push_back({combine_on_edge(h, e).graph, e});
    return cores;
}

std::vector<Mask> core_states(const Graph& core, const Graph& h, Mask open)
{
    if (core.vertex_count() > 32 || core.edge_count() > 64)
        fail(ErrorCode::precondition, "core too large for the layout model");
    std::vector<Mask> copy_masks;
    for (const auto& ids : find_copies(core, h)) {
        Mask m = 0;
        for (auto id : ids)
            m |= bit(id);
        copy_masks.push_back(m);
    }
    std::vector<EdgeId> open_edges;
    for (EdgeId id = 0; id < core.edge_count(); ++id) {
        auto e = core.edge(id);
        if ((open & bit(e.u)) && (open & bit(e.v)))
            open_edges.push_back(id);
    }
    std::set<Mask> states;
    std::function<void(std::size_t, Mask, Mask)> rec = [&](std::size_t i, Mask covered, Mask red) {
        if (i == open_edges.size()) {
            for (auto c : copy_masks)
                if (!(c & red))
                    return;
            states.insert(covered);
            return;
        }
        rec(i + 1, covered, red);
        auto e = core.edge(open_edges[i]);
        Mask ends = bit(e.u) | bit(e.v);
        if (!(covered & ends))
            rec(i + 1, covered | ends, red | bit(open_edges[i]));
    };
    rec(0, 0, 0);
    return {states.begin(), states.end()};
}

std::vector<Mask> joint_states(const std::vector<Mask>& first, const std::vector<Mask>& second,
    std::size_t core_size, const std::vector<std::pair<Port, Port>>& links)
{
    std::set<Mask> out;
    std::function<void(std::size_t, Mask)> rec = [&](std::size_t j, Mask used) {
        if (j == links.size()) {
            out.insert(used);
            return;
        }
        for (const auto& p : {links[j].first, links[j].second}) {
            auto b = port_bit(p, core_size);
            if (!(used & b))
                rec(j + 1, used | b);
        }
    };
    for (auto a : first)
        for (auto b : second)
            rec(0, a | (b << core_size));
    return {out.begin(), out.end()};
}

bool variable_model_holds(const std::vector<Mask>& states, std::size_t core_size,
    const std::array<Port, 2>& unnegated, const std::array<Port, 2>& negated)
{
    if (states.empty())
        return false;
    Mask u = port_bit(unnegated[0], core_size) | port_bit(unnegated[1], core_size);
    Mask n = port_bit(negated[0], core_size) | port_bit(negated[1], core_size);
    bool all_u_free = false;
    bool all_n_free = false;
    for (auto s : states) {
        bool some_u = (s & u) != u;
        bool some_n = (s & n) != n;
        if (some_u && some_n)
            return false;
        all_u_free = all_u_free || !(s & u);
        all_n_free = all_n_free || !(s & n);
    }
    return all_u_free && all_n_free;
}

bool clause_model_holds(const std::vector<Mask>& states, const std::array<Vertex, 3>& inputs)
{
    for (unsigned row = 0; row < 8; ++row) {
        Mask red = 0;
        for (unsigned j = 0; j < 3; ++j)
            if (row >> j & 1)
                red |= bit(inputs[j]);
        bool extendable = std::any_of(states.begin(), states.end(), [&](Mask s) { return !(s & red); });
        if (extendable != (row != 7))
            return false;
    }
    return true;
}

bool for_each_variable_layout(const Graph& h, const std::function<bool(const VariableLayout&)>& visit,
    std::size_t max_links, std::size_t max_candidates)
{
    std::size_t offered = 0;
    for (const auto& core : candidate_cores(h)) {
        std::size_t size = core.graph.vertex_count();
        for (std::size_t r = 2; r <= size; ++r) {
            bool stop = for_each_combination(size, r, [&](const std::vector<std::size_t>& pick) {
                Mask open = 0;
                for (auto v : pick)
                    open |= bit(v);
                auto states = core_states(core.graph, h, open);
                if (states.empty())
                    return false;
                auto w = members(open);
                std::vector<std::pair<Port, Port>> pairs;
                for (auto x : w)
                    for (auto y : w)
                        pairs.push_back({{0, x}, {1, y}});
                for (std::size_t k = 1; k <= max_links; ++k) {
                    bool done = for_each_combination(pairs.size(), k, [&](const std::vector<std::size_t>& chosen) {
                        std::vector<std::pair<Port, Port>> links;
                        Mask linked = 0;
                        for (auto i : chosen) {
                            links.push_back(pairs[i]);
                            linked |= port_bit(pairs[i].first, size) | port_bit(pairs[i].second, size);
                        }
                        auto joint = joint_states(states, states, size, links);
                        std::vector<Port> ports;
                        for (unsigned c = 0; c < 2; ++c)
                            for (auto v : w)
                                if (!(linked & port_bit({c, v}, size)))
                                    ports.push_back({c, v});
                        return for_each_combination(ports.size(), 2, [&](const std::vector<std::size_t>& ui) {
                            std::vector<Port> rest;
                            for (std::size_t i = 0; i < ports.size(); ++i)
                                if (i != ui[0] && i != ui[1])
                                    rest.push_back(ports[i]);
                            return for_each_combination(rest.size(), 2, [&](const std::vector<std::size_t>& ni) {
                                std::array<Port, 2> u{ports[ui[0]], ports[ui[1]]};
                                std::array<Port, 2> n{rest[ni[0]], rest[ni[1]]};
                                if (!variable_model_holds(joint, size, u, n))
                                    return false;
                                if (offered++ >= max_candidates)
                                    return true;
                                return visit({core, open, links, u, n});
                            });
                        });
                    });
                    if (done)
                        return true;
                }
                return false;
            });
            if (stop)
                return offered <= max_candidates;
        }
    }
    return false;
}

bool for_each_clause_layout(const Graph& h, const std::function<bool(const ClauseLayout&)>& visit,
    std::size_t max_candidates)
{
    std::size_t offered = 0;
    for (const auto& core : candidate_cores(h)) {
        std::size_t size = core.graph.vertex_count();
        for (std::size_t r = 3; r <= size; ++r) {
            bool stop = for_each_combination(size, r, [&](const std::vector<std::size_t>& pick) {
                Mask open = 0;
                for (auto v : pick)
                    open |= bit(v);
                auto states = core_states(core.graph, h, open);
                if (states.empty())
                    return false;
                auto w = members(open);
                return for_each_combination(w.size(), 3, [&](const std::vector<std::size_t>& ii) {
                    std::array<Vertex, 3> inputs{w[ii[0]], w[ii[1]], w[ii[2]]};
                    if (!clause_model_holds(states, inputs))
                        return false;
                    if (offered++ >= max_candidates)
                        return true;
                    return visit({core, open, inputs});
                });
            });
            if (stop)
                return offered <= max_candidates;
        }
    }
    return false;
}

} // namespace arrowing::design
