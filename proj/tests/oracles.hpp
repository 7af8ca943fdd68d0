#pragma once

// Brute-force reference implementations.  They only use the Graph container
// and never call into the library's search code.

#include <arrowing/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using arrowing::Edge;
using arrowing::EdgeId;
using arrowing::Graph;
using arrowing::Vertex;

inline std::vector<std::vector<bool>> adjacency(const Graph& g)
{
    std::vector<std::vector<bool>> adj(g.vertex_count(), std::vector<bool>(g.vertex_count(), false));
    for (const auto& e : g.edges())
        adj[e.u][e.v] = adj[e.v][e.u] = true;
    return adj;
}

// Every injective map of pattern vertices into host vertices that sends
// edges to edges.
inline void each_injection(const Graph& host, const Graph& pattern, const std::function<void(const std::vector<Vertex>&)>& f)
{
    auto adj = adjacency(host);
    std::size_t k = pattern.vertex_count();
    std::vector<Vertex> image(k);
    std::vector<char> used(host.vertex_count(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == k) {
            for (const auto& e : pattern.edges())
                if (!adj[image[e.u]][image[e.v]])
                    return;
            f(image);
            return;
        }
        for (Vertex h = 0; h < host.vertex_count(); ++h) {
            if (used[h])
                continue;
            used[h] = 1;
            image[i] = h;
            rec(i + 1);
            used[h] = 0;
        }
    };
    rec(0);
}

inline bool contains(const Graph& host, const Graph& pattern)
{
    bool found = false;
    if (pattern.vertex_count() > host.vertex_count())
        return false;
    each_injection(host, pattern, [&](const std::vector<Vertex>&) { found = true; });
    return found;
}

// Distinct edge sets forming a copy of pattern (pattern without isolated
// vertices).
inline std::set<std::vector<Edge>> copies(const Graph& host, const Graph& pattern)
{
    std::set<std::vector<Edge>> out;
    each_injection(host, pattern, [&](const std::vector<Vertex>& image) {
        std::vector<Edge> es;
        for (const auto& e : pattern.edges())
            es.push_back(arrowing::make_edge(image[e.u], image[e.v]));
        std::sort(es.begin(), es.end());
        out.insert(es);
    });
    return out;
}

inline bool isomorphic(const Graph& a, const Graph& b)
{
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    std::vector<Vertex> perm(a.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    auto adj = adjacency(b);
    do {
        bool ok = true;
        for (const auto& e : a.edges())
            if (!adj[perm[e.u]][perm[e.v]]) {
                ok = false;
                break;
            }
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline Graph subgraph_of_mask(const Graph& g, std::uint64_t mask)
{
    std::vector<Edge> es;
    for (EdgeId id = 0; id < g.edge_count(); ++id)
        if ((mask >> id) & 1u)
            es.push_back(g.edge(id));
    return Graph(g.vertex_count(), es);
}

// All red masks (bit i = edge i red) of good colourings.
inline std::vector<std::uint64_t> good_masks(const Graph& g, const Graph& f, const Graph& h)
{
    std::vector<std::uint64_t> out;
    std::uint64_t all = g.edge_count() == 64 ? ~0ull : ((1ull << g.edge_count()) - 1);
    for (std::uint64_t mask = 0;; ++mask) {
        if (!contains(subgraph_of_mask(g, mask), f) && !contains(subgraph_of_mask(g, all & ~mask), h))
            out.push_back(mask);
        if (mask == all)
            break;
    }
    return out;
}

inline bool arrows(const Graph& g, const Graph& f, const Graph& h) { return good_masks(g, f, h).empty(); }

// (P3, H)-arrowing by enumerating matchings only.  A good colouring's red
// set is a matching, so this is exhaustive.
inline bool p3_arrows(const Graph& g, const Graph& h)
{
    auto hs = copies(g, h);
    std::vector<std::vector<EdgeId>> ids;
    for (const auto& c : hs) {
        std::vector<EdgeId> v;
        for (const auto& e : c)
            v.push_back(g.edge_id(e));
        ids.push_back(v);
    }
    std::vector<char> red(g.edge_count(), 0);
    std::vector<char> used(g.vertex_count(), 0);
    bool good = false;
    std::function<void(EdgeId)> rec = [&](EdgeId i) {
        if (good)
            return;
        if (i == g.edge_count()) {
            for (const auto& c : ids) {
                bool hit = false;
                for (auto e : c)
                    hit = hit || red[e];
                if (!hit)
                    return;
            }
            good = true;
            return;
        }
        rec(i + 1);
        const auto& e = g.edge(i);
        if (!used[e.u] && !used[e.v]) {
            used[e.u] = used[e.v] = red[i] = 1;
            rec(i + 1);
            used[e.u] = used[e.v] = red[i] = 0;
        }
    };
    rec(0);
    return !good;
}

inline std::int64_t max_matching_weight(const Graph& g, const std::vector<std::int64_t>& w)
{
    std::int64_t best = 0;
    std::vector<char> used(g.vertex_count(), 0);
    std::function<void(EdgeId, std::int64_t)> rec = [&](EdgeId i, std::int64_t sum) {
        if (i == g.edge_count()) {
            best = std::max(best, sum);
            return;
        }
        rec(i + 1, sum);
        const auto& e = g.edge(i);
        if (!used[e.u] && !used[e.v]) {
            used[e.u] = used[e.v] = 1;
            rec(i + 1, sum + w[i]);
            used[e.u] = used[e.v] = 0;
        }
    };
    rec(0, 0);
    return best;
}

inline unsigned epl(const Graph& g, Edge e, Edge f)
{
    unsigned count = 0;
    for (const auto& x : g.edges()) {
        if (x == e || x == f)
            continue;
        auto touches = [](Edge a, Edge b) { return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v; };
        if (touches(x, e) && touches(x, f))
            ++count;
    }
    return count;
}

inline bool connected_after_removing(const Graph& g, std::uint64_t removed)
{
    std::size_t n = g.vertex_count();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& e : g.edges())
        if (!((removed >> e.u) & 1u) && !((removed >> e.v) & 1u))
            parent[find(static_cast<int>(e.u))] = find(static_cast<int>(e.v));
    int root = -1;
    for (std::size_t v = 0; v < n; ++v) {
        if ((removed >> v) & 1u)
            continue;
        if (root < 0)
            root = find(static_cast<int>(v));
        else if (find(static_cast<int>(v)) != root)
            return false;
    }
    return true;
}

inline bool k_connected(const Graph& g, unsigned k)
{
    std::size_t n = g.vertex_count();
    if (n <= k)
        return false;
    for (std::uint64_t s = 0; s < (1ull << n); ++s)
        if (static_cast<unsigned>(__builtin_popcountll(s)) < k && !connected_after_removing(g, s))
            return false;
    return true;
}

} // namespace oracle
