#include <arrowing/matching.hpp>
#include <arrowing/p3k3.hpp>

#include <stdexcept>

namespace arrowing {

TriangleWeighting triangle_weights(const Graph& g)
{
    TriangleWeighting w;
    w.gamma.assign(g.edge_count(), 0);
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        auto [u, v] = g.edge(id);
        auto a = g.neighbors(u);
        auto b = g.neighbors(v);
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] < b[j]) {
                ++i;
            } else if (b[j] < a[i]) {
                ++j;
            } else {
                ++w.gamma[id];
                ++i;
                ++j;
            }
        }
    }
    std::uint64_t sum = 0;
    for (auto x : w.gamma)
        sum += x;
    w.total_triangles = sum / 3;
    return w;
}

WeightedMatching max_weight_matching(const Graph& g, const TriangleWeighting& w)
{
    if (w.gamma.size() != g.edge_count())
        throw std::invalid_argument("weighting does not belong to this graph");
    std::vector<detail::WeightedEdge> edges;
    for (EdgeId id = 0; id < g.edge_count(); ++id)
        if (w.gamma[id] > 0)
            edges.push_back({g.edge(id).u, g.edge(id).v, static_cast<std::int64_t>(w.gamma[id])});
    auto mate = detail::maximum_weight_matching(g.vertex_count(), edges);
    WeightedMatching m;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (mate[v] <= static_cast<std::int64_t>(v))
            continue;
        Vertex u = static_cast<Vertex>(mate[v]);
        m.edges.push_back({v, u});
        m.weight += w.gamma[g.edge_id(v, u)];
    }
    return m;
}

P3K3Decision decide_p3_k3(const Graph& g)
{
    auto w = triangle_weights(g);
    P3K3Decision d;
    d.triangles = w.total_triangles;
    d.matching = max_weight_matching(g, w);
    d.matching_weight = d.matching.weight;
    if (d.matching_weight > d.triangles)
        throw std::logic_error("matching weight exceeds the triangle count");
    d.arrows = d.matching_weight < d.triangles;
    if (!d.arrows) {
        auto c = EdgeColoring::from_red_edges(g, d.matching.edges);
        if (!is_good(c, path_graph(3), complete_graph(3)))
            throw std::logic_error("optimal matching is not a good colouring");
        d.certificate = std::move(c);
    }
    return d;
}

} // namespace arrowing
