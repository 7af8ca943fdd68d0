#include <arrowing/subgraph.hpp>

#include <algorithm>
#include <set>

namespace arrowing {

namespace {

constexpr Vertex unmapped = static_cast<Vertex>(-1);

std::vector<std::size_t> sorted_neighbor_degrees(const Graph& g, Vertex v)
{
    std::vector<std::size_t> out;
    for (auto w : g.neighbors(v))
        out.push_back(g.degree(w));
    std::sort(out.rbegin(), out.rend());
    return out;
}

class EmbeddingSearch {
  public:
    EmbeddingSearch(const Graph& host, const Graph& pattern,
        const std::function<bool(std::span<const Vertex>)>& visit) :
        host_(host), pattern_(pattern), visit_(visit)
    {
        plan();
        image_.assign(pattern.vertex_count(), unmapped);
        used_.assign(host.vertex_count(), 0);
        host_profile_.resize(host.vertex_count());
        for (Vertex v = 0; v < host.vertex_count(); ++v)
            host_profile_[v] = sorted_neighbor_degrees(host, v);
    }

    void run()
    {
        if (pattern_.vertex_count() > host_.vertex_count())
            return;
        if (pattern_.vertex_count() == 0) {
            visit_(image_);
            return;
        }
        extend(0);
    }

  private:
    void plan()
    {
        std::size_t n = pattern_.vertex_count();
        std::vector<char> placed(n, 0);
        std::vector<std::size_t> placed_neighbors(n, 0);
        for (std::size_t step = 0; step < n; ++step) {
            Vertex best = unmapped;
            for (Vertex p = 0; p < n; ++p) {
                if (placed[p])
                    continue;
                if (best == unmapped || placed_neighbors[p] > placed_neighbors[best]
                    || (placed_neighbors[p] == placed_neighbors[best] && pattern_.degree(p) > pattern_.degree(best)))
                    best = p;
            }
            placed[best] = 1;
            order_.push_back(best);
            for (auto w : pattern_.neighbors(best))
                ++placed_neighbors[w];
        }
        std::vector<std::size_t> position(n);
        for (std::size_t i = 0; i < n; ++i)
            position[order_[i]] = i;
        earlier_.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            for (auto w : pattern_.neighbors(order_[i]))
                if (position[w] < i)
                    earlier_[i].push_back(w);
        profile_.resize(n);
        for (Vertex p = 0; p < n; ++p)
            profile_[p] = sorted_neighbor_degrees(pattern_, p);
    }

    bool compatible(Vertex p, Vertex h) const
    {
        if (used_[h] || host_.degree(h) < pattern_.degree(p))
            return false;
        const auto& need = profile_[p];
        const auto& have = host_profile_[h];
        for (std::size_t i = 0; i < need.size(); ++i)
            if (have[i] < need[i])
                return false;
        return true;
    }

    bool extend(std::size_t depth)
    {
        if (depth == order_.size())
            return visit_(image_);
        Vertex p = order_[depth];
        const auto& back = earlier_[depth];
        auto try_vertex = [&](Vertex h) {
            if (!compatible(p, h))
                return true;
            for (std::size_t i = 1; i < back.size(); ++i)
                if (!host_.has_edge(h, image_[back[i]]))
                    return true;
            image_[p] = h;
            used_[h] = 1;
            bool go_on = extend(depth + 1);
            used_[h] = 0;
            image_[p] = unmapped;
            return go_on;
        };
        if (back.empty()) {
            for (Vertex h = 0; h < host_.vertex_count(); ++h)
                if (!try_vertex(h))
                    return false;
        } else {
            for (auto h : host_.neighbors(image_[back[0]]))
                if (!try_vertex(h))
                    return false;
        }
        return true;
    }

    const Graph& host_;
    const Graph& pattern_;
    const std::function<bool(std::span<const Vertex>)>& visit_;
    std::vector<Vertex> order_;
    std::vector<std::vector<Vertex>> earlier_;
    std::vector<std::vector<std::size_t>> profile_;
    std::vector<std::vector<std::size_t>> host_profile_;
    std::vector<Vertex> image_;
    std::vector<char> used_;
};

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        result = result * (n - k + i) / i;
    return result;
}

} // namespace

void require_pattern(const Graph& pattern, const char* what)
{
    if (pattern.edge_count() == 0)
        fail(ErrorCode::empty_edge_set, std::string(what) + " pattern has no edges");
    for (Vertex v = 0; v < pattern.vertex_count(); ++v)
        if (pattern.degree(v) == 0)
            fail(ErrorCode::precondition, std::string(what) + " pattern has an isolated vertex");
}

void for_each_embedding(const Graph& host, const Graph& pattern,
    const std::function<bool(std::span<const Vertex>)>& visit)
{
    EmbeddingSearch(host, pattern, visit).run();
}

std::uint64_t count_embeddings(const Graph& host, const Graph& pattern)
{
    std::uint64_t count = 0;
    for_each_embedding(host, pattern, [&](std::span<const Vertex>) {
        ++count;
        return true;
    });
    return count;
}

std::uint64_t count_automorphisms(const Graph& pattern)
{
    std::uint64_t count = 0;
    for_each_embedding(pattern, pattern, [&](std::span<const Vertex> image) {
        for (const auto& e : pattern.edges())
            if (!pattern.has_edge(image[e.u], image[e.v]))
                return true;
        ++count;
        return true;
    });
    return count;
}

std::vector<std::vector<EdgeId>> find_copies(const Graph& host, const Graph& pattern, std::size_t limit)
{
    require_pattern(pattern, "copy");
    std::set<std::vector<EdgeId>> seen;
    std::vector<EdgeId> ids;
    for_each_embedding(host, pattern, [&](std::span<const Vertex> image) {
        ids.clear();
        for (const auto& e : pattern.edges())
            ids.push_back(*host.find_edge(image[e.u], image[e.v]));
        std::sort(ids.begin(), ids.end());
        seen.insert(ids);
        return seen.size() < limit;
    });
    return {seen.begin(), seen.end()};
}

std::uint64_t count_copies(const Graph& host, const Graph& pattern)
{
    std::size_t isolated = 0;
    for (Vertex v = 0; v < pattern.vertex_count(); ++v)
        isolated += pattern.degree(v) == 0;
    if (pattern.edge_count() == 0)
        return binomial(host.vertex_count(), pattern.vertex_count());
    if (isolated == 0)
        return count_embeddings(host, pattern) / count_automorphisms(pattern);
    auto core = drop_isolated_vertices(pattern);
    if (host.vertex_count() < pattern.vertex_count())
        return 0;
    return count_copies(host, core) * binomial(host.vertex_count() - core.vertex_count(), isolated);
}

bool contains_copy(const Graph& host, const Graph& pattern)
{
    bool found = false;
    for_each_embedding(host, pattern, [&](std::span<const Vertex>) {
        found = true;
        return false;
    });
    return found;
}

EdgeSubgraph edge_subgraph(const Graph& host, const std::vector<bool>& keep)
{
    std::vector<Edge> edges;
    std::vector<EdgeId> map;
    for (EdgeId id = 0; id < host.edge_count(); ++id)
        if (keep[id]) {
            edges.push_back(host.edge(id));
            map.push_back(id);
        }
    // Host edges are already sorted, so the new ids line up with `map`.
    return {Graph(host.vertex_count(), std::move(edges)), std::move(map)};
}

} // namespace arrowing
