#include <arrowing/enumerate.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace arrowing {

namespace {

// Colour refinement starting from degrees.  Colour ids are ranks of sorted
// signatures, so they do not depend on the vertex numbering.
std::vector<std::uint32_t> refined_colors(const Graph& g)
{
    std::size_t n = g.vertex_count();
    std::vector<std::uint32_t> color(n);
    for (Vertex v = 0; v < n; ++v)
        color[v] = static_cast<std::uint32_t>(g.degree(v));
    std::size_t classes = 0;
    while (true) {
        std::vector<std::vector<std::uint32_t>> signature(n);
        for (Vertex v = 0; v < n; ++v) {
            signature[v].push_back(color[v]);
            std::vector<std::uint32_t> around;
            for (auto w : g.neighbors(v))
                around.push_back(color[w]);
            std::sort(around.begin(), around.end());
            signature[v].insert(signature[v].end(), around.begin(), around.end());
        }
        std::map<std::vector<std::uint32_t>, std::uint32_t> rank;
        for (const auto& s : signature)
            rank.emplace(s, 0);
        std::uint32_t next = 0;
        for (auto& [s, r] : rank)
            r = next++;
        for (Vertex v = 0; v < n; ++v)
            color[v] = rank[signature[v]];
        if (rank.size() == classes)
            break;
        classes = rank.size();
    }
    return color;
}

class CanonicalSearch {
  public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.vertex_count())
    {
        auto color = refined_colors(g);
        std::vector<Vertex> by_color(n_);
        for (Vertex v = 0; v < n_; ++v)
            by_color[v] = v;
        std::stable_sort(by_color.begin(), by_color.end(), [&](Vertex a, Vertex b) { return color[a] < color[b]; });
        for (Vertex v : by_color)
            slot_color_.push_back(color[v]);
        color_ = std::move(color);
        order_.assign(n_, 0);
        used_.assign(n_, 0);
        total_bits_ = n_ * (n_ - 1) / 2;
    }

    std::pair<std::uint64_t, std::vector<Vertex>> run()
    {
        if (n_ <= 1)
            return {0, std::vector<Vertex>(n_, 0)};
        place(0, 0, 0);
        return {best_, best_order_};
    }

  private:
    // Positions are filled one at a time; after position i is fixed, the bits
    // for pairs (j, i) with j < i are appended, so partial codes compare as
    // prefixes.
    void place(std::size_t position, std::uint64_t code, std::size_t bits)
    {
        if (position == n_) {
            if (!have_best_ || code > best_) {
                best_ = code;
                best_order_ = order_;
                have_best_ = true;
            }
            return;
        }
        for (Vertex v = 0; v < n_; ++v) {
            if (used_[v] || color_[v] != slot_color_[position])
                continue;
            std::uint64_t next = code;
            for (std::size_t j = 0; j < position; ++j)
                next = (next << 1) | (g_.has_edge(order_[j], v) ? 1u : 0u);
            std::size_t next_bits = bits + position;
            if (have_best_) {
                auto prefix = next_bits == 0 ? 0 : best_ >> (total_bits_ - next_bits);
                if (next < prefix)
                    continue;
                if (next > prefix)
                    have_best_ = false;
            }
            order_[position] = v;
            used_[v] = 1;
            place(position + 1, next, next_bits);
            used_[v] = 0;
        }
    }

    const Graph& g_;
    std::size_t n_;
    std::vector<std::uint32_t> color_;
    std::vector<std::uint32_t> slot_color_;
    std::vector<Vertex> order_;
    std::vector<char> used_;
    std::size_t total_bits_ = 0;
    bool have_best_ = false;
    std::uint64_t best_ = 0;
    std::vector<Vertex> best_order_;
};

} // namespace

CanonicalForm canonical_form(const Graph& g)
{
    if (g.vertex_count() > max_canonical_vertices)
        fail(ErrorCode::size_out_of_range, "canonical form supports at most 11 vertices");
    auto [bits, order] = CanonicalSearch(g).run();
    return {static_cast<std::uint32_t>(g.vertex_count()), bits};
}

Graph graph_from_canonical(const CanonicalForm& form)
{
    std::size_t n = form.vertex_count;
    std::size_t total = n * (n - 1) / 2;
    std::vector<Edge> edges;
    std::size_t index = 0;
    for (Vertex i = 1; i < n; ++i)
        for (Vertex j = 0; j < i; ++j, ++index)
            if ((form.bits >> (total - 1 - index)) & 1u)
                edges.push_back({j, i});
    return Graph(n, std::move(edges));
}

Graph canonical_graph(const Graph& g) { return graph_from_canonical(canonical_form(g)); }

bool is_isomorphic(const Graph& a, const Graph& b)
{
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    return canonical_form(a) == canonical_form(b);
}

std::vector<Graph> nonisomorphic_graphs(std::size_t n)
{
    if (n > max_canonical_vertices - 1)
        fail(ErrorCode::size_out_of_range, "graph enumeration supports at most 10 vertices");
    std::set<CanonicalForm> level{canonical_form(empty_graph(0))};
    for (std::size_t k = 1; k <= n; ++k) {
        std::set<CanonicalForm> next;
        for (const auto& form : level) {
            auto base = graph_from_canonical(form);
            std::vector<Edge> edges(base.edges().begin(), base.edges().end());
            auto fresh = static_cast<Vertex>(k - 1);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
                auto extended = edges;
                for (Vertex v = 0; v + 1 < k; ++v)
                    if ((mask >> v) & 1u)
                        extended.push_back({v, fresh});
                next.insert(canonical_form(Graph(k, std::move(extended))));
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> result;
    for (const auto& form : level)
        result.push_back(graph_from_canonical(form));
    std::stable_sort(result.begin(), result.end(),
        [](const Graph& a, const Graph& b) { return a.edge_count() < b.edge_count(); });
    return result;
}

std::vector<Graph> connected_graphs_up_to(std::size_t max_n, std::size_t min_n)
{
    std::vector<Graph> out;
    for (std::size_t n = std::max<std::size_t>(min_n, 1); n <= max_n; ++n)
        for (auto& g : nonisomorphic_graphs(n))
            if (is_connected(g))
                out.push_back(std::move(g));
    return out;
}

std::vector<Graph> two_connected_graphs_up_to(std::size_t max_n, std::size_t min_n)
{
    std::vector<Graph> out;
    for (std::size_t n = min_n; n <= max_n; ++n)
        for (auto& g : nonisomorphic_graphs(n))
            if (is_k_connected(g, 2))
                out.push_back(std::move(g));
    return out;
}

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (coin(rng))
                edges.push_back({i, j});
    return Graph(n, std::move(edges));
}

} // namespace arrowing
