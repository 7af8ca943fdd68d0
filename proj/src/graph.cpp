#include <arrowing/graph.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

namespace arrowing {

namespace {

std::string edge_text(Vertex a, Vertex b)
{
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

} // namespace

std::shared_ptr<Graph::Data> Graph::build(std::size_t vertex_count, std::vector<Edge> edges)
{
    auto data = std::make_shared<Data>();
    data->vertex_count = vertex_count;
    for (auto& e : edges) {
        if (e.u == e.v)
            fail(ErrorCode::invalid_graph, "loop at vertex " + std::to_string(e.u));
        if (e.u >= vertex_count || e.v >= vertex_count)
            fail(ErrorCode::invalid_graph, "edge " + edge_text(e.u, e.v) + " leaves the vertex range 0.."
                    + std::to_string(vertex_count));
        e = make_edge(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        fail(ErrorCode::invalid_graph, "parallel edge " + edge_text(dup->u, dup->v));
    data->edges = std::move(edges);

    std::vector<std::size_t> degree(vertex_count, 0);
    for (const auto& e : data->edges) {
        ++degree[e.u];
        ++degree[e.v];
    }
    data->offsets.assign(vertex_count + 1, 0);
    for (std::size_t v = 0; v < vertex_count; ++v)
        data->offsets[v + 1] = data->offsets[v] + degree[v];
    data->adjacency.resize(data->offsets.back());
    data->adjacency_edges.resize(data->offsets.back());
    std::vector<std::size_t> fill(data->offsets.begin(), data->offsets.end() - 1);
    for (EdgeId id = 0; id < data->edges.size(); ++id) {
        const auto& e = data->edges[id];
        data->adjacency[fill[e.u]] = e.v;
        data->adjacency_edges[fill[e.u]++] = id;
        data->adjacency[fill[e.v]] = e.u;
        data->adjacency_edges[fill[e.v]++] = id;
    }
    for (std::size_t v = 0; v < vertex_count; ++v) {
        auto lo = data->offsets[v], hi = data->offsets[v + 1];
        std::vector<std::pair<Vertex, EdgeId>> row;
        row.reserve(hi - lo);
        for (auto i = lo; i < hi; ++i)
            row.emplace_back(data->adjacency[i], data->adjacency_edges[i]);
        std::sort(row.begin(), row.end());
        for (auto i = lo; i < hi; ++i) {
            data->adjacency[i] = row[i - lo].first;
            data->adjacency_edges[i] = row[i - lo].second;
        }
    }
    return data;
}

Graph::Graph() : data_(build(0, {})) {}

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges) :
    data_(build(vertex_count, std::move(edges)))
{
}

Graph Graph::collapsed(std::size_t vertex_count, std::vector<Edge> edges)
{
    std::erase_if(edges, [](const Edge& e) { return e.u == e.v; });
    for (auto& e : edges)
        e = make_edge(e.u, e.v);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(vertex_count, std::move(edges));
}

std::span<const Vertex> Graph::neighbors(Vertex v) const
{
    if (v >= data_->vertex_count)
        fail(ErrorCode::invalid_graph, "vertex " + std::to_string(v) + " out of range");
    return {data_->adjacency.data() + data_->offsets[v], data_->offsets[v + 1] - data_->offsets[v]};
}

std::span<const EdgeId> Graph::incident_edges(Vertex v) const
{
    if (v >= data_->vertex_count)
        fail(ErrorCode::invalid_graph, "vertex " + std::to_string(v) + " out of range");
    return {data_->adjacency_edges.data() + data_->offsets[v], data_->offsets[v + 1] - data_->offsets[v]};
}

std::optional<EdgeId> Graph::find_edge(Vertex a, Vertex b) const
{
    if (a >= data_->vertex_count || b >= data_->vertex_count || a == b)
        return std::nullopt;
    auto lo = data_->offsets[a], hi = data_->offsets[a + 1];
    auto first = data_->adjacency.begin() + static_cast<std::ptrdiff_t>(lo);
    auto last = data_->adjacency.begin() + static_cast<std::ptrdiff_t>(hi);
    auto it = std::lower_bound(first, last, b);
    if (it == last || *it != b)
        return std::nullopt;
    return data_->adjacency_edges[static_cast<std::size_t>(it - data_->adjacency.begin())];
}

EdgeId Graph::edge_id(Vertex a, Vertex b) const
{
    auto id = find_edge(a, b);
    if (!id)
        fail(ErrorCode::missing_edge, "no edge " + edge_text(a, b));
    return *id;
}

Graph Graph::with_labels(std::vector<std::string> labels) const
{
    if (!labels.empty() && labels.size() != vertex_count())
        fail(ErrorCode::invalid_graph, "label count does not match vertex count");
    auto data = std::make_shared<Data>(*data_);
    data->labels = std::move(labels);
    return Graph(std::shared_ptr<const Data>(std::move(data)));
}

bool operator==(const Graph& a, const Graph& b)
{
    return a.vertex_count() == b.vertex_count() && std::ranges::equal(a.edges(), b.edges());
}

Graph path_graph(std::size_t n)
{
    if (n < 1)
        fail(ErrorCode::size_out_of_range, "path needs at least 1 vertex");
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i)
        edges.push_back({i, i + 1});
    return Graph(n, std::move(edges));
}

Graph cycle_graph(std::size_t n)
{
    if (n < 3)
        fail(ErrorCode::size_out_of_range, "cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        edges.push_back(make_edge(i, static_cast<Vertex>((i + 1) % n)));
    return Graph(n, std::move(edges));
}

Graph complete_graph(std::size_t n)
{
    if (n < 1)
        fail(ErrorCode::size_out_of_range, "complete graph needs at least 1 vertex");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            edges.push_back({i, j});
    return Graph(n, std::move(edges));
}

Graph star_graph(std::size_t leaves)
{
    if (leaves < 1)
        fail(ErrorCode::size_out_of_range, "star needs at least 1 leaf");
    std::vector<Edge> edges;
    for (Vertex i = 1; i <= leaves; ++i)
        edges.push_back({0, i});
    return Graph(leaves + 1, std::move(edges));
}

Graph complete_minus_edge(std::size_t n)
{
    if (n < 2)
        fail(ErrorCode::size_out_of_range, "J_n needs at least 2 vertices");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (!(i == 0 && j == 1))
                edges.push_back({i, j});
    return Graph(n, std::move(edges));
}

Graph tailed_complete(std::size_t n)
{
    if (n < 3)
        fail(ErrorCode::size_out_of_range, "TK_n needs n >= 3");
    auto base = complete_graph(n);
    std::vector<Edge> edges(base.edges().begin(), base.edges().end());
    edges.push_back({0, static_cast<Vertex>(n)});
    return Graph(n + 1, std::move(edges));
}

Graph empty_graph(std::size_t n) { return Graph(n, {}); }

namespace {

std::optional<std::size_t> parse_size(std::string_view text)
{
    if (text.empty())
        return std::nullopt;
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        return std::nullopt;
    return value;
}

std::optional<Graph> shorthand(std::string_view name)
{
    auto suffix = [&](std::string_view prefix) -> std::optional<std::size_t> {
        if (!name.starts_with(prefix))
            return std::nullopt;
        return parse_size(name.substr(prefix.size()));
    };
    if (auto n = suffix("k1_"))
        return star_graph(*n);
    if (auto n = suffix("tk"))
        return tailed_complete(*n);
    if (auto n = suffix("k"))
        return complete_graph(*n);
    if (auto n = suffix("c"))
        return cycle_graph(*n);
    if (auto n = suffix("p"))
        return path_graph(*n);
    if (auto n = suffix("j"))
        return complete_minus_edge(*n);
    return std::nullopt;
}

} // namespace

bool is_shorthand(std::string_view name)
{
    try {
        return shorthand(name).has_value();
    } catch (const ArrowingError&) {
        return false;
    }
}

Graph graph_from_shorthand(std::string_view name)
{
    auto g = shorthand(name);
    if (!g)
        fail(ErrorCode::syntax, "unknown graph shorthand '" + std::string(name) + "'");
    return *g;
}

SurgeryResult identify_vertices(const Graph& g, Vertex a, Vertex b)
{
    if (a >= g.vertex_count() || b >= g.vertex_count())
        fail(ErrorCode::invalid_graph, "vertex out of range");
    if (a == b)
        fail(ErrorCode::identical_vertices, "cannot identify vertex " + std::to_string(a) + " with itself");
    Vertex keep = std::min(a, b), gone = std::max(a, b);
    std::vector<Vertex> map(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        map[v] = v == gone ? keep : (v > gone ? v - 1 : v);
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        edges.push_back({map[e.u], map[e.v]});
    return {Graph::collapsed(g.vertex_count() - 1, std::move(edges)), std::move(map)};
}

SurgeryResult delete_vertices(const Graph& g, std::span<const Vertex> vertices)
{
    constexpr Vertex removed = static_cast<Vertex>(-1);
    std::vector<Vertex> map(g.vertex_count(), 0);
    for (auto v : vertices) {
        if (v >= g.vertex_count())
            fail(ErrorCode::invalid_graph, "vertex out of range");
        map[v] = removed;
    }
    Vertex next = 0;
    for (auto& m : map)
        m = m == removed ? removed : next++;
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        if (map[e.u] != removed && map[e.v] != removed)
            edges.push_back({map[e.u], map[e.v]});
    return {Graph(next, std::move(edges)), std::move(map)};
}

Graph delete_edges(const Graph& g, std::span<const EdgeId> edges)
{
    std::vector<bool> drop(g.edge_count(), false);
    for (auto id : edges) {
        if (id >= g.edge_count())
            fail(ErrorCode::missing_edge, "edge id " + std::to_string(id) + " out of range");
        drop[id] = true;
    }
    std::vector<Edge> kept;
    for (EdgeId id = 0; id < g.edge_count(); ++id)
        if (!drop[id])
            kept.push_back(g.edge(id));
    return Graph(g.vertex_count(), std::move(kept));
}

Graph drop_isolated_vertices(const Graph& g)
{
    std::vector<Vertex> isolated;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0)
            isolated.push_back(v);
    return delete_vertices(g, isolated).graph;
}

Graph relabel(const Graph& g, std::span<const Vertex> permutation)
{
    if (permutation.size() != g.vertex_count())
        fail(ErrorCode::invalid_graph, "permutation size does not match vertex count");
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        edges.push_back(make_edge(permutation[e.u], permutation[e.v]));
    return Graph(g.vertex_count(), std::move(edges));
}

Combination combine_on_edge(const Graph& h, const Edge& e)
{
    h.edge_id(e);
    GraphBuilder builder;
    auto first = builder.add_graph(h);
    std::pair<Vertex, Vertex> glue[] = {{e.u, first[e.u]}, {e.v, first[e.v]}};
    auto second = builder.add_graph(h, glue);
    return {builder.build(), std::move(first), std::move(second)};
}

Vertex GraphBuilder::add_vertex() { return static_cast<Vertex>(vertex_count_++); }

Vertex GraphBuilder::add_vertices(std::size_t count)
{
    auto first = static_cast<Vertex>(vertex_count_);
    vertex_count_ += count;
    return first;
}

void GraphBuilder::add_edge(Vertex a, Vertex b)
{
    if (a >= vertex_count_ || b >= vertex_count_)
        fail(ErrorCode::invalid_graph, "builder edge " + edge_text(a, b) + " out of range");
    edges_.push_back(make_edge(a, b));
}

std::vector<Vertex> GraphBuilder::add_graph(const Graph& g,
    std::span<const std::pair<Vertex, Vertex>> glue)
{
    constexpr Vertex unset = static_cast<Vertex>(-1);
    std::vector<Vertex> map(g.vertex_count(), unset);
    for (auto [x, y] : glue) {
        if (x >= g.vertex_count() || y >= vertex_count_)
            fail(ErrorCode::invalid_graph, "glue pair out of range");
        map[x] = y;
    }
    for (auto& m : map)
        if (m == unset)
            m = add_vertex();
    for (const auto& e : g.edges())
        add_edge(map[e.u], map[e.v]);
    return map;
}

Graph GraphBuilder::build() const { return Graph::collapsed(vertex_count_, edges_); }

unsigned Linkage::value() const
{
    if (infinite_)
        fail(ErrorCode::precondition, "linkage is infinite");
    return value_;
}

std::string Linkage::to_string() const { return infinite_ ? "infinite" : std::to_string(value_); }

std::strong_ordering operator<=>(const Linkage& a, const Linkage& b)
{
    if (a.infinite_ || b.infinite_)
        return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
}

Linkage epl(const Graph& g, const Edge& e, const Edge& f)
{
    auto ide = g.edge_id(e);
    auto idf = g.edge_id(f);
    if (ide == idf)
        fail(ErrorCode::precondition, "epl needs two distinct edges");
    const auto& a = g.edge(ide);
    const auto& b = g.edge(idf);
    if (shares_vertex(a, b))
        return Linkage::infinite();
    return Linkage::finite(g.has_edge(a.u, b.u) + g.has_edge(a.u, b.v) + g.has_edge(a.v, b.u) + g.has_edge(a.v, b.v));
}

Linkage mepl(const Graph& g)
{
    if (g.edge_count() == 0)
        fail(ErrorCode::empty_edge_set, "mepl of a graph without edges");
    std::optional<unsigned> best;
    auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto& e = edges[i];
            const auto& f = edges[j];
            if (shares_vertex(e, f))
                continue;
            unsigned count = g.has_edge(e.u, f.u) + g.has_edge(e.u, f.v) + g.has_edge(e.v, f.u)
                + g.has_edge(e.v, f.v);
            if (!best || count < *best)
                best = count;
        }
    return best ? Linkage::finite(*best) : Linkage::infinite();
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g)
{
    std::vector<int> seen(g.vertex_count(), 0);
    std::vector<std::vector<Vertex>> result;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (seen[s])
            continue;
        std::vector<Vertex> component{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < component.size(); ++i)
            for (auto w : g.neighbors(component[i]))
                if (!seen[w]) {
                    seen[w] = 1;
                    component.push_back(w);
                }
        std::sort(component.begin(), component.end());
        result.push_back(std::move(component));
    }
    return result;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

namespace {

bool connected_without(const Graph& g, const std::vector<char>& removed)
{
    std::size_t n = g.vertex_count();
    Vertex start = 0;
    std::size_t alive = 0;
    for (Vertex v = 0; v < n; ++v)
        if (!removed[v]) {
            if (alive == 0)
                start = v;
            ++alive;
        }
    if (alive <= 1)
        return true;
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{start};
    seen[start] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto w : g.neighbors(v))
            if (!removed[w] && !seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == alive;
}

bool separator_search(const Graph& g, std::vector<char>& removed, Vertex from, unsigned left)
{
    if (!connected_without(g, removed))
        return true;
    if (left == 0)
        return false;
    for (Vertex v = from; v < g.vertex_count(); ++v) {
        removed[v] = 1;
        bool found = separator_search(g, removed, v + 1, left - 1);
        removed[v] = 0;
        if (found)
            return true;
    }
    return false;
}

} // namespace

bool is_k_connected(const Graph& g, unsigned k)
{
    if (k == 0)
        fail(ErrorCode::precondition, "connectivity k must be positive");
    if (g.vertex_count() <= k)
        return false;
    std::vector<char> removed(g.vertex_count(), 0);
    return !separator_search(g, removed, 0, k - 1);
}

Graph parse_edge_list(std::string_view text)
{
    std::vector<std::vector<long long>> rows;
    std::size_t line_no = 0;
    std::vector<std::size_t> row_lines;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::vector<long long> row;
        std::string token;
        while (fields >> token) {
            long long value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc() || ptr != token.data() + token.size() || value < 0)
                fail(ErrorCode::syntax, "line " + std::to_string(line_no) + ": expected a non-negative integer, got '"
                        + token + "'");
            row.push_back(value);
        }
        if (row.empty())
            continue;
        if (row.size() != 2)
            fail(ErrorCode::syntax, "line " + std::to_string(line_no) + ": expected two integers");
        rows.push_back(std::move(row));
        row_lines.push_back(line_no);
    }
    if (rows.empty())
        fail(ErrorCode::syntax, "missing 'n m' header line");
    auto n = static_cast<std::size_t>(rows[0][0]);
    auto m = static_cast<std::size_t>(rows[0][1]);
    if (rows.size() - 1 != m)
        fail(ErrorCode::syntax, "header announces " + std::to_string(m) + " edges but " + std::to_string(rows.size() - 1)
                + " were given");
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        auto a = rows[i][0], b = rows[i][1];
        if (static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n)
            fail(ErrorCode::invalid_graph, "line " + std::to_string(row_lines[i]) + ": vertex out of range");
        edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    }
    return Graph(n, std::move(edges));
}

std::string to_edge_list(const Graph& g)
{
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(ErrorCode::syntax, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        fail(ErrorCode::syntax, "cannot write '" + path + "'");
    out << text;
}

Graph read_edge_list_file(const std::string& path) { return parse_edge_list(read_text_file(path)); }

void write_edge_list_file(const Graph& g, const std::string& path) { write_text_file(path, to_edge_list(g)); }

} // namespace arrowing
