#include <arrowing/coloring.hpp>
#include <arrowing/subgraph.hpp>

namespace arrowing {

EdgeColoring::EdgeColoring(Graph graph, std::vector<Color> colors) :
    graph_(std::move(graph)), colors_(std::move(colors))
{
    if (colors_.size() != graph_.edge_count())
        fail(ErrorCode::precondition, "colouring has " + std::to_string(colors_.size()) + " entries for "
                + std::to_string(graph_.edge_count()) + " edges");
}

EdgeColoring EdgeColoring::all_blue(const Graph& graph)
{
    return EdgeColoring(graph, std::vector<Color>(graph.edge_count(), Color::blue));
}

EdgeColoring EdgeColoring::from_red_edges(const Graph& graph, std::span<const Edge> red)
{
    auto c = all_blue(graph);
    for (const auto& e : red)
        c.set(graph.edge_id(e), Color::red);
    return c;
}

std::vector<Edge> EdgeColoring::red_edges() const
{
    std::vector<Edge> out;
    for (EdgeId id = 0; id < colors_.size(); ++id)
        if (colors_[id] == Color::red)
            out.push_back(graph_.edge(id));
    return out;
}

namespace {

Graph colored_subgraph(const Graph& g, std::span<const Color> colors, Color which)
{
    std::vector<bool> keep(g.edge_count());
    for (EdgeId id = 0; id < g.edge_count(); ++id)
        keep[id] = colors[id] == which;
    return edge_subgraph(g, keep).graph;
}

} // namespace

Graph EdgeColoring::red_subgraph() const { return colored_subgraph(graph_, colors_, Color::red); }

Graph EdgeColoring::blue_subgraph() const { return colored_subgraph(graph_, colors_, Color::blue); }

std::size_t red_degree(const EdgeColoring& c, Vertex v)
{
    std::size_t count = 0;
    for (auto id : c.graph().incident_edges(v))
        count += c.color(id) == Color::red;
    return count;
}

std::vector<Vertex> free_vertices(const EdgeColoring& c)
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < c.graph().vertex_count(); ++v)
        if (red_degree(c, v) == 0)
            out.push_back(v);
    return out;
}

bool is_good(const EdgeColoring& c, const Graph& f, const Graph& h)
{
    require_pattern(f, "F");
    require_pattern(h, "H");
    return !contains_copy(c.red_subgraph(), f) && !contains_copy(c.blue_subgraph(), h);
}

nlohmann::json coloring_to_json(const EdgeColoring& c)
{
    nlohmann::json red = nlohmann::json::array();
    for (const auto& e : c.red_edges())
        red.push_back({e.u, e.v});
    return {{"graph", to_edge_list(c.graph())}, {"red", red}};
}

EdgeColoring coloring_from_json(const nlohmann::json& j)
{
    try {
        auto g = parse_edge_list(j.at("graph").get<std::string>());
        std::vector<Edge> red;
        for (const auto& pair : j.at("red"))
            red.push_back(make_edge(pair.at(0).get<Vertex>(), pair.at(1).get<Vertex>()));
        return EdgeColoring::from_red_edges(g, red);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::syntax, std::string("malformed colouring: ") + e.what());
    }
}

} // namespace arrowing
