#pragma once

#include <arrowing/graph.hpp>
#include <arrowing/solver.hpp>

#include <json.hpp>

#include <span>
#include <vector>

namespace arrowing {

class EdgeColoring {
  public:
    EdgeColoring(Graph graph, std::vector<Color> colors);

    static EdgeColoring all_blue(const Graph& graph);
    static EdgeColoring from_red_edges(const Graph& graph, std::span<const Edge> red);

    const Graph& graph() const { return graph_; }
    Color color(EdgeId id) const { return colors_[id]; }
    std::span<const Color> colors() const { return colors_; }
    void set(EdgeId id, Color c) { colors_.at(id) = c; }

    std::vector<Edge> red_edges() const;
    Graph red_subgraph() const;
    Graph blue_subgraph() const;

    friend bool operator==(const EdgeColoring& a, const EdgeColoring& b)
    {
        return a.graph_ == b.graph_ && a.colors_ == b.colors_;
    }

  private:
    Graph graph_;
    std::vector<Color> colors_;
};

std::size_t red_degree(const EdgeColoring& c, Vertex v);
std::vector<Vertex> free_vertices(const EdgeColoring& c);
bool is_good(const EdgeColoring& c, const Graph& f, const Graph& h);

// {"graph": <edge list>, "red": [[u, v], ...]}
nlohmann::json coloring_to_json(const EdgeColoring& c);
EdgeColoring coloring_from_json(const nlohmann::json& j);

} // namespace arrowing
