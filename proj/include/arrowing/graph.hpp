#pragma once

#include <arrowing/error.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arrowing {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

inline bool shares_vertex(const Edge& a, const Edge& b)
{
    return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
}

// Simple undirected graph on vertices 0..n-1.  Edges are kept normalised
// (u < v) and sorted, and an edge id is its index in that order.  The data is
// immutable and shared, so copies are cheap.
class Graph {
  public:
    Graph();
    Graph(std::size_t vertex_count, std::vector<Edge> edges);

    // Like the constructor, but silently drops loops and repeated edges.
    static Graph collapsed(std::size_t vertex_count, std::vector<Edge> edges);

    std::size_t vertex_count() const { return data_->vertex_count; }
    std::size_t edge_count() const { return data_->edges.size(); }

    std::span<const Edge> edges() const { return data_->edges; }
    const Edge& edge(EdgeId id) const { return data_->edges[id]; }

    std::span<const Vertex> neighbors(Vertex v) const;
    std::span<const EdgeId> incident_edges(Vertex v) const;
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }

    bool has_edge(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }
    std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;
    EdgeId edge_id(Vertex a, Vertex b) const;
    EdgeId edge_id(const Edge& e) const { return edge_id(e.u, e.v); }

    const std::vector<std::string>& labels() const { return data_->labels; }
    Graph with_labels(std::vector<std::string> labels) const;

    friend bool operator==(const Graph& a, const Graph& b);

  private:
    struct Data {
        std::size_t vertex_count = 0;
        std::vector<Edge> edges;
        std::vector<std::size_t> offsets;
        std::vector<Vertex> adjacency;
        std::vector<EdgeId> adjacency_edges;
        std::vector<std::string> labels;
    };

    explicit Graph(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
    static std::shared_ptr<Data> build(std::size_t vertex_count, std::vector<Edge> edges);

    std::shared_ptr<const Data> data_;
};

// Standard families.  `n` is the number of vertices, except for stars where
// K_{1,n} has n leaves.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph complete_minus_edge(std::size_t n);
Graph tailed_complete(std::size_t n);
Graph empty_graph(std::size_t n);

// Shorthands such as k3, c4, j4, tk4, p3, k1_3.
Graph graph_from_shorthand(std::string_view name);
bool is_shorthand(std::string_view name);

struct SurgeryResult {
    Graph graph;
    std::vector<Vertex> vertex_map;
};

SurgeryResult identify_vertices(const Graph& g, Vertex a, Vertex b);
SurgeryResult delete_vertices(const Graph& g, std::span<const Vertex> vertices);
Graph delete_edges(const Graph& g, std::span<const EdgeId> edges);
Graph drop_isolated_vertices(const Graph& g);
Graph relabel(const Graph& g, std::span<const Vertex> permutation);

struct Combination {
    Graph graph;
    std::vector<Vertex> first_map;
    std::vector<Vertex> second_map;
};

// Two copies of h glued along the edge e.
Combination combine_on_edge(const Graph& h, const Edge& e);

// Builds a graph out of pieces, identifying chosen vertices of each new piece
// with vertices that already exist.
class GraphBuilder {
  public:
    Vertex add_vertex();
    Vertex add_vertices(std::size_t count);
    void add_edge(Vertex a, Vertex b);

    // Appends a copy of g.  Each glue pair (x, y) identifies vertex x of g
    // with the existing vertex y.  Returns the image of every vertex of g.
    std::vector<Vertex> add_graph(const Graph& g,
        std::span<const std::pair<Vertex, Vertex>> glue = {});

    std::size_t vertex_count() const { return vertex_count_; }
    Graph build() const;

  private:
    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
};

class Linkage {
  public:
    static Linkage infinite() { return Linkage(true, 0); }
    static Linkage finite(unsigned value) { return Linkage(false, value); }

    bool is_infinite() const { return infinite_; }
    unsigned value() const;
    std::string to_string() const;

    friend bool operator==(const Linkage&, const Linkage&) = default;
    friend std::strong_ordering operator<=>(const Linkage& a, const Linkage& b);

  private:
    Linkage(bool infinite, unsigned value) : infinite_(infinite), value_(value) {}

    bool infinite_;
    unsigned value_;
};

Linkage epl(const Graph& g, const Edge& e, const Edge& f);
Linkage mepl(const Graph& g);

bool is_connected(const Graph& g);
bool is_k_connected(const Graph& g, unsigned k);
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

// First line "n m", then m lines "u v".  '#' starts a comment.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);
Graph read_edge_list_file(const std::string& path);
void write_edge_list_file(const Graph& g, const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

} // namespace arrowing
