#pragma once

#include <arrowing/graph.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace arrowing {

// Upper-triangle adjacency bits of the canonical relabelling, so two graphs
// are isomorphic exactly when their forms are equal.  Supports up to 11
// vertices.
struct CanonicalForm {
    std::uint32_t vertex_count = 0;
    std::uint64_t bits = 0;

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

constexpr std::size_t max_canonical_vertices = 11;

CanonicalForm canonical_form(const Graph& g);
Graph graph_from_canonical(const CanonicalForm& form);
Graph canonical_graph(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

// One representative per isomorphism class of graphs on exactly n vertices,
// ordered by edge count and then by canonical form.
std::vector<Graph> nonisomorphic_graphs(std::size_t n);

std::vector<Graph> connected_graphs_up_to(std::size_t max_n, std::size_t min_n = 1);
std::vector<Graph> two_connected_graphs_up_to(std::size_t max_n, std::size_t min_n = 3);

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng);

} // namespace arrowing
