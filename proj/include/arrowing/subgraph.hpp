#pragma once

#include <arrowing/graph.hpp>

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace arrowing {

// Calls visit(image) for every injective homomorphism of pattern into host,
// where image[p] is the host vertex assigned to pattern vertex p.  The visitor
// returns false to stop the enumeration.
void for_each_embedding(const Graph& host, const Graph& pattern,
    const std::function<bool(std::span<const Vertex>)>& visit);

std::uint64_t count_embeddings(const Graph& host, const Graph& pattern);
std::uint64_t count_automorphisms(const Graph& pattern);

// Subgraphs of host isomorphic to pattern, as sorted host edge-id sets.  The
// result is deduplicated and sorted.  Patterns with isolated vertices are
// rejected; an empty pattern is rejected as well.
std::vector<std::vector<EdgeId>> find_copies(const Graph& host, const Graph& pattern,
    std::size_t limit = std::numeric_limits<std::size_t>::max());

// Number of subgraphs of host isomorphic to pattern.  Isolated pattern vertices
// are allowed here: each copy of the non-isolated part is counted once for
// every way of picking the extra vertices.
std::uint64_t count_copies(const Graph& host, const Graph& pattern);

bool contains_copy(const Graph& host, const Graph& pattern);

// Host restricted to the given edges, on the same vertex set.  edge_map[i] is
// the host id of edge i of the result.
struct EdgeSubgraph {
    Graph graph;
    std::vector<EdgeId> edge_map;
};

EdgeSubgraph edge_subgraph(const Graph& host, const std::vector<bool>& keep);

void require_pattern(const Graph& pattern, const char* what);

} // namespace arrowing
