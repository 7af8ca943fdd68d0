#pragma once

#include <arrowing/coloring.hpp>
#include <arrowing/graph.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace arrowing {

struct TriangleWeighting {
    std::vector<std::uint64_t> gamma; // indexed by EdgeId
    std::uint64_t total_triangles = 0;
};

TriangleWeighting triangle_weights(const Graph& g);

struct WeightedMatching {
    std::vector<Edge> edges;
    std::uint64_t weight = 0;
};

// Edges of weight zero are left out: they never raise the optimum.
WeightedMatching max_weight_matching(const Graph& g, const TriangleWeighting& w);

struct P3K3Decision {
    bool arrows = false;
    std::uint64_t triangles = 0;
    std::uint64_t matching_weight = 0;
    WeightedMatching matching;
    std::optional<EdgeColoring> certificate;
};

P3K3Decision decide_p3_k3(const Graph& g);

} // namespace arrowing
