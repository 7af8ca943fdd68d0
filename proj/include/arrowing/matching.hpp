#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace arrowing::detail {

struct WeightedEdge {
    std::uint32_t u = 0;
    std::uint32_t v = 0;
    std::int64_t weight = 0;
};

// Exact maximum-weight matching on a general graph (Edmonds' blossom method
// with integer duals).  mate[v] is v's partner or -1.
std::vector<std::int64_t> maximum_weight_matching(std::size_t vertex_count, std::span<const WeightedEdge> edges);

} // namespace arrowing::detail
