#pragma once

// Candidate layouts for variable and clause gadgets of the (P3, H) setting.
//
// A layout starts from a core graph (H itself or two copies of H glued on an
// edge).  Vertices outside the open set W carry an enforcer, so every core
// edge touching them is blue.  Red core edges therefore form a matching inside
// W that meets every copy of H.  A state of the core is the set of W vertices
// covered by such a matching.  Signal extenders linking two cores take one red
// edge at one end or the other, which the model records by covering one of
// the two linked vertices.
//
// The model only proposes candidates.  Acceptance is decided by the
// exhaustive verifiers in gadget.hpp.

#include <arrowing/graph.hpp>

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace arrowing::design {

using Mask = std::uint64_t;

struct Core {
    Graph graph;
    std::optional<Edge> glued_on; // empty for H itself
    std::string name() const;
};

// H first, then A_{H,e} for every edge e in id order.
std::vector<Core> candidate_cores(const Graph& h);

// Covered-vertex masks of the red matchings inside `open` that meet every
// copy of h.  Sorted and free of duplicates.
std::vector<Mask> core_states(const Graph& core, const Graph& h, Mask open);

struct Port {
    unsigned copy = 0;
    Vertex vertex = 0;
    friend bool operator==(const Port&, const Port&) = default;
};

struct VariableLayout {
    Core core;
    Mask open = 0;
    std::vector<std::pair<Port, Port>> links; // copy 0 to copy 1
    std::array<Port, 2> unnegated;
    std::array<Port, 2> negated;
};

struct ClauseLayout {
    Core core;
    Mask open = 0;
    std::array<Vertex, 3> inputs{};
};

// Calls visit on every layout that satisfies the model, in a fixed order,
// until visit returns true or `max_candidates` layouts have been offered.
// Returns whether visit accepted one.
bool for_each_variable_layout(const Graph& h, const std::function<bool(const VariableLayout&)>& visit,
    std::size_t max_links = 3, std::size_t max_candidates = 1000);
bool for_each_clause_layout(const Graph& h, const std::function<bool(const ClauseLayout&)>& visit,
    std::size_t max_candidates = 1000);

// Model predicates, exposed for tests.
std::vector<Mask> joint_states(const std::vector<Mask>& first, const std::vector<Mask>& second,
    std::size_t core_size, const std::vector<std::pair<Port, Port>>& links);
bool variable_model_holds(const std::vector<Mask>& states, std::size_t core_size,
    const std::array<Port, 2>& unnegated, const std::array<Port, 2>& negated);
bool clause_model_holds(const std::vector<Mask>& states, const std::array<Vertex, 3>& inputs);

} // namespace arrowing::design
