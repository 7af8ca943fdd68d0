#pragma once

#include <arrowing/coloring.hpp>
#include <arrowing/formula.hpp>
#include <arrowing/gadget.hpp>

#include <json.hpp>

#include <optional>
#include <vector>

namespace arrowing {

// The verified pieces G_phi is assembled from.  The extender is chained to
// chain_length_for(h) copies per clause slot.
struct ReductionGadgets {
    std::optional<Gadget> variable;
    std::optional<Gadget> clause;
    std::optional<Gadget> extender;

    static ReductionGadgets from_suite(const GadgetSuite& suite);
};

// Where one copy of a gadget sits inside G_phi: map[v] is the image of the
// gadget's vertex v.
struct Placement {
    std::vector<Vertex> map;
};

// Clause `clause`, slot `slot` is fed from variable output `output` through
// an extender chain ending at clause input `input`.
struct SlotWiring {
    unsigned clause = 0;
    unsigned slot = 0;
    Literal literal;
    Vertex output = 0;
    Vertex input = 0;
    Placement chain;
};

struct ReductionOutput {
    Formula223 formula;
    Graph h;
    Graph g_phi;
    Gadget variable;
    Gadget clause;
    Gadget chain;
    std::vector<Placement> variables;
    std::vector<Placement> clauses;
    std::vector<SlotWiring> wiring;
    std::uint64_t intended_copies = 0;
};

ReductionOutput build_g_phi(const Formula223& phi, const ReductionGadgets& gadgets,
    SearchBudget budget = gadget_budget);

// count_copies(g_phi, h) equals the copies the pieces bring.
bool reduction_copies_reconcile(const ReductionOutput& out);
std::size_t expected_vertex_count(const ReductionOutput& out);

EdgeColoring assignment_to_coloring(const ReductionOutput& out, const Assignment& assignment);
Assignment coloring_to_assignment(const ReductionOutput& out, const EdgeColoring& coloring);

nlohmann::json reduction_to_json(const ReductionOutput& out);

} // namespace arrowing
