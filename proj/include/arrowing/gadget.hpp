#pragma once

#include <arrowing/arrowing.hpp>
#include <arrowing/graph.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arrowing {

enum class GadgetKind { enforcer, signal_extender, leaf_sender, variable_gadget, clause_gadget };

std::string_view gadget_kind_name(GadgetKind kind);
GadgetKind gadget_kind_from_name(std::string_view name);

// One satisfiability question put to the colouring search during
// verification.  `expect_good` says whether a good colouring must exist.
// Non-gating queries only collect template colourings.
struct VerificationQuery {
    std::string name;
    bool expect_good = false;
    bool gating = true;
    SearchStatus status = SearchStatus::none;
    std::uint64_t nodes = 0;

    bool passed() const;
};

struct VerificationLog {
    std::vector<VerificationQuery> queries;

    std::uint64_t total_nodes() const;
    // FNV-1a over the query records, as 16 hex digits.
    std::string digest() const;
};

// A piece placed into a gadget.  `vertices` is the image of the piece's own
// vertex list and `anchor` the host vertex the piece hangs from.
struct Part {
    std::string kind;
    std::vector<Vertex> vertices;
    Vertex anchor = 0;
};

struct Gadget {
    GadgetKind kind = GadgetKind::enforcer;
    Graph graph;
    Graph f;
    Graph h;
    std::map<std::string, std::vector<Vertex>> roles;
    // Good colourings of `graph` kept for assembling larger colourings.
    std::map<std::string, std::vector<Color>> templates;
    std::vector<Part> parts;
    std::uint64_t intended_copies = 0;
    std::string construction;
    bool verified = false;
    VerificationLog log;

    Vertex role(const std::string& name, std::size_t index = 0) const;
};

constexpr SearchBudget gadget_budget{100'000'000};

bool verify_enforcer(Gadget& gadget, SearchBudget budget = gadget_budget);
bool verify_extender(Gadget& gadget, SearchBudget budget = gadget_budget);
bool verify_leaf_sender(Gadget& gadget, SearchBudget budget = gadget_budget);
bool verify_variable_gadget(Gadget& gadget, SearchBudget budget = gadget_budget);
bool verify_clause_gadget(Gadget& gadget, SearchBudget budget = gadget_budget);
bool verify_gadget(Gadget& gadget, SearchBudget budget = gadget_budget);

// count_copies(graph, h) equals the copies the construction put there.
bool copies_reconcile(const Gadget& gadget);

std::optional<Gadget> search_enforcer(const Graph& f, const Graph& h, SearchBudget budget = gadget_budget);
Gadget build_signal_extender(const Graph& h, const Gadget& enforcer, SearchBudget budget = gadget_budget);
Gadget chain_extenders(const Gadget& first, const Gadget& second, SearchBudget budget = gadget_budget);
// Number of extenders whose in-out path has at least |V(h)| vertices.
std::size_t chain_length_for(const Graph& h);
Gadget extender_chain(const Gadget& extender, std::size_t length, SearchBudget budget = gadget_budget);
Gadget build_leaf_sender(const Graph& f, const Graph& h, const Gadget& enforcer,
    SearchBudget budget = gadget_budget);
Gadget build_variable_gadget(const Graph& h, const Gadget& enforcer, const Gadget& extender,
    SearchBudget budget = gadget_budget);
Gadget build_clause_gadget(const Graph& h, const Gadget& enforcer, SearchBudget budget = gadget_budget);

// Adds a copy of the enforcer whose signal vertex is `host`.
Part attach_enforcer(GraphBuilder& builder, const Gadget& enforcer, Vertex host);

} // namespace arrowing

namespace arrowing {

// Everything the (P3, h) reduction needs, built in dependency order.
struct GadgetSuite {
    Gadget enforcer;
    Gadget extender;
    Gadget chain; // extender_chain(extender, chain_length_for(h))
    Gadget variable;
    Gadget clause;
};

GadgetSuite forge_p3_suite(const Graph& h, SearchBudget budget = gadget_budget);

} // namespace arrowing
