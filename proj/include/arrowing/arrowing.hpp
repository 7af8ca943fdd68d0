#pragma once

#include <arrowing/coloring.hpp>
#include <arrowing/graph.hpp>
#include <arrowing/solver.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace arrowing {

struct SearchBudget {
    std::uint64_t max_nodes = 10'000'000;
};

enum class SearchStatus { found, none, budget_exceeded };

enum class Strategy {
    automatic, // red-degree caps when F is a star
    generic,   // one "not all red" clause per copy of F
};

struct SearchOptions {
    Strategy strategy = Strategy::automatic;
    // Above this many pattern copies the search adds copies lazily when a
    // complete colouring violates them.
    std::size_t max_precomputed_copies = 2'000'000;
    // Extra per-vertex caps on the red degree.
    std::map<Vertex, unsigned> red_caps;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t conflicts = 0;
    std::uint64_t propagations = 0;
    std::uint64_t lazy_clauses = 0;
};

struct ColoringSearch {
    SearchStatus status = SearchStatus::none;
    std::optional<EdgeColoring> coloring;
    SearchStats stats;
};

// Returns n when f is K_{1,n} (P3 is K_{1,2}).
std::optional<unsigned> star_size(const Graph& f);

// A reusable search for good colourings of one graph.  Queries fix some edge
// colours; everything learned while answering one query is kept for the next.
class GoodColoringOracle {
  public:
    GoodColoringOracle(const Graph& g, const Graph& f, const Graph& h, const SearchOptions& options = {});

    ColoringSearch query(std::span<const Lit> assumptions, SearchBudget budget);
    ColoringSearch query(SearchBudget budget) { return query({}, budget); }

    const Graph& graph() const { return g_; }
    bool lazy() const { return lazy_; }
    std::size_t h_copy_count() const { return h_copies_; }

  private:
    Graph g_;
    Graph f_;
    Graph h_;
    ColoringSolver solver_;
    bool lazy_ = false;
    bool star_ = false;
    std::size_t h_copies_ = 0;
};

// Literals that make vertex v free (every incident edge blue).
std::vector<Lit> free_vertex_lits(const Graph& g, Vertex v);

ColoringSearch find_good_coloring(const Graph& g, const Graph& f, const Graph& h, SearchBudget budget,
    const SearchOptions& options = {});

struct ArrowingInstance {
    Graph g;
    Graph f;
    Graph h;
    std::optional<bool> result; // empty when the budget ran out
    std::optional<EdgeColoring> certificate;
    SearchStats stats;
};

ArrowingInstance arrows(const Graph& g, const Graph& f, const Graph& h, SearchBudget budget,
    const SearchOptions& options = {});

struct PruneResult {
    Graph graph;
    std::vector<Edge> removed;
};

// Repeatedly deletes edges that lie in no copy of h.
PruneResult prune_non_h_edges(const Graph& g, const Graph& h);

enum class Agreement { agree, disagree, inconclusive };

struct TkEquivalenceReport {
    unsigned n = 0;
    std::optional<bool> tk_arrows;
    std::optional<bool> k_arrows;
    Agreement agreement = Agreement::inconclusive;
};

TkEquivalenceReport check_tk_equivalence(const Graph& g, unsigned n, SearchBudget budget);

// Smallest red degree of v over all good colourings.  Throws NO_GOOD_COLORING
// when g has none.  Empty on budget exhaustion.
std::optional<unsigned> min_red_degree_over_good(const Graph& g, Vertex v, const Graph& f, const Graph& h,
    SearchBudget budget);

} // namespace arrowing
