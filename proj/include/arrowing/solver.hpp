#pragma once

#include <arrowing/graph.hpp>

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace arrowing {

enum class Color : std::uint8_t { blue = 0, red = 1 };

// Literal over edge variables: red(e) is 2e, blue(e) is 2e + 1.
using Lit = std::uint32_t;

inline Lit red_lit(EdgeId e) { return 2 * e; }
inline Lit blue_lit(EdgeId e) { return 2 * e + 1; }
inline Lit lit_for(EdgeId e, Color c) { return c == Color::red ? red_lit(e) : blue_lit(e); }
inline Lit negate(Lit l) { return l ^ 1u; }
inline EdgeId lit_edge(Lit l) { return l >> 1; }

struct SolverStats {
    std::uint64_t decisions = 0;
    std::uint64_t conflicts = 0;
    std::uint64_t propagations = 0;
    std::uint64_t restarts = 0;
    std::uint64_t lazy_clauses = 0;
};

enum class SolveResult { satisfiable, unsatisfiable, budget_exceeded };

// Conflict-driven search over red/blue edge colourings.  Constraints are
// clauses over edge literals plus an optional cap on the number of red edges
// at each vertex.  Learned clauses survive between solve() calls, so one
// solver can answer many queries that differ only in their assumptions.
class ColoringSolver {
  public:
    // Returns clauses violated by a complete colouring; an empty result
    // accepts it.
    using LazyCheck = std::function<std::vector<std::vector<Lit>>(std::span<const Color>)>;

    static constexpr unsigned no_cap = std::numeric_limits<unsigned>::max();

    explicit ColoringSolver(const Graph& g);

    void set_red_cap(Vertex v, unsigned cap);
    void add_clause(std::vector<Lit> lits);
    void set_initial_activity(std::span<const double> activity);
    void set_lazy_check(LazyCheck check) { lazy_ = std::move(check); }

    // node_budget bounds the number of branching decisions in this call.
    SolveResult solve(std::span<const Lit> assumptions, std::uint64_t node_budget);

    const std::vector<Color>& model() const { return model_; }
    const SolverStats& stats() const { return stats_; }

  private:
    enum : std::uint8_t { val_false = 0, val_true = 1, val_undef = 2 };

    struct Reason {
        enum Kind : std::uint8_t { none, clause, cap } kind = none;
        std::uint32_t index = 0;
    };

    struct Clause {
        std::vector<Lit> lits;
        double activity = 0;
        bool learnt = false;
        bool deleted = false;
    };

    std::uint8_t value(Lit l) const;
    std::uint32_t decision_level() const { return static_cast<std::uint32_t>(trail_lim_.size()); }
    void enqueue(Lit l, Reason reason);
    bool propagate(std::vector<Lit>& conflict);
    void reason_lits(EdgeId var, std::vector<Lit>& out) const;
    void analyze(const std::vector<Lit>& conflict, std::vector<Lit>& learnt, std::uint32_t& back_level);
    bool redundant(Lit l) const;
    void cancel_until(std::uint32_t level);
    std::uint32_t attach(std::vector<Lit> lits, bool learnt);
    bool add_root_clause(std::vector<Lit> lits);
    void bump_var(EdgeId v);
    void bump_clause(std::uint32_t index);
    void decay();
    void reduce_learnts();
    Lit pick_branch();

    void heap_insert(EdgeId v);
    void heap_up(std::size_t i);
    void heap_down(std::size_t i);
    bool heap_less(EdgeId a, EdgeId b) const;
    EdgeId heap_pop();

    Graph graph_;
    std::size_t vars_ = 0;
    bool ok_ = true;

    std::vector<std::uint8_t> assigns_;
    std::vector<std::uint32_t> level_;
    std::vector<std::uint32_t> trail_pos_;
    std::vector<Reason> reason_;
    std::vector<Lit> trail_;
    std::vector<std::uint32_t> trail_lim_;
    std::size_t qhead_ = 0;

    std::vector<unsigned> cap_;
    std::vector<unsigned> red_count_;
    bool any_cap_ = false;

    std::vector<Clause> clauses_;
    std::vector<std::vector<std::uint32_t>> watches_;
    std::size_t learnt_count_ = 0;
    double max_learnts_ = 0;

    std::vector<double> activity_;
    double var_inc_ = 1.0;
    double clause_inc_ = 1.0;
    std::vector<std::uint8_t> phase_;
    std::vector<EdgeId> heap_;
    std::vector<std::int64_t> heap_index_;

    mutable std::vector<char> seen_;
    mutable std::vector<Lit> scratch_;

    LazyCheck lazy_;
    std::vector<Color> model_;
    SolverStats stats_;
};

} // namespace arrowing
