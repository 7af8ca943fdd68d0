#include <arrowing/solver.hpp>

#include <algorithm>
#include <cmath>

namespace arrowing {

namespace {

constexpr Lit undef_lit = static_cast<Lit>(-1);

double luby(double base, std::uint64_t index)
{
    std::uint64_t size = 1;
    int sequence = 0;
    while (size < index + 1) {
        ++sequence;
        size = 2 * size + 1;
    }
    while (size - 1 != index) {
        size = (size - 1) >> 1;
        --sequence;
        index = index % size;
    }
    return std::pow(base, sequence);
}

} // namespace

ColoringSolver::ColoringSolver(const Graph& g) : graph_(g), vars_(g.edge_count())
{
    assigns_.assign(vars_, val_undef);
    level_.assign(vars_, 0);
    trail_pos_.assign(vars_, 0);
    reason_.assign(vars_, {});
    cap_.assign(g.vertex_count(), no_cap);
    red_count_.assign(g.vertex_count(), 0);
    watches_.resize(2 * vars_);
    activity_.assign(vars_, 0.0);
    phase_.assign(vars_, 0);
    heap_index_.assign(vars_, -1);
    seen_.assign(vars_, 0);
    for (EdgeId v = 0; v < vars_; ++v)
        heap_insert(v);
}

void ColoringSolver::set_red_cap(Vertex v, unsigned cap)
{
    cancel_until(0);
    cap_[v] = std::min(cap_[v], cap);
    any_cap_ = true;
    if (red_count_[v] > cap_[v])
        ok_ = false;
    // Re-run propagation from the start of the trail so the new cap also
    // acts on root-level red edges.
    qhead_ = 0;
}

void ColoringSolver::set_initial_activity(std::span<const double> activity)
{
    for (EdgeId v = 0; v < vars_ && v < activity.size(); ++v)
        activity_[v] = activity[v];
    heap_.clear();
    std::fill(heap_index_.begin(), heap_index_.end(), -1);
    for (EdgeId v = 0; v < vars_; ++v)
        if (assigns_[v] == val_undef)
            heap_insert(v);
}

std::uint8_t ColoringSolver::value(Lit l) const
{
    auto a = assigns_[l >> 1];
    if (a == val_undef)
        return val_undef;
    return static_cast<std::uint8_t>(a ^ (l & 1u));
}

void ColoringSolver::enqueue(Lit l, Reason reason)
{
    EdgeId v = l >> 1;
    assigns_[v] = (l & 1u) ? 0 : 1;
    level_[v] = decision_level();
    trail_pos_[v] = static_cast<std::uint32_t>(trail_.size());
    reason_[v] = reason;
    trail_.push_back(l);
    if (!(l & 1u)) {
        const auto& e = graph_.edge(v);
        ++red_count_[e.u];
        ++red_count_[e.v];
    }
}

bool ColoringSolver::propagate(std::vector<Lit>& conflict)
{
    while (qhead_ < trail_.size()) {
        Lit p = trail_[qhead_++];
        ++stats_.propagations;
        EdgeId e = p >> 1;
        if (any_cap_ && !(p & 1u)) {
            const auto& edge = graph_.edge(e);
            for (Vertex v : {edge.u, edge.v}) {
                unsigned cap = cap_[v];
                if (cap == no_cap)
                    continue;
                if (red_count_[v] > cap) {
                    conflict.clear();
                    for (auto f : graph_.incident_edges(v))
                        if (assigns_[f] == 1)
                            conflict.push_back(blue_lit(f));
                    return false;
                }
                if (red_count_[v] == cap)
                    for (auto f : graph_.incident_edges(v))
                        if (assigns_[f] == val_undef)
                            enqueue(blue_lit(f), {Reason::cap, v});
            }
        }

        Lit falsified = negate(p);
        auto& ws = watches_[falsified];
        std::size_t i = 0, j = 0;
        while (i < ws.size()) {
            auto cref = ws[i++];
            auto& c = clauses_[cref];
            if (c.deleted)
                continue;
            auto& lits = c.lits;
            if (lits[0] == falsified)
                std::swap(lits[0], lits[1]);
            if (value(lits[0]) == val_true) {
                ws[j++] = cref;
                continue;
            }
            bool moved = false;
            for (std::size_t k = 2; k < lits.size(); ++k)
                if (value(lits[k]) != val_false) {
                    std::swap(lits[1], lits[k]);
                    watches_[lits[1]].push_back(cref);
                    moved = true;
                    break;
                }
            if (moved)
                continue;
            ws[j++] = cref;
            if (value(lits[0]) == val_false) {
                conflict = lits;
                while (i < ws.size())
                    ws[j++] = ws[i++];
                ws.resize(j);
                qhead_ = trail_.size();
                return false;
            }
            enqueue(lits[0], {Reason::clause, cref});
        }
        ws.resize(j);
    }
    return true;
}

void ColoringSolver::reason_lits(EdgeId var, std::vector<Lit>& out) const
{
    out.clear();
    const auto& r = reason_[var];
    if (r.kind == Reason::clause) {
        out = clauses_[r.index].lits;
        return;
    }
    if (r.kind == Reason::cap) {
        out.push_back(blue_lit(var));
        for (auto f : graph_.incident_edges(r.index))
            if (f != var && assigns_[f] == 1 && trail_pos_[f] < trail_pos_[var])
                out.push_back(blue_lit(f));
    }
}

bool ColoringSolver::redundant(Lit l) const
{
    EdgeId v = l >> 1;
    if (reason_[v].kind == Reason::none)
        return false;
    std::vector<Lit> lits;
    reason_lits(v, lits);
    for (auto q : lits) {
        EdgeId w = q >> 1;
        if (w != v && !seen_[w] && level_[w] > 0)
            return false;
    }
    return true;
}

void ColoringSolver::analyze(const std::vector<Lit>& conflict, std::vector<Lit>& learnt, std::uint32_t& back_level)
{
    learnt.assign(1, 0);
    int path = 0;
    Lit p = undef_lit;
    std::size_t index = trail_.size();
    std::vector<Lit> lits = conflict;
    while (true) {
        if (p != undef_lit && reason_[p >> 1].kind == Reason::clause)
            bump_clause(reason_[p >> 1].index);
        for (auto q : lits) {
            EdgeId v = q >> 1;
            if (p != undef_lit && v == (p >> 1))
                continue;
            if (!seen_[v] && level_[v] > 0) {
                seen_[v] = 1;
                bump_var(v);
                if (level_[v] >= decision_level())
                    ++path;
                else
                    learnt.push_back(q);
            }
        }
        do {
            --index;
        } while (!seen_[trail_[index] >> 1]);
        p = trail_[index];
        seen_[p >> 1] = 0;
        if (--path <= 0)
            break;
        reason_lits(p >> 1, lits);
    }
    learnt[0] = negate(p);

    auto all = learnt;
    std::size_t keep = 1;
    for (std::size_t i = 1; i < learnt.size(); ++i)
        if (!redundant(learnt[i]))
            learnt[keep++] = learnt[i];
    learnt.resize(keep);
    for (auto q : all)
        seen_[q >> 1] = 0;

    back_level = 0;
    if (learnt.size() > 1) {
        std::size_t best = 1;
        for (std::size_t i = 2; i < learnt.size(); ++i)
            if (level_[learnt[i] >> 1] > level_[learnt[best] >> 1])
                best = i;
        std::swap(learnt[1], learnt[best]);
        back_level = level_[learnt[1] >> 1];
    }
}

void ColoringSolver::cancel_until(std::uint32_t level)
{
    if (decision_level() <= level)
        return;
    for (std::size_t i = trail_.size(); i-- > trail_lim_[level];) {
        EdgeId v = trail_[i] >> 1;
        if (assigns_[v] == 1) {
            const auto& e = graph_.edge(v);
            --red_count_[e.u];
            --red_count_[e.v];
        }
        phase_[v] = assigns_[v];
        assigns_[v] = val_undef;
        reason_[v] = {};
        if (heap_index_[v] < 0)
            heap_insert(v);
    }
    trail_.resize(trail_lim_[level]);
    trail_lim_.resize(level);
    qhead_ = trail_.size();
}

std::uint32_t ColoringSolver::attach(std::vector<Lit> lits, bool learnt)
{
    auto cref = static_cast<std::uint32_t>(clauses_.size());
    watches_[lits[0]].push_back(cref);
    watches_[lits[1]].push_back(cref);
    clauses_.push_back({std::move(lits), 0.0, learnt, false});
    return cref;
}

bool ColoringSolver::add_root_clause(std::vector<Lit> lits)
{
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    std::vector<Lit> kept;
    for (std::size_t i = 0; i < lits.size(); ++i) {
        if (i + 1 < lits.size() && lits[i + 1] == negate(lits[i]))
            return true;
        auto current = value(lits[i]);
        if (current == val_true)
            return true;
        if (current == val_undef)
            kept.push_back(lits[i]);
    }
    if (kept.empty()) {
        ok_ = false;
        return false;
    }
    if (kept.size() == 1) {
        enqueue(kept[0], {});
        return true;
    }
    attach(std::move(kept), false);
    return true;
}

void ColoringSolver::add_clause(std::vector<Lit> lits)
{
    for (auto l : lits)
        if ((l >> 1) >= vars_)
            fail(ErrorCode::precondition, "clause literal refers to a missing edge");
    cancel_until(0);
    if (ok_)
        add_root_clause(std::move(lits));
}

void ColoringSolver::bump_var(EdgeId v)
{
    activity_[v] += var_inc_;
    if (activity_[v] > 1e100) {
        for (auto& a : activity_)
            a *= 1e-100;
        var_inc_ *= 1e-100;
    }
    if (heap_index_[v] >= 0)
        heap_up(static_cast<std::size_t>(heap_index_[v]));
}

void ColoringSolver::bump_clause(std::uint32_t index)
{
    auto& c = clauses_[index];
    if (!c.learnt)
        return;
    c.activity += clause_inc_;
    if (c.activity > 1e20) {
        for (auto& other : clauses_)
            if (other.learnt)
                other.activity *= 1e-20;
        clause_inc_ *= 1e-20;
    }
}

void ColoringSolver::decay()
{
    var_inc_ /= 0.95;
    clause_inc_ /= 0.999;
}

void ColoringSolver::reduce_learnts()
{
    std::vector<std::uint32_t> candidates;
    for (std::uint32_t i = 0; i < clauses_.size(); ++i) {
        const auto& c = clauses_[i];
        if (!c.learnt || c.deleted || c.lits.size() <= 2)
            continue;
        EdgeId v = c.lits[0] >> 1;
        bool locked = reason_[v].kind == Reason::clause && reason_[v].index == i && value(c.lits[0]) == val_true;
        if (!locked)
            candidates.push_back(i);
    }
    std::sort(candidates.begin(), candidates.end(), [&](std::uint32_t a, std::uint32_t b) {
        return clauses_[a].activity < clauses_[b].activity;
    });
    for (std::size_t i = 0; i < candidates.size() / 2; ++i) {
        auto& c = clauses_[candidates[i]];
        c.deleted = true;
        c.lits.clear();
        c.lits.shrink_to_fit();
        --learnt_count_;
    }
}

bool ColoringSolver::heap_less(EdgeId a, EdgeId b) const
{
    return activity_[a] > activity_[b] || (activity_[a] == activity_[b] && a < b);
}

void ColoringSolver::heap_insert(EdgeId v)
{
    heap_index_[v] = static_cast<std::int64_t>(heap_.size());
    heap_.push_back(v);
    heap_up(heap_.size() - 1);
}

void ColoringSolver::heap_up(std::size_t i)
{
    EdgeId v = heap_[i];
    while (i > 0) {
        std::size_t parent = (i - 1) / 2;
        if (!heap_less(v, heap_[parent]))
            break;
        heap_[i] = heap_[parent];
        heap_index_[heap_[i]] = static_cast<std::int64_t>(i);
        i = parent;
    }
    heap_[i] = v;
    heap_index_[v] = static_cast<std::int64_t>(i);
}

void ColoringSolver::heap_down(std::size_t i)
{
    EdgeId v = heap_[i];
    while (true) {
        std::size_t child = 2 * i + 1;
        if (child >= heap_.size())
            break;
        if (child + 1 < heap_.size() && heap_less(heap_[child + 1], heap_[child]))
            ++child;
        if (!heap_less(heap_[child], v))
            break;
        heap_[i] = heap_[child];
        heap_index_[heap_[i]] = static_cast<std::int64_t>(i);
        i = child;
    }
    heap_[i] = v;
    heap_index_[v] = static_cast<std::int64_t>(i);
}

EdgeId ColoringSolver::heap_pop()
{
    EdgeId top = heap_[0];
    heap_index_[top] = -1;
    EdgeId last = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
        heap_[0] = last;
        heap_index_[last] = 0;
        heap_down(0);
    }
    return top;
}

Lit ColoringSolver::pick_branch()
{
    while (!heap_.empty()) {
        EdgeId v = heap_pop();
        if (assigns_[v] == val_undef)
            return phase_[v] == 1 ? red_lit(v) : blue_lit(v);
    }
    return undef_lit;
}

SolveResult ColoringSolver::solve(std::span<const Lit> assumptions, std::uint64_t node_budget)
{
    model_.clear();
    for (auto a : assumptions)
        if ((a >> 1) >= vars_)
            fail(ErrorCode::precondition, "assumption refers to a missing edge");
    if (!ok_)
        return SolveResult::unsatisfiable;
    cancel_until(0);
    if (max_learnts_ == 0)
        max_learnts_ = std::max<double>(2000.0, static_cast<double>(clauses_.size()) / 3.0);

    std::vector<Lit> conflict, learnt;
    std::uint64_t nodes = 0;
    std::uint64_t conflicts_here = 0;
    std::uint64_t restart_round = 0;
    auto restart_limit = static_cast<std::uint64_t>(luby(2.0, 0) * 100);

    while (true) {
        if (!propagate(conflict)) {
            ++stats_.conflicts;
            ++conflicts_here;
            if (decision_level() == 0) {
                ok_ = false;
                return SolveResult::unsatisfiable;
            }
            std::uint32_t back = 0;
            analyze(conflict, learnt, back);
            cancel_until(back);
            if (learnt.size() == 1) {
                enqueue(learnt[0], {});
            } else {
                auto cref = attach(learnt, true);
                ++learnt_count_;
                bump_clause(cref);
                enqueue(learnt[0], {Reason::clause, cref});
            }
            decay();
            continue;
        }

        if (conflicts_here >= restart_limit) {
            ++restart_round;
            restart_limit += static_cast<std::uint64_t>(luby(2.0, restart_round) * 100);
            ++stats_.restarts;
            cancel_until(0);
            continue;
        }
        if (static_cast<double>(learnt_count_) >= max_learnts_ + static_cast<double>(trail_.size())) {
            reduce_learnts();
            max_learnts_ *= 1.1;
        }

        Lit next = undef_lit;
        while (decision_level() < assumptions.size()) {
            Lit a = assumptions[decision_level()];
            auto current = value(a);
            if (current == val_true) {
                trail_lim_.push_back(static_cast<std::uint32_t>(trail_.size()));
            } else if (current == val_false) {
                cancel_until(0);
                return SolveResult::unsatisfiable;
            } else {
                next = a;
                break;
            }
        }

        if (next == undef_lit) {
            next = pick_branch();
            if (next == undef_lit) {
                std::vector<Color> colors(vars_);
                for (EdgeId v = 0; v < vars_; ++v)
                    colors[v] = assigns_[v] == 1 ? Color::red : Color::blue;
                if (lazy_) {
                    auto extra = lazy_(colors);
                    if (!extra.empty()) {
                        cancel_until(0);
                        stats_.lazy_clauses += extra.size();
                        for (auto& c : extra)
                            if (!add_root_clause(std::move(c)))
                                return SolveResult::unsatisfiable;
                        continue;
                    }
                }
                model_ = std::move(colors);
                cancel_until(0);
                return SolveResult::satisfiable;
            }
            if (++nodes > node_budget) {
                cancel_until(0);
                return SolveResult::budget_exceeded;
            }
            ++stats_.decisions;
        }
        trail_lim_.push_back(static_cast<std::uint32_t>(trail_.size()));
        enqueue(next, {});
    }
}

} // namespace arrowing
