#include "sat.hpp"

#include <algorithm>

namespace ordram::detail {

namespace {

int var_of(int lit) { return lit >> 1; }

// 1, 1, 2, 1, 1, 2, 4, 1, ...
double luby(int i)
{
    int size = 1, seq = 0;
    while (size < i + 1) {
        ++seq;
        size = 2 * size + 1;
    }
    while (size - 1 != i) {
        size = (size - 1) >> 1;
        --seq;
        i = i % size;
    }
    double x = 1;
    while (seq-- > 0) x *= 2;
    return x;
}

}  // namespace

Sat::Sat(int vars)
    : vars_(vars),
      watches_(static_cast<std::size_t>(2 * vars)),
      assigns_(static_cast<std::size_t>(vars), 2),
      phase_(static_cast<std::size_t>(vars), 1),
      levels_(static_cast<std::size_t>(vars), 0),
      reasons_(static_cast<std::size_t>(vars), -1),
      activity_(static_cast<std::size_t>(vars), 0),
      heap_pos_(static_cast<std::size_t>(vars), -1),
      seen_(static_cast<std::size_t>(vars), 0)
{
    for (int v = 0; v < vars; ++v) heap_insert(v);
}

int Sat::lit_value(int lit) const
{
    const int a = assigns_[static_cast<std::size_t>(var_of(lit))];
    return a == 2 ? 2 : a ^ (lit & 1);
}

void Sat::enqueue(int lit, int reason)
{
    const std::size_t v = static_cast<std::size_t>(var_of(lit));
    assigns_[v] = static_cast<std::int8_t>(!(lit & 1));
    levels_[v] = level();
    reasons_[v] = reason;
    trail_.push_back(lit);
}

void Sat::attach(int ci)
{
    const auto& lits = clauses_[static_cast<std::size_t>(ci)].lits;
    watches_[static_cast<std::size_t>(lits[0])].push_back(ci);
    watches_[static_cast<std::size_t>(lits[1])].push_back(ci);
}

bool Sat::add_clause(std::vector<int> lits)
{
    if (!ok_) return false;
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    std::vector<int> kept;
    for (std::size_t i = 0; i < lits.size(); ++i) {
        if (i + 1 < lits.size() && lits[i + 1] == (lits[i] ^ 1)) return true;  // tautology
        const int val = lit_value(lits[i]);
        if (val == 1) return true;
        if (val == 2) kept.push_back(lits[i]);
    }
    if (kept.empty()) return ok_ = false;
    if (kept.size() == 1) {
        enqueue(kept[0], -1);
        return ok_ = propagate() < 0;
    }
    clauses_.push_back({std::move(kept), false, false, 0});
    attach(static_cast<int>(clauses_.size() - 1));
    return true;
}

int Sat::propagate()
{
    while (qhead_ < trail_.size()) {
        const int false_lit = trail_[qhead_++] ^ 1;
        auto& ws = watches_[static_cast<std::size_t>(false_lit)];
        std::size_t i = 0, j = 0;
        while (i < ws.size()) {
            const int ci = ws[i++];
            auto& lits = clauses_[static_cast<std::size_t>(ci)].lits;
            if (lits[0] == false_lit) std::swap(lits[0], lits[1]);
            if (lit_value(lits[0]) == 1) {
                ws[j++] = ci;
                continue;
            }
            bool moved = false;
            for (std::size_t k = 2; k < lits.size(); ++k)
                if (lit_value(lits[k]) != 0) {
                    std::swap(lits[1], lits[k]);
                    watches_[static_cast<std::size_t>(lits[1])].push_back(ci);
                    moved = true;
                    break;
                }
            if (moved) continue;
            ws[j++] = ci;
            if (lit_value(lits[0]) == 0) {
                while (i < ws.size()) ws[j++] = ws[i++];
                ws.resize(j);
                qhead_ = trail_.size();
                return ci;
            }
            enqueue(lits[0], ci);
        }
        ws.resize(j);
    }
    return -1;
}

// A literal is redundant when its reason consists of literals already in the
// learnt clause or fixed at level 0.
bool Sat::redundant(int lit) const
{
    const int r = reasons_[static_cast<std::size_t>(var_of(lit))];
    if (r < 0) return false;
    const auto& lits = clauses_[static_cast<std::size_t>(r)].lits;
    for (std::size_t k = 1; k < lits.size(); ++k) {
        const std::size_t v = static_cast<std::size_t>(var_of(lits[k]));
        if (!seen_[v] && levels_[v] > 0) return false;
    }
    return true;
}

int Sat::analyze(int confl, std::vector<int>& learnt)
{
    learnt.assign(1, -1);
    int pending = 0;
    int p = -1;
    std::size_t index = trail_.size();
    do {
        Clause& c = clauses_[static_cast<std::size_t>(confl)];
        if (c.learnt) bump_clause(c);
        for (std::size_t k = p < 0 ? 0 : 1; k < c.lits.size(); ++k) {
            const int q = c.lits[k];
            const std::size_t v = static_cast<std::size_t>(var_of(q));
            if (seen_[v] || levels_[v] == 0) continue;
            bump_var(var_of(q));
            seen_[v] = 1;
            if (levels_[v] >= level())
                ++pending;
            else
                learnt.push_back(q);
        }
        while (!seen_[static_cast<std::size_t>(var_of(trail_[--index]))]) {
        }
        p = trail_[index];
        confl = reasons_[static_cast<std::size_t>(var_of(p))];
        seen_[static_cast<std::size_t>(var_of(p))] = 0;
        --pending;
    } while (pending > 0);
    learnt[0] = p ^ 1;

    const std::vector<int> full = learnt;
    std::size_t keep = 1;
    for (std::size_t k = 1; k < learnt.size(); ++k)
        if (!redundant(learnt[k])) learnt[keep++] = learnt[k];
    learnt.resize(keep);
    for (int q : full) seen_[static_cast<std::size_t>(var_of(q))] = 0;

    if (learnt.size() == 1) return 0;
    std::size_t best = 1;
    for (std::size_t k = 2; k < learnt.size(); ++k)
        if (levels_[static_cast<std::size_t>(var_of(learnt[k]))] > levels_[static_cast<std::size_t>(var_of(learnt[best]))]) best = k;
    std::swap(learnt[1], learnt[best]);
    return levels_[static_cast<std::size_t>(var_of(learnt[1]))];
}

void Sat::backtrack(int lvl)
{
    if (level() <= lvl) return;
    const std::size_t stop = static_cast<std::size_t>(trail_lim_[static_cast<std::size_t>(lvl)]);
    for (std::size_t i = trail_.size(); i-- > stop;) {
        const int v = var_of(trail_[i]);
        phase_[static_cast<std::size_t>(v)] = static_cast<std::int8_t>(trail_[i] & 1);
        assigns_[static_cast<std::size_t>(v)] = 2;
        reasons_[static_cast<std::size_t>(v)] = -1;
        heap_insert(v);
    }
    trail_.resize(stop);
    trail_lim_.resize(static_cast<std::size_t>(lvl));
    qhead_ = trail_.size();
}

int Sat::pick()
{
    while (!heap_.empty()) {
        const int v = heap_pop();
        if (assigns_[static_cast<std::size_t>(v)] == 2) return 2 * v + phase_[static_cast<std::size_t>(v)];
    }
    return -1;
}

void Sat::bump_var(int var)
{
    double& a = activity_[static_cast<std::size_t>(var)];
    if ((a += var_inc_) > 1e100) {
        for (double& x : activity_) x *= 1e-100;
        var_inc_ *= 1e-100;
    }
    const int pos = heap_pos_[static_cast<std::size_t>(var)];
    if (pos >= 0) heap_up(static_cast<std::size_t>(pos));
}

void Sat::bump_clause(Clause& c)
{
    if ((c.activity += clause_inc_) > 1e20) {
        for (Clause& x : clauses_)
            if (x.learnt) x.activity *= 1e-20;
        clause_inc_ *= 1e-20;
    }
}

// At level 0: drop clauses satisfied there, the less active half of the
// learnt clauses, and rebuild the watch lists.
void Sat::reduce()
{
    std::vector<double> acts;
    for (const Clause& c : clauses_)
        if (c.learnt && c.lits.size() > 2) acts.push_back(c.activity);
    double cut = -1;
    if (static_cast<double>(learnt_count_) > max_learnts_ && !acts.empty()) {
        std::nth_element(acts.begin(), acts.begin() + static_cast<std::ptrdiff_t>(acts.size() / 2), acts.end());
        cut = acts[acts.size() / 2];
        max_learnts_ *= 1.1;
    }
    std::vector<Clause> kept;
    learnt_count_ = 0;
    for (Clause& c : clauses_) {
        if (c.learnt && c.lits.size() > 2 && c.activity < cut) continue;
        bool satisfied = false;
        std::stable_partition(c.lits.begin(), c.lits.end(), [&](int l) { return lit_value(l) != 0; });
        for (int l : c.lits) satisfied = satisfied || lit_value(l) == 1;
        if (satisfied) continue;
        learnt_count_ += c.learnt;
        kept.push_back(std::move(c));
    }
    clauses_ = std::move(kept);
    for (auto& w : watches_) w.clear();
    for (int v = 0; v < vars_; ++v) reasons_[static_cast<std::size_t>(v)] = -1;
    for (std::size_t ci = 0; ci < clauses_.size(); ++ci) attach(static_cast<int>(ci));
}

Sat::Result Sat::solve(const std::function<bool(std::uint64_t)>& keep_going)
{
    if (!ok_ || propagate() >= 0) return Result::Unsatisfiable;
    max_learnts_ = std::max(2000.0, static_cast<double>(clauses_.size()) / 2);
    auto tick = [&] { return (++nodes_ & 0x3FF) != 0 || keep_going(nodes_); };

    int restarts = 0;
    double until_restart = 100 * luby(restarts);
    std::vector<int> learnt;
    while (true) {
        const int confl = propagate();
        if (confl >= 0) {
            if (!tick()) return Result::Stopped;
            if (level() == 0) return Result::Unsatisfiable;
            const int back = analyze(confl, learnt);
            backtrack(back);
            if (learnt.size() == 1) {
                enqueue(learnt[0], -1);
            } else {
                clauses_.push_back({learnt, true, false, 0});
                bump_clause(clauses_.back());
                ++learnt_count_;
                const int ci = static_cast<int>(clauses_.size() - 1);
                attach(ci);
                enqueue(learnt[0], ci);
            }
            var_inc_ /= 0.95;
            clause_inc_ /= 0.999;
            if (--until_restart <= 0) {
                backtrack(0);
                if (propagate() >= 0) return Result::Unsatisfiable;
                reduce();
                until_restart = 100 * luby(++restarts);
            }
            continue;
        }
        const int lit = pick();
        if (lit < 0) return Result::Satisfiable;
        if (!tick()) return Result::Stopped;
        trail_lim_.push_back(static_cast<int>(trail_.size()));
        enqueue(lit, -1);
    }
}

bool Sat::before(int a, int b) const
{
    const double x = activity_[static_cast<std::size_t>(a)], y = activity_[static_cast<std::size_t>(b)];
    return x > y || (x == y && a < b);
}

void Sat::heap_up(std::size_t i)
{
    const int v = heap_[i];
    while (i > 0 && before(v, heap_[(i - 1) / 2])) {
        heap_[i] = heap_[(i - 1) / 2];
        heap_pos_[static_cast<std::size_t>(heap_[i])] = static_cast<int>(i);
        i = (i - 1) / 2;
    }
    heap_[i] = v;
    heap_pos_[static_cast<std::size_t>(v)] = static_cast<int>(i);
}

void Sat::heap_down(std::size_t i)
{
    const int v = heap_[i];
    while (2 * i + 1 < heap_.size()) {
        std::size_t child = 2 * i + 1;
        if (child + 1 < heap_.size() && before(heap_[child + 1], heap_[child])) ++child;
        if (!before(heap_[child], v)) break;
        heap_[i] = heap_[child];
        heap_pos_[static_cast<std::size_t>(heap_[i])] = static_cast<int>(i);
        i = child;
    }
    heap_[i] = v;
    heap_pos_[static_cast<std::size_t>(v)] = static_cast<int>(i);
}

void Sat::heap_insert(int var)
{
    if (heap_pos_[static_cast<std::size_t>(var)] >= 0) return;
    heap_.push_back(var);
    heap_up(heap_.size() - 1);
}

int Sat::heap_pop()
{
    const int top = heap_.front();
    heap_pos_[static_cast<std::size_t>(top)] = -1;
    heap_.front() = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) heap_down(0);
    return top;
}

}  // namespace ordram::detail
