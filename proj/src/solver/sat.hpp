#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace ordram::detail {

/// Conflict-driven clause learning over variables 0..vars-1. A literal is
/// 2 * var, or 2 * var + 1 for its negation.
class Sat {
public:
    enum class Result { Satisfiable, Unsatisfiable, Stopped };

    explicit Sat(int vars);

    /// Only before solve(). Returns false once the formula is refuted.
    bool add_clause(std::vector<int> lits);

    /// `keep_going(nodes)` is asked every 1024 decisions and conflicts.
    Result solve(const std::function<bool(std::uint64_t)>& keep_going);

    bool value(int var) const { return assigns_[static_cast<std::size_t>(var)] == 1; }
    std::uint64_t nodes() const { return nodes_; }

private:
    struct Clause {
        std::vector<int> lits;
        bool learnt = false;
        bool deleted = false;
        double activity = 0;
    };

    int lit_value(int lit) const;  // 0 false, 1 true, 2 unassigned
    int level() const { return static_cast<int>(trail_lim_.size()); }
    void enqueue(int lit, int reason);
    int propagate();
    void attach(int ci);
    int analyze(int confl, std::vector<int>& learnt);
    bool redundant(int lit) const;
    void backtrack(int lvl);
    int pick();
    void bump_var(int var);
    void bump_clause(Clause& c);
    void reduce();

    // max-activity heap over unassigned variables
    bool before(int a, int b) const;
    void heap_up(std::size_t i);
    void heap_down(std::size_t i);
    void heap_insert(int var);
    int heap_pop();

    int vars_;
    bool ok_ = true;
    std::vector<Clause> clauses_;
    std::vector<std::vector<int>> watches_;
    std::vector<std::int8_t> assigns_;
    std::vector<std::int8_t> phase_;
    std::vector<int> levels_;
    std::vector<int> reasons_;
    std::vector<int> trail_;
    std::vector<int> trail_lim_;
    std::size_t qhead_ = 0;
    std::vector<double> activity_;
    double var_inc_ = 1;
    double clause_inc_ = 1;
    std::vector<int> heap_;
    std::vector<int> heap_pos_;
    std::vector<std::uint8_t> seen_;
    std::size_t learnt_count_ = 0;
    double max_learnts_ = 0;
    std::uint64_t nodes_ = 0;
};

}  // namespace ordram::detail
