#pragma once

#include "ordram/containment.hpp"
#include "ordram/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ordram {

struct Budget {
    std::uint64_t max_nodes = 0;  // 0 = unlimited
    double max_seconds = 0;       // 0 = unlimited
};

enum class Engine { Auto, Search, Clauses };

struct SolveOptions {
    Budget budget;
    /// Search: branch and prune over the edges in order. Clauses: clause
    /// learning over one clause per copy of each demand, used when the clause
    /// set has at most kMaxClauseLiterals literals. Auto picks Clauses when it
    /// fits.
    Engine engine = Engine::Auto;
    /// Search engine only.
    int threads = 1;
    /// Break colour-permutation symmetry when the demand list allows it.
    bool symmetry_breaking = true;
    /// ramsey_number only: start from a formula lower bound when the demand
    /// list belongs to a family with a known oracle.
    bool use_oracle_seed = false;
    /// ramsey_number only: largest N tried before reporting bounds.
    int max_order = 64;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    double seconds = 0;
    bool budget_exhausted = false;
};

enum class SearchVerdict { Found, NoneExists, BudgetExhausted };

std::string to_string(SearchVerdict verdict);

struct SearchOutcome {
    SearchVerdict verdict = SearchVerdict::BudgetExhausted;
    std::optional<EdgeColoring> coloring;  // set iff Found
    SearchStats stats;
};

/// Largest host order the solver accepts.
inline constexpr int kMaxSolverOrder = 64;
inline constexpr long long kMaxClauseLiterals = 4'000'000;

/// Complete search for a colouring of K_N with `colors` colours avoiding every
/// demand. Colours in demands must lie in 1..colors (ParameterError
/// otherwise). A Found colouring is re-verified with avoids() before it is
/// returned.
SearchOutcome exists_avoiding(const std::vector<Demand>& demands, int colors, int n, const SolveOptions& options = {});

/// Number of colours implied by a demand list: the largest colour used.
int demand_colors(const std::vector<Demand>& demands);

struct RamseyResult {
    std::vector<Demand> demands;
    int colors = 2;
    bool exact = false;
    long long value = 0;          // meaningful when exact
    long long lo = 1;             // R >= lo
    std::optional<long long> hi;  // R <= hi when known
    std::string hi_source;        // "search" or the oracle formula
    std::optional<EdgeColoring> witness;  // avoiding colouring on lo - 1 vertices
    SearchStats stats;
    struct Step {
        int n;
        SearchVerdict verdict;
        std::uint64_t nodes;
        double seconds;
    };
    std::vector<Step> steps;
};

/// Iterates N until an avoiding colouring on N - 1 vertices and a refutation
/// on N are both established. Budget is shared by all steps. When it runs
/// out, the result carries bounds instead of an exact value.
RamseyResult ramsey_number(const std::vector<Demand>& demands, std::optional<int> n_start = std::nullopt,
                           const SolveOptions& options = {});

/// Formula lower bound on R for demand lists from a known family, if any.
std::optional<long long> oracle_lower_bound(const std::vector<Demand>& demands);
/// Formula value or upper bound, if any.
std::optional<long long> oracle_upper_bound(const std::vector<Demand>& demands);

// 0/1 matrices and their extremal functions.

struct BinaryMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> cells;  // row-major

    BinaryMatrix() = default;
    BinaryMatrix(int r, int c) : rows(r), cols(c), cells(static_cast<std::size_t>(r * c), 0) {}
    bool at(int i, int j) const { return cells[static_cast<std::size_t>(i * cols + j)] != 0; }
    void set(int i, int j, bool value = true) { cells[static_cast<std::size_t>(i * cols + j)] = value ? 1 : 0; }
    int ones() const;
    friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;
};

/// Bipartite adjacency matrix of a graph with interval chromatic number at
/// most 2: rows are the first greedy interval, columns the second.
/// Throws ParameterError for other graphs.
BinaryMatrix pattern_matrix(const OrderedGraph& g);

/// Whether `host` contains `pattern` as a submatrix (rows and columns kept in
/// order) with a 1 wherever the pattern has a 1.
bool matrix_contains(const BinaryMatrix& host, const BinaryMatrix& pattern);

/// ex_M(m, n): most 1-entries in an m x n matrix avoiding M. Exhaustive with
/// pruning; m * n above 25 throws EnvelopeError.
int matrix_extremal(const BinaryMatrix& pattern, int m, int n);

/// Turan number of a 2-interval-chromatic pattern in K_{m,n}.
int turan_bipartite(const OrderedGraph& pattern, int m, int n);

/// Every matrix obtained from M by one elementary operation: a new first or
/// last row or column holding a single 1 next to a 1 of M.
std::vector<BinaryMatrix> elementary_extensions(const BinaryMatrix& m);

}  // namespace ordram
