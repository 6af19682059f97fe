#pragma once

#include "ordram/graph.hpp"

#include <optional>
#include <vector>

namespace ordram {

/// |i - j| for every edge, in edge order.
std::vector<int> edge_lengths(const OrderedGraph& g);

/// Maximum edge length; 0 for an edgeless graph.
int bandwidth(const OrderedGraph& g);

/// Minimum number of consecutive intervals, none containing an edge. Computed
/// by the left-greedy sweep: an interval grows until the next vertex has a
/// neighbour inside it. 0 for the empty graph.
int interval_chromatic_number(const OrderedGraph& g);

struct Degeneracy {
    int k = 0;
    /// Elimination order (1-based vertices); every vertex has at most k
    /// neighbours earlier in this order.
    std::vector<int> order;
};

/// Repeatedly removes a minimum-degree vertex (smallest index on ties).
Degeneracy degeneracy(const OrderedGraph& g);

/// Node of a (k,q)-decomposition tree over the vertex interval [first, last].
/// Leaves have no cut; inner nodes are split by the cut interval into the
/// left part [first, cut_first-1] and the right part [cut_last+1, last].
struct DecompositionNode {
    int first = 1;
    int last = 0;
    int cut_first = 0;
    int cut_last = 0;
    int left = -1;   // child index, -1 for none
    int right = -1;
    bool is_leaf() const { return cut_first == 0; }
    int size() const { return last - first + 1; }
};

struct Decomposition {
    std::vector<DecompositionNode> nodes;  // nodes[0] is the root
};

/// Returns a decomposition tree when g is (k,q)-decomposable. Exhaustive over
/// candidate cut intervals, memoised on vertex intervals.
std::optional<Decomposition> decompose(const OrderedGraph& g, int k, int q);

inline bool is_decomposable(const OrderedGraph& g, int k, int q) { return decompose(g, k, q).has_value(); }

/// Re-checks every node of a decomposition tree against the definition.
bool validate_decomposition(const OrderedGraph& g, int k, int q, const Decomposition& d);

}  // namespace ordram
