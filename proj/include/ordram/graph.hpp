#pragma once

#include "ordram/bitset.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace ordram {

/// Edge between positions u < v (1-based).
struct Edge {
    int u = 0;
    int v = 0;
    int length() const { return v - u; }
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A graph on vertices 1..n whose order is the index order. Vertex identity is
/// position, so equality of two values is ordered-graph isomorphism.
class OrderedGraph {
public:
    OrderedGraph() = default;

    /// Pairs given as (j, i) are normalised to (i, j). Loops, duplicates and
    /// out-of-range endpoints throw ParameterError.
    OrderedGraph(int n, std::vector<Edge> edges);

    static OrderedGraph edgeless(int n) { return OrderedGraph(n, {}); }

    int order() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    /// Sorted lexicographically.
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int u, int v) const;
    std::span<const int> left_neighbors(int v) const { return left_[static_cast<std::size_t>(v - 1)]; }
    std::span<const int> right_neighbors(int v) const { return right_[static_cast<std::size_t>(v - 1)]; }
    int degree(int v) const { return static_cast<int>(left_neighbors(v).size() + right_neighbors(v).size()); }

    /// Row v-1 holds bits u-1 for every neighbour u of v.
    const BitMatrix& adjacency() const { return adjacency_; }

    /// Subgraph induced by the interval [first, last], relabelled to 1..(last-first+1).
    OrderedGraph induced_interval(int first, int last) const;

    /// Same graph with the order reversed (vertex i becomes n+1-i).
    OrderedGraph reversed() const;

    friend bool operator==(const OrderedGraph& a, const OrderedGraph& b)
    {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> left_;
    std::vector<std::vector<int>> right_;
    BitMatrix adjacency_;
};

/// Colour of every pair of the ordered complete graph on N vertices.
/// Colours are 1..c.
class EdgeColoring {
public:
    EdgeColoring() = default;
    EdgeColoring(int n, int colors, int fill = 1);

    int order() const { return n_; }
    int colors() const { return colors_; }

    int color(int i, int j) const { return cells_[index(i, j)]; }
    void set(int i, int j, int color);

    /// All pairs of colour c as an ordered graph on the same vertex set.
    OrderedGraph color_class(int c) const;
    /// Bit rows of colour c: row v-1 has bit u-1 iff {u, v} has colour c.
    BitMatrix color_rows(int c) const;

    /// Restriction to the given strictly increasing vertex list, relabelled 1..k.
    EdgeColoring restricted(std::span<const int> vertices) const;

    friend bool operator==(const EdgeColoring& a, const EdgeColoring& b)
    {
        return a.n_ == b.n_ && a.colors_ == b.colors_ && a.cells_ == b.cells_;
    }

private:
    std::size_t index(int i, int j) const
    {
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j - 1);
    }

    int n_ = 0;
    int colors_ = 2;
    std::vector<std::uint8_t> cells_;
};

}  // namespace ordram
