#pragma once

#include "ordram/bitset.hpp"
#include "ordram/graph.hpp"

#include <optional>
#include <span>
#include <vector>

namespace ordram {

/// Host vertex of each pattern vertex; entry i is the image of vertex i+1.
/// Strictly increasing.
using Embedding = std::vector<int>;

/// A pattern demanded to be absent in one colour.
struct Demand {
    OrderedGraph pattern;
    int color = 1;
    friend bool operator==(const Demand&, const Demand&) = default;
};

/// Lexicographically least order-preserving embedding of `pattern` into the
/// host given by its bit rows (row v-1 = neighbours of v), or nullopt.
std::optional<Embedding> find_embedding(const BitMatrix& host, const OrderedGraph& pattern);
std::optional<Embedding> find_embedding(const OrderedGraph& host, const OrderedGraph& pattern);

/// Embedding into the pairs of colour `color`. Throws ParameterError when
/// the colour is outside 1..c.
std::optional<Embedding> find_monochromatic(const EdgeColoring& coloring, const OrderedGraph& pattern, int color);

/// Vertex count of the longest monotone path in the colour class (0 for an
/// empty host).
int longest_monotone_path(const EdgeColoring& coloring, int color);

/// Vertex count of the longest monotone cycle in the colour class; 0 when
/// there is none.
int longest_monotone_cycle(const EdgeColoring& coloring, int color);

struct AvoidReport {
    bool avoiding = true;
    std::size_t demand = 0;  // index of the first violated demand
    Embedding violation;
    explicit operator bool() const { return avoiding; }
};

AvoidReport avoids(const EdgeColoring& coloring, std::span<const Demand> demands);

bool is_valid_embedding(const BitMatrix& host, const OrderedGraph& pattern, const Embedding& embedding);

}  // namespace ordram
