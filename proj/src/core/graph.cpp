#include "ordram/graph.hpp"

#include "ordram/error.hpp"

#include <algorithm>
#include <string>

namespace ordram {

OrderedGraph::OrderedGraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges))
{
    if (n < 0) throw ParameterError("n", "vertex count must be non-negative");
    for (Edge& e : edges_) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u == e.v) throw ParameterError("edges", "loop at vertex " + std::to_string(e.u));
        if (e.u < 1 || e.v > n)
            throw ParameterError("edges", "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                              ") outside 1.." + std::to_string(n));
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
        throw ParameterError("edges", "duplicate edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");

    left_.assign(static_cast<std::size_t>(n), {});
    right_.assign(static_cast<std::size_t>(n), {});
    adjacency_ = BitMatrix(static_cast<std::size_t>(n));
    for (const Edge& e : edges_) {
        right_[static_cast<std::size_t>(e.u - 1)].push_back(e.v);
        left_[static_cast<std::size_t>(e.v - 1)].push_back(e.u);
        adjacency_.set_symmetric(static_cast<std::size_t>(e.u - 1), static_cast<std::size_t>(e.v - 1));
    }
    for (auto& l : left_) std::sort(l.begin(), l.end());
}

bool OrderedGraph::has_edge(int u, int v) const
{
    if (u < 1 || v < 1 || u > n_ || v > n_ || u == v) return false;
    return adjacency_.test(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
}

OrderedGraph OrderedGraph::induced_interval(int first, int last) const
{
    if (first > last) return OrderedGraph(0, {});
    std::vector<Edge> out;
    for (const Edge& e : edges_)
        if (e.u >= first && e.v <= last) out.push_back({e.u - first + 1, e.v - first + 1});
    return OrderedGraph(last - first + 1, std::move(out));
}

OrderedGraph OrderedGraph::reversed() const
{
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (const Edge& e : edges_) out.push_back({n_ + 1 - e.v, n_ + 1 - e.u});
    return OrderedGraph(n_, std::move(out));
}

EdgeColoring::EdgeColoring(int n, int colors, int fill)
    : n_(n), colors_(colors)
{
    if (n < 0) throw ParameterError("N", "vertex count must be non-negative");
    if (colors < 1 || colors > 255) throw ParameterError("c", "colour count must be in 1..255");
    if (fill < 1 || fill > colors) throw ParameterError("fill", "colour out of range");
    cells_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), static_cast<std::uint8_t>(fill));
}

void EdgeColoring::set(int i, int j, int color)
{
    if (color < 1 || color > colors_) throw ParameterError("color", "colour " + std::to_string(color) + " out of range");
    if (i == j || i < 1 || j < 1 || i > n_ || j > n_) throw ParameterError("pair", "invalid pair");
    cells_[index(i, j)] = static_cast<std::uint8_t>(color);
    cells_[index(j, i)] = static_cast<std::uint8_t>(color);
}

OrderedGraph EdgeColoring::color_class(int c) const
{
    std::vector<Edge> out;
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (color(i, j) == c) out.push_back({i, j});
    return OrderedGraph(n_, std::move(out));
}

BitMatrix EdgeColoring::color_rows(int c) const
{
    BitMatrix m(static_cast<std::size_t>(n_));
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (color(i, j) == c) m.set_symmetric(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
    return m;
}

EdgeColoring EdgeColoring::restricted(std::span<const int> vertices) const
{
    EdgeColoring out(static_cast<int>(vertices.size()), colors_);
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = a + 1; b < vertices.size(); ++b)
            out.set(static_cast<int>(a + 1), static_cast<int>(b + 1), color(vertices[a], vertices[b]));
    return out;
}

}  // namespace ordram
