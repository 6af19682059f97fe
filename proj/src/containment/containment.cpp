#include "ordram/containment.hpp"

#include "ordram/error.hpp"

#include <algorithm>

namespace ordram {

namespace {

bool is_monotone_path(const OrderedGraph& p)
{
    const int n = p.order();
    if (p.edge_count() != static_cast<std::size_t>(std::max(0, n - 1))) return false;
    for (int i = 1; i < n; ++i)
        if (!p.has_edge(i, i + 1)) return false;
    return true;
}

// Greedy lexicographically least monotone path of r vertices, driven by the
// longest path starting at each vertex.
std::optional<Embedding> find_monotone_path(const BitMatrix& host, int r)
{
    const int n = static_cast<int>(host.size());
    if (r > n) return std::nullopt;
    std::vector<int> from(static_cast<std::size_t>(n), 1);
    for (int v = n - 1; v >= 0; --v)
        for (int w = v + 1; w < n; ++w)
            if (host.test(static_cast<std::size_t>(v), static_cast<std::size_t>(w)))
                from[static_cast<std::size_t>(v)] = std::max(from[static_cast<std::size_t>(v)], from[static_cast<std::size_t>(w)] + 1);

    Embedding out;
    int prev = -1;
    for (int need = r; need >= 1; --need) {
        int pick = -1;
        for (int v = prev + 1; v < n; ++v) {
            if (prev >= 0 && !host.test(static_cast<std::size_t>(prev), static_cast<std::size_t>(v))) continue;
            if (from[static_cast<std::size_t>(v)] >= need) {
                pick = v;
                break;
            }
        }
        if (pick < 0) return std::nullopt;
        out.push_back(pick + 1);
        prev = pick;
    }
    return out;
}

class Backtracker {
public:
    Backtracker(const BitMatrix& host, const OrderedGraph& pattern)
        : host_(host), pattern_(pattern), n_(static_cast<int>(host.size())), r_(pattern.order()),
          image_(static_cast<std::size_t>(r_)), candidates_(static_cast<std::size_t>(r_), Bitset(host.size()))
    {
    }

    std::optional<Embedding> run()
    {
        if (r_ == 0) return Embedding{};
        if (r_ > n_) return std::nullopt;
        if (search(0)) return image_;
        return std::nullopt;
    }

private:
    bool search(int i)
    {
        if (i == r_) return true;
        Bitset& cand = candidates_[static_cast<std::size_t>(i)];
        cand.set_range(0, host_.size());
        const int lo = i == 0 ? 0 : image_[static_cast<std::size_t>(i - 1)];  // 0-based first allowed
        cand.clear_below(static_cast<std::size_t>(lo));
        cand.clear_from(static_cast<std::size_t>(n_ - (r_ - i - 1)));
        for (int u : pattern_.left_neighbors(i + 1)) cand &= host_.row(static_cast<std::size_t>(image_[static_cast<std::size_t>(u - 1)] - 1));
        for (std::size_t v = cand.find_first(); v < cand.bits(); v = cand.find_next(v + 1)) {
            image_[static_cast<std::size_t>(i)] = static_cast<int>(v) + 1;
            if (search(i + 1)) return true;
        }
        return false;
    }

    const BitMatrix& host_;
    const OrderedGraph& pattern_;
    int n_;
    int r_;
    Embedding image_;
    std::vector<Bitset> candidates_;
};

void check_color(const EdgeColoring& coloring, int color)
{
    if (color < 1 || color > coloring.colors())
        throw ParameterError("color", "colour " + std::to_string(color) + " outside 1.." + std::to_string(coloring.colors()));
}

}  // namespace

std::optional<Embedding> find_embedding(const BitMatrix& host, const OrderedGraph& pattern)
{
    if (pattern.order() >= 2 && is_monotone_path(pattern)) return find_monotone_path(host, pattern.order());
    return Backtracker(host, pattern).run();
}

std::optional<Embedding> find_embedding(const OrderedGraph& host, const OrderedGraph& pattern)
{
    return find_embedding(host.adjacency(), pattern);
}

std::optional<Embedding> find_monochromatic(const EdgeColoring& coloring, const OrderedGraph& pattern, int color)
{
    check_color(coloring, color);
    return find_embedding(coloring.color_rows(color), pattern);
}

int longest_monotone_path(const EdgeColoring& coloring, int color)
{
    check_color(coloring, color);
    const int n = coloring.order();
    std::vector<int> ending(static_cast<std::size_t>(n + 1), 1);
    int best = n > 0 ? 1 : 0;
    for (int v = 2; v <= n; ++v) {
        for (int u = 1; u < v; ++u)
            if (coloring.color(u, v) == color)
                ending[static_cast<std::size_t>(v)] = std::max(ending[static_cast<std::size_t>(v)], ending[static_cast<std::size_t>(u)] + 1);
        best = std::max(best, ending[static_cast<std::size_t>(v)]);
    }
    return best;
}

int longest_monotone_cycle(const EdgeColoring& coloring, int color)
{
    check_color(coloring, color);
    const int n = coloring.order();
    int best = 0;
    std::vector<int> len(static_cast<std::size_t>(n + 1));
    for (int u = 1; u <= n; ++u) {
        // len[w]: vertices on the longest monotone path u -> w, 0 if unreachable
        std::fill(len.begin(), len.end(), 0);
        len[static_cast<std::size_t>(u)] = 1;
        for (int w = u + 1; w <= n; ++w) {
            for (int x = u; x < w; ++x)
                if (len[static_cast<std::size_t>(x)] > 0 && coloring.color(x, w) == color)
                    len[static_cast<std::size_t>(w)] = std::max(len[static_cast<std::size_t>(w)], len[static_cast<std::size_t>(x)] + 1);
            if (len[static_cast<std::size_t>(w)] >= 3 && coloring.color(u, w) == color)
                best = std::max(best, len[static_cast<std::size_t>(w)]);
        }
    }
    return best;
}

AvoidReport avoids(const EdgeColoring& coloring, std::span<const Demand> demands)
{
    for (const Demand& d : demands) check_color(coloring, d.color);
    std::vector<std::optional<BitMatrix>> rows(static_cast<std::size_t>(coloring.colors() + 1));
    for (std::size_t i = 0; i < demands.size(); ++i) {
        auto& r = rows[static_cast<std::size_t>(demands[i].color)];
        if (!r) r = coloring.color_rows(demands[i].color);
        if (auto e = find_embedding(*r, demands[i].pattern)) return {false, i, std::move(*e)};
    }
    return {};
}

bool is_valid_embedding(const BitMatrix& host, const OrderedGraph& pattern, const Embedding& embedding)
{
    if (static_cast<int>(embedding.size()) != pattern.order()) return false;
    for (std::size_t i = 0; i < embedding.size(); ++i) {
        if (embedding[i] < 1 || embedding[i] > static_cast<int>(host.size())) return false;
        if (i > 0 && embedding[i] <= embedding[i - 1]) return false;
    }
    for (const Edge& e : pattern.edges())
        if (!host.test(static_cast<std::size_t>(embedding[static_cast<std::size_t>(e.u - 1)] - 1),
                       static_cast<std::size_t>(embedding[static_cast<std::size_t>(e.v - 1)] - 1)))
            return false;
    return true;
}

}  // namespace ordram
