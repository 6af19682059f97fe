#include "ordram/analysis.hpp"

#include "ordram/error.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace ordram {

std::vector<int> edge_lengths(const OrderedGraph& g)
{
    std::vector<int> out;
    out.reserve(g.edge_count());
    for (const Edge& e : g.edges()) out.push_back(e.length());
    return out;
}

int bandwidth(const OrderedGraph& g)
{
    int best = 0;
    for (const Edge& e : g.edges()) best = std::max(best, e.length());
    return best;
}

int interval_chromatic_number(const OrderedGraph& g)
{
    const int n = g.order();
    if (n == 0) return 0;
    int intervals = 1;
    int start = 1;
    for (int v = 2; v <= n; ++v) {
        const auto left = g.left_neighbors(v);
        // left neighbours are sorted; the largest decides
        if (!left.empty() && left.back() >= start) {
            ++intervals;
            start = v;
        }
    }
    return intervals;
}

Degeneracy degeneracy(const OrderedGraph& g)
{
    const int n = g.order();
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    for (int v = 1; v <= n; ++v) deg[static_cast<std::size_t>(v - 1)] = g.degree(v);

    std::vector<int> removal;
    removal.reserve(static_cast<std::size_t>(n));
    int k = 0;
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[static_cast<std::size_t>(v)] &&
                (pick < 0 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(pick)]))
                pick = v;
        k = std::max(k, deg[static_cast<std::size_t>(pick)]);
        removed[static_cast<std::size_t>(pick)] = true;
        removal.push_back(pick + 1);
        for (int u : g.left_neighbors(pick + 1))
            if (!removed[static_cast<std::size_t>(u - 1)]) --deg[static_cast<std::size_t>(u - 1)];
        for (int u : g.right_neighbors(pick + 1))
            if (!removed[static_cast<std::size_t>(u - 1)]) --deg[static_cast<std::size_t>(u - 1)];
    }
    // A removed vertex had at most k neighbours among those removed after it.
    std::reverse(removal.begin(), removal.end());
    return {k, std::move(removal)};
}

namespace {

bool has_cross_edge(const OrderedGraph& g, int left_first, int left_last, int right_first, int right_last)
{
    if (left_first > left_last || right_first > right_last) return false;
    for (const Edge& e : g.edges())
        if (e.u >= left_first && e.u <= left_last && e.v >= right_first && e.v <= right_last) return true;
    return false;
}

bool balanced(int part, int whole, int q)
{
    return static_cast<long long>(q) * part <= static_cast<long long>(whole) * (q - 1);
}

}  // namespace

std::optional<Decomposition> decompose(const OrderedGraph& g, int k, int q)
{
    if (k < 1) throw ParameterError("k", "must be positive");
    if (q < 2) throw ParameterError("q", "must be at least 2");
    const int n = g.order();

    struct Choice {
        int state = 0;  // 0 unknown, 1 decomposable, 2 not
        int cut_first = 0;
        int cut_last = 0;
    };
    // memo[a][b] for the interval [a, b], 1 <= a <= b <= n
    std::vector<Choice> memo(static_cast<std::size_t>((n + 2) * (n + 2)));
    auto at = [&](int a, int b) -> Choice& { return memo[static_cast<std::size_t>(a * (n + 2) + b)]; };

    std::function<bool(int, int)> solve = [&](int a, int b) -> bool {
        const int m = b - a + 1;
        if (m <= k) return true;
        Choice& c = at(a, b);
        if (c.state != 0) return c.state == 1;
        for (int x = a; x <= b; ++x) {
            for (int y = x; y <= b && y - x + 1 <= k; ++y) {
                const int left = x - a;
                const int right = b - y;
                if (!balanced(left, m, q) || !balanced(right, m, q)) continue;
                if (has_cross_edge(g, a, x - 1, y + 1, b)) continue;
                if (solve(a, x - 1) && solve(y + 1, b)) {
                    Choice& slot = at(a, b);
                    slot = {1, x, y};
                    return true;
                }
            }
        }
        at(a, b).state = 2;
        return false;
    };

    if (!solve(1, n)) return std::nullopt;

    Decomposition d;
    std::function<int(int, int)> build = [&](int a, int b) -> int {
        const int index = static_cast<int>(d.nodes.size());
        d.nodes.push_back({a, b, 0, 0, -1, -1});
        if (b - a + 1 <= k) return index;
        const Choice c = at(a, b);
        d.nodes[static_cast<std::size_t>(index)].cut_first = c.cut_first;
        d.nodes[static_cast<std::size_t>(index)].cut_last = c.cut_last;
        const int l = build(a, c.cut_first - 1);
        const int r = build(c.cut_last + 1, b);
        d.nodes[static_cast<std::size_t>(index)].left = l;
        d.nodes[static_cast<std::size_t>(index)].right = r;
        return index;
    };
    build(1, n);
    return d;
}

bool validate_decomposition(const OrderedGraph& g, int k, int q, const Decomposition& d)
{
    if (d.nodes.empty()) return false;
    const auto& root = d.nodes.front();
    if (root.first != 1 || root.last != g.order()) return false;
    for (const auto& node : d.nodes) {
        if (node.is_leaf()) {
            if (node.size() > k) return false;
            continue;
        }
        const int m = node.size();
        if (node.cut_first < node.first || node.cut_last > node.last || node.cut_first > node.cut_last) return false;
        if (node.cut_last - node.cut_first + 1 > k) return false;
        if (!balanced(node.cut_first - node.first, m, q) || !balanced(node.last - node.cut_last, m, q)) return false;
        if (has_cross_edge(g, node.first, node.cut_first - 1, node.cut_last + 1, node.last)) return false;
        if (node.left < 0 || node.right < 0) return false;
        const auto& l = d.nodes[static_cast<std::size_t>(node.left)];
        const auto& r = d.nodes[static_cast<std::size_t>(node.right)];
        if (l.first != node.first || l.last != node.cut_first - 1) return false;
        if (r.first != node.cut_last + 1 || r.last != node.last) return false;
    }
    return true;
}

}  // namespace ordram
