#include "ordram/solver.hpp"

#include "ordram/analysis.hpp"
#include "ordram/error.hpp"

#include <algorithm>
#include <functional>

namespace ordram {

int BinaryMatrix::ones() const { return static_cast<int>(std::count(cells.begin(), cells.end(), 1)); }

BinaryMatrix pattern_matrix(const OrderedGraph& g)
{
    const int n = g.order();
    const int icn = interval_chromatic_number(g);
    if (icn > 2) throw ParameterError("pattern", "interval chromatic number " + std::to_string(icn) + " exceeds 2");
    if (icn < 2) return BinaryMatrix(n, 0);
    int split = 2;  // first vertex of the second interval
    while (g.left_neighbors(split).empty()) ++split;
    BinaryMatrix m(split - 1, n - split + 1);
    for (const Edge& e : g.edges()) m.set(e.u - 1, e.v - split);
    return m;
}

bool matrix_contains(const BinaryMatrix& host, const BinaryMatrix& pattern)
{
    if (pattern.rows > host.rows || pattern.cols > host.cols) return false;
    std::vector<int> rows(static_cast<std::size_t>(pattern.rows));

    // For fixed rows the leftmost fitting host column is always a safe choice.
    auto columns_fit = [&] {
        int j = 0;
        for (int pc = 0; pc < pattern.cols; ++pc) {
            for (;; ++j) {
                if (j >= host.cols) return false;
                bool ok = true;
                for (int pr = 0; pr < pattern.rows && ok; ++pr)
                    ok = !pattern.at(pr, pc) || host.at(rows[static_cast<std::size_t>(pr)], j);
                if (ok) break;
            }
            ++j;
        }
        return true;
    };
    std::function<bool(int, int)> pick = [&](int pr, int from) {
        if (pr == pattern.rows) return columns_fit();
        for (int r = from; r <= host.rows - (pattern.rows - pr); ++r) {
            rows[static_cast<std::size_t>(pr)] = r;
            if (pick(pr + 1, r + 1)) return true;
        }
        return false;
    };
    return pick(0, 0);
}

int matrix_extremal(const BinaryMatrix& pattern, int m, int n)
{
    if (m < 0 || n < 0) throw ParameterError("m", "dimensions must be non-negative");
    if (m * n > 25) throw EnvelopeError("matrix_extremal: m*n above 25");
    if (pattern.rows > m || pattern.cols > n) return m * n;
    if (pattern.ones() == 0) throw ParameterError("pattern", "an empty pattern is contained in every matrix");

    BinaryMatrix host(m, n);
    const int cells = m * n;
    int best = 0;
    std::function<void(int, int)> go = [&](int cell, int ones) {
        if (ones + (cells - cell) <= best) return;
        if (cell == cells) {
            best = ones;
            return;
        }
        host.cells[static_cast<std::size_t>(cell)] = 1;
        if (!matrix_contains(host, pattern)) go(cell + 1, ones + 1);
        host.cells[static_cast<std::size_t>(cell)] = 0;
        go(cell + 1, ones);
    };
    go(0, 0);
    return best;
}

int turan_bipartite(const OrderedGraph& pattern, int m, int n)
{
    if (interval_chromatic_number(pattern) != 2)
        throw ParameterError("pattern", "must have interval chromatic number 2");
    return matrix_extremal(pattern_matrix(pattern), m, n);
}

std::vector<BinaryMatrix> elementary_extensions(const BinaryMatrix& m)
{
    std::vector<BinaryMatrix> out;
    auto add = [&](BinaryMatrix x) {
        if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(std::move(x));
    };
    if (m.rows == 0 || m.cols == 0) return out;
    for (int j = 0; j < m.cols; ++j) {
        for (bool first : {true, false}) {
            const int next_to = first ? 0 : m.rows - 1;
            if (!m.at(next_to, j)) continue;
            BinaryMatrix x(m.rows + 1, m.cols);
            const int shift = first ? 1 : 0;
            for (int r = 0; r < m.rows; ++r)
                for (int c = 0; c < m.cols; ++c) x.set(r + shift, c, m.at(r, c));
            x.set(first ? 0 : m.rows, j);
            add(std::move(x));
        }
    }
    for (int i = 0; i < m.rows; ++i) {
        for (bool first : {true, false}) {
            const int next_to = first ? 0 : m.cols - 1;
            if (!m.at(i, next_to)) continue;
            BinaryMatrix x(m.rows, m.cols + 1);
            const int shift = first ? 1 : 0;
            for (int r = 0; r < m.rows; ++r)
                for (int c = 0; c < m.cols; ++c) x.set(r, c + shift, m.at(r, c));
            x.set(i, first ? 0 : m.cols);
            add(std::move(x));
        }
    }
    return out;
}

}  // namespace ordram
