#include "ordram/constructions.hpp"

#include "ordram/error.hpp"
#include "ordram/scheme.hpp"

#include <cmath>
#include <numeric>

namespace ordram {

namespace {

std::string describe(const std::string& name, const std::vector<int>& params)
{
    std::string out = name + "(";
    for (std::size_t i = 0; i < params.size(); ++i) out += (i ? "," : "") + std::to_string(params[i]);
    return out + ")";
}

void require_parts(const std::vector<int>& r, int minimum)
{
    if (r.empty()) throw ParameterError("r", "needs at least one colour");
    if (r.size() > 255) throw ParameterError("r", "at most 255 colours");
    for (int x : r)
        if (x < minimum) throw ParameterError("r", "every entry must be at least " + std::to_string(minimum));
}

}  // namespace

CertifiedColoring monotone_path_grid(const std::vector<int>& r)
{
    require_parts(r, 2);
    const int c = static_cast<int>(r.size());
    long long n = 1;
    for (int x : r) {
        n *= x - 1;
        if (n > 20000) throw EnvelopeError("monotone_path_grid: too many vertices");
    }
    // coordinates of each vertex, most significant first
    std::vector<std::vector<int>> coord(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(c)));
    for (long long v = 0; v < n; ++v) {
        long long rest = v;
        for (int i = c - 1; i >= 0; --i) {
            const int radix = r[static_cast<std::size_t>(i)] - 1;
            coord[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)] = static_cast<int>(rest % radix);
            rest /= radix;
        }
    }
    CertifiedColoring out{EdgeColoring(static_cast<int>(n), std::max(c, 2)), {}, describe("monotone-path-grid", r)};
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            const auto& x = coord[static_cast<std::size_t>(a - 1)];
            const auto& y = coord[static_cast<std::size_t>(b - 1)];
            int i = 0;
            while (x[static_cast<std::size_t>(i)] >= y[static_cast<std::size_t>(i)]) ++i;
            out.coloring.set(a, b, i + 1);
        }
    for (int i = 0; i < c; ++i) out.avoided.push_back({monotone_path(r[static_cast<std::size_t>(i)]), i + 1});
    return out;
}

CertifiedColoring star_coloring(const std::vector<int>& r)
{
    require_parts(r, 2);
    const int c = static_cast<int>(r.size());
    const int n = 1 - 2 * c + std::accumulate(r.begin(), r.end(), 0);
    // colour_of[d] for distance d = 1..n-1
    std::vector<int> colour_of{0};
    for (int i = 0; i < c; ++i) colour_of.insert(colour_of.end(), static_cast<std::size_t>(r[static_cast<std::size_t>(i)] - 2), i + 1);

    CertifiedColoring out{EdgeColoring(n, std::max(c, 2)), {}, describe("star", r)};
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) out.coloring.set(a, b, colour_of[static_cast<std::size_t>(b - a)]);
    for (int i = 0; i < c; ++i) {
        const int ri = r[static_cast<std::size_t>(i)];
        out.avoided.push_back({star(1, ri), i + 1});
        if (ri > 2) out.avoided.push_back({star(ri, 1), i + 1});  // for ri <= 2 both are one graph
    }
    return out;
}

CertifiedColoring alternating_parity(int n)
{
    if (n < 3) throw ParameterError("n", "must be at least 3");
    const int size = 2 * n - 3;
    CertifiedColoring out{EdgeColoring(size, 2), {}, describe("alt-parity", {n})};
    for (int a = 1; a <= size; ++a)
        for (int b = a + 1; b <= size; ++b) out.coloring.set(a, b, (b - a) % 2 == 0 ? kRed : kBlue);
    out.avoided = {{alternating_path(n), kRed}, {alternating_path(n), kBlue}};
    return out;
}

CertifiedColoring monotone_cycle_construction(int r, int s)
{
    if (r < 2) throw ParameterError("r", "must be at least 2");
    if (s < 2) throw ParameterError("s", "must be at least 2");
    const int count = 2 * r - 3;
    std::vector<int> sizes(static_cast<std::size_t>(count));
    const int outer = r % 2 == 1 ? (r - 1) / 2 : (r - 2) / 2;
    const int outer_size = r % 2 == 1 ? s - 1 : s - 2;
    const int inner_size = r % 2 == 1 ? s - 2 : s - 1;
    for (int i = 0; i < count; ++i) sizes[static_cast<std::size_t>(i)] = (i < outer || i >= count - outer) ? outer_size : inner_size;

    // interval and index of every vertex
    std::vector<int> interval, index;
    for (int i = 0; i < count; ++i)
        for (int k = 1; k <= sizes[static_cast<std::size_t>(i)]; ++k) {
            interval.push_back(i + 1);
            index.push_back(k);
        }
    const int n = static_cast<int>(interval.size());
    if (n != 2 * r * s - 3 * r - 3 * s + 5) throw std::logic_error("monotone_cycle_construction: size mismatch");

    CertifiedColoring out{EdgeColoring(n, 2), {}, describe("monotone-cycle", {r, s})};
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            const int i = interval[static_cast<std::size_t>(a - 1)];
            const int j = interval[static_cast<std::size_t>(b - 1)];
            const int k = index[static_cast<std::size_t>(a - 1)];
            const int l = index[static_cast<std::size_t>(b - 1)];
            bool blue = true;
            if (i != j) {
                const bool near = j - i <= r - 2;
                const int si = sizes[static_cast<std::size_t>(i - 1)];
                const int sj = sizes[static_cast<std::size_t>(j - 1)];
                if (near)
                    blue = si <= sj ? k < l : k <= l;
                else
                    blue = si < sj ? k >= l : k > l;
            }
            out.coloring.set(a, b, blue ? kBlue : kRed);
        }
    if (r >= 3) out.avoided.push_back({monotone_cycle(r), kRed});
    if (s >= 3) out.avoided.push_back({monotone_cycle(s), kBlue});
    return out;
}

namespace {

void blowup_fill(EdgeColoring& col, int first, int size, int level, int d, int r)
{
    if (level == 1) {
        for (int a = first; a < first + size; ++a)
            for (int b = a + 1; b < first + size; ++b) col.set(a, b, 1);
        return;
    }
    const int part = size / (d - 1);
    for (int p = 0; p < d - 1; ++p) blowup_fill(col, first + p * part, part, level - 1, d, r);
    for (int a = first; a < first + size; ++a)
        for (int b = a + 1; b < first + size; ++b)
            if ((a - first) / part != (b - first) / part) col.set(a, b, level);
}

}  // namespace

CertifiedColoring star_blowup(int d, int c, int r)
{
    if (d < 3) throw ParameterError("d", "must be at least 3");
    if (c < 1 || c > 255) throw ParameterError("c", "must be in 1..255");
    if (r < 2) throw ParameterError("r", "must be at least 2");
    long long n = r - 1;
    for (int i = 1; i < c; ++i) {
        n *= d - 1;
        if (n > 20000) throw EnvelopeError("star_blowup: too many vertices");
    }
    CertifiedColoring out{EdgeColoring(static_cast<int>(n), std::max(c, 2)), {}, describe("star-blowup", {d, c, r})};
    blowup_fill(out.coloring, 1, static_cast<int>(n), c, d, r);
    out.avoided.push_back({monotone_path(r), 1});
    for (int i = 2; i <= c; ++i) out.avoided.push_back({monotone_path(d), i});
    return out;
}

EdgeColoring pentagon_coloring()
{
    EdgeColoring c(5, 2, kBlue);
    for (int i = 1; i <= 5; ++i) c.set(i, i % 5 + 1, kRed);
    return c;
}

OrderedGraph basic_matching(int r, int R)
{
    if (r < 2) throw ParameterError("r", "must be at least 2");
    if (R < 1) throw ParameterError("R", "must be positive");
    const int raw = r * r * R;
    std::vector<Edge> raw_edges;
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j)
            for (int a = 0; a < R; ++a) {
                const int li = (i - 1) * r * R;
                const int lj = (j - 1) * r * R;
                raw_edges.push_back({li + j + a * r, lj + i + a * r});
            }
    // drop the isolated vertices l_i + i + a r and relabel
    std::vector<int> label(static_cast<std::size_t>(raw + 1), 0);
    std::vector<bool> used(static_cast<std::size_t>(raw + 1), false);
    for (const Edge& e : raw_edges) used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = true;
    int next = 0;
    for (int v = 1; v <= raw; ++v)
        if (used[static_cast<std::size_t>(v)]) label[static_cast<std::size_t>(v)] = ++next;
    for (Edge& e : raw_edges) e = {label[static_cast<std::size_t>(e.u)], label[static_cast<std::size_t>(e.v)]};
    return OrderedGraph(next, std::move(raw_edges));
}

MatchingParams matching_recurrence(int r, int k, int R)
{
    if (r < 3) throw ParameterError("r", "must be at least 3");
    if (k < 1) throw ParameterError("k", "must be positive");
    if (R < 1) throw ParameterError("R", "must be positive");
    MatchingParams p{r, k, R, r * (r - 1) * R, {}, {}};
    p.n.push_back(p.t);
    p.N.push_back(R);
    for (int i = 1; i < k; ++i) {
        p.n.push_back((r - 1) * p.n.back() + p.t);
        p.N.push_back(p.N.back() * R);
    }
    return p;
}

MatchingConstruction matching_construction(int r, int k, const EdgeColoring& base, int max_vertices)
{
    if (base.colors() != 2) throw ParameterError("base", "must be a 2-colouring");
    const int R = base.order();
    const std::vector<Demand> clique{{complete_graph(r), kRed}, {complete_graph(r), kBlue}};
    if (!avoids(base, clique).avoiding) throw ParameterError("base", "contains a monochromatic K_" + std::to_string(r));

    MatchingParams params = matching_recurrence(r, k, R);
    if (params.n.back() > max_vertices || params.N.back() > max_vertices)
        throw EnvelopeError("matching_construction: order exceeds " + std::to_string(max_vertices));

    const OrderedGraph block = basic_matching(r, R);
    const int t = params.t;
    const int j_size = (r - 1) * R;

    OrderedGraph m = block;
    EdgeColoring c = base;
    for (int level = 2; level <= k; ++level) {
        // J_1 L_1 J_2 ... L_{r-1} J_r; M spread over the J's, M_{level-1} on each L
        const int prev = m.order();
        const int total = (r - 1) * prev + t;
        std::vector<int> j_pos;  // position of the i-th vertex of M
        std::vector<Edge> edges;
        int cursor = 0;
        for (int part = 0; part < r; ++part) {
            for (int x = 1; x <= j_size; ++x) j_pos.push_back(cursor + x);
            cursor += j_size;
            if (part + 1 < r) {
                for (const Edge& e : m.edges()) edges.push_back({cursor + e.u, cursor + e.v});
                cursor += prev;
            }
        }
        for (const Edge& e : block.edges())
            edges.push_back({j_pos[static_cast<std::size_t>(e.u - 1)], j_pos[static_cast<std::size_t>(e.v - 1)]});
        m = OrderedGraph(total, std::move(edges));

        const int inner = c.order();
        EdgeColoring next(inner * R, 2);
        for (int a = 1; a <= inner * R; ++a)
            for (int b = a + 1; b <= inner * R; ++b) {
                const int ba = (a - 1) / inner;
                const int bb = (b - 1) / inner;
                next.set(a, b, ba == bb ? c.color(a - ba * inner, b - bb * inner) : base.color(ba + 1, bb + 1));
            }
        c = std::move(next);
    }

    MatchingConstruction out{m, {std::move(c), {}, describe("matching", {r, k, R})}, std::move(params)};
    out.coloring.avoided = {{m, kRed}, {m, kBlue}};
    return out;
}

MatchingLowerBound matching_lb_params(int r, const BigInt& R)
{
    if (r < 3) throw ParameterError("r", "must be at least 3");
    if (R < 2) throw ParameterError("R", "must be at least 2");
    MatchingLowerBound out;
    out.c = log2_big(R) / r;
    // floor(log_r R) exactly
    int e = 0;
    for (BigInt power = r; power <= R; power *= r) ++e;
    out.k = e - 2;
    if (out.k < 1) return out;
    out.applicable = true;

    const BigInt t = BigInt(r) * (r - 1) * R;
    BigInt n = t;
    for (int i = 1; i < out.k; ++i) n = (r - 1) * n + t;
    out.n = n;
    out.N = ipow(R, static_cast<unsigned>(out.k));
    const double ln = log2_big(n);
    out.margin = log2_big(out.N) - ln * ln / (5.0 * std::log2(ln));
    out.inequality_holds = out.margin > 0;
    return out;
}

int matching_lb_threshold(int first, int last)
{
    for (int r = std::max(first, 3); r <= last; ++r) {
        const BigInt R = isqrt(BigInt(1) << r);
        if (R < 2) continue;
        if (matching_lb_params(r, R).inequality_holds) return r;
    }
    return 0;
}

}  // namespace ordram
