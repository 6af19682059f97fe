#include "ordram/bounds.hpp"

#include "ordram/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace ordram {

std::string to_string(BoundKind kind)
{
    switch (kind) {
    case BoundKind::Exact: return "Exact";
    case BoundKind::Lower: return "Lower";
    case BoundKind::Upper: return "Upper";
    case BoundKind::Conjectured: return "Conjectured";
    }
    return "?";
}

std::string BoundValue::to_string() const
{
    std::ostringstream out;
    out << ordram::to_string(kind) << ' ' << (infinite ? std::string("inf") : ordram::to_string(value));
    if (real) {
        out.precision(6);
        out << " (" << std::fixed << *real << ')';
    }
    return out.str();
}

namespace {

void at_least(int value, int minimum, const char* field)
{
    if (value < minimum) throw ParameterError(field, "must be at least " + std::to_string(minimum));
}

BoundValue make(BoundKind kind, BigInt value, std::string source)
{
    BoundValue b;
    b.kind = kind;
    b.value = std::move(value);
    b.source = std::move(source);
    return b;
}

// R(S_{1,a}, S_{b,1}) for a, b >= 2.
BigInt one_sided(int a, int b)
{
    const BigInt d = 1 + 8 * BigInt(a - 2) * (b - 2);
    // floor((-1 + sqrt(d)) / 2) == floor((-1 + isqrt(d)) / 2); isqrt(d) >= 1
    return (isqrt(d) - 1) / 2 + a + b - 2;
}

struct Star {
    int r;  // right arm + 1
    int s;  // left arm + 1
    bool single() const { return r == 1 && s == 1; }
    bool two_sided() const { return r >= 2 && s >= 2; }
    Star reversed() const { return {s, r}; }
};

BigInt star_pair(Star x, Star y)
{
    if (x.single() || y.single()) return 1;
    if (x.two_sided() && !y.two_sided()) std::swap(x, y);
    if (x.two_sided()) return star_pair({x.r, 1}, y) + star_pair({1, x.s}, y) - 1;
    if (x.s == 1) {
        // make the first star a left star by reversing the order
        x = x.reversed();
        y = y.reversed();
    }
    const int a = x.s;
    if (y.r == 1) return a + y.s - 2;                 // two left stars
    if (y.s == 1) return one_sided(a, y.r);           // left star against right star
    return one_sided(a, y.r) + a + y.s - 3;
}

}  // namespace

BoundValue monotone_paths_exact(const std::vector<int>& r)
{
    if (r.empty()) throw ParameterError("r", "needs at least one colour");
    BigInt product = 1;
    for (int x : r) {
        at_least(x, 1, "r");
        product *= x - 1;
    }
    return make(BoundKind::Exact, product + 1, "1 + prod(r_i - 1)");
}

BoundValue stars_multicolor_exact(const std::vector<int>& r)
{
    if (r.empty()) throw ParameterError("r", "needs at least one colour");
    for (int x : r) at_least(x, 1, "r");
    if (std::find(r.begin(), r.end(), 1) != r.end()) return make(BoundKind::Exact, 1, "single-vertex star");
    BigInt sum = 0;
    for (int x : r) sum += x;
    return make(BoundKind::Exact, 2 * (1 - static_cast<int>(r.size())) + sum, "2(1 - c) + sum r_i");
}

BoundValue stars_pair_exact(int r1, int s1, int r2, int s2)
{
    at_least(r1, 1, "r1");
    at_least(s1, 1, "s1");
    at_least(r2, 1, "r2");
    at_least(s2, 1, "s2");
    return make(BoundKind::Exact, star_pair({r1, s1}, {r2, s2}),
                "floor((-1 + sqrt(1 + 8(a-2)(b-2))) / 2) + a + b - 2 with the two reduction rules");
}

BoundValue monotone_cycles_exact(int r, int s)
{
    at_least(r, 2, "r");
    at_least(s, 2, "s");
    return make(BoundKind::Exact, BigInt(2) * r * s - 3 * r - 3 * s + 6, "2rs - 3r - 3s + 6");
}

BoundValue geometric_cycle_exact(int n)
{
    at_least(n, 3, "n");
    return make(BoundKind::Exact, BigInt(2) * (n - 2) * (n - 1) + 2, "2(n-2)(n-1) + 2");
}

BoundValue path_vs_clique_exact(int r, int s)
{
    at_least(r, 1, "r");
    at_least(s, 1, "s");
    return make(BoundKind::Exact, BigInt(r - 1) * (s - 1) + 1, "(r-1)(s-1) + 1");
}

AltPathBounds alt_path_bounds(int n)
{
    at_least(n, 2, "n");
    const BigInt disc = BigInt(8) * n * n - 8 * n - 7;
    const BigInt root = isqrt(disc);
    const BigInt m = n - 2;
    AltPathBounds out;
    out.lower = make(BoundKind::Lower, 2 * n - 2, "2n - 2");
    out.upper = make(BoundKind::Upper, (4 * n - 3 + root) / 2, "floor((4n - 3 + sqrt(8n^2 - 8n - 7)) / 2)");
    out.upper_tight = make(BoundKind::Upper, (4 * n - 5 + root) / 2,
                           "floor((4n - 5 + sqrt(8n^2 - 8n - 7)) / 2), the constant the counting argument yields");
    out.conjectured = make(BoundKind::Conjectured, (m + isqrt(5 * m * m)) / 2 + n, "floor((n - 2)(1 + sqrt 5) / 2) + n");
    return out;
}

BoundValue probabilistic_lower(int n, int m, int c)
{
    at_least(n, 1, "n");
    at_least(m, 1, "m");
    at_least(c, 2, "c");
    const long double nn = n;
    const long double value = std::pow(2.0L * std::numbers::pi_v<long double> * nn, 1.0L / nn) * (nn / std::numbers::e_v<long double>) *
                              std::pow(static_cast<long double>(c), static_cast<long double>(m - 1) / nn);
    if (!std::isfinite(value) || value > 1e30L) throw EnvelopeError("probabilistic_lower: value out of range");
    BoundValue b = make(BoundKind::Lower, BigInt(static_cast<long long>(std::ceil(value))),
                        "(2 pi n)^(1/n) (n/e) c^((m-1)/n), rounded up");
    b.real = static_cast<double>(value);
    return b;
}

BoundValue star_blowup_lower(int d, int c, int r)
{
    at_least(d, 3, "d");
    at_least(c, 1, "c");
    at_least(r, 2, "r");
    return make(BoundKind::Lower, ipow(d - 1, static_cast<unsigned>(c - 1)) * (r - 1) + 1, "(d-1)^(c-1) (r-1) + 1");
}

int ceil_log_ratio(int x, int q)
{
    at_least(x, 1, "r");
    at_least(q, 2, "q");
    BigInt lhs = 1;  // q^e
    BigInt rhs = x;  // x (q-1)^e
    int e = 0;
    while (lhs < rhs) {
        lhs *= q;
        rhs *= q - 1;
        ++e;
    }
    return e;
}

BoundValue decomposable_upper(int k, int q, int r, int s, const BigInt& c_k)
{
    at_least(k, 1, "k");
    at_least(q, 2, "q");
    at_least(r, 1, "r");
    at_least(s, 1, "s");
    if (c_k <= 0) throw ParameterError("C_k", "must be positive");
    const long long exponent = 64LL * k * (ceil_log_ratio(r, q) + ceil_log_ratio(s, q));
    if (exponent > 1'000'000) throw EnvelopeError("decomposable_upper: exponent too large");
    return make(BoundKind::Upper, c_k << static_cast<unsigned>(exponent),
                "C_k 2^(64k (ceil(log_{q/(q-1)} r) + ceil(log_{q/(q-1)} s))), C_k supplied by the caller");
}

BoundValue bandwidth_upper(int k, int n, const BigInt& c_k)
{
    at_least(k, 1, "k");
    at_least(n, 1, "n");
    if (c_k <= 0) throw ParameterError("C_k", "must be positive");
    const long long exponent = 256LL * k * ceil_log_ratio(n, 2);
    if (exponent > 1'000'000) throw EnvelopeError("bandwidth_upper: exponent too large");
    return make(BoundKind::Upper, c_k << static_cast<unsigned>(exponent), "C_k 2^(256k ceil(log2 n)), C_k supplied by the caller");
}

BigInt degenerate_exponent(int k, int p)
{
    at_least(k, 1, "k");
    at_least(p, 1, "p");
    const int levels = ceil_log_ratio(p, 2);
    const BigInt numerator = BigInt(k + 2) * ipow(k + 1, static_cast<unsigned>(levels)) - 2;
    if (numerator % k != 0) throw std::logic_error("degenerate_exponent: non-integral exponent");
    return numerator / k;
}

BoundValue degenerate_upper(int k, int p, int n)
{
    at_least(n, 1, "n");
    const BigInt exponent = degenerate_exponent(k, p);
    if (n > 1 && exponent * static_cast<long long>(std::ceil(std::log2(n))) > 4'000'000)
        throw EnvelopeError("degenerate_upper: value too large");
    return make(BoundKind::Upper, ipow(n, exponent.convert_to<unsigned>()),
                "n^((1 + 2/k)(k+1)^ceil(log2 p) - 2/k)");
}

namespace {

BigInt binomial(int n, int k)
{
    if (k < 0 || k > n) return 0;
    BigInt out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

void decreasing_rows(int n, int max_entry, std::vector<int>& row, std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(row.size()) == n) {
        out.push_back(row);
        return;
    }
    const int cap = row.empty() ? max_entry : row.back();
    for (int x = 0; x <= cap; ++x) {
        row.push_back(x);
        decreasing_rows(n, max_entry, row, out);
        row.pop_back();
    }
}

}  // namespace

BigInt partition_count(int d, int n, int max_entry)
{
    at_least(d, 1, "d");
    at_least(n, 0, "n");
    at_least(max_entry, 0, "max_entry");
    if (d == 1) return binomial(n + max_entry, n);
    if (d >= 3) throw EnvelopeError("partition_count: only d <= 2 is supported");

    if (binomial(n + max_entry, n) > 4000) throw EnvelopeError("partition_count: too many row states");
    std::vector<std::vector<int>> rows;
    std::vector<int> scratch;
    decreasing_rows(n, max_entry, scratch, rows);
    // ways[i]: arrays of the rows so far ending in rows[i]
    std::vector<BigInt> ways(rows.size(), 1);
    for (int level = 1; level < n; ++level) {
        std::vector<BigInt> next(rows.size(), 0);
        for (std::size_t a = 0; a < rows.size(); ++a)
            for (std::size_t b = 0; b < rows.size(); ++b) {
                bool below = true;
                for (int i = 0; i < n && below; ++i)
                    below = rows[b][static_cast<std::size_t>(i)] <= rows[a][static_cast<std::size_t>(i)];
                if (below) next[b] += ways[a];
            }
        ways = std::move(next);
    }
    BigInt total = 0;
    for (const auto& w : ways) total += w;
    return n == 0 ? BigInt(1) : total;
}

BoundValue hyperpath_exact(int n, int c)
{
    at_least(n, 3, "n");
    at_least(c, 2, "c");
    return make(BoundKind::Exact, partition_count(c - 1, n - 2, n - 2) + 1, "P_{c-1}(n-2) + 1");
}

}  // namespace ordram
