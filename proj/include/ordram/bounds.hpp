#pragma once

#include "ordram/bigint.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ordram {

enum class BoundKind { Exact, Lower, Upper, Conjectured };

std::string to_string(BoundKind kind);

struct BoundValue {
    BoundKind kind = BoundKind::Exact;
    BigInt value;
    bool infinite = false;
    std::optional<double> real;  // unrounded value when the formula is real-valued
    std::string source;          // the formula evaluated

    /// "Exact 5", "Lower 8 (7.836...)", "Upper inf".
    std::string to_string() const;
};

// Formula oracles. Integer formulas are evaluated exactly; floors of square
// roots go through isqrt. Out-of-range parameters throw ParameterError.

/// 1 + prod(r_i - 1).
BoundValue monotone_paths_exact(const std::vector<int>& r);

/// Left stars S_{1,r_i} in colour i: 2(1 - c) + sum r_i.
BoundValue stars_multicolor_exact(const std::vector<int>& r);

/// R(S_{r1,s1}, S_{r2,s2}) for arbitrary ordered stars, composed from the
/// one-sided formula and its two reduction rules; reversal and colour swap
/// bring every pair into a covered case.
BoundValue stars_pair_exact(int r1, int s1, int r2, int s2);

/// 2rs - 3r - 3s + 6.
BoundValue monotone_cycles_exact(int r, int s);

/// 2(n-2)(n-1) + 2.
BoundValue geometric_cycle_exact(int n);

/// Monotone path on r vertices against K_s: (r-1)(s-1) + 1.
BoundValue path_vs_clique_exact(int r, int s);

struct AltPathBounds {
    BoundValue lower;        // 2n - 2
    BoundValue upper;        // floor((4n - 3 + sqrt(8n^2 - 8n - 7)) / 2)
    BoundValue upper_tight;  // same with 4n - 5
    BoundValue conjectured;  // floor((n - 2) phi) + n
};

AltPathBounds alt_path_bounds(int n);

/// (2 pi n)^(1/n) (n/e) c^((m-1)/n), reported as its ceiling.
BoundValue probabilistic_lower(int n, int m, int c);

/// (d-1)^(c-1) (r-1) + 1.
BoundValue star_blowup_lower(int d, int c, int r);

/// Smallest e >= 0 with q^e >= x (q-1)^e, i.e. ceil(log_{q/(q-1)} x).
int ceil_log_ratio(int x, int q);

/// C_k 2^(64k (ceil(log_{q/(q-1)} r) + ceil(log_{q/(q-1)} s))).
BoundValue decomposable_upper(int k, int q, int r, int s, const BigInt& c_k);

/// C_k 2^(256k ceil(log2 n)) for graphs with all edge lengths at most k.
BoundValue bandwidth_upper(int k, int n, const BigInt& c_k);

/// n^((1 + 2/k)(k+1)^ceil(log2 p) - 2/k); the exponent is always an integer.
BoundValue degenerate_upper(int k, int p, int n);

/// Integer exponent of degenerate_upper.
BigInt degenerate_exponent(int k, int p);

/// d-dimensional arrays n x ... x n with entries in 0..max_entry, weakly
/// decreasing along every line. d = 1 closed form, d = 2 transfer matrix
/// over rows; d >= 3 throws EnvelopeError.
BigInt partition_count(int d, int n, int max_entry);

/// P_{c-1}(n-2) + 1 with P_d(m) = partition_count(d, m, m).
BoundValue hyperpath_exact(int n, int c);

}  // namespace ordram
