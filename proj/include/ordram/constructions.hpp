#pragma once

#include "ordram/bigint.hpp"
#include "ordram/containment.hpp"
#include "ordram/graph.hpp"

#include <string>
#include <vector>

namespace ordram {

inline constexpr int kRed = 1;
inline constexpr int kBlue = 2;

/// A colouring together with the demands it is claimed to avoid. The claim
/// is not trusted anywhere; call certify() or avoids() to check it.
struct CertifiedColoring {
    EdgeColoring coloring;
    std::vector<Demand> avoided;
    std::string provenance;  // e.g. "monotone-cycle(4,4)"

    bool certify() const { return avoids(coloring, avoided).avoiding; }
};

/// Mixed-radix grid on prod(r_i - 1) vertices; a pair gets the first
/// coordinate where the earlier vertex is strictly smaller. Avoids the
/// monotone path on r_i vertices in colour i.
CertifiedColoring monotone_path_grid(const std::vector<int>& r);

/// 1 - 2c + sum(r_i) vertices. The colour of {i, j} depends only on j - i:
/// distances are cut into consecutive blocks of r_i - 2 values for colour i.
/// Every vertex then has at most r_i - 2 neighbours of colour i on each side,
/// so both S_{1,r_i} and S_{r_i,1} are avoided in colour i.
CertifiedColoring star_coloring(const std::vector<int>& r);

/// 2n - 3 vertices, red iff j - i is even. Avoids the alternating path on n
/// vertices in both colours.
CertifiedColoring alternating_parity(int n);

/// 2rs - 3r - 3s + 5 vertices split into 2r - 3 intervals coloured by the
/// four pair types. No red monotone cycle on r or more vertices and no blue
/// one on s or more. Demands on fewer than 3 vertices are omitted.
CertifiedColoring monotone_cycle_construction(int r, int s);

/// (d-1)^(c-1) (r-1) vertices: d-1 equal intervals recursively coloured with
/// colours 1..c-1, cross pairs colour c; the base is K_{r-1} in colour 1.
/// Certified: no monotone path on d vertices in colours 2..c and none on r
/// vertices in colour 1.
CertifiedColoring star_blowup(int d, int c, int r);

/// Red 5-cycle {i, i+1 mod 5}, blue complement.
EdgeColoring pentagon_coloring();

struct MatchingParams {
    int r = 0;
    int k = 0;
    int R = 0;   // base order
    int t = 0;   // r(r-1)R
    std::vector<BigInt> n;  // n[i] = n_{i+1}
    std::vector<BigInt> N;  // N[i] = N_{i+1} = R^{i+1}
};

struct MatchingConstruction {
    OrderedGraph matching;       // M_k on n_k vertices
    CertifiedColoring coloring;  // c_k on N_k vertices, avoiding M_k in both colours
    MatchingParams params;
};

/// Building block M on t = r(r-1)R vertices.
OrderedGraph basic_matching(int r, int R);

/// M_k and c_k from a 2-colouring `base` of K_R with no monochromatic K_r.
/// The base is verified first; a failing base throws ParameterError("base").
/// Orders beyond `max_vertices` throw EnvelopeError.
MatchingConstruction matching_construction(int r, int k, const EdgeColoring& base, int max_vertices = 4096);

/// Recurrence values only; nothing is materialised.
MatchingParams matching_recurrence(int r, int k, int R);

struct MatchingLowerBound {
    bool applicable = false;  // k >= 1
    double c = 0;             // log2(R) / r
    int k = 0;                // floor(log_r R) - 2
    BigInt n;                 // n_k
    BigInt N;                 // R^k
    double margin = 0;        // log2 N - log2(n)^2 / (5 log2 log2 n)
    bool inequality_holds = false;
};

MatchingLowerBound matching_lb_params(int r, const BigInt& R);

/// Smallest r in [first, last] whose parameters with R = floor(2^(r/2))
/// satisfy the inequality; 0 if none does.
int matching_lb_threshold(int first, int last);

}  // namespace ordram
