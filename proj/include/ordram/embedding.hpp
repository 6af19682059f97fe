#pragma once

#include "ordram/containment.hpp"
#include "ordram/graph.hpp"

#include <cstddef>
#include <variant>
#include <vector>

namespace ordram {

/// Red K_{t,t}: every left vertex precedes every right vertex.
struct BicliqueWitness {
    std::vector<int> left;
    std::vector<int> right;
};

/// State of the candidate set of a pattern vertex when it was placed.
struct Placement {
    int vertex = 0;              // pattern vertex
    std::size_t candidates = 0;  // |U(w)|
    int shrinks = 0;             // times U(w) was cut down before
    std::size_t survivors = 0;   // |C_w|
};

struct EmbedOutcome {
    std::variant<Embedding, BicliqueWitness> result;
    int t = 1;
    int interval = 0;  // floor(N / n)
    std::vector<Placement> ledger;

    bool is_embedding() const { return std::holds_alternative<Embedding>(result); }
    const Embedding& embedding() const { return std::get<Embedding>(result); }
    const BicliqueWitness& biclique() const { return std::get<BicliqueWitness>(result); }
};

/// Largest t with t^(k+1) n^2 <= N.
int biclique_threshold(int N, int n, int k);

/// Greedy degenerate embedding on a red/blue colouring of K_N: either a blue
/// copy of the pattern with vertex i inside ((i-1)L, iL] for L = floor(N/n),
/// or a red K_{t,t}. Requires two colours, N >= n^2 and pattern degeneracy
/// at most k (ParameterError otherwise).
EmbedOutcome embed_or_biclique(const EdgeColoring& host, const OrderedGraph& pattern, int k);

bool is_valid_biclique(const EdgeColoring& host, const BicliqueWitness& w, int t);

/// Increasing, edges blue, vertex i inside its interval.
bool is_valid_blue_embedding(const EdgeColoring& host, const OrderedGraph& pattern, const Embedding& e, int interval);

}  // namespace ordram
