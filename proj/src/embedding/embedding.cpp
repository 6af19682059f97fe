#include "ordram/embedding.hpp"

#include "ordram/analysis.hpp"
#include "ordram/bigint.hpp"
#include "ordram/constructions.hpp"
#include "ordram/error.hpp"

#include <algorithm>

namespace ordram {

int biclique_threshold(int N, int n, int k)
{
    if (n < 1 || k < 1) throw ParameterError("n", "pattern order and k must be positive");
    const BigInt ratio = BigInt(N) / (BigInt(n) * n);
    // floor of an integer root of floor(N/n^2) equals the floor of the real root
    return static_cast<int>(iroot(ratio, static_cast<unsigned>(k + 1)));
}

EmbedOutcome embed_or_biclique(const EdgeColoring& host, const OrderedGraph& pattern, int k)
{
    const int N = host.order();
    const int n = pattern.order();
    if (host.colors() != 2) throw ParameterError("host", "needs exactly two colours");
    if (n < 1) throw ParameterError("pattern", "needs at least one vertex");
    if (k < 1) throw ParameterError("k", "must be positive");
    if (static_cast<long long>(N) < static_cast<long long>(n) * n) throw ParameterError("N", "must be at least n^2");
    const Degeneracy deg = degeneracy(pattern);
    if (deg.k > k) throw ParameterError("k", "pattern is " + std::to_string(deg.k) + "-degenerate");

    EmbedOutcome out;
    out.t = biclique_threshold(N, n, k);
    out.interval = N / n;
    const int t = out.t;
    const std::size_t tz = static_cast<std::size_t>(t);

    std::vector<std::vector<int>> U(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v)
        for (int x = (v - 1) * out.interval + 1; x <= v * out.interval; ++x) U[static_cast<std::size_t>(v - 1)].push_back(x);
    std::vector<int> shrinks(static_cast<std::size_t>(n), 0);
    std::vector<int> rank(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < deg.order.size(); ++i) rank[static_cast<std::size_t>(deg.order[i] - 1)] = static_cast<int>(i);

    auto blue_into = [&](int x, const std::vector<int>& set) {
        std::vector<int> out;
        for (int y : set)
            if (host.color(x, y) == kBlue) out.push_back(y);
        return out;
    };
    Embedding h(static_cast<std::size_t>(n), 0);
    for (int w : deg.order) {
        std::vector<int> later;
        for (int u : pattern.left_neighbors(w))
            if (rank[static_cast<std::size_t>(u - 1)] > rank[static_cast<std::size_t>(w - 1)]) later.push_back(u);
        for (int u : pattern.right_neighbors(w))
            if (rank[static_cast<std::size_t>(u - 1)] > rank[static_cast<std::size_t>(w - 1)]) later.push_back(u);

        std::vector<int>& Uw = U[static_cast<std::size_t>(w - 1)];
        std::vector<bool> alive(Uw.size(), true);
        for (int u : later) {
            const std::vector<int>& Uu = U[static_cast<std::size_t>(u - 1)];
            const std::size_t need = Uu.size() / tz;  // survivors keep at least floor(|U(u)|/t)
            std::vector<int> bad;
            for (std::size_t i = 0; i < Uw.size(); ++i)
                if (blue_into(Uw[i], Uu).size() < need) {
                    alive[i] = false;
                    if (bad.size() < tz) bad.push_back(Uw[i]);
                }
            if (bad.size() == tz) {
                // fewer than |U(u)|/t blue neighbours each: at least t of U(u) see W only in red
                std::vector<int> rest;
                for (int y : Uu) {
                    bool clean = true;
                    for (int x : bad) clean = clean && host.color(x, y) != kBlue;
                    if (clean) rest.push_back(y);
                }
                if (rest.size() < tz) throw std::logic_error("embed_or_biclique: biclique extraction fell short");
                rest.resize(tz);
                BicliqueWitness b;
                if (w < u)
                    b = {bad, rest};
                else
                    b = {rest, bad};
                out.result = std::move(b);
                return out;
            }
        }
        std::vector<int> C;
        for (std::size_t i = 0; i < Uw.size(); ++i)
            if (alive[i]) C.push_back(Uw[i]);
        out.ledger.push_back({w, Uw.size(), shrinks[static_cast<std::size_t>(w - 1)], C.size()});
        if (C.empty()) throw std::logic_error("embed_or_biclique: no candidate survived");
        const int image = C.front();
        h[static_cast<std::size_t>(w - 1)] = image;
        for (int u : later) {
            auto& Uu = U[static_cast<std::size_t>(u - 1)];
            Uu = blue_into(image, Uu);
            ++shrinks[static_cast<std::size_t>(u - 1)];
        }
    }
    out.result = std::move(h);
    return out;
}

bool is_valid_biclique(const EdgeColoring& host, const BicliqueWitness& w, int t)
{
    if (t < 1 || w.left.size() != static_cast<std::size_t>(t) || w.right.size() != static_cast<std::size_t>(t)) return false;
    auto in_range = [&](int x) { return x >= 1 && x <= host.order(); };
    if (!std::all_of(w.left.begin(), w.left.end(), in_range) || !std::all_of(w.right.begin(), w.right.end(), in_range))
        return false;
    if (*std::max_element(w.left.begin(), w.left.end()) >= *std::min_element(w.right.begin(), w.right.end())) return false;
    auto distinct = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return std::adjacent_find(v.begin(), v.end()) == v.end();
    };
    if (!distinct(w.left) || !distinct(w.right)) return false;
    for (int x : w.left)
        for (int y : w.right)
            if (host.color(x, y) != kRed) return false;
    return true;
}

bool is_valid_blue_embedding(const EdgeColoring& host, const OrderedGraph& pattern, const Embedding& e, int interval)
{
    const int n = pattern.order();
    if (e.size() != static_cast<std::size_t>(n)) return false;
    for (int i = 1; i <= n; ++i) {
        const int x = e[static_cast<std::size_t>(i - 1)];
        if (x <= (i - 1) * interval || x > i * interval || x > host.order()) return false;
        if (i > 1 && x <= e[static_cast<std::size_t>(i - 2)]) return false;
    }
    for (const Edge& edge : pattern.edges())
        if (host.color(e[static_cast<std::size_t>(edge.u - 1)], e[static_cast<std::size_t>(edge.v - 1)]) != kBlue) return false;
    return true;
}

}  // namespace ordram
