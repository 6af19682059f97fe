#include "oracles.hpp"

#include "ordram/containment.hpp"
#include "ordram/error.hpp"
#include "ordram/scheme.hpp"

#include <doctest.h>

#include <random>

using namespace ordram;

namespace {

EdgeColoring parity(int n)
{
    EdgeColoring c(n, 2);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) c.set(i, j, (j - i) % 2 == 0 ? 1 : 2);
    return c;
}

EdgeColoring pentagon()
{
    EdgeColoring c(5, 2, 2);
    for (int i = 1; i <= 5; ++i) c.set(i, i % 5 + 1, 1);
    return c;
}

}  // namespace

TEST_CASE("find_embedding examples")
{
    CHECK(find_embedding(monotone_path(4), OrderedGraph::edgeless(1)) == Embedding{1});
    CHECK(find_embedding(monotone_cycle(6), monotone_path(6)) == Embedding{1, 2, 3, 4, 5, 6});
    CHECK_FALSE(find_embedding(build_scheme(SchemeSpec::matching_nest(6)), monotone_path(3)).has_value());
    CHECK(find_embedding(OrderedGraph::edgeless(3), OrderedGraph::edgeless(0)) == Embedding{});
    CHECK_FALSE(find_embedding(OrderedGraph::edgeless(2), OrderedGraph::edgeless(3)).has_value());
}

TEST_CASE("find_monochromatic examples")
{
    EdgeColoring blue(5, 2, 2);
    CHECK(find_monochromatic(blue, monotone_path(3), 2).has_value());
    CHECK(find_monochromatic(parity(5), monotone_path(3), 1) == Embedding{1, 3, 5});
    for (int c = 1; c <= 2; ++c) CHECK_FALSE(find_monochromatic(parity(7), alternating_path(5), c).has_value());
    CHECK_THROWS_AS(find_monochromatic(blue, monotone_path(3), 3), ParameterError);
    CHECK_THROWS_AS(find_monochromatic(blue, monotone_path(3), 0), ParameterError);
}

TEST_CASE("avoids")
{
    const std::vector<Demand> triangles{{complete_graph(3), 1}, {complete_graph(3), 2}};
    CHECK(avoids(pentagon(), triangles).avoiding);
    const std::vector<Demand> vertex{{OrderedGraph::edgeless(1), 1}};
    const auto r = avoids(pentagon(), vertex);
    CHECK_FALSE(r.avoiding);
    CHECK(r.violation == Embedding{1});
    const auto red = avoids(EdgeColoring(3, 2), std::vector<Demand>{{complete_graph(3), 1}});
    CHECK(r.demand == 0);
    CHECK(red.violation == Embedding{1, 2, 3});
}

TEST_CASE("longest monotone path and cycle")
{
    EdgeColoring red(4, 2);
    CHECK(longest_monotone_path(red, 1) == 4);
    CHECK(longest_monotone_cycle(red, 1) == 4);
    CHECK(longest_monotone_path(red, 2) == 1);
    CHECK(longest_monotone_cycle(red, 2) == 0);
    CHECK(longest_monotone_path(EdgeColoring(0, 2), 1) == 0);
}

TEST_CASE("containment agrees with enumeration")
{
    std::mt19937_64 rng(42);
    int cases = 0;
    for (; cases < 20000; ++cases) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const int r = 1 + static_cast<int>(rng() % 5);
        const auto host = oracle::random_graph(rng, n, std::uniform_real_distribution<double>(0.2, 0.9)(rng));
        OrderedGraph pattern;
        switch (rng() % 4) {
        case 0: pattern = monotone_path(r); break;
        case 1: pattern = alternating_path(r); break;
        default: pattern = oracle::random_graph(rng, r, std::uniform_real_distribution<double>(0.1, 0.7)(rng));
        }
        const auto got = find_embedding(host, pattern);
        const auto want = oracle::embedding(host, pattern);
        REQUIRE(got == want);
        if (got) REQUIRE(is_valid_embedding(host.adjacency(), pattern, *got));
    }
    CHECK(cases == 20000);
}

TEST_CASE("longest path equals the containment threshold")
{
    std::mt19937_64 rng(8);
    for (int round = 0; round < 500; ++round) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const auto c = oracle::random_coloring(rng, n, 2);
        for (int color = 1; color <= 2; ++color) {
            const int r = longest_monotone_path(c, color);
            REQUIRE(find_monochromatic(c, monotone_path(r), color).has_value());
            REQUIRE_FALSE(find_monochromatic(c, monotone_path(r + 1), color).has_value());

            const int cyc = longest_monotone_cycle(c, color);
            if (cyc > 0) REQUIRE(oracle::mono_copy(c, monotone_cycle(cyc), color));
            for (int len = std::max(cyc + 1, 3); len <= n; ++len) REQUIRE_FALSE(oracle::mono_copy(c, monotone_cycle(len), color));
        }
    }
}

TEST_CASE("avoids is monotone in the demand list")
{
    std::mt19937_64 rng(77);
    for (int round = 0; round < 500; ++round) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const auto c = oracle::random_coloring(rng, n, 2);
        std::vector<Demand> demands;
        for (int k = 0; k < 4; ++k)
            demands.push_back({oracle::random_graph(rng, 2 + static_cast<int>(rng() % 3), 0.6), 1 + static_cast<int>(rng() % 2)});
        const bool all = avoids(c, demands).avoiding;
        for (std::size_t drop = 0; drop < demands.size(); ++drop) {
            auto fewer = demands;
            fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(drop));
            if (all) REQUIRE(avoids(c, fewer).avoiding);
        }
    }
}
