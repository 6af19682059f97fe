#include "oracles.hpp"

#include "ordram/analysis.hpp"
#include "ordram/error.hpp"
#include "ordram/io.hpp"
#include "ordram/scheme.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace ordram;

namespace {

// Path v1..vn relabelled through an explicit order list (position -> path vertex).
OrderedGraph path_through(const std::vector<int>& order)
{
    const int n = static_cast<int>(order.size());
    std::vector<int> pos(static_cast<std::size_t>(n + 1));
    for (int p = 0; p < n; ++p) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])] = p + 1;
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.push_back({pos[static_cast<std::size_t>(i)], pos[static_cast<std::size_t>(i + 1)]});
    return OrderedGraph(n, edges);
}

std::vector<int> alt_order(int n)
{
    std::vector<int> order;
    for (int i = 1; i <= n; i += 2) order.push_back(i);
    for (int i = n - (n % 2 == 0 ? 0 : 1); i >= 2; i -= 2) order.push_back(i);
    return order;
}

}  // namespace

TEST_CASE("OrderedGraph normalises and validates edges")
{
    OrderedGraph g(4, {{3, 1}, {1, 2}});
    CHECK(g.edges() == std::vector<Edge>{{1, 2}, {1, 3}});
    CHECK(g.has_edge(3, 1));
    CHECK_FALSE(g.has_edge(2, 3));
    CHECK_THROWS_AS(OrderedGraph(3, {{1, 1}}), ParameterError);
    CHECK_THROWS_AS(OrderedGraph(3, {{1, 4}}), ParameterError);
    CHECK_THROWS_AS(OrderedGraph(3, {{1, 2}, {2, 1}}), ParameterError);
    CHECK(OrderedGraph(3, {{1, 2}}) != OrderedGraph(3, {{2, 3}}));
}

TEST_CASE("schemes")
{
    CHECK(monotone_path(3).edges() == std::vector<Edge>{{1, 2}, {2, 3}});
    CHECK(monotone_cycle(4) == c4(C4Ordering::A));
    CHECK(alternating_path(5).edges() == std::vector<Edge>{{1, 5}, {2, 4}, {2, 5}, {3, 4}});
    for (int n = 1; n <= 12; ++n) CHECK(alternating_path(n) == path_through(alt_order(n)));

    CHECK(star(3, 2).edges() == std::vector<Edge>{{1, 2}, {2, 3}, {2, 4}});
    CHECK(star(1, 3).edges() == std::vector<Edge>{{1, 3}, {2, 3}});
    CHECK(star(1, 1).order() == 1);
    CHECK(build_scheme(SchemeSpec::matching_shift(6)).edges() == std::vector<Edge>{{1, 4}, {2, 5}, {3, 6}});
    CHECK(build_scheme(SchemeSpec::matching_nest(6)).edges() == std::vector<Edge>{{1, 6}, {2, 5}, {3, 4}});
    CHECK(build_scheme(SchemeSpec::complete_multipartite({1, 2})).edges() == std::vector<Edge>{{1, 2}, {1, 3}});
    CHECK(complete_graph(5).edge_count() == 10);

    CHECK(SchemeSpec::c4(C4Ordering::B).to_string() == "c4:B");
    CHECK(SchemeSpec::star(3, 2).to_string() == "star:3,2");
    CHECK(build_scheme(SchemeSpec::alternating_path(7)) == build_scheme(SchemeSpec::alternating_path(7)));
}

TEST_CASE("scheme parameter errors name the field")
{
    auto field_of = [](const SchemeSpec& s) {
        try {
            build_scheme(s);
        } catch (const ParameterError& e) {
            return e.field();
        }
        return std::string();
    };
    CHECK(field_of(SchemeSpec::monotone_cycle(2)) == "n");
    CHECK(field_of(SchemeSpec::star(0, 2)) == "r");
    CHECK(field_of(SchemeSpec::star(2, 0)) == "s");
    CHECK(field_of(SchemeSpec::matching_nest(5)) == "n");
    CHECK(field_of({SchemeKind::C4, {3}}) == "ordering");
}

TEST_CASE("edge lengths and bandwidth")
{
    CHECK(bandwidth(monotone_path(5)) == 1);
    CHECK(bandwidth(monotone_cycle(5)) == 4);
    CHECK(bandwidth(alternating_path(5)) == 4);
    CHECK(bandwidth(OrderedGraph::edgeless(3)) == 0);
    const auto lengths = edge_lengths(monotone_path(6));
    CHECK(std::all_of(lengths.begin(), lengths.end(), [](int l) { return l == 1; }));
}

TEST_CASE("interval chromatic number")
{
    CHECK(interval_chromatic_number(alternating_path(7)) == 2);
    CHECK(interval_chromatic_number(monotone_path(4)) == 4);
    CHECK(interval_chromatic_number(OrderedGraph::edgeless(6)) == 1);
    CHECK(interval_chromatic_number(OrderedGraph::edgeless(0)) == 0);
    for (int n = 2; n <= 14; ++n) {
        CHECK(interval_chromatic_number(alternating_path(n)) == 2);
        CHECK(alternating_path(n).edge_count() == static_cast<std::size_t>(n - 1));
        CHECK(monotone_path(n).edge_count() == static_cast<std::size_t>(n - 1));
    }
}

TEST_CASE("interval chromatic number matches exhaustive partitions")
{
    std::mt19937_64 rng(2024);
    int cases = 0;
    for (; cases < 10000; ++cases) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const double density = std::uniform_real_distribution<double>(0.0, 0.5)(rng);
        const auto g = oracle::random_graph(rng, n, density);
        REQUIRE(interval_chromatic_number(g) == oracle::interval_chromatic(g));
    }
    CHECK(cases == 10000);
}

TEST_CASE("degeneracy")
{
    CHECK(degeneracy(build_scheme(SchemeSpec::matching_shift(8))).k == 1);
    CHECK(degeneracy(complete_graph(5)).k == 4);
    CHECK(degeneracy(monotone_cycle(6)).k == 2);
    CHECK(degeneracy(OrderedGraph::edgeless(3)).k == 0);

    std::mt19937_64 rng(99);
    for (int round = 0; round < 2000; ++round) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const auto g = oracle::random_graph(rng, n, 0.4);
        const auto d = degeneracy(g);
        REQUIRE(static_cast<int>(d.order.size()) == n);
        std::vector<int> rank(static_cast<std::size_t>(n + 1), -1);
        for (int i = 0; i < n; ++i) rank[static_cast<std::size_t>(d.order[static_cast<std::size_t>(i)])] = i;
        int worst = 0;
        for (int v = 1; v <= n; ++v) {
            REQUIRE(rank[static_cast<std::size_t>(v)] >= 0);
            int earlier = 0;
            for (int u = 1; u <= n; ++u)
                if (g.has_edge(u, v) && rank[static_cast<std::size_t>(u)] < rank[static_cast<std::size_t>(v)]) ++earlier;
            REQUIRE(earlier <= d.k);
            worst = std::max(worst, earlier);
        }
        // the elimination is optimal, so the bound is attained
        CHECK(worst == d.k);
    }
}

TEST_CASE("decomposability")
{
    CHECK(is_decomposable(complete_graph(3), 1, 2) == false);
    // A single-vertex cut leaves sides of size 1 and 2 under (1,2), and every
    // smaller side pair still has an edge across.
    CHECK(is_decomposable(complete_graph(4), 2, 2) == true);
    for (int k = 2; k <= 6; ++k)
        CHECK(is_decomposable(complete_graph(k + 2), k, 2) == oracle::decomposable(complete_graph(k + 2), k, 2, 1, k + 2));
    for (int n = 1; n <= 6; ++n) CHECK(is_decomposable(complete_graph(n), n, 2));

    std::mt19937_64 rng(5);
    for (int round = 0; round < 3000; ++round) {
        const int n = 1 + static_cast<int>(rng() % 11);
        const auto g = oracle::random_graph(rng, n, std::uniform_real_distribution<double>(0.0, 0.6)(rng));
        const int k = 1 + static_cast<int>(rng() % 4);
        const int q = 2 + static_cast<int>(rng() % 3);
        const auto d = decompose(g, k, q);
        REQUIRE(d.has_value() == oracle::decomposable(g, k, q, 1, n));
        if (d) REQUIRE(validate_decomposition(g, k, q, *d));
        const int bw = bandwidth(g);
        if (bw >= 1) REQUIRE(is_decomposable(g, bw, 2));
    }
    CHECK_THROWS_AS(decompose(monotone_path(3), 0, 2), ParameterError);
    CHECK_THROWS_AS(decompose(monotone_path(3), 1, 1), ParameterError);
}

TEST_CASE("og and oc round trip")
{
    std::mt19937_64 rng(1);
    for (int round = 0; round < 300; ++round) {
        const int n = static_cast<int>(rng() % 15);
        const auto g = oracle::random_graph(rng, n, 0.3);
        CHECK(parse_og(to_og_string(g)) == g);
        const auto c = oracle::random_coloring(rng, n, 2 + static_cast<int>(rng() % 3));
        CHECK(parse_oc(to_oc_string(c)) == c);
    }
    CHECK(to_og_string(monotone_path(3)) == "og 3 2\n1 2\n2 3\n");
    CHECK(to_oc_string(EdgeColoring(3, 2)) == "oc 3 2\n1 2 1\n1 3 1\n2 3 1\n");
}

TEST_CASE("parsers reject malformed input")
{
    CHECK_THROWS_AS(parse_og(""), ParseError);
    CHECK_THROWS_AS(parse_og("og 3 1\n2 1\n"), ParseError);
    CHECK_THROWS_AS(parse_og("og 3 2\n2 3\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_og("og 3 2\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_og("og 3 1\n1 2\n1 3\n"), ParseError);
    CHECK_THROWS_AS(parse_og("og x 1\n"), ParseError);
    CHECK_THROWS_AS(parse_oc("oc 3 2\n1 2 1\n1 3 3\n2 3 1\n"), ParseError);
    CHECK_THROWS_AS(parse_oc("oc 3 2\n1 3 1\n1 2 1\n2 3 1\n"), ParseError);
    CHECK_THROWS_AS(load_oc("/nonexistent/x.oc"), IoError);
}
