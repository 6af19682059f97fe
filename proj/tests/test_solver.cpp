#include "oracles.hpp"

#include "ordram/constructions.hpp"
#include "ordram/error.hpp"
#include "ordram/scheme.hpp"
#include "ordram/solver.hpp"

#include <doctest.h>

#include <random>

using namespace ordram;

namespace {

std::vector<Demand> both(const OrderedGraph& g) { return {{g, 1}, {g, 2}}; }

SearchVerdict verdict(const std::vector<Demand>& d, int colors, int n, SolveOptions o = {})
{
    return exists_avoiding(d, colors, n, o).verdict;
}

BinaryMatrix to_matrix(const oracle::Pattern& p)
{
    BinaryMatrix m(p.rows, p.cols);
    m.cells = p.cells;
    return m;
}

int minimalist_value(const BinaryMatrix& p, int m, int n)
{
    if (m < p.rows || n < p.cols) return m * n;
    return (p.cols - 1) * m + (p.rows - 1) * n - (p.rows - 1) * (p.cols - 1);
}

}  // namespace

TEST_CASE("exists_avoiding on small instances")
{
    CHECK(verdict(both(monotone_path(3)), 2, 4) == SearchVerdict::Found);
    CHECK(verdict(both(monotone_path(3)), 2, 5) == SearchVerdict::NoneExists);
    CHECK(verdict(both(complete_graph(3)), 2, 5) == SearchVerdict::Found);
    CHECK(verdict(both(complete_graph(3)), 2, 6) == SearchVerdict::NoneExists);
    CHECK(verdict(both(monotone_path(3)), 2, 0) == SearchVerdict::Found);

    const auto out = exists_avoiding(both(complete_graph(3)), 2, 5);
    REQUIRE(out.coloring);
    CHECK(avoids(*out.coloring, both(complete_graph(3))).avoiding);
    CHECK(out.coloring->order() == 5);
}

TEST_CASE("edgeless patterns are refuted as soon as they fit")
{
    const OrderedGraph empty3(3, {});
    CHECK(verdict({{empty3, 1}}, 2, 2) == SearchVerdict::Found);
    CHECK(verdict({{empty3, 1}}, 2, 3) == SearchVerdict::NoneExists);
}

TEST_CASE("exists_avoiding argument checks")
{
    CHECK_THROWS_AS(verdict({{monotone_path(3), 3}}, 2, 4), ParameterError);
    CHECK_THROWS_AS(verdict({{monotone_path(3), 0}}, 2, 4), ParameterError);
    CHECK_THROWS_AS(verdict(both(monotone_path(3)), 2, kMaxSolverOrder + 1), EnvelopeError);
    CHECK_THROWS_AS(ramsey_number({}), ParameterError);
    CHECK(demand_colors({{monotone_path(2), 1}, {monotone_path(2), 4}}) == 4);
}

TEST_CASE("exists_avoiding agrees with exhaustive colouring enumeration")
{
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> density(0.2, 0.9);
    int found = 0;
    int refuted = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const int colors = std::uniform_int_distribution<int>(1, 10)(rng) <= 8 ? 2 : (trial % 2 ? 3 : 1);
        const int max_n = colors == 3 ? 4 : 6;
        const int n = std::uniform_int_distribution<int>(1, max_n)(rng);
        const int count = std::uniform_int_distribution<int>(1, 3)(rng);
        std::vector<Demand> demands;
        for (int i = 0; i < count; ++i) {
            const int order = std::uniform_int_distribution<int>(1, 4)(rng);
            demands.push_back({oracle::random_graph(rng, order, density(rng)),
                               std::uniform_int_distribution<int>(1, colors)(rng)});
        }
        const bool expected = oracle::exists_avoiding(demands, colors, n);
        for (Engine engine : {Engine::Search, Engine::Clauses}) {
            SolveOptions o;
            o.engine = engine;
            const auto out = exists_avoiding(demands, colors, n, o);
            REQUIRE(out.verdict != SearchVerdict::BudgetExhausted);
            CHECK(expected == (out.verdict == SearchVerdict::Found));
        }
        (expected ? found : refuted)++;
    }
    // both outcomes must be well represented for the comparison to mean much
    CHECK(found > 1000);
    CHECK(refuted > 1000);
}

TEST_CASE("symmetry breaking loses no solutions")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 400; ++trial) {
        SolveOptions plain;
        plain.symmetry_breaking = false;
        plain.engine = trial % 2 ? Engine::Search : Engine::Clauses;
        SolveOptions broken = plain;
        broken.symmetry_breaking = true;
        const int colors = trial % 4 == 0 ? 3 : 2;
        const OrderedGraph g = oracle::random_graph(rng, std::uniform_int_distribution<int>(2, 4)(rng), 0.6);
        std::vector<Demand> demands;
        for (int c = 1; c <= colors; ++c) demands.push_back({g, c});
        const int n = std::uniform_int_distribution<int>(2, colors == 3 ? 6 : 8)(rng);
        CHECK(verdict(demands, colors, n, broken) == verdict(demands, colors, n, plain));
    }
}

TEST_CASE("refutation is monotone in N")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Demand> demands{{oracle::random_graph(rng, 3, 0.7), 1}, {oracle::random_graph(rng, 4, 0.6), 2}};
        bool refuted = false;
        for (int n = 1; n <= 9; ++n) {
            const bool none = verdict(demands, 2, n) == SearchVerdict::NoneExists;
            if (refuted) CHECK(none);
            refuted = refuted || none;
        }
    }
}

TEST_CASE("single-threaded search is deterministic")
{
    const auto demands = both(c4(C4Ordering::B));
    for (Engine engine : {Engine::Search, Engine::Clauses}) {
        SolveOptions o;
        o.engine = engine;
        const auto a = exists_avoiding(demands, 2, 9, o);
        const auto b = exists_avoiding(demands, 2, 9, o);
        REQUIRE(a.coloring);
        REQUIRE(b.coloring);
        CHECK(*a.coloring == *b.coloring);
        CHECK(a.stats.nodes == b.stats.nodes);
    }
}

TEST_CASE("both engines give the same Ramsey numbers")
{
    for (const auto& d : {both(c4(C4Ordering::B)), both(alternating_path(5)), {{monotone_cycle(3), 1}, {c4(C4Ordering::C), 2}}}) {
        SolveOptions search, clauses;
        search.engine = Engine::Search;
        clauses.engine = Engine::Clauses;
        const auto a = ramsey_number(d, std::nullopt, search);
        const auto b = ramsey_number(d, std::nullopt, clauses);
        CHECK(a.exact);
        CHECK(b.exact);
        CHECK(a.value == b.value);
    }
}

TEST_CASE("large clause sets fall back to the search engine")
{
    // an edge followed by nine isolated vertices has C(40, 11) copies in K_40
    const OrderedGraph spread(11, {{1, 2}});
    SolveOptions o;
    o.engine = Engine::Clauses;
    o.budget.max_seconds = 60;
    CHECK(verdict({{spread, 1}}, 2, 40, o) == SearchVerdict::Found);
    CHECK(verdict(both(spread), 2, 40, o) == SearchVerdict::NoneExists);
}

TEST_CASE("parallel verdicts match the sequential ones")
{
    SolveOptions par, seq_options;
    par.threads = 3;
    par.engine = Engine::Search;
    seq_options.engine = Engine::Search;
    for (int n = 7; n <= 10; ++n) {
        const auto demands = both(c4(C4Ordering::B));
        const auto seq = exists_avoiding(demands, 2, n, seq_options);
        const auto p = exists_avoiding(demands, 2, n, par);
        CHECK(seq.verdict == p.verdict);
        if (p.coloring) CHECK(avoids(*p.coloring, demands).avoiding);
    }
    const auto r = ramsey_number(both(alternating_path(4)), std::nullopt, par);
    CHECK(r.exact);
    CHECK(r.value == 7);
}

TEST_CASE("budgets stop the search")
{
    SolveOptions tight;
    tight.budget.max_nodes = 2000;
    tight.engine = Engine::Search;
    const auto out = exists_avoiding(both(c4(C4Ordering::B)), 2, 10, tight);
    CHECK(out.verdict == SearchVerdict::BudgetExhausted);
    CHECK(out.stats.budget_exhausted);

    SolveOptions clauses;
    clauses.budget.max_nodes = 2000;
    clauses.engine = Engine::Clauses;
    const auto cut = exists_avoiding(both(alternating_path(7)), 2, 15, clauses);
    CHECK(cut.verdict == SearchVerdict::BudgetExhausted);
    CHECK(cut.stats.budget_exhausted);
    CHECK(cut.stats.nodes < 4000);

    const auto r = ramsey_number(both(c4(C4Ordering::B)), std::nullopt, tight);
    CHECK_FALSE(r.exact);
    CHECK(r.lo <= 10);
    REQUIRE(r.witness);
    CHECK(r.witness->order() == r.lo - 1);
    CHECK(avoids(*r.witness, both(c4(C4Ordering::B))).avoiding);
}

TEST_CASE("ramsey_number exact values")
{
    CHECK(ramsey_number(both(monotone_path(3))).value == 5);
    CHECK(ramsey_number({{monotone_path(3), 1}, {monotone_path(4), 2}}).value == 7);
    CHECK(ramsey_number(both(complete_graph(3))).value == 6);
    CHECK(ramsey_number(both(alternating_path(4))).value == 7);

    const auto r = ramsey_number(both(c4(C4Ordering::B)));
    CHECK(r.exact);
    CHECK(r.value == 10);
    CHECK(r.lo == 10);
    REQUIRE(r.witness);
    CHECK(r.witness->order() == 9);
    CHECK(avoids(*r.witness, both(c4(C4Ordering::B))).avoiding);
    CHECK(r.steps.back().verdict == SearchVerdict::NoneExists);

    // starting above the answer walks back down
    const auto down = ramsey_number(both(monotone_path(3)), 9);
    CHECK(down.exact);
    CHECK(down.value == 5);
    CHECK(ramsey_number({{OrderedGraph(1, {}), 1}}).value == 1);
}

TEST_CASE("oracle seeding agrees with plain search")
{
    SolveOptions seeded;
    seeded.use_oracle_seed = true;
    const std::vector<std::vector<Demand>> cases{
        both(monotone_path(4)),
        {{monotone_path(3), 1}, {monotone_path(3), 2}, {monotone_path(3), 3}},
        both(monotone_cycle(3)),
        {{monotone_cycle(3), 1}, {monotone_cycle(4), 2}},
        {{star(1, 3), 1}, {star(3, 1), 2}},
        {{star(2, 2), 1}, {star(1, 3), 2}},
        {{monotone_path(3), 1}, {complete_graph(3), 2}},
        both(alternating_path(4)),
    };
    for (const auto& d : cases) {
        const auto a = ramsey_number(d);
        const auto b = ramsey_number(d, std::nullopt, seeded);
        CHECK(a.exact);
        CHECK(b.exact);
        CHECK(a.value == b.value);
        const auto lo = oracle_lower_bound(d);
        const auto hi = oracle_upper_bound(d);
        REQUIRE(lo);
        REQUIRE(hi);
        CHECK(*lo <= a.value);
        CHECK(a.value <= *hi);
    }
    CHECK(oracle_upper_bound(both(monotone_cycle(4))) == 14);
    CHECK_FALSE(oracle_lower_bound(both(c4(C4Ordering::B))));
}

TEST_CASE("pattern matrices")
{
    const BinaryMatrix alt5 = pattern_matrix(alternating_path(5));
    CHECK(alt5.rows == 3);
    CHECK(alt5.cols == 2);
    CHECK(alt5.ones() == 4);
    const BinaryMatrix alt3 = pattern_matrix(alternating_path(3));
    CHECK(alt3.rows == 2);
    CHECK(alt3.cols == 1);
    CHECK(alt3.ones() == 2);
    CHECK_THROWS_AS(pattern_matrix(complete_graph(3)), ParameterError);

    BinaryMatrix host(2, 3);
    host.set(0, 2);
    host.set(1, 2);
    CHECK(matrix_contains(host, alt3));
    host.set(1, 2, false);
    CHECK_FALSE(matrix_contains(host, alt3));
}

TEST_CASE("turan_bipartite examples")
{
    CHECK(turan_bipartite(alternating_path(3), 3, 3) == 3);
    CHECK(turan_bipartite(monotone_path(2), 2, 2) == 0);
    CHECK(turan_bipartite(alternating_path(5), 4, 4) == 10);
    CHECK_THROWS_AS(turan_bipartite(alternating_path(5), 5, 6), EnvelopeError);
    CHECK_THROWS_AS(turan_bipartite(complete_graph(3), 3, 3), ParameterError);
}

TEST_CASE("alternating-path matrices are minimalist for hosts up to 4 x 4")
{
    for (int n = 2; n <= 8; ++n) {
        const BinaryMatrix p = pattern_matrix(alternating_path(n));
        for (int rows = 1; rows <= 4; ++rows)
            for (int cols = 1; cols <= 4; ++cols)
                CHECK(turan_bipartite(alternating_path(n), rows, cols) == minimalist_value(p, rows, cols));
    }
}

TEST_CASE("matrix_extremal agrees with exhaustive enumeration")
{
    std::mt19937_64 rng(31337);
    std::bernoulli_distribution coin(0.5);
    for (int trial = 0; trial < 10000; ++trial) {
        oracle::Pattern p{std::uniform_int_distribution<int>(1, 3)(rng), std::uniform_int_distribution<int>(1, 3)(rng), {}};
        p.cells.resize(static_cast<std::size_t>(p.rows * p.cols));
        for (auto& c : p.cells) c = coin(rng);
        p.cells[std::uniform_int_distribution<std::size_t>(0, p.cells.size() - 1)(rng)] = 1;
        const int m = std::uniform_int_distribution<int>(1, 4)(rng);
        const int n = std::uniform_int_distribution<int>(1, 12 / m)(rng);
        CHECK(matrix_extremal(to_matrix(p), m, n) == oracle::matrix_extremal(p, m, n));
    }
}

TEST_CASE("elementary extensions keep matrices minimalist")
{
    std::mt19937_64 rng(5);
    BinaryMatrix one(1, 1);
    one.set(0, 0);
    for (int trial = 0; trial < 60; ++trial) {
        BinaryMatrix m = trial % 2 ? one : pattern_matrix(alternating_path(4));
        const int steps = std::uniform_int_distribution<int>(1, 3)(rng);
        for (int s = 0; s < steps; ++s) {
            const auto next = elementary_extensions(m);
            REQUIRE_FALSE(next.empty());
            const BinaryMatrix& x = next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)];
            CHECK(x.rows + x.cols == m.rows + m.cols + 1);
            CHECK(x.ones() == m.ones() + 1);
            m = x;
        }
        for (int rows = m.rows; rows <= 5; ++rows)
            for (int cols = m.cols; cols <= 5 && rows * cols <= 20; ++cols)
                CHECK(matrix_extremal(m, rows, cols) == minimalist_value(m, rows, cols));
    }
}

TEST_CASE("elementary extensions of a 1 x 2 matrix")
{
    BinaryMatrix m(1, 2);
    m.set(0, 0);
    m.set(0, 1);
    const auto ext = elementary_extensions(m);
    // four new rows; both new columns give the same 1 x 3 matrix
    CHECK(ext.size() == 5);
}
