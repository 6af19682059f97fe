#include "ordram/solver.hpp"

#include "ordram/bounds.hpp"
#include "ordram/error.hpp"
#include "ordram/scheme.hpp"

#include <algorithm>
#include <chrono>

namespace ordram {

namespace {

// One pattern per colour 1..c, or nothing.
std::optional<std::vector<OrderedGraph>> one_per_color(const std::vector<Demand>& demands)
{
    const int c = demand_colors(demands);
    if (c < 1 || demands.size() != static_cast<std::size_t>(c)) return std::nullopt;
    std::vector<std::optional<OrderedGraph>> slot(static_cast<std::size_t>(c));
    for (const Demand& d : demands) {
        auto& s = slot[static_cast<std::size_t>(d.color - 1)];
        if (s) return std::nullopt;
        s = d.pattern;
    }
    std::vector<OrderedGraph> out;
    for (auto& s : slot) out.push_back(std::move(*s));
    return out;
}

bool same(const OrderedGraph& a, const OrderedGraph& b) { return a.order() == b.order() && a.edges() == b.edges(); }

std::optional<int> as_monotone_path(const OrderedGraph& g)
{
    if (g.order() >= 1 && same(g, monotone_path(g.order()))) return g.order();
    return std::nullopt;
}

std::optional<int> as_monotone_cycle(const OrderedGraph& g)
{
    if (g.order() >= 3 && same(g, monotone_cycle(g.order()))) return g.order();
    return std::nullopt;
}

std::optional<int> as_complete(const OrderedGraph& g)
{
    const long long n = g.order();
    if (n >= 1 && static_cast<long long>(g.edge_count()) == n * (n - 1) / 2) return g.order();
    return std::nullopt;
}

std::optional<std::pair<int, int>> as_star(const OrderedGraph& g)
{
    const int n = g.order();
    if (n == 1) return std::pair{1, 1};
    for (int s = 1; s <= n; ++s)
        if (g.degree(s) == n - 1 && static_cast<int>(g.edge_count()) == n - 1) return std::pair{n - s + 1, s};
    return std::nullopt;
}

std::optional<int> as_alternating_path(const OrderedGraph& g)
{
    if (g.order() >= 2 && same(g, alternating_path(g.order()))) return g.order();
    return std::nullopt;
}

long long to_ll(const BoundValue& b) { return static_cast<long long>(b.value); }

struct Known {
    std::optional<long long> lower;
    std::optional<long long> upper;
    std::string source;
};

Known known(const std::vector<Demand>& demands)
{
    Known k;
    const auto per = one_per_color(demands);
    if (!per) return k;
    const auto& g = *per;
    auto exact = [&](const BoundValue& b) {
        k.lower = k.upper = to_ll(b);
        k.source = b.source;
    };

    std::vector<int> paths;
    for (const auto& p : g)
        if (auto r = as_monotone_path(p)) paths.push_back(*r);
    if (paths.size() == g.size()) {
        exact(monotone_paths_exact(paths));
        return k;
    }
    if (g.size() != 2) return k;

    if (auto r = as_monotone_cycle(g[0]))
        if (auto s = as_monotone_cycle(g[1])) {
            exact(monotone_cycles_exact(*r, *s));
            return k;
        }
    if (auto a = as_star(g[0]))
        if (auto b = as_star(g[1])) {
            exact(stars_pair_exact(a->first, a->second, b->first, b->second));
            return k;
        }
    if (auto r = as_monotone_path(g[0]))
        if (auto s = as_complete(g[1])) {
            exact(path_vs_clique_exact(*r, *s));
            return k;
        }
    if (auto r = as_complete(g[0]))
        if (auto s = as_monotone_path(g[1])) {
            exact(path_vs_clique_exact(*s, *r));
            return k;
        }
    if (auto n = as_alternating_path(g[0]))
        if (auto m = as_alternating_path(g[1]); m && *m == *n) {
            const AltPathBounds b = alt_path_bounds(*n);
            k.lower = to_ll(b.lower);
            k.upper = to_ll(b.upper_tight);
            k.source = b.upper_tight.source;
        }
    return k;
}

}  // namespace

std::optional<long long> oracle_lower_bound(const std::vector<Demand>& demands) { return known(demands).lower; }

std::optional<long long> oracle_upper_bound(const std::vector<Demand>& demands) { return known(demands).upper; }

RamseyResult ramsey_number(const std::vector<Demand>& demands, std::optional<int> n_start, const SolveOptions& options)
{
    if (demands.empty()) throw ParameterError("demands", "must be non-empty");
    RamseyResult result;
    result.demands = demands;
    result.colors = demand_colors(demands);
    if (n_start && *n_start < 1) throw ParameterError("N_start", "must be positive");

    const Known oracle = options.use_oracle_seed ? known(demands) : Known{};
    int start = 1;
    if (n_start) start = *n_start;
    if (oracle.lower) start = std::max<long long>(start, std::min<long long>(*oracle.lower, kMaxSolverOrder + 1));

    const auto began = std::chrono::steady_clock::now();
    auto remaining = [&]() -> std::optional<SolveOptions> {
        SolveOptions step = options;
        if (options.budget.max_nodes != 0) {
            if (result.stats.nodes >= options.budget.max_nodes) return std::nullopt;
            step.budget.max_nodes = options.budget.max_nodes - result.stats.nodes;
        }
        if (options.budget.max_seconds > 0) {
            const double used = std::chrono::duration<double>(std::chrono::steady_clock::now() - began).count();
            if (used >= options.budget.max_seconds) return std::nullopt;
            step.budget.max_seconds = options.budget.max_seconds - used;
        }
        return step;
    };

    int largest_found = 0;  // K_0 avoids everything
    std::optional<int> smallest_none;
    bool exhausted = false;
    auto run = [&](int n) -> SearchVerdict {
        const auto step = remaining();
        if (!step) return SearchVerdict::BudgetExhausted;
        if (n > std::min(options.max_order, kMaxSolverOrder)) return SearchVerdict::BudgetExhausted;
        SearchOutcome o = exists_avoiding(demands, result.colors, n, *step);
        result.stats.nodes += o.stats.nodes;
        result.steps.push_back({n, o.verdict, o.stats.nodes, o.stats.seconds});
        if (o.verdict == SearchVerdict::Found && n > largest_found) {
            largest_found = n;
            result.witness = std::move(o.coloring);
        }
        if (o.verdict == SearchVerdict::NoneExists && (!smallest_none || n < *smallest_none)) smallest_none = n;
        return o.verdict;
    };

    int n = std::max(1, start - 1);
    SearchVerdict v = run(n);
    if (v == SearchVerdict::Found) {
        while (v == SearchVerdict::Found) v = run(++n);
    } else if (v == SearchVerdict::NoneExists) {
        while (v == SearchVerdict::NoneExists && n > 1) v = run(--n);
        if (v == SearchVerdict::NoneExists) {
            // refuted at N = 1: R = 1
            largest_found = 0;
            result.witness = EdgeColoring(0, result.colors);
        }
    }
    exhausted = v == SearchVerdict::BudgetExhausted;
    if (!result.witness) result.witness = EdgeColoring(0, result.colors);

    result.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - began).count();
    result.stats.budget_exhausted = exhausted;
    result.lo = largest_found + 1;
    if (smallest_none && *smallest_none == largest_found + 1) {
        result.exact = true;
        result.value = *smallest_none;
        result.hi = result.value;
        result.hi_source = "search";
        return result;
    }
    if (smallest_none) {
        result.hi = *smallest_none;
        result.hi_source = "search";
    }
    const Known cap = known(demands);
    if (cap.upper && (!result.hi || *cap.upper < *result.hi)) {
        result.hi = *cap.upper;
        result.hi_source = cap.source;
    }
    return result;
}

}  // namespace ordram
