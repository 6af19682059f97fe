#include "ordram/solver.hpp"

#include "ordram/error.hpp"

#include "sat.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <map>
#include <mutex>
#include <thread>

namespace ordram {

std::string to_string(SearchVerdict verdict)
{
    switch (verdict) {
    case SearchVerdict::Found: return "found";
    case SearchVerdict::NoneExists: return "none";
    case SearchVerdict::BudgetExhausted: return "budget";
    }
    return "?";
}

int demand_colors(const std::vector<Demand>& demands)
{
    int c = 0;
    for (const Demand& d : demands) c = std::max(c, d.color);
    return c;
}

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

Mask below(int k) { return k <= 0 ? 0 : (k >= 64 ? ~Mask{0} : (Mask{1} << k) - 1); }

// bits lo..hi inclusive
Mask range(int lo, int hi) { return lo > hi ? 0 : below(hi + 1) & ~below(lo); }

bool is_monotone_path(const OrderedGraph& p)
{
    const int n = p.order();
    if (n < 2 || p.edge_count() != static_cast<std::size_t>(n - 1)) return false;
    for (int i = 1; i < n; ++i)
        if (!p.has_edge(i, i + 1)) return false;
    return true;
}

bool is_monotone_cycle(const OrderedGraph& p)
{
    const int n = p.order();
    if (n < 3 || p.edge_count() != static_cast<std::size_t>(n)) return false;
    for (int i = 1; i < n; ++i)
        if (!p.has_edge(i, i + 1)) return false;
    return p.has_edge(1, n);
}

struct Compiled {
    enum class Kind { Generic, Path, Cycle } kind = Kind::Generic;
    int color = 0;     // 0-based
    int r = 0;         // vertices after dropping trailing isolated ones
    int trailing = 0;  // dropped trailing isolated vertices
    std::vector<Mask> left;   // left-neighbour masks
    std::vector<bool> has_right;
    std::vector<bool> to_last;
    std::vector<int> last_left;
};

struct Problem {
    int n = 0;
    int colors = 2;
    std::vector<std::vector<Compiled>> by_color;  // demands per colour
    std::vector<int> path_len;   // per colour, shortest path demand (0 = none)
    std::vector<Mask> cycle_len; // per colour, lengths of cycle demands
    bool trivially_refuted = false;
    bool symmetric = false;
};

Problem compile(const std::vector<Demand>& demands, int colors, int n, bool symmetry_breaking)
{
    Problem p;
    p.n = n;
    p.colors = colors;
    p.by_color.assign(static_cast<std::size_t>(colors), {});
    p.path_len.assign(static_cast<std::size_t>(colors), 0);
    p.cycle_len.assign(static_cast<std::size_t>(colors), 0);
    for (const Demand& d : demands) {
        const OrderedGraph& g = d.pattern;
        if (g.order() > n) continue;  // cannot occur
        const std::size_t c = static_cast<std::size_t>(d.color - 1);
        if (g.edge_count() == 0) {
            p.trivially_refuted = true;
            continue;
        }
        if (is_monotone_path(g)) {
            int& len = p.path_len[c];
            len = len == 0 ? g.order() : std::min(len, g.order());
            continue;
        }
        if (is_monotone_cycle(g)) {
            p.cycle_len[c] |= Mask{1} << g.order();
            continue;
        }
        Compiled k;
        k.color = d.color - 1;
        int last = g.order();
        while (g.degree(last) == 0) --last;
        k.r = last;
        k.trailing = g.order() - last;
        k.left.assign(static_cast<std::size_t>(last), 0);
        k.has_right.assign(static_cast<std::size_t>(last), false);
        k.to_last.assign(static_cast<std::size_t>(last), false);
        for (const Edge& e : g.edges()) {
            k.left[static_cast<std::size_t>(e.v - 1)] |= Mask{1} << (e.u - 1);
            k.has_right[static_cast<std::size_t>(e.u - 1)] = true;
            if (e.v == last) {
                k.to_last[static_cast<std::size_t>(e.u - 1)] = true;
                k.last_left.push_back(e.u - 1);
            }
        }
        p.by_color[c].push_back(std::move(k));
    }

    if (symmetry_breaking) {
        // invariant under every colour permutation iff each colour carries
        // the same multiset of patterns
        std::vector<std::vector<std::vector<Edge>>> per(static_cast<std::size_t>(colors));
        std::vector<std::vector<int>> orders(static_cast<std::size_t>(colors));
        for (const Demand& d : demands) {
            per[static_cast<std::size_t>(d.color - 1)].push_back(d.pattern.edges());
            orders[static_cast<std::size_t>(d.color - 1)].push_back(d.pattern.order());
        }
        std::vector<std::vector<std::pair<int, std::vector<Edge>>>> keyed(static_cast<std::size_t>(colors));
        for (int c = 0; c < colors; ++c) {
            for (std::size_t i = 0; i < per[static_cast<std::size_t>(c)].size(); ++i)
                keyed[static_cast<std::size_t>(c)].push_back({orders[static_cast<std::size_t>(c)][i], per[static_cast<std::size_t>(c)][i]});
            std::sort(keyed[static_cast<std::size_t>(c)].begin(), keyed[static_cast<std::size_t>(c)].end());
        }
        p.symmetric = std::all_of(keyed.begin(), keyed.end(), [&](const auto& k) { return k == keyed.front(); });
    }
    return p;
}

struct Shared {
    Clock::time_point start = Clock::now();
    Budget budget;
    std::atomic<bool> stop{false};
    std::atomic<bool> exhausted{false};
    std::atomic<std::uint64_t> nodes{0};
};

class Search {
public:
    Search(const Problem& p, Shared& shared) : p_(p), shared_(shared)
    {
        const int n = p.n;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) edges_.push_back({u, v});
        color_.assign(edges_.size(), -1);
        adj_.assign(static_cast<std::size_t>(p.colors * n), 0);
        longest_.assign(static_cast<std::size_t>(p.colors * n), 1);
        paths_.assign(static_cast<std::size_t>(p.colors * n * n), 0);
        for (int c = 0; c < p.colors; ++c)
            for (int a = 0; a < n; ++a) paths_[index(c, a, a)] = 0b10;
        has_cycles_ = std::any_of(p.cycle_len.begin(), p.cycle_len.end(), [](Mask m) { return m != 0; });
    }

    // Assigns the first prefix.size() edges; false if a demand is hit.
    bool replay(const std::vector<std::uint8_t>& prefix)
    {
        for (std::size_t e = 0; e < prefix.size(); ++e)
            if (!assign(e, prefix[e])) return false;
        return true;
    }

    // Depth-first search from edge `e`. Returns true when a full colouring is found.
    bool dfs(std::size_t e)
    {
        if (e == edges_.size()) return true;
        const int top = p_.symmetric ? std::min(p_.colors - 1, max_used_ + 1) : p_.colors - 1;
        for (int c = 0; c <= top; ++c) {
            if (!tick()) return false;
            const std::size_t mark = trail_.size();
            const int saved_max = max_used_;
            if (assign(e, c) && dfs(e + 1)) return true;
            undo(mark, e);
            max_used_ = saved_max;
            if (shared_.stop.load(std::memory_order_relaxed)) return false;
        }
        return false;
    }

    // Valid prefixes of length `depth`, in search order.
    void collect(std::size_t e, std::size_t depth, std::vector<std::uint8_t>& current, std::vector<std::vector<std::uint8_t>>& out)
    {
        if (e == depth || e == edges_.size()) {
            out.push_back(current);
            return;
        }
        const int top = p_.symmetric ? std::min(p_.colors - 1, max_used_ + 1) : p_.colors - 1;
        for (int c = 0; c <= top; ++c) {
            const std::size_t mark = trail_.size();
            const int saved_max = max_used_;
            ++local_nodes_;
            if (assign(e, c)) {
                current.push_back(static_cast<std::uint8_t>(c));
                collect(e + 1, depth, current, out);
                current.pop_back();
            }
            undo(mark, e);
            max_used_ = saved_max;
        }
    }

    EdgeColoring coloring() const
    {
        EdgeColoring out(p_.n, p_.colors);
        for (std::size_t e = 0; e < edges_.size(); ++e) out.set(edges_[e].u + 1, edges_[e].v + 1, color_[e] + 1);
        return out;
    }

    std::size_t edge_count() const { return edges_.size(); }
    std::uint64_t flush_nodes()
    {
        shared_.nodes.fetch_add(local_nodes_, std::memory_order_relaxed);
        const auto n = local_nodes_;
        local_nodes_ = 0;
        return n;
    }

private:
    struct Saved {
        Mask* where;
        Mask old;
    };

    std::size_t index(int c, int a, int v) const { return (static_cast<std::size_t>(c) * p_.n + a) * p_.n + v; }
    Mask& row(int c, int v) { return adj_[static_cast<std::size_t>(c * p_.n + v)]; }

    void save(Mask& m) { trail_.push_back({&m, m}); }

    bool tick()
    {
        ++local_nodes_;
        if ((local_nodes_ & 0x3FF) != 0) return true;
        const std::uint64_t total = shared_.nodes.fetch_add(local_nodes_, std::memory_order_relaxed) + local_nodes_;
        local_nodes_ = 0;
        if (shared_.stop.load(std::memory_order_relaxed)) return false;
        const Budget& b = shared_.budget;
        bool over = b.max_nodes != 0 && total >= b.max_nodes;
        if (!over && b.max_seconds > 0)
            over = std::chrono::duration<double>(Clock::now() - shared_.start).count() >= b.max_seconds;
        if (over) {
            shared_.exhausted.store(true);
            shared_.stop.store(true);
            return false;
        }
        return true;
    }

    void undo(std::size_t mark, std::size_t e)
    {
        while (trail_.size() > mark) {
            *trail_.back().where = trail_.back().old;
            trail_.pop_back();
        }
        color_[e] = -1;
    }

    bool assign(std::size_t e, int c)
    {
        const int u = edges_[e].u;
        const int v = edges_[e].v;
        color_[e] = c;
        max_used_ = std::max(max_used_, c);
        save(row(c, v));
        row(c, v) |= Mask{1} << u;
        save(row(c, u));
        row(c, u) |= Mask{1} << v;

        const std::size_t cc = static_cast<std::size_t>(c);
        if (p_.path_len[cc] != 0) {
            Mask& lv = longest_[cc * static_cast<std::size_t>(p_.n) + static_cast<std::size_t>(v)];
            const Mask lu = longest_[cc * static_cast<std::size_t>(p_.n) + static_cast<std::size_t>(u)];
            if (lu + 1 > lv) {
                save(lv);
                lv = lu + 1;
            }
            if (lv >= static_cast<Mask>(p_.path_len[cc])) return false;
        }
        if (has_cycles_ && p_.cycle_len[cc] != 0) {
            for (int a = 0; a <= u; ++a) {
                const Mask from = paths_[index(c, a, u)];
                if (from == 0) continue;
                Mask& to = paths_[index(c, a, v)];
                const Mask grown = to | (from << 1);
                if (grown != to) {
                    save(to);
                    to = grown;
                }
            }
            const Mask closing = row(c, v) & below(u);
            for (Mask m = closing; m != 0; m &= m - 1) {
                const int a = std::countr_zero(m);
                if (paths_[index(c, a, v)] & p_.cycle_len[cc]) return false;
            }
        }
        for (const Compiled& d : p_.by_color[cc])
            if (generic_hit(d, c, u, v)) return false;
        return true;
    }

    bool generic_hit(const Compiled& d, int c, int u, int v)
    {
        if (v + d.trailing > p_.n - 1) return false;
        const int last = d.r - 1;
        if (last > v) return false;
        for (int x : d.last_left) {
            if (x > u || last - x - 1 > v - u - 1) continue;
            image_[static_cast<std::size_t>(x)] = u;
            if (extend(d, c, 0, x, u, v)) return true;
        }
        return false;
    }

    bool extend(const Compiled& d, int c, int i, int x, int u, int v)
    {
        const int last = d.r - 1;
        if (i == last) return true;
        const std::size_t si = static_cast<std::size_t>(i);
        if (i == x) {
            for (Mask m = d.left[si]; m != 0; m &= m - 1)
                if (!(row(c, image_[static_cast<std::size_t>(std::countr_zero(m))]) >> u & 1)) return false;
            return extend(d, c, i + 1, x, u, v);
        }
        const int lo = i == 0 ? 0 : image_[si - 1] + 1;
        const int hi = i < x ? u - (x - i) : v - (last - i);
        Mask cand = range(lo, hi);
        for (Mask m = d.left[si]; m != 0 && cand != 0; m &= m - 1) cand &= row(c, image_[static_cast<std::size_t>(std::countr_zero(m))]);
        if (d.to_last[si]) cand &= row(c, v);
        if (cand == 0) return false;
        if (!d.has_right[si]) cand &= ~cand + 1;  // nothing to the right depends on it: take the leftmost
        for (; cand != 0; cand &= cand - 1) {
            image_[si] = std::countr_zero(cand);
            if (extend(d, c, i + 1, x, u, v)) return true;
        }
        return false;
    }

    const Problem& p_;
    Shared& shared_;
    std::vector<Edge> edges_;  // 0-based (u, v), ordered by (v, u)
    std::vector<int> color_;
    std::vector<Mask> adj_;
    std::vector<Mask> longest_;
    std::vector<Mask> paths_;
    std::vector<Saved> trail_;
    int image_[64] = {};
    int max_used_ = -1;
    bool has_cycles_ = false;
    std::uint64_t local_nodes_ = 0;
};

void check_demands(const std::vector<Demand>& demands, int colors)
{
    if (colors < 1 || colors > 255) throw ParameterError("colors", "must be in 1..255");
    for (const Demand& d : demands) {
        if (d.color < 1 || d.color > colors)
            throw ParameterError("color", "demand colour " + std::to_string(d.color) + " outside 1.." + std::to_string(colors));
        if (d.pattern.order() < 1) throw ParameterError("pattern", "patterns need at least one vertex");
    }
}

bool within_budget(Shared& shared, std::uint64_t nodes)
{
    const Budget& b = shared.budget;
    bool over = b.max_nodes != 0 && nodes >= b.max_nodes;
    if (!over && b.max_seconds > 0) over = std::chrono::duration<double>(Clock::now() - shared.start).count() >= b.max_seconds;
    if (over) shared.exhausted.store(true);
    return !over;
}

long long clause_literals(const std::vector<Demand>& demands, int n)
{
    long double total = 0;
    for (const Demand& d : demands) {
        long double copies = 1;
        for (int i = 0; i < d.pattern.order(); ++i) copies = copies * (n - i) / (i + 1);
        total += std::max<long double>(copies, 0) * static_cast<long double>(d.pattern.edge_count());
    }
    return total > 1e18L ? static_cast<long long>(1e18) : static_cast<long long>(total);
}

// Edge (u, v), u < v, is number (v-1)(v-2)/2 + u - 1. With two colours one
// variable per edge is true for colour 1; otherwise one variable per edge and
// colour, with at least one true.
class Encoding {
public:
    Encoding(int n, int colors) : n_(n), colors_(colors) {}

    int vars() const { return edges() * (colors_ == 2 ? 1 : colors_); }
    int edges() const { return n_ * (n_ - 1) / 2; }
    static int edge(int u, int v) { return (v - 1) * (v - 2) / 2 + u - 1; }

    // "edge e has colour c"
    int lit(int e, int c) const
    {
        if (colors_ == 2) return 2 * e + (c == 1 ? 0 : 1);
        return 2 * (e * colors_ + c - 1);
    }

    int color(const detail::Sat& sat, int e) const
    {
        if (colors_ == 2) return sat.value(e) ? 1 : 2;
        for (int c = 1; c <= colors_; ++c)
            if (sat.value(e * colors_ + c - 1)) return c;
        return 1;
    }

private:
    int n_;
    int colors_;
};

// Every increasing image of the pattern in K_n, as the clause "some edge of
// the copy is not coloured c".
void copy_clauses(const Encoding& enc, const Demand& d, int n, std::vector<std::vector<int>>& out)
{
    const OrderedGraph& g = d.pattern;
    const int k = g.order();
    std::vector<int> image(static_cast<std::size_t>(k));
    auto place = [&](auto&& self, int i, int lo) -> void {
        if (i == k) {
            std::vector<int> clause;
            for (const Edge& e : g.edges())
                clause.push_back(enc.lit(Encoding::edge(image[static_cast<std::size_t>(e.u - 1)], image[static_cast<std::size_t>(e.v - 1)]), d.color) ^ 1);
            std::sort(clause.begin(), clause.end());
            out.push_back(std::move(clause));
            return;
        }
        for (int x = lo; x <= n - (k - 1 - i); ++x) {
            image[static_cast<std::size_t>(i)] = x;
            self(self, i + 1, x + 1);
        }
    };
    place(place, 0, 1);
}

std::optional<SearchVerdict> solve_clauses(const std::vector<Demand>& demands, int colors, int n, bool symmetric, Shared& shared,
                                           std::optional<EdgeColoring>& coloring)
{
    const Encoding enc(n, colors);
    std::vector<std::vector<int>> clauses;
    for (const Demand& d : demands) copy_clauses(enc, d, n, clauses);
    std::sort(clauses.begin(), clauses.end());
    clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());

    detail::Sat sat(enc.vars());
    bool ok = true;
    for (auto& c : clauses) ok = ok && sat.add_clause(std::move(c));
    if (colors != 2)
        for (int e = 0; e < enc.edges(); ++e) {
            std::vector<int> some;
            for (int c = 1; c <= colors; ++c) some.push_back(enc.lit(e, c));
            ok = ok && sat.add_clause(std::move(some));
        }
    if (symmetric && enc.edges() > 0) ok = ok && sat.add_clause({enc.lit(0, 1)});
    if (!ok) return SearchVerdict::NoneExists;

    const auto result = sat.solve([&](std::uint64_t nodes) {
        shared.nodes.store(nodes);
        return within_budget(shared, nodes);
    });
    shared.nodes.store(sat.nodes());
    if (result == detail::Sat::Result::Stopped) return SearchVerdict::BudgetExhausted;
    if (result == detail::Sat::Result::Unsatisfiable) return SearchVerdict::NoneExists;
    EdgeColoring c(n, colors);
    for (int v = 2; v <= n; ++v)
        for (int u = 1; u < v; ++u) c.set(u, v, enc.color(sat, Encoding::edge(u, v)));
    coloring = std::move(c);
    return SearchVerdict::Found;
}

SearchOutcome finish(SearchOutcome out, const Shared& shared)
{
    out.stats.nodes = shared.nodes.load();
    out.stats.seconds = std::chrono::duration<double>(Clock::now() - shared.start).count();
    return out;
}

}  // namespace

SearchOutcome exists_avoiding(const std::vector<Demand>& demands, int colors, int n, const SolveOptions& options)
{
    check_demands(demands, colors);
    if (n < 0) throw ParameterError("N", "must be non-negative");
    if (n > kMaxSolverOrder) throw EnvelopeError("exists_avoiding: N above " + std::to_string(kMaxSolverOrder));

    Shared shared;
    shared.budget = options.budget;
    const Problem problem = compile(demands, colors, n, options.symmetry_breaking);
    SearchOutcome out;
    if (problem.trivially_refuted) {
        out.verdict = SearchVerdict::NoneExists;
        return finish(out, shared);
    }

    auto verified = [&](EdgeColoring c) {
        if (!avoids(c, demands).avoiding) throw std::logic_error("exists_avoiding: produced colouring fails verification");
        out.verdict = SearchVerdict::Found;
        out.coloring = std::move(c);
    };

    if (options.engine != Engine::Search && clause_literals(demands, n) <= kMaxClauseLiterals) {
        std::optional<EdgeColoring> c;
        out.verdict = *solve_clauses(demands, colors, n, problem.symmetric, shared, c);
        if (c) verified(std::move(*c));
        out.stats.budget_exhausted = shared.exhausted;
        return finish(out, shared);
    }

    const int threads = std::max(1, options.threads);
    if (threads == 1) {
        Search s(problem, shared);
        const bool found = s.dfs(0);
        s.flush_nodes();
        if (found)
            verified(s.coloring());
        else
            out.verdict = shared.exhausted ? SearchVerdict::BudgetExhausted : SearchVerdict::NoneExists;
        out.stats.budget_exhausted = shared.exhausted;
        return finish(out, shared);
    }

    // Split into prefix tasks; workers take them in order and stop everyone
    // on the first success.
    std::vector<std::vector<std::uint8_t>> tasks{{}};
    {
        Search s(problem, shared);
        std::size_t depth = 0;
        while (depth < s.edge_count()) {
            tasks.clear();
            std::vector<std::uint8_t> current;
            s.collect(0, ++depth, current, tasks);
            if (tasks.size() >= static_cast<std::size_t>(threads) * 16 || tasks.empty()) break;
        }
        s.flush_nodes();
    }
    std::atomic<std::size_t> next{0};
    std::mutex lock;
    std::optional<std::size_t> winner;
    std::optional<EdgeColoring> winning;
    auto worker = [&] {
        while (!shared.stop.load()) {
            const std::size_t t = next.fetch_add(1);
            if (t >= tasks.size()) break;
            Search s(problem, shared);
            if (!s.replay(tasks[t])) continue;
            const bool found = s.dfs(tasks[t].size());
            s.flush_nodes();
            if (found) {
                std::lock_guard<std::mutex> guard(lock);
                if (!winner || t < *winner) {
                    winner = t;
                    winning = s.coloring();
                }
                shared.stop.store(true);
            }
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    if (winning)
        verified(std::move(*winning));
    else
        out.verdict = shared.exhausted ? SearchVerdict::BudgetExhausted : SearchVerdict::NoneExists;
    out.stats.budget_exhausted = shared.exhausted && !winning;
    return finish(out, shared);
}

}  // namespace ordram
