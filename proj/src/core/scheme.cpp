#include "ordram/scheme.hpp"

#include "ordram/error.hpp"

#include <numeric>
#include <string>

namespace ordram {

namespace {

void require_params(const SchemeSpec& spec, std::size_t count, const char* name)
{
    if (spec.params.size() != count)
        throw ParameterError(name, "expects " + std::to_string(count) + " parameter(s), got " +
                                       std::to_string(spec.params.size()));
}

void require_at_least(int value, int minimum, const char* field)
{
    if (value < minimum) throw ParameterError(field, "must be at least " + std::to_string(minimum));
}

// Position of path vertex v_i in the alternating order: odd-indexed vertices
// ascending first, then even-indexed ones descending.
int alternating_position(int i, int n)
{
    if (i % 2 == 1) return (i + 1) / 2;
    return n - i / 2 + 1;
}

}  // namespace

std::string SchemeSpec::to_string() const
{
    auto join = [this] {
        std::string out;
        for (std::size_t i = 0; i < params.size(); ++i) out += (i ? "," : "") + std::to_string(params[i]);
        return out;
    };
    switch (kind) {
    case SchemeKind::MonotonePath: return "mon-path:" + join();
    case SchemeKind::AlternatingPath: return "alt-path:" + join();
    case SchemeKind::MonotoneCycle: return "mon-cycle:" + join();
    case SchemeKind::Star: return "star:" + join();
    case SchemeKind::C4: return std::string("c4:") + (params.empty() ? '?' : static_cast<char>('A' + params[0]));
    case SchemeKind::MatchingShift: return "match-shift:" + join();
    case SchemeKind::MatchingNest: return "match-nest:" + join();
    case SchemeKind::Complete: return "complete:" + join();
    case SchemeKind::CompleteMultipartite: return "multipartite:" + join();
    }
    return "?";
}

OrderedGraph build_scheme(const SchemeSpec& spec)
{
    std::vector<Edge> edges;
    switch (spec.kind) {
    case SchemeKind::MonotonePath: {
        require_params(spec, 1, "MonotonePath");
        const int n = spec.params[0];
        require_at_least(n, 1, "n");
        for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
        return OrderedGraph(n, std::move(edges));
    }
    case SchemeKind::AlternatingPath: {
        require_params(spec, 1, "AlternatingPath");
        const int n = spec.params[0];
        require_at_least(n, 1, "n");
        for (int i = 1; i < n; ++i) edges.push_back({alternating_position(i, n), alternating_position(i + 1, n)});
        return OrderedGraph(n, std::move(edges));
    }
    case SchemeKind::MonotoneCycle: {
        require_params(spec, 1, "MonotoneCycle");
        const int n = spec.params[0];
        require_at_least(n, 3, "n");
        for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
        edges.push_back({1, n});
        return OrderedGraph(n, std::move(edges));
    }
    case SchemeKind::Star: {
        require_params(spec, 2, "Star");
        const int r = spec.params[0];
        const int s = spec.params[1];
        require_at_least(r, 1, "r");
        require_at_least(s, 1, "s");
        const int n = r + s - 1;
        for (int i = 1; i <= n; ++i)
            if (i != s) edges.push_back({i, s});
        return OrderedGraph(n, std::move(edges));
    }
    case SchemeKind::C4: {
        require_params(spec, 1, "C4");
        switch (spec.params[0]) {
        case 0: return OrderedGraph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
        case 1: return OrderedGraph(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
        case 2: return OrderedGraph(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}});
        default: throw ParameterError("ordering", "must be A, B or C");
        }
    }
    case SchemeKind::MatchingShift:
    case SchemeKind::MatchingNest: {
        require_params(spec, 1, "Matching");
        const int n = spec.params[0];
        require_at_least(n, 2, "n");
        if (n % 2 != 0) throw ParameterError("n", "matching needs an even vertex count");
        for (int i = 1; i <= n / 2; ++i)
            edges.push_back(spec.kind == SchemeKind::MatchingShift ? Edge{i, n / 2 + i} : Edge{i, n + 1 - i});
        return OrderedGraph(n, std::move(edges));
    }
    case SchemeKind::Complete: {
        require_params(spec, 1, "Complete");
        const int n = spec.params[0];
        require_at_least(n, 1, "n");
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) edges.push_back({i, j});
        return OrderedGraph(n, std::move(edges));
    }
    case SchemeKind::CompleteMultipartite: {
        if (spec.params.empty()) throw ParameterError("parts", "needs at least one part");
        std::vector<int> part_of;
        for (std::size_t p = 0; p < spec.params.size(); ++p) {
            require_at_least(spec.params[p], 1, "parts");
            part_of.insert(part_of.end(), static_cast<std::size_t>(spec.params[p]), static_cast<int>(p));
        }
        const int n = static_cast<int>(part_of.size());
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (part_of[static_cast<std::size_t>(i - 1)] != part_of[static_cast<std::size_t>(j - 1)])
                    edges.push_back({i, j});
        return OrderedGraph(n, std::move(edges));
    }
    }
    throw ParameterError("kind", "unknown scheme");
}

}  // namespace ordram
