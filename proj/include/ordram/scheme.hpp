#pragma once

#include "ordram/graph.hpp"

#include <string>
#include <vector>

namespace ordram {

enum class SchemeKind {
    MonotonePath,         // n: edges (i, i+1)
    AlternatingPath,      // n: path v1 v3 v5 ... then the even vertices descending
    MonotoneCycle,        // n >= 3: monotone path plus (1, n)
    Star,                 // r, s: centre s with s-1 left and r-1 right neighbours
    C4,                   // 0/1/2 for the orderings A/B/C of the 4-cycle
    MatchingShift,        // n even: (i, n/2 + i)
    MatchingNest,         // n even: (i, n + 1 - i)
    Complete,             // n
    CompleteMultipartite  // n_1..n_p: consecutive parts, every cross pair an edge
};

enum class C4Ordering { A = 0, B = 1, C = 2 };

/// Symbolic name of a member of one of the ordered-graph families.
struct SchemeSpec {
    SchemeKind kind = SchemeKind::MonotonePath;
    std::vector<int> params;

    static SchemeSpec monotone_path(int n) { return {SchemeKind::MonotonePath, {n}}; }
    static SchemeSpec alternating_path(int n) { return {SchemeKind::AlternatingPath, {n}}; }
    static SchemeSpec monotone_cycle(int n) { return {SchemeKind::MonotoneCycle, {n}}; }
    static SchemeSpec star(int r, int s) { return {SchemeKind::Star, {r, s}}; }
    static SchemeSpec c4(C4Ordering o) { return {SchemeKind::C4, {static_cast<int>(o)}}; }
    static SchemeSpec matching_shift(int n) { return {SchemeKind::MatchingShift, {n}}; }
    static SchemeSpec matching_nest(int n) { return {SchemeKind::MatchingNest, {n}}; }
    static SchemeSpec complete(int n) { return {SchemeKind::Complete, {n}}; }
    static SchemeSpec complete_multipartite(std::vector<int> parts)
    {
        return {SchemeKind::CompleteMultipartite, std::move(parts)};
    }

    std::string to_string() const;
    friend bool operator==(const SchemeSpec&, const SchemeSpec&) = default;
};

/// Canonical ordered graph of the family member. Throws ParameterError naming
/// the offending field when the parameters are out of range.
OrderedGraph build_scheme(const SchemeSpec& spec);

// Shorthands used throughout the library and tests.
inline OrderedGraph monotone_path(int n) { return build_scheme(SchemeSpec::monotone_path(n)); }
inline OrderedGraph alternating_path(int n) { return build_scheme(SchemeSpec::alternating_path(n)); }
inline OrderedGraph monotone_cycle(int n) { return build_scheme(SchemeSpec::monotone_cycle(n)); }
inline OrderedGraph star(int r, int s) { return build_scheme(SchemeSpec::star(r, s)); }
inline OrderedGraph c4(C4Ordering o) { return build_scheme(SchemeSpec::c4(o)); }
inline OrderedGraph complete_graph(int n) { return build_scheme(SchemeSpec::complete(n)); }

}  // namespace ordram
