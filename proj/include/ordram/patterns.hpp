#pragma once

#include "ordram/containment.hpp"
#include "ordram/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ordram {

/// Parses a pattern spec such as "mon-path:5", "alt-path:6", "mon-cycle:4",
/// "star:3,2", "c4:B", "complete:4", "match-shift:6", "match-nest:6",
/// "multipartite:2,2" or "file:path.og". Throws ParseError on bad syntax,
/// ParameterError on bad parameters, IoError when a file cannot be read.
OrderedGraph parse_pattern(std::string_view spec);

/// "<pattern spec>:<colour>"; the colour follows the last colon.
Demand parse_demand(std::string_view spec);

/// Canonical, order-independent text form of a demand list: the colour count,
/// then every demand as colour:order:edges, sorted, separated by '|'.
std::string demand_digest(const std::vector<Demand>& demands, int colors);

}  // namespace ordram
