#pragma once

#include "ordram/graph.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace ordram {

// ".og": `og <n> <m>` then m lines `<i> <j>`, lexicographic.
// ".oc": `oc <N> <c>` then C(N,2) lines `<i> <j> <color>`, lexicographic.
// Readers are strict: ordering, counts and ranges are checked and any
// deviation throws ParseError with a line number.

void write_og(std::ostream& out, const OrderedGraph& g);
void write_oc(std::ostream& out, const EdgeColoring& coloring);
OrderedGraph read_og(std::istream& in);
EdgeColoring read_oc(std::istream& in);

std::string to_og_string(const OrderedGraph& g);
std::string to_oc_string(const EdgeColoring& coloring);
OrderedGraph parse_og(const std::string& text);
EdgeColoring parse_oc(const std::string& text);

/// File variants; open/read/write failures throw IoError.
OrderedGraph load_og(const std::filesystem::path& path);
EdgeColoring load_oc(const std::filesystem::path& path);
void save_og(const std::filesystem::path& path, const OrderedGraph& g);
void save_oc(const std::filesystem::path& path, const EdgeColoring& coloring);

}  // namespace ordram
