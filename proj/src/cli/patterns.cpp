#include "ordram/patterns.hpp"

#include "ordram/error.hpp"
#include "ordram/io.hpp"
#include "ordram/scheme.hpp"

#include <algorithm>
#include <charconv>

namespace ordram {

namespace {

int to_int(std::string_view text, std::string_view spec)
{
    int value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size() || text.empty())
        throw ParseError("pattern '" + std::string(spec) + "': expected an integer, got '" + std::string(text) + "'");
    return value;
}

std::vector<int> int_list(std::string_view text, std::string_view spec)
{
    std::vector<int> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        out.push_back(to_int(text.substr(start, comma - start), spec));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

OrderedGraph parse_pattern(std::string_view spec)
{
    const std::size_t colon = spec.find(':');
    if (colon == std::string_view::npos) throw ParseError("pattern '" + std::string(spec) + "': missing ':'");
    const std::string_view kind = spec.substr(0, colon);
    const std::string_view arg = spec.substr(colon + 1);
    if (kind == "file") return load_og(std::string(arg));
    if (kind == "c4") {
        if (arg == "A") return c4(C4Ordering::A);
        if (arg == "B") return c4(C4Ordering::B);
        if (arg == "C") return c4(C4Ordering::C);
        throw ParseError("pattern '" + std::string(spec) + "': ordering must be A, B or C");
    }
    const std::vector<int> p = int_list(arg, spec);
    SchemeSpec s;
    if (kind == "mon-path")
        s = {SchemeKind::MonotonePath, p};
    else if (kind == "alt-path")
        s = {SchemeKind::AlternatingPath, p};
    else if (kind == "mon-cycle")
        s = {SchemeKind::MonotoneCycle, p};
    else if (kind == "star")
        s = {SchemeKind::Star, p};
    else if (kind == "complete")
        s = {SchemeKind::Complete, p};
    else if (kind == "match-shift")
        s = {SchemeKind::MatchingShift, p};
    else if (kind == "match-nest")
        s = {SchemeKind::MatchingNest, p};
    else if (kind == "multipartite")
        s = {SchemeKind::CompleteMultipartite, p};
    else
        throw ParseError("pattern '" + std::string(spec) + "': unknown family '" + std::string(kind) + "'");
    return build_scheme(s);
}

Demand parse_demand(std::string_view spec)
{
    const std::size_t colon = spec.rfind(':');
    if (colon == std::string_view::npos || spec.find(':') == colon)
        throw ParseError("demand '" + std::string(spec) + "': expected <pattern>:<colour>");
    Demand d{parse_pattern(spec.substr(0, colon)), to_int(spec.substr(colon + 1), spec)};
    if (d.color < 1) throw ParameterError("color", "must be positive");
    return d;
}

std::string demand_digest(const std::vector<Demand>& demands, int colors)
{
    std::vector<std::string> parts;
    for (const Demand& d : demands) {
        std::string s = std::to_string(d.color) + ":" + std::to_string(d.pattern.order()) + ":";
        for (std::size_t i = 0; i < d.pattern.edges().size(); ++i) {
            const Edge& e = d.pattern.edges()[i];
            s += (i ? "." : "") + std::to_string(e.u) + "-" + std::to_string(e.v);
        }
        parts.push_back(std::move(s));
    }
    std::sort(parts.begin(), parts.end());
    std::string out = "c" + std::to_string(colors);
    for (const auto& p : parts) out += "|" + p;
    return out;
}

}  // namespace ordram
