#include "ordram/io.hpp"

#include "ordram/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace ordram {

namespace {

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    /// Next line split into integer fields; the first field may be a tag.
    bool next(std::vector<std::string>& fields)
    {
        std::string line;
        if (!std::getline(in_, line)) return false;
        ++number_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        fields.clear();
        std::istringstream split(line);
        for (std::string f; split >> f;) fields.push_back(f);
        return true;
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("line " + std::to_string(number_) + ": " + what);
    }

    long long integer(const std::string& field) const
    {
        long long value = 0;
        const auto* end = field.data() + field.size();
        auto [ptr, ec] = std::from_chars(field.data(), end, value);
        if (ec != std::errc() || ptr != end) fail("expected an integer, got '" + field + "'");
        return value;
    }

private:
    std::istream& in_;
    int number_ = 0;
};

void expect_end(LineReader& reader)
{
    std::vector<std::string> fields;
    while (reader.next(fields))
        if (!fields.empty()) reader.fail("trailing content");
}

}  // namespace

void write_og(std::ostream& out, const OrderedGraph& g)
{
    out << "og " << g.order() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_oc(std::ostream& out, const EdgeColoring& coloring)
{
    const int n = coloring.order();
    out << "oc " << n << ' ' << coloring.colors() << '\n';
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out << i << ' ' << j << ' ' << coloring.color(i, j) << '\n';
}

OrderedGraph read_og(std::istream& in)
{
    LineReader reader(in);
    std::vector<std::string> f;
    if (!reader.next(f)) throw ParseError("empty input, expected 'og' header");
    if (f.size() != 3 || f[0] != "og") reader.fail("expected 'og <n> <m>'");
    const long long n = reader.integer(f[1]);
    const long long m = reader.integer(f[2]);
    if (n < 0 || n > 1'000'000) reader.fail("vertex count out of range");
    if (m < 0 || m > n * (n - 1) / 2) reader.fail("edge count out of range");

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long k = 0; k < m; ++k) {
        if (!reader.next(f)) throw ParseError("unexpected end of input after " + std::to_string(k) + " edges");
        if (f.size() != 2) reader.fail("expected '<i> <j>'");
        const long long i = reader.integer(f[0]);
        const long long j = reader.integer(f[1]);
        if (!(1 <= i && i < j && j <= n)) reader.fail("edge must satisfy 1 <= i < j <= n");
        const Edge e{static_cast<int>(i), static_cast<int>(j)};
        if (!edges.empty() && !(edges.back() < e)) reader.fail("edges not in ascending order");
        edges.push_back(e);
    }
    expect_end(reader);
    return OrderedGraph(static_cast<int>(n), std::move(edges));
}

EdgeColoring read_oc(std::istream& in)
{
    LineReader reader(in);
    std::vector<std::string> f;
    if (!reader.next(f)) throw ParseError("empty input, expected 'oc' header");
    if (f.size() != 3 || f[0] != "oc") reader.fail("expected 'oc <N> <c>'");
    const long long n = reader.integer(f[1]);
    const long long c = reader.integer(f[2]);
    if (n < 0 || n > 100'000) reader.fail("vertex count out of range");
    if (c < 1 || c > 255) reader.fail("colour count out of range");

    EdgeColoring coloring(static_cast<int>(n), static_cast<int>(c));
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (!reader.next(f)) throw ParseError("unexpected end of input before pair " + std::to_string(i) + " " + std::to_string(j));
            if (f.size() != 3) reader.fail("expected '<i> <j> <color>'");
            if (reader.integer(f[0]) != i || reader.integer(f[1]) != j)
                reader.fail("expected pair " + std::to_string(i) + " " + std::to_string(j));
            const long long color = reader.integer(f[2]);
            if (color < 1 || color > c) reader.fail("colour out of range");
            coloring.set(i, j, static_cast<int>(color));
        }
    }
    expect_end(reader);
    return coloring;
}

std::string to_og_string(const OrderedGraph& g)
{
    std::ostringstream out;
    write_og(out, g);
    return out.str();
}

std::string to_oc_string(const EdgeColoring& coloring)
{
    std::ostringstream out;
    write_oc(out, coloring);
    return out.str();
}

OrderedGraph parse_og(const std::string& text)
{
    std::istringstream in(text);
    return read_og(in);
}

EdgeColoring parse_oc(const std::string& text)
{
    std::istringstream in(text);
    return read_oc(in);
}

namespace {

std::ifstream open_in(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    return in;
}

void write_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot create " + path.string());
    out << text;
    out.flush();
    if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace

OrderedGraph load_og(const std::filesystem::path& path)
{
    auto in = open_in(path);
    return read_og(in);
}

EdgeColoring load_oc(const std::filesystem::path& path)
{
    auto in = open_in(path);
    return read_oc(in);
}

void save_og(const std::filesystem::path& path, const OrderedGraph& g) { write_file(path, to_og_string(g)); }

void save_oc(const std::filesystem::path& path, const EdgeColoring& coloring)
{
    write_file(path, to_oc_string(coloring));
}

}  // namespace ordram
