#include "ordram/constructions.hpp"
#include "ordram/error.hpp"
#include "ordram/io.hpp"
#include "ordram/ledger.hpp"
#include "ordram/patterns.hpp"
#include "ordram/scheme.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace ordram;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir()
    {
        path = fs::temp_directory_path() / ("ordram-cli-" + std::to_string(::getpid()) + "-" + std::to_string(counter()++));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter()
    {
        static int c = 0;
        return c;
    }
};

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args, const fs::path& dir)
{
    const fs::path log = dir / "stdout.txt";
    const std::string cmd = "cd '" + dir.string() + "' && ORDRAM_LEDGER= '" ORDRAM_CLI "' " + args + " > '" + log.string() + "' 2>&1";
    const int status = std::system(cmd.c_str());
    std::ifstream in(log);
    std::stringstream text;
    text << in.rdbuf();
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, text.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("pattern specs")
{
    CHECK(parse_pattern("mon-path:5").edges() == monotone_path(5).edges());
    CHECK(parse_pattern("alt-path:6").edges() == alternating_path(6).edges());
    CHECK(parse_pattern("star:3,2").edges() == star(3, 2).edges());
    CHECK(parse_pattern("c4:B").edges() == c4(C4Ordering::B).edges());
    CHECK(parse_pattern("multipartite:2,2").edge_count() == 4);
    CHECK(parse_pattern("match-nest:4").edges() == std::vector<Edge>{{1, 4}, {2, 3}});
    CHECK_THROWS_AS(parse_pattern("c4:D"), ParseError);
    CHECK_THROWS_AS(parse_pattern("mon-path:x"), ParseError);
    CHECK_THROWS_AS(parse_pattern("mon-path:3,"), ParseError);
    CHECK_THROWS_AS(parse_pattern("spiral:3"), ParseError);
    CHECK_THROWS_AS(parse_pattern("mon-cycle:2"), ParameterError);
    CHECK_THROWS_AS(parse_pattern("file:/nonexistent/x.og"), IoError);

    const Demand d = parse_demand("star:3,2:2");
    CHECK(d.color == 2);
    CHECK(d.pattern.order() == 4);
    CHECK_THROWS_AS(parse_demand("mon-path:3"), ParseError);
    CHECK_THROWS_AS(parse_demand("mon-path:3:0"), ParameterError);
}

TEST_CASE("file patterns take the colour after the last colon")
{
    TempDir tmp;
    save_og(tmp.path / "p.og", c4(C4Ordering::C));
    const Demand d = parse_demand("file:" + (tmp.path / "p.og").string() + ":1");
    CHECK(d.pattern.edges() == c4(C4Ordering::C).edges());
}

TEST_CASE("digest is canonical")
{
    const std::vector<Demand> a{{monotone_path(3), 1}, {c4(C4Ordering::A), 2}};
    const std::vector<Demand> b{{c4(C4Ordering::A), 2}, {monotone_path(3), 1}};
    CHECK(demand_digest(a, 2) == demand_digest(b, 2));
    CHECK(demand_digest(a, 2) != demand_digest(a, 3));
    CHECK(demand_digest(a, 2).find(' ') == std::string::npos);
    CHECK(demand_digest({{monotone_path(2), 1}}, 1) == "c1|1:2:1-2");
}

TEST_CASE("ledger lines round trip and appends accumulate")
{
    LedgerEntry e{"c2|1:2:1-2|2:2:1-2", 2, true, 1, 0.25, "witnesses/x.oc", "0.1.0"};
    CHECK(e.to_line() == "result c2|1:2:1-2|2:2:1-2 N=2 status=exact nodes=1 seconds=0.250 witness=witnesses/x.oc version=0.1.0");
    const LedgerEntry back = LedgerEntry::parse(e.to_line());
    CHECK(back.digest == e.digest);
    CHECK(back.n == 2);
    CHECK(back.exact);
    CHECK(back.witness == e.witness);
    CHECK_THROWS_AS(LedgerEntry::parse("result x N=abc status=exact"), ParseError);
    CHECK_THROWS_AS(LedgerEntry::parse("result x status=exact"), ParseError);
    CHECK_THROWS_AS(LedgerEntry::parse("nonsense"), ParseError);

    TempDir tmp;
    Ledger l(tmp.path / "led");
    CHECK(l.entries().empty());
    l.append(e);
    e.exact = false;
    e.n = 5;
    e.digest = "other";
    l.append(e);
    CHECK(l.entries().size() == 2);
    CHECK(l.find_exact("c2|1:2:1-2|2:2:1-2"));
    CHECK_FALSE(l.find_exact("other"));
    CHECK(Ledger::witness_name("abc") == Ledger::witness_name("abc"));
    CHECK(Ledger::witness_name("abc") != Ledger::witness_name("abd"));
}

TEST_CASE("cli construct and verify")
{
    TempDir tmp;
    Run r = run("construct monotone-cycle 4 4 --out w.oc", tmp.path);
    CHECK(r.code == 0);
    CHECK(load_oc(tmp.path / "w.oc").order() == 13);
    CHECK(run("verify w.oc --avoid mon-cycle:4:1 --avoid mon-cycle:4:2", tmp.path).code == 0);

    CHECK(run("construct alt-parity 5 --out a.oc", tmp.path).code == 0);
    CHECK(load_oc(tmp.path / "a.oc").order() == 7);
    CHECK(run("construct star 2 2 --out s.oc", tmp.path).code == 0);
    CHECK(load_oc(tmp.path / "s.oc").order() == 1);

    CHECK(run("construct alt-parity 6 --out p.oc", tmp.path).code == 0);
    CHECK(run("verify p.oc --avoid alt-path:6:1 --avoid alt-path:6:2", tmp.path).code == 0);

    save_oc(tmp.path / "red.oc", EdgeColoring(3, 2, kRed));
    r = run("verify red.oc --avoid complete:3:1", tmp.path);
    CHECK(r.code == 1);
    CHECK(contains(r.out, "[1,2,3]"));

    CHECK(run("construct nonsense 1 --out x.oc", tmp.path).code == 2);
    CHECK(run("construct monotone-cycle 1 4 --out x.oc", tmp.path).code == 2);
    CHECK(contains(run("construct monotone-cycle 1 4 --out x.oc", tmp.path).out, "r:"));
    CHECK(run("verify missing.oc --avoid c4:A:1", tmp.path).code == 3);
    CHECK(run("verify red.oc --avoid c4:Q:1", tmp.path).code == 2);
    CHECK(run("verify", tmp.path).code == 2);
}

TEST_CASE("cli solve uses the ledger")
{
    TempDir tmp;
    Run r = run("solve --avoid c4:B:1 --avoid c4:B:2 --ledger led", tmp.path);
    CHECK(r.code == 0);
    CHECK(contains(r.out, "Exact 10"));
    const Ledger l(tmp.path / "led");
    REQUIRE(l.entries().size() == 1);
    const LedgerEntry e = l.entries().front();
    CHECK(e.exact);
    CHECK(e.n == 10);
    const EdgeColoring w = load_oc(l.dir() / e.witness);
    CHECK(w.order() == 9);
    CHECK(run("verify led/" + e.witness + " --avoid c4:B:1 --avoid c4:B:2", tmp.path).code == 0);

    r = run("solve --avoid c4:B:2 --avoid c4:B:1 --ledger led", tmp.path);
    CHECK(contains(r.out, "cached Exact 10"));
    CHECK(l.entries().size() == 1);
    r = run("solve --avoid c4:B:2 --avoid c4:B:1 --ledger led --force", tmp.path);
    CHECK(l.entries().size() == 2);

    CHECK(contains(run("solve --avoid alt-path:3:1 --avoid alt-path:3:2 --ledger led", tmp.path).out, "Exact 4"));
    CHECK(contains(run("solve --avoid mon-path:2:1 --avoid mon-path:2:2 --ledger led", tmp.path).out, "Exact 2"));

    r = run("solve --avoid c4:A:1 --avoid c4:A:2 --ledger led --max-n 6", tmp.path);
    CHECK(r.code == 0);
    CHECK(contains(r.out, "Bounds 7 <= R"));
    CHECK(contains(l.entries().back().to_line(), "status=lo"));

    CHECK(run("solve --avoid mon-path:3:1 --colors 3 --ledger led", tmp.path).code == 2);
    CHECK(run("solve --avoid mon-path:3:1 --ledger /proc/forbidden/x", tmp.path).code == 3);
}

TEST_CASE("cli ledger directory from the environment")
{
    TempDir tmp;
    const std::string cmd = "cd '" + tmp.path.string() + "' && ORDRAM_LEDGER=envled '" ORDRAM_CLI
                            "' solve --avoid mon-path:3:1 --avoid mon-path:3:2 > /dev/null";
    CHECK(std::system(cmd.c_str()) == 0);
    CHECK(fs::exists(tmp.path / "envled" / "results.ledger"));
}

TEST_CASE("cli bound and analyze")
{
    TempDir tmp;
    CHECK(contains(run("bound monotone-cycles 5 5", tmp.path).out, "Exact 26"));
    CHECK(contains(run("bound probabilistic 4 6 2", tmp.path).out, "Lower 8"));
    CHECK(contains(run("bound hyperpath 4 2", tmp.path).out, "Exact 7"));
    CHECK(run("bound nonsense 1", tmp.path).code == 2);
    CHECK(run("bound monotone-cycles 5", tmp.path).code == 2);

    Run r = run("analyze mon-path:6", tmp.path);
    CHECK(contains(r.out, "bandwidth 1\n"));
    CHECK(contains(r.out, "degeneracy 1\n"));
    CHECK(contains(r.out, "interval-chromatic 6\n"));
    CHECK(contains(run("analyze alt-path:8", tmp.path).out, "interval-chromatic 2\n"));
    r = run("analyze mon-cycle:5", tmp.path);
    CHECK(contains(r.out, "degeneracy 2\n"));
    CHECK(contains(r.out, "bandwidth 4\n"));

    save_og(tmp.path / "g.og", alternating_path(5));
    CHECK(contains(run("analyze g.og", tmp.path).out, "n 5\n"));
    std::ofstream(tmp.path / "bad.og") << "og 2 1\n1 3\n";
    CHECK(run("analyze bad.og", tmp.path).code == 2);
}
