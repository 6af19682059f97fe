#include "ordram/analysis.hpp"
#include "ordram/bounds.hpp"
#include "ordram/constructions.hpp"
#include "ordram/error.hpp"
#include "ordram/io.hpp"
#include "ordram/ledger.hpp"
#include "ordram/patterns.hpp"
#include "ordram/solver.hpp"
#include "ordram/version.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>

using namespace ordram;

namespace {

enum Exit { kOk = 0, kViolation = 1, kUsage = 2, kIo = 3 };

void need(const std::vector<int>& p, std::size_t count, const std::string& what)
{
    if (p.size() != count)
        throw ParameterError("params", what + " takes " + std::to_string(count) + " parameter(s), got " + std::to_string(p.size()));
}

void need_some(const std::vector<int>& p, const std::string& what)
{
    if (p.empty()) throw ParameterError("params", what + " needs at least one parameter");
}

std::string join(const Embedding& e)
{
    std::string s = "[";
    for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
    return s + "]";
}

void print_demand_list(const std::vector<Demand>& demands)
{
    for (const Demand& d : demands) {
        std::cout << "avoid color=" << d.color << " n=" << d.pattern.order() << " edges=";
        for (std::size_t i = 0; i < d.pattern.edges().size(); ++i) {
            const Edge& e = d.pattern.edges()[i];
            std::cout << (i ? "," : "") << e.u << "-" << e.v;
        }
        std::cout << "\n";
    }
}

int construct(const std::string& name, const std::vector<int>& p, const std::string& out)
{
    CertifiedColoring c;
    if (name == "monotone-cycle") {
        need(p, 2, name);
        c = monotone_cycle_construction(p[0], p[1]);
    } else if (name == "alt-parity") {
        need(p, 1, name);
        c = alternating_parity(p[0]);
    } else if (name == "star") {
        need_some(p, name);
        c = star_coloring(p);
    } else if (name == "mon-path-grid") {
        need_some(p, name);
        c = monotone_path_grid(p);
    } else if (name == "star-blowup") {
        need(p, 3, name);
        c = star_blowup(p[0], p[1], p[2]);
    } else if (name == "matching") {
        need(p, 2, name);
        if (p[0] != 3) throw ParameterError("r", "a base colouring is only available for r = 3");
        c = matching_construction(p[0], p[1], pentagon_coloring()).coloring;
    } else if (name == "pentagon") {
        need(p, 0, name);
        c = {pentagon_coloring(), {{OrderedGraph(3, {{1, 2}, {1, 3}, {2, 3}}), kRed}, {OrderedGraph(3, {{1, 2}, {1, 3}, {2, 3}}), kBlue}}, "pentagon"};
    } else {
        std::cerr << "error: unknown construction '" << name << "'\n";
        return kUsage;
    }
    save_oc(out, c.coloring);
    const bool ok = c.certify();
    std::cout << "construction " << c.provenance << "\n"
              << "N=" << c.coloring.order() << " colors=" << c.coloring.colors() << "\n";
    print_demand_list(c.avoided);
    std::cout << "certificate " << (ok ? "verified" : "FAILED") << "\n"
              << "wrote " << out << "\n";
    return ok ? kOk : kViolation;
}

int verify(const std::string& path, const std::vector<std::string>& specs)
{
    std::vector<Demand> demands;
    for (const auto& s : specs) demands.push_back(parse_demand(s));
    const EdgeColoring c = load_oc(path);
    for (const Demand& d : demands)
        if (d.color > c.colors()) throw ParameterError("color", "colour " + std::to_string(d.color) + " not used by the file");
    const AvoidReport r = avoids(c, demands);
    if (r.avoiding) {
        std::cout << "avoiding N=" << c.order() << " demands=" << demands.size() << "\n";
        return kOk;
    }
    std::cout << "violation demand=" << r.demand + 1 << " color=" << demands[r.demand].color << " embedding=" << join(r.violation)
              << "\n";
    return kViolation;
}

struct SolveArgs {
    std::vector<std::string> avoid;
    int colors = 0;
    int start = 0;
    int max_n = kMaxSolverOrder;
    double seconds = 0;
    std::uint64_t nodes = 0;
    int threads = 1;
    std::string engine = "auto";
    std::string ledger;
    bool force = false;
    bool seed = false;
};

std::filesystem::path ledger_dir(const std::string& flag)
{
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("ORDRAM_LEDGER"); env && *env) return env;
    return "ordram-ledger";
}

int solve(const SolveArgs& a)
{
    std::vector<Demand> demands;
    for (const auto& s : a.avoid) demands.push_back(parse_demand(s));
    if (demands.empty()) throw ParameterError("avoid", "at least one --avoid is required");
    const int colors = std::max(a.colors, demand_colors(demands));
    // a colour without demands makes every N colourable
    if (colors > demand_colors(demands)) throw ParameterError("colors", "every colour needs a demand");

    const Ledger ledger(ledger_dir(a.ledger));
    const std::string digest = demand_digest(demands, colors);
    if (!a.force)
        if (auto hit = ledger.find_exact(digest)) {
            std::cout << "cached Exact " << hit->n << "\n"
                      << "witness " << (ledger.dir() / hit->witness).string() << "\n";
            return kOk;
        }

    SolveOptions o;
    o.threads = a.threads;
    o.engine = a.engine == "search" ? Engine::Search : a.engine == "clauses" ? Engine::Clauses : Engine::Auto;
    o.budget.max_seconds = a.seconds;
    o.budget.max_nodes = a.nodes;
    o.max_order = a.max_n;
    o.use_oracle_seed = a.seed;
    const RamseyResult r = ramsey_number(demands, a.start > 0 ? std::optional<int>(a.start) : std::nullopt, o);

    for (const auto& s : r.steps)
        std::cout << "N=" << s.n << " " << to_string(s.verdict) << " nodes=" << s.nodes << " seconds=" << s.seconds << "\n";
    if (r.exact)
        std::cout << "Exact " << r.value << "\n";
    else
        std::cout << "Bounds " << r.lo << " <= R <= " << (r.hi ? std::to_string(*r.hi) : "inf")
                  << (r.hi ? " (" + r.hi_source + ")" : "") << "\n";

    ledger.ensure();
    LedgerEntry e;
    e.digest = digest;
    e.n = r.exact ? r.value : r.lo;
    e.exact = r.exact;
    e.nodes = r.stats.nodes;
    e.seconds = r.stats.seconds;
    e.witness = Ledger::witness_name(digest);
    e.version = kVersion;
    save_oc(ledger.dir() / e.witness, *r.witness);
    ledger.append(e);
    std::cout << "witness " << (ledger.dir() / e.witness).string() << "\n";
    return kOk;
}

void print_bound(const std::string& label, const BoundValue& b)
{
    std::cout << (label.empty() ? "" : label + " ") << b.to_string() << "  [" << b.source << "]\n";
}

int bound(const std::string& family, const std::vector<int>& p)
{
    if (family == "monotone-paths") {
        need_some(p, family);
        print_bound("", monotone_paths_exact(p));
    } else if (family == "stars") {
        need_some(p, family);
        print_bound("", stars_multicolor_exact(p));
    } else if (family == "star-pair") {
        need(p, 4, family);
        print_bound("", stars_pair_exact(p[0], p[1], p[2], p[3]));
    } else if (family == "monotone-cycles") {
        need(p, 2, family);
        print_bound("", monotone_cycles_exact(p[0], p[1]));
    } else if (family == "geometric-cycle") {
        need(p, 1, family);
        print_bound("", geometric_cycle_exact(p[0]));
    } else if (family == "path-vs-clique") {
        need(p, 2, family);
        print_bound("", path_vs_clique_exact(p[0], p[1]));
    } else if (family == "alt-path") {
        need(p, 1, family);
        const AltPathBounds b = alt_path_bounds(p[0]);
        print_bound("lower", b.lower);
        print_bound("upper", b.upper);
        print_bound("upper-tight", b.upper_tight);
        print_bound("conjectured", b.conjectured);
    } else if (family == "probabilistic") {
        need(p, 3, family);
        print_bound("", probabilistic_lower(p[0], p[1], p[2]));
    } else if (family == "star-blowup") {
        need(p, 3, family);
        print_bound("", star_blowup_lower(p[0], p[1], p[2]));
    } else if (family == "decomposable") {
        need(p, 4, family);
        print_bound("", decomposable_upper(p[0], p[1], p[2], p[3], 1));
        std::cout << "(constant C_k taken as 1)\n";
    } else if (family == "bandwidth") {
        need(p, 2, family);
        print_bound("", bandwidth_upper(p[0], p[1], 1));
        std::cout << "(constant C_k taken as 1)\n";
    } else if (family == "degenerate") {
        need(p, 3, family);
        print_bound("", degenerate_upper(p[0], p[1], p[2]));
    } else if (family == "hyperpath") {
        need(p, 2, family);
        print_bound("", hyperpath_exact(p[0], p[1]));
    } else if (family == "matching") {
        need(p, 1, family);
        const MatchingLowerBound m = matching_lb_params(p[0], isqrt(ipow(2, static_cast<unsigned>(p[0]))));
        std::cout << "r=" << p[0] << " applicable=" << (m.applicable ? "yes" : "no") << " k=" << m.k
                  << " c=" << m.c << " n_k=" << to_string(m.n) << " N=" << to_string(m.N) << " margin=" << m.margin
                  << " holds=" << (m.inequality_holds ? "yes" : "no") << "\n";
    } else {
        std::cerr << "error: unknown family '" << family << "'\n";
        return kUsage;
    }
    return kOk;
}

int analyze(const std::string& input)
{
    const bool is_file = input.find(':') == std::string::npos;
    const OrderedGraph g = is_file ? load_og(input) : parse_pattern(input);
    std::map<int, int> histogram;
    for (int l : edge_lengths(g)) ++histogram[l];
    const int bw = bandwidth(g);
    const Degeneracy deg = degeneracy(g);
    const int k = std::max(1, bw);
    std::cout << "n " << g.order() << "\n"
              << "m " << g.edge_count() << "\n"
              << "lengths";
    for (const auto& [length, count] : histogram) std::cout << " " << length << ":" << count;
    std::cout << "\n"
              << "bandwidth " << bw << "\n"
              << "degeneracy " << deg.k << "\n"
              << "interval-chromatic " << interval_chromatic_number(g) << "\n"
              << "decomposable k=" << k << " q=2 " << (is_decomposable(g, k, 2) ? "yes" : "no") << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Ordered Ramsey numbers: constructions, search and bounds"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    std::string name;
    std::vector<int> params;
    std::string out;
    auto* c = app.add_subcommand("construct", "Write a lower-bound colouring as .oc");
    c->add_option("name", name, "monotone-cycle | alt-parity | star | mon-path-grid | star-blowup | matching | pentagon")->required();
    c->add_option("params", params, "Integer parameters");
    c->add_option("--out", out, "Output .oc file")->required();

    std::string path;
    std::vector<std::string> avoid;
    auto* v = app.add_subcommand("verify", "Check a colouring against demands");
    v->add_option("coloring", path, ".oc file")->required();
    v->add_option("--avoid", avoid, "<pattern>:<colour>, repeatable")->required();

    SolveArgs sa;
    auto* s = app.add_subcommand("solve", "Compute R for a demand list by exhaustive search");
    s->add_option("--avoid", sa.avoid, "<pattern>:<colour>, repeatable")->required();
    s->add_option("--colors", sa.colors, "Colour count (default: largest colour used)");
    s->add_option("--start", sa.start, "First N to try");
    s->add_option("--max-n", sa.max_n, "Largest N to try")->check(CLI::Range(1, kMaxSolverOrder));
    s->add_option("--budget-seconds", sa.seconds, "Wall-clock budget over all N");
    s->add_option("--budget-nodes", sa.nodes, "Node budget over all N");
    s->add_option("--threads", sa.threads, "Worker threads for the search engine")->check(CLI::Range(1, 256));
    s->add_option("--engine", sa.engine, "auto, search or clauses")->check(CLI::IsMember({"auto", "search", "clauses"}));
    s->add_option("--ledger", sa.ledger, "Ledger directory (default $ORDRAM_LEDGER or ./ordram-ledger)");
    s->add_flag("--force", sa.force, "Ignore cached results");
    s->add_flag("--seed-oracle", sa.seed, "Start from a known formula lower bound");

    std::string family;
    std::vector<int> bparams;
    auto* b = app.add_subcommand("bound", "Evaluate a bound formula");
    b->add_option("family", family, "monotone-paths | stars | star-pair | monotone-cycles | geometric-cycle | "
                                    "path-vs-clique | alt-path | probabilistic | star-blowup | decomposable | "
                                    "bandwidth | degenerate | hyperpath | matching")
        ->required();
    b->add_option("params", bparams, "Integer parameters");

    std::string input;
    auto* a = app.add_subcommand("analyze", "Structural report for a pattern");
    a->add_option("input", input, ".og file or pattern spec such as alt-path:8")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*c) return construct(name, params, out);
        if (*v) return verify(path, avoid);
        if (*s) return solve(sa);
        if (*b) return bound(family, bparams);
        if (*a) return analyze(input);
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const EnvelopeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    }
    return kUsage;
}
