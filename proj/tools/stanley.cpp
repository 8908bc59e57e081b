// stanley: command-line front end for quasi-depth, exact Stanley depth and
// ideals of independent sets.

#include "stanley/error.hpp"
#include "stanley/fixtures.hpp"
#include "stanley/independence.hpp"
#include "stanley/io.hpp"
#include "stanley/qdepth.hpp"
#include "stanley/reference_instances.hpp"
#include "stanley/scan.hpp"
#include "stanley/sdepth.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <csignal>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace stanley;
using Json = nlohmann::ordered_json;

constexpr const char* kSchema = "stanley.report/1";
constexpr int kMaxLattice = 24;

enum Exit { ok = 0, usage = 1, precondition = 2, undecided = 3 };

std::atomic<bool> g_interrupted{false};

extern "C" void on_sigint(int)
{
    g_interrupted.store(true);
}

struct RunConfig {
    double budget = kDefaultBudgetSeconds;
    unsigned threads = 1;
    int max_n = kMaxLattice;
    bool json = false;
    bool witness = false;
    bool timing = false;
};

Json labeled(Json value, const char* origin)
{
    Json j;
    j["value"] = std::move(value);
    j["origin"] = origin;
    return j;
}

Json to_json(const std::vector<BigInt>& values)
{
    Json out = Json::array();
    for (const BigInt& v : values) {
        // Exact values can outgrow int64; fall back to a decimal string.
        if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
            out.push_back(static_cast<std::int64_t>(v));
        else
            out.push_back(v.str());
    }
    return out;
}

std::string join(const std::vector<std::uint64_t>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + std::to_string(v[i]);
    return s + ")";
}

std::string join(const std::vector<BigInt>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + v[i].str();
    return s + ")";
}

Json sets_json(const std::vector<VarSet>& sets)
{
    Json out = Json::array();
    for (const VarSet& s : sets)
        out.push_back(s.positions());
    return out;
}

// Values recorded alongside the built-in reference instances. They are not
// computed here; the report marks them with origin "paper".
struct KnownDepth {
    std::string_view text;
    int depth;
    const char* label;
};

std::optional<KnownDepth> known_quotient_depth(const MonomialIdeal& ideal)
{
    static const MonomialIdeal duval = parse_ideal(reference::duval16_ideal).ideal;
    if (ideal == duval)
        return KnownDepth{reference::duval16_ideal, 4, "duval16"};
    return std::nullopt;
}

struct Module {
    SubsetFamily family;
    std::string description;
    int n = 0;
    std::optional<MonomialIdeal> quotient_of;
};

Module load_module(const std::string& first, const std::optional<std::string>& second, bool ideal_only,
                   const RunConfig& cfg)
{
    const LatticeLimits limits{cfg.max_n};
    const IdealFile J = read_ideal_file(first);
    Module m;
    m.n = J.ideal.n();
    if (second) {
        if (ideal_only)
            throw PreconditionError("--ideal takes a single ideal file");
        const IdealFile I = read_ideal_file(*second);
        m.family = poset_of_subquotient(J.ideal, I.ideal, limits);
        m.description = "J/I";
    } else if (ideal_only) {
        m.family = poset_of_ideal(J.ideal, limits);
        m.description = "I";
    } else {
        m.family = poset_of_quotient(J.ideal, limits);
        m.description = "S/I";
        m.quotient_of = J.ideal;
    }
    return m;
}

Json inputs_json(const std::string& first, const std::optional<std::string>& second, const Module& m)
{
    Json j;
    j["module"] = m.description;
    j["files"] = second ? Json::array({first, *second}) : Json::array({first});
    j["n"] = m.n;
    j["poset_size"] = m.family.size();
    return j;
}

void print_json(const Json& j)
{
    std::cout << j.dump(2) << '\n';
}

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int cmd_qdepth(const std::string& first, const std::optional<std::string>& second, bool ideal_only,
               const RunConfig& cfg)
{
    const auto start = std::chrono::steady_clock::now();
    const Module m = load_module(first, second, ideal_only, cfg);
    const AlphaVector a = alpha_vector(m.family);
    const QDepth q = qdepth(a);

    Json j;
    j["schema"] = kSchema;
    j["command"] = "qdepth";
    j["inputs"] = inputs_json(first, second, m);
    j["alpha"] = labeled(a.counts, "enumeration");
    j["qdepth"] = labeled(q.value, "enumeration");
    j["empty_module"] = q.empty_module;
    Json profiles = Json::array();
    std::optional<BetaProfile> failing;
    for (int d : {q.value, q.value + 1}) {
        if (d > m.n)
            continue;
        BetaProfile p = beta_profile(a, d);
        Json pj;
        pj["d"] = d;
        pj["beta"] = to_json(p.betas);
        pj["nonnegative"] = p.nonnegative();
        if (auto k = p.first_negative())
            pj["first_negative"] = *k;
        else
            pj["first_negative"] = nullptr;
        profiles.push_back(pj);
        if (!p.nonnegative())
            failing = std::move(p);
    }
    j["beta_profiles"] = labeled(profiles, "enumeration");
    j["sdepth_upper_bound"] = labeled(q.value, "bound");
    std::optional<KnownDepth> known;
    if (m.quotient_of)
        known = known_quotient_depth(*m.quotient_of);
    if (known) {
        Json d;
        d["value"] = known->depth;
        d["origin"] = "paper";
        d["instance"] = known->label;
        j["depth"] = d;
    }
    if (cfg.timing)
        j["seconds"] = seconds_since(start);

    if (cfg.json) {
        print_json(j);
        return ok;
    }
    std::cout << "module: " << m.description << " over " << m.n << " variables, " << m.family.size()
              << " poset elements\n";
    std::cout << "alpha: " << join(a.counts) << "\n";
    if (q.empty_module)
        std::cout << "qdepth: " << q.value << " (zero module: every beta vanishes, qdepth = n by convention)\n";
    else
        std::cout << "qdepth: " << q.value << "\n";
    for (int d : {q.value, q.value + 1}) {
        if (d > m.n)
            continue;
        BetaProfile p = beta_profile(a, d);
        std::cout << "beta at d=" << d << ": " << join(p.betas);
        if (auto k = p.first_negative())
            std::cout << "  first negative: beta_" << *k << " = " << p.betas[static_cast<std::size_t>(*k)].str();
        std::cout << "\n";
    }
    std::cout << "sdepth <= qdepth = " << q.value << " (bound)\n";
    if (known) {
        std::cout << "depth: " << known->depth << " (recorded value for " << known->label << ", not computed)\n";
        std::cout << "qdepth " << q.value << (q.value < known->depth ? " < " : " >= ") << "depth " << known->depth
                  << "\n";
    }
    if (cfg.timing)
        std::cout << "time: " << seconds_since(start) << " s\n";
    return ok;
}

const char* to_string(SearchStatus s)
{
    switch (s) {
    case SearchStatus::found:
        return "found";
    case SearchStatus::none:
        return "none";
    case SearchStatus::undecided:
        return "undecided";
    }
    return "?";
}

const char* to_string(DepthStatus s)
{
    switch (s) {
    case DepthStatus::decided:
        return "decided";
    case DepthStatus::undecided:
        return "undecided";
    case DepthStatus::empty:
        return "empty";
    }
    return "?";
}

SearchOptions search_options(const RunConfig& cfg)
{
    SearchOptions o;
    o.budget_seconds = cfg.budget;
    o.threads = cfg.threads;
    o.cancel = &g_interrupted;
    return o;
}

int cmd_sdepth(const std::string& first, const std::optional<std::string>& second, bool ideal_only,
               const RunConfig& cfg)
{
    const auto start = std::chrono::steady_clock::now();
    const Module m = load_module(first, second, ideal_only, cfg);
    const QDepth q = qdepth(alpha_vector(m.family));
    const SDepthResult r = sdepth(m.family, search_options(cfg));

    Json j;
    j["schema"] = kSchema;
    j["command"] = "sdepth";
    j["inputs"] = inputs_json(first, second, m);
    j["budget_seconds"] = cfg.budget;
    j["qdepth"] = labeled(q.value, "enumeration");
    j["status"] = to_string(r.status);
    switch (r.status) {
    case DepthStatus::decided:
        j["sdepth"] = labeled(r.value, "search");
        break;
    case DepthStatus::undecided:
        j["sdepth"] = nullptr;
        j["sdepth_upper_bound"] = labeled(r.value, "bound");
        break;
    case DepthStatus::empty:
        j["sdepth"] = labeled(r.value, "closed-form");
        break;
    }
    j["start_level"] = r.start;
    Json levels = Json::array();
    for (const LevelOutcome& l : r.levels) {
        Json lj;
        lj["d"] = l.d;
        lj["status"] = to_string(l.status);
        lj["nodes"] = l.nodes;
        if (cfg.timing)
            lj["seconds"] = l.seconds;
        levels.push_back(lj);
    }
    j["levels"] = levels;
    if (cfg.witness && r.status == DepthStatus::decided)
        j["witness"] = Json::parse(witness_to_json(r.witness));
    if (cfg.timing)
        j["seconds"] = seconds_since(start);

    const int code = r.status == DepthStatus::undecided ? undecided : ok;
    if (cfg.json) {
        print_json(j);
        return code;
    }
    std::cout << "module: " << m.description << " over " << m.n << " variables, " << m.family.size()
              << " poset elements\n";
    std::cout << "qdepth: " << q.value << " (upper bound for sdepth)\n";
    for (const LevelOutcome& l : r.levels)
        std::cout << "  d=" << l.d << ": " << to_string(l.status) << " (" << l.nodes << " nodes, " << l.seconds
                  << " s)\n";
    switch (r.status) {
    case DepthStatus::decided:
        std::cout << "sdepth: " << r.value << " (exact, search)\n";
        break;
    case DepthStatus::undecided:
        std::cout << "sdepth: undecided (budget " << cfg.budget << " s exhausted at d=" << r.value
                  << "; sdepth <= " << r.value << ")\n";
        break;
    case DepthStatus::empty:
        std::cout << "sdepth: " << r.value << " (zero module, convention)\n";
        break;
    }
    if (cfg.witness && r.status == DepthStatus::decided)
        std::cout << "witness: " << witness_to_json(r.witness) << "\n";
    if (cfg.timing)
        std::cout << "time: " << seconds_since(start) << " s\n";
    return code;
}

int cmd_poset(const std::string& first, const std::optional<std::string>& second, bool ideal_only,
              const RunConfig& cfg)
{
    const Module m = load_module(first, second, ideal_only, cfg);
    const std::vector<VarSet> members = m.family.members();
    if (cfg.json) {
        Json j;
        j["schema"] = kSchema;
        j["command"] = "poset";
        j["inputs"] = inputs_json(first, second, m);
        j["alpha"] = labeled(alpha_vector(m.family).counts, "enumeration");
        j["members"] = sets_json(members);
        print_json(j);
        return ok;
    }
    std::cout << "# " << m.description << " over " << m.n << " variables, " << members.size() << " elements\n";
    std::cout << "# alpha: " << join(alpha_vector(m.family).counts) << "\n";
    for (const VarSet& s : members)
        std::cout << s.to_string() << "\n";
    return ok;
}

int cmd_indep(const std::string& path, bool search, const std::optional<std::string>& ideal_out,
              const RunConfig& cfg)
{
    const auto start = std::chrono::steady_clock::now();
    const Graph g = read_graph_file(path);
    if (2 * g.n() > cfg.max_n)
        throw ResourceLimitError("graph on " + std::to_string(g.n()) + " vertices needs a 2^" +
                                 std::to_string(2 * g.n()) + " lattice; --max-n is " + std::to_string(cfg.max_n));
    const IndependenceIdealData data = independence_ideal(g);
    const IdealInvariants inv = invariants(data);
    const std::vector<VarSet> order = sort_generators(data.ideal.generators(), g.n());
    const LinearQuotientsCheck lq = linear_quotients_check(data);
    const int gam = gamma(data);

    if (ideal_out) {
        std::ofstream out(*ideal_out);
        if (!out)
            throw Error("cannot write '" + *ideal_out + "'");
        out << format_ideal(MonomialIdeal(data.ideal), VariableScheme::st);
    }

    std::optional<SandwichReport> report;
    if (search) {
        SandwichOptions opts;
        opts.search = search_options(cfg);
        opts.limits = LatticeLimits{cfg.max_n};
        report = sandwich_report(g, opts);
    }

    Json j;
    j["schema"] = kSchema;
    j["command"] = "indep";
    j["inputs"] = {{"file", path}, {"graph_key", graph_key(g)}, {"n", g.n()}, {"edges", g.edges()}};
    j["independent_sets"] = labeled(sets_json(data.ind_sets), "enumeration");
    Json gens = Json::array();
    for (const VarSet& u : order)
        gens.push_back(monomial_to_string(u, VariableScheme::st));
    j["generators"] = labeled(gens, "enumeration");
    j["linear_quotients"] = labeled(lq.ok, "enumeration");
    j["alpha"] = labeled(data.alpha, "enumeration");
    j["g"] = labeled(data.g, "enumeration");
    j["reg"] = labeled(inv.reg, "closed-form");
    j["betti"] = labeled(inv.betti, "closed-form");
    j["pd"] = labeled(inv.pd, "closed-form");
    j["dim"] = labeled(inv.dim, "closed-form");
    j["depth"] = labeled(inv.depth, "closed-form");
    j["cohen_macaulay"] = labeled(inv.cohen_macaulay, "closed-form");
    j["gamma"] = labeled(gam, "closed-form");
    int code = ok;
    if (report) {
        j["qdepth"] = labeled(report->qdepth, "enumeration");
        j["budget_seconds"] = cfg.budget;
        j["sdepth_status"] = to_string(report->sdepth_status);
        if (report->sdepth_status == DepthStatus::decided)
            j["sdepth"] = labeled(report->sdepth, report->shortcut ? "closed-form" : "search");
        else
            j["sdepth"] = nullptr;
        j["shortcut_applicable"] = report->shortcut_applicable;
        j["conjecture"] = std::string(to_string(report->conjecture));
        if (cfg.witness && report->sdepth_status == DepthStatus::decided && !report->shortcut)
            j["witness"] = Json::parse(witness_to_json(report->witness));
        if (report->sdepth_status == DepthStatus::undecided)
            code = undecided;
    }
    if (cfg.timing)
        j["seconds"] = seconds_since(start);

    if (cfg.json) {
        print_json(j);
        return code;
    }
    std::cout << "graph: n=" << g.n() << ", " << g.edges().size() << " edges, key " << graph_key(g) << "\n";
    std::cout << "independent sets (" << data.ind_sets.size() << "):";
    for (const VarSet& s : data.ind_sets)
        std::cout << " " << s.to_string();
    std::cout << "\ngenerators in order:\n";
    for (std::size_t i = 0; i < order.size(); ++i)
        std::cout << "  m" << i + 1 << " = " << monomial_to_string(order[i], VariableScheme::st) << "\n";
    std::cout << "linear quotients: " << (lq.ok ? "yes" : "no (first failure at m" + std::to_string(lq.first_failure) + ")")
              << "\n";
    std::cout << "alpha(G) = " << data.alpha << ", g = " << data.g << "\n";
    std::cout << "closed forms: reg " << inv.reg << ", pd " << inv.pd << ", dim " << inv.dim << ", depth "
              << inv.depth << ", Cohen-Macaulay " << (inv.cohen_macaulay ? "yes" : "no") << ", betti "
              << join(inv.betti) << "\n";
    std::cout << "gamma: " << gam << "\n";
    if (report) {
        std::cout << "qdepth: " << report->qdepth << "\n";
        if (report->sdepth_status == DepthStatus::decided)
            std::cout << "sdepth: " << report->sdepth << (report->shortcut ? " (closed form, C(2n-1,n) < g)" : " (exact, search)")
                      << "\n";
        else
            std::cout << "sdepth: undecided (budget " << cfg.budget << " s)\n";
        std::cout << "depth <= sdepth <= gamma: " << report->depth << " <= "
                  << (report->sdepth_status == DepthStatus::decided ? std::to_string(report->sdepth) : "?") << " <= "
                  << report->gamma << "\n";
        std::cout << "sdepth = gamma: " << to_string(report->conjecture) << "\n";
        if (cfg.witness && report->sdepth_status == DepthStatus::decided && !report->shortcut)
            std::cout << "witness: " << witness_to_json(report->witness) << "\n";
    }
    if (cfg.timing)
        std::cout << "time: " << seconds_since(start) << " s\n";
    return code;
}

int cmd_gamma(const std::string& path, const RunConfig& cfg)
{
    const Graph g = read_graph_file(path);
    const IndependenceIdealData data = independence_ideal(g);
    const IdealInvariants inv = invariants(data);
    const int gam = gamma(data);
    const bool shortcut = binomial(2 * g.n() - 1, g.n()) < BigInt(data.g);
    if (cfg.json) {
        Json j;
        j["schema"] = kSchema;
        j["command"] = "gamma";
        j["inputs"] = {{"file", path}, {"graph_key", graph_key(g)}, {"n", g.n()}, {"edges", g.edges()}};
        j["g"] = labeled(data.g, "enumeration");
        j["alpha"] = labeled(data.alpha, "enumeration");
        j["gamma"] = labeled(gam, "closed-form");
        j["depth"] = labeled(inv.depth, "closed-form");
        j["dim"] = labeled(inv.dim, "closed-form");
        j["sdepth_lower_bound"] = labeled(inv.depth, "bound");
        j["sdepth_upper_bound"] = labeled(gam, "bound");
        j["shortcut_applicable"] = shortcut;
        print_json(j);
        return ok;
    }
    std::cout << "n = " << g.n() << ", alpha(G) = " << data.alpha << ", g = " << data.g << "\n";
    std::cout << "gamma = max{d : C(3n-d-1, n) >= g} = " << gam << "\n";
    std::cout << "depth " << inv.depth << " <= sdepth <= gamma " << gam << " <= dim " << inv.dim << "\n";
    if (shortcut)
        std::cout << "C(2n-1, n) < g, so sdepth = n - 1 = " << g.n() - 1 << "\n";
    return ok;
}

int cmd_scan(const std::string& family_name, int n_min, int n_max, const std::optional<std::string>& output,
             bool resume, bool no_dedup, bool no_search, const RunConfig& cfg)
{
    const auto family = parse_scan_family(family_name);
    if (!family)
        throw CLI::ValidationError("--family", "unknown family '" + family_name +
                                                   "' (all, complete, cycle, path, discrete)");
    if (n_min < 1 || n_max < n_min)
        throw CLI::ValidationError("--n-min/--n-max", "need 1 <= n-min <= n-max");
    if (family->kind == ScanFamily::Kind::all && n_max > 7)
        throw ResourceLimitError("scanning all graphs is limited to n <= 7");
    if (2 * n_max > cfg.max_n)
        throw ResourceLimitError("n-max " + std::to_string(n_max) + " needs a 2^" + std::to_string(2 * n_max) +
                                 " lattice; --max-n is " + std::to_string(cfg.max_n));

    ScanConfig sc;
    sc.family = *family;
    sc.n_min = n_min;
    sc.n_max = n_max;
    sc.dedup = !no_dedup;
    sc.threads = cfg.threads;
    sc.sandwich.search.budget_seconds = no_search ? 0.0 : cfg.budget;
    sc.sandwich.limits = LatticeLimits{cfg.max_n};

    std::set<std::string> skip;
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (output) {
        const bool exists = std::filesystem::exists(*output);
        if (exists && !resume)
            throw PreconditionError("output '" + *output + "' exists; pass --resume to continue it");
        if (exists) {
            std::ifstream in(*output);
            skip = read_scan_keys(in);
            // An interrupted writer can leave a torn last line; start appending on a fresh one.
            in.clear();
            in.seekg(0, std::ios::end);
            if (in.tellg() > 0) {
                in.seekg(-1, std::ios::end);
                char last = '\n';
                in.get(last);
                file.open(*output, std::ios::app);
                if (last != '\n')
                    file << '\n';
            } else {
                file.open(*output, std::ios::app);
            }
        } else {
            file.open(*output);
        }
        if (!file)
            throw Error("cannot write '" + *output + "'");
        out = &file;
    } else if (resume) {
        throw CLI::ValidationError("--resume", "needs --output");
    }

    std::signal(SIGINT, on_sigint);
    const ScanSummary s = run_scan(sc, skip, *out, &g_interrupted);
    out->flush();

    std::ostream& log = output ? std::cout : std::cerr;
    if (cfg.json && output) {
        Json j;
        j["schema"] = kSchema;
        j["command"] = "scan";
        j["evaluated"] = s.evaluated;
        j["skipped"] = s.skipped;
        j["holds"] = s.holds;
        j["fails"] = s.fails;
        j["undecided"] = s.undecided;
        j["interrupted"] = s.interrupted;
        log << j.dump(2) << "\n";
    } else {
        log << "scan: " << s.evaluated << " evaluated, " << s.skipped << " skipped, " << s.holds << " holds, "
            << s.fails << " fails, " << s.undecided << " undecided" << (s.interrupted ? ", interrupted" : "")
            << "\n";
    }
    if (s.interrupted)
        return undecided;
    return s.undecided > 0 ? undecided : ok;
}

int cmd_check_examples(const RunConfig& cfg)
{
    SearchOptions search;
    search.budget_seconds = cfg.budget;
    search.threads = cfg.threads;
    const auto results = run_fixtures(builtin_fixtures(search));
    bool all = true;
    for (const auto& r : results)
        all = all && r.passed;
    if (cfg.json) {
        Json j;
        j["schema"] = kSchema;
        j["command"] = "check-examples";
        Json rows = Json::array();
        for (const auto& r : results) {
            Json row;
            row["name"] = r.name;
            row["passed"] = r.passed;
            if (!r.passed) {
                row["expected"] = r.expected;
                row["actual"] = r.actual;
                if (!r.error.empty())
                    row["error"] = r.error;
            }
            rows.push_back(row);
        }
        j["fixtures"] = rows;
        j["passed"] = all;
        print_json(j);
    } else {
        for (const auto& r : results) {
            std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << "\n";
            if (!r.passed) {
                if (!r.error.empty())
                    std::cout << "  error:    " << r.error << "\n";
                std::cout << "  expected: " << r.expected << "\n  actual:   " << r.actual << "\n";
            }
        }
    }
    return all ? ok : precondition;
}

int default_max_n()
{
    if (const char* env = std::getenv("STANLEY_MAX_N")) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(env, &used);
            if (used == std::string_view(env).size())
                return v;
        } catch (const std::exception&) {
        }
        throw CLI::ValidationError("STANLEY_MAX_N", std::string("not an integer: '") + env + "'");
    }
    return kMaxLattice;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Quasi-depth, exact Stanley depth and ideals of independent sets"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::optional<int> max_n;
    app.add_flag("--json", cfg.json, "Machine-readable JSON output");
    app.add_option("--budget", cfg.budget, "Wall-clock budget for exact search, seconds")
        ->check(CLI::PositiveNumber);
    app.add_option("--threads", cfg.threads, "Worker threads for exact search and scans")->check(CLI::Range(1U, 1024U));
    app.add_option("--max-n", max_n, "Largest lattice 2^n to enumerate (<= 24; default $STANLEY_MAX_N or 24)");
    app.add_flag("--timing", cfg.timing, "Include wall-clock timings");

    std::string first;
    std::optional<std::string> second;
    bool ideal_only = false;
    auto add_ideal_args = [&](CLI::App* sub) {
        sub->add_option("J", first, "Ideal file (the larger ideal J, or I for S/I)")->required()->check(CLI::ExistingFile);
        sub->add_option("I", second, "Optional subideal file: the module is J/I")->check(CLI::ExistingFile);
        sub->add_flag("--ideal", ideal_only, "Use the poset of the ideal itself instead of S/I");
    };

    auto* qd = app.add_subcommand("qdepth", "alpha vector, qdepth and beta profiles of S/I, I or J/I");
    add_ideal_args(qd);
    auto* sd = app.add_subcommand("sdepth", "Exact Stanley depth by interval-partition search");
    add_ideal_args(sd);
    sd->add_flag("--witness", cfg.witness, "Print the interval partition attaining sdepth");
    auto* po = app.add_subcommand("poset", "List the poset P_{S/I}, P_I or P_{J/I}");
    add_ideal_args(po);

    std::string graph_path;
    bool no_search = false;
    std::optional<std::string> ideal_out;
    auto* in = app.add_subcommand("indep", "Ideal of independent sets of a graph: invariants, gamma, sdepth");
    in->add_option("graph", graph_path, "Graph file")->required()->check(CLI::ExistingFile);
    in->add_flag("--no-search", no_search, "Closed forms only; skip the exact sdepth search");
    in->add_flag("--witness", cfg.witness, "Print the interval partition attaining sdepth");
    in->add_option("--write-ideal", ideal_out, "Also write the ideal in s,t file format");
    auto* ga = app.add_subcommand("gamma", "gamma(G) and the depth/sdepth sandwich from closed forms");
    ga->add_option("graph", graph_path, "Graph file")->required()->check(CLI::ExistingFile);

    std::string family = "all";
    int n_min = 1, n_max = 4;
    std::optional<std::string> output;
    bool resume = false, no_dedup = false;
    auto* sc = app.add_subcommand("scan", "Evaluate sdepth = gamma over a graph family, one JSON line per graph");
    sc->add_option("--family", family, "all, complete, cycle, path or discrete")->capture_default_str();
    sc->add_option("--n-min", n_min, "Smallest vertex count")->capture_default_str();
    sc->add_option("--n-max", n_max, "Largest vertex count")->capture_default_str();
    sc->add_option("--output,-o", output, "JSON-lines output file (default stdout)");
    sc->add_flag("--resume", resume, "Append to --output, skipping graphs already recorded");
    sc->add_flag("--no-dedup", no_dedup, "Keep isomorphic copies when enumerating all graphs");
    sc->add_flag("--no-search", no_search, "Closed forms only; every record is undecided unless the shortcut applies");

    auto* ce = app.add_subcommand("check-examples", "Run the built-in reference fixtures");

    for (CLI::App* sub : {qd, sd, po, in, ga, sc, ce})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
        cfg.max_n = max_n ? *max_n : default_max_n();
        if (cfg.max_n < 0 || cfg.max_n > kMaxLattice)
            throw CLI::ValidationError("--max-n", "must be in 0.." + std::to_string(kMaxLattice));
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : usage;
    }

    try {
        if (*qd)
            return cmd_qdepth(first, second, ideal_only, cfg);
        if (*sd)
            return cmd_sdepth(first, second, ideal_only, cfg);
        if (*po)
            return cmd_poset(first, second, ideal_only, cfg);
        if (*in)
            return cmd_indep(graph_path, !no_search, ideal_out, cfg);
        if (*ga)
            return cmd_gamma(graph_path, cfg);
        if (*sc)
            return cmd_scan(family, n_min, n_max, output, resume, no_dedup, no_search, cfg);
        if (*ce)
            return cmd_check_examples(cfg);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return usage;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return precondition;
    } catch (const ResourceLimitError& e) {
        std::cerr << "limit: " << e.what() << "\n";
        return precondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return precondition;
    }
    return usage;
}
