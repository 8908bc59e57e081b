// Acceptance suite: one PASS/FAIL line per criterion.
//   stanley_acceptance                 run all criteria
//   stanley_acceptance --criterion N   run criterion N only

#include "bruteforce_oracle.hpp"

#include "stanley/binomial.hpp"
#include "stanley/independence.hpp"
#include "stanley/io.hpp"
#include "stanley/qdepth.hpp"
#include "stanley/reference_instances.hpp"
#include "stanley/scan.hpp"
#include "stanley/sdepth.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace stanley;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

double seconds_since(Clock::time_point t)
{
    return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string secs(double t)
{
    std::ostringstream s;
    s.precision(3);
    s << t << " s";
    return s.str();
}

std::string join(const std::vector<std::uint64_t>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return "(" + s + ")";
}

std::string join(const std::vector<BigInt>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + v[i].str();
    return "(" + s + ")";
}

// 1. qdepth of the maximal ideal poset is ceil(n/2) for n = 1..20 in under 1 s.
Outcome maximal_qdepth()
{
    Outcome o;
    const auto start = Clock::now();
    for (int n = 1; n <= 20; ++n) {
        const int q = qdepth(poset_of_ideal(MonomialIdeal::maximal(n))).value;
        o.require(q == (n + 1) / 2, "n=" + std::to_string(n) + " gives " + std::to_string(q));
    }
    const double t = seconds_since(start);
    o.require(t < 1.0, "took " + secs(t) + " (limit 1 s)");
    if (o.pass)
        o.detail = "n=1..20 exact, " + secs(t);
    return o;
}

// 2. Exact sdepth of the maximal ideal is ceil(n/2) for n = 3..8 within 2 minutes.
Outcome maximal_sdepth()
{
    Outcome o;
    const auto start = Clock::now();
    for (int n = 3; n <= 8; ++n) {
        const SubsetFamily P = poset_of_ideal(MonomialIdeal::maximal(n));
        const SDepthResult r = sdepth(P);
        o.require(r.status == DepthStatus::decided, "n=" + std::to_string(n) + " undecided");
        o.require(r.value == (n + 1) / 2, "n=" + std::to_string(n) + " gives " + std::to_string(r.value));
        o.require(r.status != DepthStatus::decided || verify_partition(P, r.witness, r.value).ok,
                  "n=" + std::to_string(n) + " witness invalid");
    }
    const double t = seconds_since(start);
    o.require(t <= 120.0, "took " + secs(t) + " (limit 120 s)");
    if (o.pass)
        o.detail = "n=3..8 exact with verified witnesses, " + secs(t);
    return o;
}

// 3. The 16-variable quotient: alpha by two routes, beta at d = 4, qdepth
// bounds, and an undecided exact search under a 10 s budget.
Outcome duval16()
{
    Outcome o;
    const MonomialIdeal I = parse_ideal(reference::duval16_ideal).ideal;
    const std::vector<std::uint64_t> target{1, 15, 71, 98, 42, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0};
    const AlphaVector a = alpha_vector(poset_of_quotient(I));
    std::vector<std::uint64_t> via_oracle;
    for (int j = 0; j <= 16; ++j)
        via_oracle.push_back(hilbert_alpha_oracle(MonomialIdeal::unit(16), I, j));
    o.require(a.counts == via_oracle, "poset alpha " + join(a.counts) + " != Hilbert alpha " + join(via_oracle));
    o.require(a.counts == target, "alpha is " + join(a.counts) + ", expected " + join(target));

    const BetaProfile p = beta_profile(a, 4);
    o.require(p.betas[3] < 0, "beta at d=4 is " + join(p.betas) + ", expected beta_3 < 0");
    const int q = qdepth(a).value;
    o.require(q <= 3, "qdepth(S/I) = " + std::to_string(q) + ", expected <= 3 < depth 4");
    const int qi = qdepth(poset_of_ideal(I)).value;
    o.require(qi >= 5, "qdepth(I) = " + std::to_string(qi) + ", expected >= 5");

    SearchOptions budget;
    budget.budget_seconds = 10;
    const SDepthResult r = sdepth(poset_of_quotient(I), budget);
    o.require(r.status == DepthStatus::undecided, "exact search decided within 10 s");
    const std::string summary = "qdepth(I) = " + std::to_string(qi) + ", alpha agrees with Hilbert count: " +
                                (a.counts == via_oracle ? "yes" : "no") + ", exact search " +
                                (r.status == DepthStatus::undecided ? "undecided" : "decided") + " under 10 s";
    if (o.pass)
        o.detail = "alpha " + join(a.counts) + ", qdepth " + std::to_string(q) + ", " + summary;
    else
        o.detail += " [" + summary + "]";
    return o;
}

// 4. The 6-variable subquotient: qdepth 4, sdepth 3 with a verified witness, within 10 s.
Outcome duval6()
{
    Outcome o;
    const auto start = Clock::now();
    const MonomialIdeal J = parse_ideal(reference::duval6_outer).ideal;
    const MonomialIdeal I = parse_ideal(reference::duval6_inner).ideal;
    const SubsetFamily P = poset_of_subquotient(J, I);
    const int q = qdepth(P).value;
    o.require(q == 4, "qdepth " + std::to_string(q));
    const SDepthResult r = sdepth(P);
    o.require(r.status == DepthStatus::decided && r.value == 3, "sdepth " + std::to_string(r.value));
    o.require(verify_partition(P, r.witness, 3).ok, "witness rejected");
    const double t = seconds_since(start);
    o.require(t <= 10.0, "took " + secs(t));
    if (o.pass)
        o.detail = "qdepth 4, sdepth 3, witness of " + std::to_string(r.witness.size()) + " intervals, " + secs(t);
    return o;
}

// 5. beta of the full lattice equals C(n+k-d-1, k) for n <= 12, 1 <= d <= n, 0 <= k <= d.
Outcome full_lattice_beta()
{
    Outcome o;
    const auto start = Clock::now();
    int checked = 0;
    for (int n = 1; n <= 12; ++n)
        for (int d = 1; d <= n; ++d) {
            const BetaProfile p = beta_profile(AlphaVector::full_lattice(n), d);
            for (int k = 0; k <= d; ++k, ++checked)
                if (p.betas[static_cast<std::size_t>(k)] != binomial(n + k - d - 1, k))
                    o.require(false, "n=" + std::to_string(n) + " d=" + std::to_string(d) + " k=" + std::to_string(k));
        }
    const double t = seconds_since(start);
    o.require(t < 1.0, "took " + secs(t));
    if (o.pass)
        o.detail = std::to_string(checked) + " identities, " + secs(t);
    return o;
}

// 6. sdepth agrees with the brute-force oracle on 250 seeded random families.
Outcome oracle_equivalence()
{
    Outcome o;
    const auto start = Clock::now();
    std::mt19937_64 rng(20240601);
    int agree = 0;
    const int trials = 250;
    for (int trial = 0; trial < trials; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        std::vector<Mask> all;
        for (Mask s = 0; s <= low_bits(n); ++s)
            all.push_back(s);
        std::shuffle(all.begin(), all.end(), rng);
        const std::size_t size = 1 + rng() % std::min<std::size_t>(all.size(), oracle::kMaxMembers);
        all.resize(size);
        const SubsetFamily f = SubsetFamily::from_masks(n, all);
        const SDepthResult r = sdepth(f);
        const int expected = oracle::sdepth_bruteforce(f);
        if (r.status == DepthStatus::decided && r.value == expected)
            ++agree;
        else
            o.require(false, "trial " + std::to_string(trial) + ": " + std::to_string(r.value) + " vs oracle " +
                                 std::to_string(expected));
    }
    const double t = seconds_since(start);
    o.require(t <= 300.0, "took " + secs(t));
    if (o.pass)
        o.detail = std::to_string(agree) + "/" + std::to_string(trials) + " agree, " + secs(t);
    return o;
}

// 7. The 4-cycle: independent sets, generator order, invariants, gamma, exact sdepth.
Outcome cycle4()
{
    Outcome o;
    const auto start = Clock::now();
    const Graph g = parse_graph(reference::cycle4_graph);
    const IndependenceIdealData data = independence_ideal(g);
    o.require(data.ind_sets.size() == 7, "independent sets: " + std::to_string(data.ind_sets.size()));
    const std::vector<std::string> expected{"t1*t2*t3*t4", "s1*t2*t3*t4", "s2*t1*t3*t4", "s3*t1*t2*t4",
                                            "s4*t1*t2*t3", "s1*s3*t2*t4", "s2*s4*t1*t3"};
    std::vector<std::string> got;
    for (const VarSet& m : sort_generators(data.ideal.generators(), 4))
        got.push_back(monomial_to_string(m, VariableScheme::st));
    o.require(got == expected, "generator order differs");
    const IdealInvariants inv = invariants(data);
    o.require(inv.reg == 4 && inv.pd == 3 && inv.dim == 6 && inv.depth == 5, "closed-form invariants differ");
    o.require(gamma(data) == 5, "gamma " + std::to_string(gamma(data)));
    const SandwichReport r = sandwich_report(g);
    o.require(r.sdepth_status == DepthStatus::decided && r.sdepth == 5 && !r.shortcut,
              "sdepth " + std::to_string(r.sdepth));
    o.require(verify_partition(poset_of_quotient(data.ideal), r.witness, 5).ok, "witness rejected");
    const double t = seconds_since(start);
    o.require(t <= 600.0, "took " + secs(t));
    if (o.pass)
        o.detail = "7 sets, ordered generators, reg 4, pd 3, dim 6, depth 5, gamma 5, sdepth 5, " + secs(t);
    return o;
}

// 8. Complete graphs K_2..K_4: exact sdepth(T/I) = 2n - 2.
Outcome complete_graphs()
{
    Outcome o;
    const auto start = Clock::now();
    SandwichOptions opts;
    opts.use_shortcut = false;
    for (int n = 2; n <= 4; ++n) {
        const SandwichReport r = sandwich_report(make_graph(GraphFamily::complete, n), opts);
        o.require(r.sdepth_status == DepthStatus::decided && r.sdepth == 2 * n - 2,
                  "K" + std::to_string(n) + " sdepth " + std::to_string(r.sdepth));
    }
    const double t = seconds_since(start);
    o.require(t <= 600.0, "took " + secs(t));
    if (o.pass)
        o.detail = "K2..K4 by exact search, " + secs(t);
    return o;
}

// 9. The 5-path: gamma 7, depth 6, independence number 3, g = 13.
Outcome path5()
{
    Outcome o;
    const IndependenceIdealData data = independence_ideal(parse_graph(reference::path5_graph));
    o.require(gamma(data) == 7, "gamma " + std::to_string(gamma(data)));
    o.require(invariants(data).depth == 6, "depth " + std::to_string(invariants(data).depth));
    o.require(data.alpha == 3, "alpha " + std::to_string(data.alpha));
    o.require(data.g == 13, "g " + std::to_string(data.g));
    if (o.pass)
        o.detail = "gamma 7, depth 6, alpha 3, g 13";
    return o;
}

// 10. Over a scan of all graphs on <= 4 vertices: sdepth <= qdepth and
// depth <= sdepth <= gamma on every decided record.
Outcome sandwich_scan()
{
    Outcome o;
    ScanConfig config;
    config.family = *parse_scan_family("all");
    config.n_min = 1;
    config.n_max = 4;
    std::ostringstream out;
    const ScanSummary s = run_scan(config, {}, out);
    std::istringstream in(out.str());
    int decided = 0;
    for (std::string line; std::getline(in, line);) {
        const ScanRecord r = record_from_json_line(line);
        if (!r.sdepth)
            continue;
        ++decided;
        o.require(*r.sdepth <= r.qdepth && r.depth <= *r.sdepth && *r.sdepth <= r.gamma, "violation at " + r.graph_key);
    }
    o.require(s.evaluated == 1 + 2 + 4 + 11, "evaluated " + std::to_string(s.evaluated) + " graphs");
    if (o.pass)
        o.detail = std::to_string(decided) + "/" + std::to_string(s.evaluated) +
                   " graphs decided, 0 violations, sdepth = gamma on " + std::to_string(s.holds);
    return o;
}

// 11. Linear quotients and beta_0(I) = g on all graphs with <= 5 vertices, within a minute.
Outcome linear_quotients()
{
    Outcome o;
    const auto start = Clock::now();
    int graphs = 0;
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : all_graphs(n)) {
            ++graphs;
            const IndependenceIdealData data = independence_ideal(g);
            o.require(linear_quotients_check(data).ok, "linear quotients fail for " + graph_key(g));
            o.require(invariants(data).betti.front() == data.g, "beta_0 != g for " + graph_key(g));
        }
    const double t = seconds_since(start);
    o.require(t < 60.0, "took " + secs(t));
    if (o.pass)
        o.detail = std::to_string(graphs) + " graphs, " + secs(t);
    return o;
}

struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria()
{
    static const std::vector<Criterion> all{
        {1, "qdepth of maximal ideal = ceil(n/2), n=1..20", maximal_qdepth},
        {2, "sdepth of maximal ideal = ceil(n/2), n=3..8", maximal_sdepth},
        {3, "16-variable quotient: alpha, beta_3 < 0, qdepth <= 3, qdepth(I) >= 5, undecided in 10 s", duval16},
        {4, "6-variable J/I: qdepth 4, sdepth 3 with witness", duval6},
        {5, "full-lattice beta = C(n+k-d-1, k), n <= 12", full_lattice_beta},
        {6, "sdepth == brute-force oracle on 250 random families", oracle_equivalence},
        {7, "4-cycle record and exact sdepth 5", cycle4},
        {8, "complete graphs: sdepth = 2n-2, n=2..4", complete_graphs},
        {9, "5-path: gamma 7, depth 6, alpha 3, g 13", path5},
        {10, "sdepth <= qdepth and depth <= sdepth <= gamma on all graphs n <= 4", sandwich_scan},
        {11, "linear quotients and beta_0 = g on all graphs n <= 5", linear_quotients},
    };
    return all;
}

} // namespace

int main(int argc, char** argv)
{
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else if (std::strcmp(argv[i], "--list") == 0) {
            for (const auto& c : criteria())
                std::cout << c.id << ". " << c.title << "\n";
            return 0;
        } else {
            std::cerr << "usage: " << argv[0] << " [--criterion N] [--list]\n";
            return 64;
        }
    }
    int failed = 0, ran = 0;
    for (const auto& c : criteria()) {
        if (only && c.id != only)
            continue;
        ++ran;
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " -- " << out.detail
                  << std::endl;
        failed += out.pass ? 0 : 1;
    }
    if (ran == 0) {
        std::cerr << "no criterion " << only << "\n";
        return 64;
    }
    return failed == 0 ? 0 : 1;
}
