#include "stanley/fixtures.hpp"

#include "stanley/independence.hpp"
#include "stanley/io.hpp"
#include "stanley/qdepth.hpp"
#include "stanley/reference_instances.hpp"

#include <json.hpp>

namespace stanley {

namespace {

using nlohmann::json;

std::vector<long long> to_ints(const std::vector<BigInt>& values)
{
    std::vector<long long> out;
    for (const auto& v : values)
        out.push_back(static_cast<long long>(v));
    return out;
}

json sdepth_json(const SubsetFamily& family, const SearchOptions& search)
{
    SDepthResult r = sdepth(family, search);
    if (r.status != DepthStatus::decided)
        return "undecided";
    return r.value;
}

// The printed account of this instance lists alpha_1 = 15 and uses
// alpha_2 = 72 in its arithmetic; the generator list itself has no linear
// generators (so alpha_1 = 16) and gives alpha_2 = 71. With the list's own
// counts beta at d = 4 is (1, 12, 29, 0, 0), all non-negative.
Fixture duval16(const SearchOptions&)
{
    Fixture f;
    f.name = "duval16-quotient";
    f.description = "16-variable Duval ideal: generator count, level counts, beta at d=4, qdepth of S/I and I";
    f.expected = R"({
        "generators": 64, "quadratic": 49, "cubic": 15,
        "alpha": [1, 16, 71, 98, 42, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        "alpha_oracle": [1, 16, 71, 98, 42, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        "beta_d4": [1, 12, 29, 0, 0],
        "qdepth_quotient": 4,
        "ideal_alpha_2_4": [49, 462, 1778],
        "qdepth_ideal": 9
    })";
    f.compute = [] {
        const MonomialIdeal I = parse_ideal(reference::duval16_ideal).ideal;
        int quadratic = 0, cubic = 0;
        for (const VarSet& g : I.generators()) {
            quadratic += g.cardinality() == 2;
            cubic += g.cardinality() == 3;
        }
        const AlphaVector a = alpha_vector(poset_of_quotient(I));
        std::vector<std::uint64_t> oracle;
        for (int j = 0; j <= I.n(); ++j)
            oracle.push_back(hilbert_alpha_oracle(MonomialIdeal::unit(I.n()), I, j));
        const AlphaVector ideal_alpha = alpha_vector(poset_of_ideal(I));
        json j;
        j["generators"] = I.size();
        j["quadratic"] = quadratic;
        j["cubic"] = cubic;
        j["alpha"] = a.counts;
        j["alpha_oracle"] = oracle;
        j["beta_d4"] = to_ints(beta_profile(a, 4).betas);
        j["qdepth_quotient"] = qdepth(a).value;
        j["ideal_alpha_2_4"] = {ideal_alpha[2], ideal_alpha[3], ideal_alpha[4]};
        j["qdepth_ideal"] = qdepth(ideal_alpha).value;
        return j.dump();
    };
    return f;
}

Fixture duval6(const SearchOptions& search)
{
    Fixture f;
    f.name = "duval6-subquotient";
    f.description = "6-variable J/I: alpha, qdepth 4, first negative beta at d=5, exact sdepth 3";
    f.expected = R"({
        "alpha": [0, 0, 5, 10, 5, 0, 0],
        "beta_d4": [0, 0, 5, 0, 0],
        "beta_d5": [0, 0, 5, -5, 0, 0],
        "qdepth": 4,
        "sdepth": 3,
        "witness_valid": true
    })";
    f.compute = [search] {
        const MonomialIdeal J = parse_ideal(reference::duval6_outer).ideal;
        const MonomialIdeal I = parse_ideal(reference::duval6_inner).ideal;
        const SubsetFamily P = poset_of_subquotient(J, I);
        const AlphaVector a = alpha_vector(P);
        SDepthResult s = sdepth(P, search);
        json j;
        j["alpha"] = a.counts;
        j["beta_d4"] = to_ints(beta_profile(a, 4).betas);
        j["beta_d5"] = to_ints(beta_profile(a, 5).betas);
        j["qdepth"] = qdepth(a).value;
        j["sdepth"] = s.status == DepthStatus::decided ? json(s.value) : json("undecided");
        j["witness_valid"] = s.status == DepthStatus::decided && verify_partition(P, s.witness, s.value).ok;
        return j.dump();
    };
    return f;
}

Fixture maximal_ideal(const SearchOptions& search)
{
    Fixture f;
    f.name = "maximal-ideal";
    f.description = "qdepth(m) = ceil(n/2) for n = 1..12 and sdepth(m) = ceil(n/2) for n = 1..6";
    json expected;
    for (int n = 1; n <= 12; ++n)
        expected["qdepth"].push_back((n + 1) / 2);
    for (int n = 1; n <= 6; ++n)
        expected["sdepth"].push_back((n + 1) / 2);
    f.expected = expected.dump();
    f.compute = [search] {
        json j;
        for (int n = 1; n <= 12; ++n)
            j["qdepth"].push_back(qdepth(poset_of_ideal(MonomialIdeal::maximal(n))).value);
        for (int n = 1; n <= 6; ++n)
            j["sdepth"].push_back(sdepth_json(poset_of_ideal(MonomialIdeal::maximal(n)), search));
        return j.dump();
    };
    return f;
}

json graph_record(const Graph& g, const SearchOptions& search)
{
    const IndependenceIdealData data = independence_ideal(g);
    const IdealInvariants inv = invariants(data);
    json j;
    j["independent_sets"] = data.ind_sets.size();
    j["alpha"] = data.alpha;
    j["g"] = data.g;
    j["reg"] = inv.reg;
    j["pd"] = inv.pd;
    j["dim"] = inv.dim;
    j["depth"] = inv.depth;
    j["gamma"] = gamma(data);
    j["betti"] = inv.betti;
    j["linear_quotients"] = linear_quotients_check(data).ok;
    std::vector<std::string> order;
    for (const VarSet& m : sort_generators(data.ideal.generators(), g.n()))
        order.push_back(monomial_to_string(m, VariableScheme::st));
    j["generators"] = order;
    if (search.budget_seconds > 0) {
        SandwichOptions opts;
        opts.search = search;
        SandwichReport r = sandwich_report(g, opts);
        j["sdepth"] = r.sdepth_status == DepthStatus::decided ? json(r.sdepth) : json("undecided");
        j["conjecture"] = std::string(to_string(r.conjecture));
    }
    return j;
}

Fixture cycle4(const SearchOptions& search)
{
    Fixture f;
    f.name = "cycle4-independence";
    f.description = "4-cycle: independent sets, ordered generators, closed-form invariants, gamma, exact sdepth";
    f.expected = R"({
        "independent_sets": 7, "alpha": 2, "g": 7,
        "reg": 4, "pd": 3, "dim": 6, "depth": 5, "gamma": 5,
        "betti": [7, 8, 2],
        "linear_quotients": true,
        "generators": ["t1*t2*t3*t4", "s1*t2*t3*t4", "s2*t1*t3*t4", "s3*t1*t2*t4",
                       "s4*t1*t2*t3", "s1*s3*t2*t4", "s2*s4*t1*t3"],
        "sdepth": 5, "conjecture": "holds"
    })";
    f.compute = [search] { return graph_record(parse_graph(reference::cycle4_graph), search).dump(); };
    return f;
}

Fixture path5(const SearchOptions&)
{
    Fixture f;
    f.name = "path5-independence";
    f.description = "5-path: alpha 3, g 13, depth 6, gamma 7 (closed forms only)";
    f.expected = R"({"alpha": 3, "g": 13, "depth": 6, "gamma": 7, "dim": 8, "pd": 4, "reg": 5,
                     "independent_sets": 13, "betti": [13, 20, 9, 1], "linear_quotients": true})";
    f.compute = [] {
        SearchOptions none;
        none.budget_seconds = 0;
        json j = graph_record(parse_graph(reference::path5_graph), none);
        j.erase("generators");
        return j.dump();
    };
    return f;
}

Fixture complete_graphs(const SearchOptions& search)
{
    Fixture f;
    f.name = "complete-graphs";
    f.description = "K_n for n = 2..4: depth = dim = gamma = sdepth = 2n-2";
    json expected = json::array();
    for (int n = 2; n <= 4; ++n)
        expected.push_back({{"n", n}, {"depth", 2 * n - 2}, {"dim", 2 * n - 2}, {"gamma", 2 * n - 2},
                            {"sdepth", 2 * n - 2}, {"cohen_macaulay", true}});
    f.expected = expected.dump();
    f.compute = [search] {
        json out = json::array();
        for (int n = 2; n <= 4; ++n) {
            const Graph g = make_graph(GraphFamily::complete, n);
            const IndependenceIdealData data = independence_ideal(g);
            const IdealInvariants inv = invariants(data);
            SandwichOptions opts;
            opts.search = search;
            SandwichReport r = sandwich_report(g, opts);
            out.push_back({{"n", n},
                           {"depth", inv.depth},
                           {"dim", inv.dim},
                           {"gamma", gamma(data)},
                           {"sdepth", r.sdepth_status == DepthStatus::decided ? json(r.sdepth) : json("undecided")},
                           {"cohen_macaulay", inv.cohen_macaulay}});
        }
        return out.dump();
    };
    return f;
}

} // namespace

std::vector<Fixture> builtin_fixtures(const SearchOptions& search)
{
    return {duval16(search), duval6(search), maximal_ideal(search), cycle4(search), path5(search),
            complete_graphs(search)};
}

std::vector<FixtureResult> run_fixtures(const std::vector<Fixture>& fixtures)
{
    std::vector<FixtureResult> results;
    for (const Fixture& f : fixtures) {
        FixtureResult r;
        r.name = f.name;
        try {
            const json expected = json::parse(f.expected);
            r.expected = expected.dump();
            const json actual = json::parse(f.compute());
            r.actual = actual.dump();
            r.passed = expected == actual;
        } catch (const std::exception& e) {
            r.error = e.what();
            r.passed = false;
        }
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace stanley
