#include "stanley/independence.hpp"

#include "stanley/binomial.hpp"
#include "stanley/error.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace stanley {

VarSet independence_generator(const VarSet& independent_set)
{
    const int n = independent_set.n();
    if (2 * n > kMaxVariables)
        throw ResourceLimitError("independence ideal needs 2n <= 64 positions");
    const Mask s_part = independent_set.bits();
    const Mask t_part = (low_bits(n) & ~s_part) << n;
    return VarSet(2 * n, s_part | t_part);
}

std::vector<VarSet> independent_sets(const Graph& graph, int max_vertices)
{
    const int n = graph.n();
    if (n > max_vertices || n > 30)
        throw ResourceLimitError("independent-set enumeration over 2^" + std::to_string(n) +
                                 " subsets exceeds the limit");
    std::vector<VarSet> out;
    const Mask limit = Mask{1} << n;
    for (Mask s = 0; s < limit; ++s) {
        bool independent = true;
        for (Mask b = s; b != 0 && independent; b &= b - 1)
            independent = (graph.neighbours(std::countr_zero(b) + 1) & s) == 0;
        if (independent)
            out.emplace_back(n, s);
    }
    std::sort(out.begin(), out.end(), graded_lex_less);
    return out;
}

int independence_number(const Graph& graph)
{
    int best = 0;
    for (const VarSet& s : independent_sets(graph))
        best = std::max(best, s.cardinality());
    return best;
}

IndependenceIdealData independence_ideal(const Graph& graph)
{
    IndependenceIdealData data;
    data.graph = graph;
    data.ind_sets = independent_sets(graph);
    std::vector<VarSet> gens;
    gens.reserve(data.ind_sets.size());
    for (const VarSet& s : data.ind_sets) {
        gens.push_back(independence_generator(s));
        data.alpha = std::max(data.alpha, s.cardinality());
    }
    data.a.assign(static_cast<std::size_t>(data.alpha) + 1, 0);
    for (const VarSet& s : data.ind_sets)
        ++data.a[static_cast<std::size_t>(s.cardinality())];
    data.ideal = minimalize(gens, 2 * graph.n());
    data.g = data.ideal.size();
    if (data.g != data.ind_sets.size())
        throw std::logic_error("independence generators were not pairwise incomparable");
    return data;
}

std::vector<VarSet> sort_generators(std::span<const VarSet> gens, int vertices)
{
    const Mask block = low_bits(vertices);
    for (const VarSet& m : gens) {
        if (m.n() != 2 * vertices)
            throw PreconditionError("generator " + m.to_string() + " is not over 2n positions");
        const Mask s_part = m.bits() & block;
        const Mask t_part = (m.bits() >> vertices) & block;
        if ((s_part ^ t_part) != block || (s_part & t_part) != 0)
            throw PreconditionError("generator " + m.to_string() + " does not have the shape m_S");
    }
    std::vector<VarSet> out(gens.begin(), gens.end());
    std::stable_sort(out.begin(), out.end(), [&](const VarSet& x, const VarSet& y) {
        return graded_lex_less(VarSet(vertices, x.bits() & block), VarSet(vertices, y.bits() & block));
    });
    return out;
}

LinearQuotientsCheck linear_quotients_check(const IndependenceIdealData& data)
{
    const int n = data.graph.n();
    auto ordered = sort_generators(data.ideal.generators(), n);
    LinearQuotientsCheck result;
    for (std::size_t i = 1; i < ordered.size(); ++i) {
        const MonomialIdeal previous = minimalize(std::span<const VarSet>(ordered.data(), i), 2 * n);
        const MonomialIdeal quotient = colon(previous, ordered[i]);
        std::vector<VarSet> expected;
        const Mask s_part = ordered[i].bits() & low_bits(n);
        for (Mask b = s_part; b != 0; b &= b - 1)
            expected.push_back(VarSet(2 * n, {t_position(n, std::countr_zero(b) + 1)}));
        if (quotient != minimalize(expected, 2 * n)) {
            result.ok = false;
            result.first_failure = static_cast<int>(i) + 1;
            return result;
        }
    }
    return result;
}

IdealInvariants invariants(const IndependenceIdealData& data)
{
    const int n = data.graph.n();
    IdealInvariants inv;
    inv.reg = n;
    inv.betti.assign(static_cast<std::size_t>(data.alpha) + 1, 0);
    for (int i = 0; i <= data.alpha; ++i)
        for (int k = 0; k <= data.alpha; ++k)
            inv.betti[static_cast<std::size_t>(i)] += data.a[static_cast<std::size_t>(k)] * binomial_u64(k, i);
    inv.pd = data.alpha + 1;
    inv.dim = 2 * n - 2;
    inv.depth = 2 * n - data.alpha - 1;
    inv.cohen_macaulay = data.graph.is_complete();
    if (inv.cohen_macaulay != (inv.depth == inv.dim))
        throw std::logic_error("Cohen-Macaulay criterion disagrees with depth == dim");
    return inv;
}

int gamma(int vertices, std::uint64_t g)
{
    if (vertices < 1)
        throw PreconditionError("gamma needs n >= 1");
    // A graph on n vertices has between n + 1 (complete) and 2^n (discrete) independent sets.
    if (g < static_cast<std::uint64_t>(vertices) + 1 || (vertices < 64 && g > (std::uint64_t{1} << vertices)))
        throw PreconditionError("g=" + std::to_string(g) + " is not an independent-set count for n=" +
                                std::to_string(vertices));
    const std::int64_t n = vertices;
    int best = -1;
    for (std::int64_t d = 0; d <= 3 * n - 1; ++d)
        if (binomial(3 * n - d - 1, n) >= g)
            best = static_cast<int>(d);
    if (best < vertices - 1 || best > 2 * vertices - 2)
        throw std::logic_error("gamma outside [n-1, 2n-2]");
    return best;
}

std::string_view to_string(ConjectureStatus status)
{
    switch (status) {
    case ConjectureStatus::holds:
        return "holds";
    case ConjectureStatus::fails:
        return "fails";
    case ConjectureStatus::undecided:
        return "undecided";
    }
    return "?";
}

SandwichReport sandwich_report(const Graph& graph, const SandwichOptions& options)
{
    const int n = graph.n();
    const IndependenceIdealData data = independence_ideal(graph);
    const IdealInvariants inv = invariants(data);
    SandwichReport report;
    report.depth = inv.depth;
    report.dim = inv.dim;
    report.gamma = gamma(data);

    const SubsetFamily quotient = poset_of_quotient(data.ideal, options.limits);
    report.qdepth = qdepth(quotient).value;

    report.shortcut_applicable = binomial(2 * n - 1, n) < data.g;
    if (report.shortcut_applicable && options.use_shortcut) {
        report.shortcut = true;
        report.sdepth_status = DepthStatus::decided;
        report.sdepth = n - 1;
    } else {
        SDepthResult exact = sdepth(quotient, options.search);
        report.sdepth_status = exact.status;
        report.sdepth = exact.value;
        report.witness = std::move(exact.witness);
    }
    if (report.sdepth_status == DepthStatus::decided)
        report.conjecture = report.sdepth == report.gamma ? ConjectureStatus::holds : ConjectureStatus::fails;
    return report;
}

} // namespace stanley
