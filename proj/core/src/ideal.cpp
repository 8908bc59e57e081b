#include "stanley/ideal.hpp"

#include "stanley/error.hpp"

#include "combinations.hpp"

#include <algorithm>

namespace stanley {

MonomialIdeal minimalize(std::span<const VarSet> gens, int n, MinimalizeOptions options)
{
    if (n < 0 || n > kMaxVariables)
        throw PreconditionError("ambient variable count " + std::to_string(n) + " out of range");
    std::vector<VarSet> sorted;
    sorted.reserve(gens.size());
    for (const VarSet& g : gens) {
        if (g.n() != n)
            throw PreconditionError("generator " + g.to_string() + " has ambient n=" +
                                    std::to_string(g.n()) + ", expected " + std::to_string(n));
        if (g.empty() && !options.allow_unit)
            throw PreconditionError("unit ideal not permitted here");
        sorted.push_back(g);
    }
    std::sort(sorted.begin(), sorted.end(), [](const VarSet& a, const VarSet& b) {
        if (a.cardinality() != b.cardinality())
            return a.cardinality() < b.cardinality();
        return a < b;
    });
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<VarSet> kept;
    for (const VarSet& g : sorted) {
        bool redundant = std::any_of(kept.begin(), kept.end(),
                                     [&](const VarSet& k) { return k.is_subset_of(g); });
        if (!redundant)
            kept.push_back(g);
    }
    std::sort(kept.begin(), kept.end());
    return MonomialIdeal(n, std::move(kept));
}

MonomialIdeal MonomialIdeal::zero(int n)
{
    return minimalize({}, n);
}

MonomialIdeal MonomialIdeal::unit(int n)
{
    VarSet one(n, 0);
    return minimalize(std::span<const VarSet>(&one, 1), n);
}

MonomialIdeal MonomialIdeal::maximal(int n)
{
    return squarefree_veronese(n, 1);
}

MonomialIdeal MonomialIdeal::squarefree_veronese(int n, int m)
{
    if (m < 0 || m > n)
        throw PreconditionError("degree m=" + std::to_string(m) + " outside 0.." + std::to_string(n));
    std::vector<VarSet> gens;
    if (m == 0) {
        gens.emplace_back(n, 0);
    } else {
        detail::for_each_k_subset(n, m, [&](Mask v) {
            gens.emplace_back(n, v);
            return true;
        });
    }
    return minimalize(gens, n);
}

bool MonomialIdeal::contains(const VarSet& u) const noexcept
{
    return std::any_of(generators_.begin(), generators_.end(),
                       [&](const VarSet& g) { return g.is_subset_of(u); });
}

bool MonomialIdeal::is_subideal_of(const MonomialIdeal& other) const noexcept
{
    if (other.n_ != n_)
        return false;
    return std::all_of(generators_.begin(), generators_.end(),
                       [&](const VarSet& g) { return other.contains(g); });
}

int MonomialIdeal::generating_degree() const noexcept
{
    if (generators_.empty())
        return -1;
    int d = generators_.front().cardinality();
    for (const VarSet& g : generators_)
        if (g.cardinality() != d)
            return -1;
    return d;
}

MonomialIdeal colon(const MonomialIdeal& ideal, const VarSet& u)
{
    std::vector<VarSet> quotients;
    quotients.reserve(ideal.size());
    for (const VarSet& g : ideal.generators())
        quotients.push_back(g - u);
    return minimalize(quotients, ideal.n());
}

} // namespace stanley
