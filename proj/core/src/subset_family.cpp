#include "stanley/subset_family.hpp"

#include "stanley/binomial.hpp"
#include "stanley/error.hpp"

#include "combinations.hpp"

#include <algorithm>
#include <numeric>

namespace stanley {

namespace {

void check_lattice(int n, LatticeLimits limits)
{
    if (n < 0)
        throw PreconditionError("negative variable count");
    if (n > limits.max_vars || n > 30)
        throw ResourceLimitError("lattice 2^" + std::to_string(n) + " exceeds the enumeration limit n <= " +
                                 std::to_string(std::min(limits.max_vars, 30)));
}

// in_ideal[C] == 1 iff C contains some generator support. Superset-closure
// of the generator indicator, one coordinate at a time.
std::vector<std::uint8_t> ideal_indicator(const MonomialIdeal& ideal)
{
    const int n = ideal.n();
    const std::size_t size = std::size_t{1} << n;
    std::vector<std::uint8_t> mark(size, 0);
    for (const VarSet& g : ideal.generators())
        mark[g.bits()] = 1;
    for (int i = 0; i < n; ++i) {
        const std::size_t bit = std::size_t{1} << i;
        for (std::size_t c = 0; c < size; ++c)
            if ((c & bit) && mark[c ^ bit])
                mark[c] = 1;
    }
    return mark;
}

} // namespace

SubsetFamily::SubsetFamily(int n, std::vector<VarSet> members) : n_(n)
{
    if (n < 0 || n > kMaxVariables)
        throw PreconditionError("ambient variable count " + std::to_string(n) + " out of range");
    masks_.reserve(members.size());
    for (const VarSet& v : members) {
        if (v.n() != n)
            throw PreconditionError("member " + v.to_string() + " has ambient n=" + std::to_string(v.n()) +
                                    ", expected " + std::to_string(n));
        masks_.push_back(v.bits());
    }
    std::sort(masks_.begin(), masks_.end());
    masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
}

SubsetFamily SubsetFamily::from_masks(int n, std::vector<Mask> masks)
{
    if (n < 0 || n > kMaxVariables)
        throw PreconditionError("ambient variable count " + std::to_string(n) + " out of range");
    for (Mask m : masks)
        if ((m & ~low_bits(n)) != 0)
            throw PreconditionError("member has bits beyond n=" + std::to_string(n));
    SubsetFamily f(n);
    f.masks_ = std::move(masks);
    std::sort(f.masks_.begin(), f.masks_.end());
    f.masks_.erase(std::unique(f.masks_.begin(), f.masks_.end()), f.masks_.end());
    return f;
}

SubsetFamily SubsetFamily::full(int n, LatticeLimits limits)
{
    check_lattice(n, limits);
    SubsetFamily f(n);
    f.masks_.resize(std::size_t{1} << n);
    std::iota(f.masks_.begin(), f.masks_.end(), Mask{0});
    return f;
}

std::vector<VarSet> SubsetFamily::members() const
{
    std::vector<VarSet> out;
    out.reserve(masks_.size());
    for (Mask m : masks_)
        out.emplace_back(n_, m);
    return out;
}

bool SubsetFamily::contains(Mask m) const noexcept
{
    return std::binary_search(masks_.begin(), masks_.end(), m);
}

int SubsetFamily::max_cardinality() const noexcept
{
    int best = -1;
    for (Mask m : masks_)
        best = std::max(best, std::popcount(m));
    return best;
}

bool SubsetFamily::is_upward_closed() const
{
    for (Mask m : masks_)
        for (int i = 0; i < n_; ++i) {
            Mask up = m | (Mask{1} << i);
            if (up != m && !contains(up))
                return false;
        }
    return true;
}

bool SubsetFamily::is_downward_closed() const
{
    for (Mask m : masks_)
        for (Mask b = m; b != 0; b &= b - 1)
            if (!contains(m & ~(b & -b)))
                return false;
    return true;
}

SubsetFamily SubsetFamily::united(const SubsetFamily& other) const
{
    if (other.n_ != n_)
        throw PreconditionError("families live in different lattices");
    SubsetFamily out(n_);
    std::set_union(masks_.begin(), masks_.end(), other.masks_.begin(), other.masks_.end(),
                   std::back_inserter(out.masks_));
    return out;
}

SubsetFamily SubsetFamily::intersected(const SubsetFamily& other) const
{
    if (other.n_ != n_)
        throw PreconditionError("families live in different lattices");
    SubsetFamily out(n_);
    std::set_intersection(masks_.begin(), masks_.end(), other.masks_.begin(), other.masks_.end(),
                          std::back_inserter(out.masks_));
    return out;
}

bool SubsetFamily::disjoint_from(const SubsetFamily& other) const
{
    return intersected(other).empty();
}

SubsetFamily SubsetFamily::slice(int lo, int hi) const
{
    SubsetFamily out(n_);
    for (Mask m : masks_) {
        int c = std::popcount(m);
        if (c >= lo && c <= hi)
            out.masks_.push_back(m);
    }
    return out;
}

std::uint64_t AlphaVector::total() const noexcept
{
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

AlphaVector AlphaVector::full_lattice(int n)
{
    AlphaVector a;
    for (int k = 0; k <= n; ++k)
        a.counts.push_back(binomial_u64(n, k));
    return a;
}

SubsetFamily poset_of_ideal(const MonomialIdeal& ideal, LatticeLimits limits)
{
    check_lattice(ideal.n(), limits);
    auto mark = ideal_indicator(ideal);
    std::vector<Mask> masks;
    for (std::size_t c = 0; c < mark.size(); ++c)
        if (mark[c])
            masks.push_back(c);
    return SubsetFamily::from_masks(ideal.n(), std::move(masks));
}

SubsetFamily poset_of_quotient(const MonomialIdeal& ideal, LatticeLimits limits)
{
    check_lattice(ideal.n(), limits);
    auto mark = ideal_indicator(ideal);
    std::vector<Mask> masks;
    for (std::size_t c = 0; c < mark.size(); ++c)
        if (!mark[c])
            masks.push_back(c);
    return SubsetFamily::from_masks(ideal.n(), std::move(masks));
}

SubsetFamily poset_of_subquotient(const MonomialIdeal& J, const MonomialIdeal& I, LatticeLimits limits)
{
    if (J.n() != I.n())
        throw PreconditionError("J and I live in different rings (n=" + std::to_string(J.n()) + " vs " +
                                std::to_string(I.n()) + ")");
    if (!I.is_subideal_of(J))
        throw PreconditionError("not a subideal: some generator of I does not lie in J");
    check_lattice(J.n(), limits);
    auto in_j = ideal_indicator(J);
    auto in_i = ideal_indicator(I);
    std::vector<Mask> masks;
    for (std::size_t c = 0; c < in_j.size(); ++c)
        if (in_j[c] && !in_i[c])
            masks.push_back(c);
    return SubsetFamily::from_masks(J.n(), std::move(masks));
}

AlphaVector alpha_vector(const SubsetFamily& family)
{
    AlphaVector a;
    a.counts.assign(static_cast<std::size_t>(family.n()) + 1, 0);
    for (Mask m : family.masks())
        ++a.counts[static_cast<std::size_t>(std::popcount(m))];
    return a;
}

std::uint64_t hilbert_alpha_oracle(const MonomialIdeal& J, const MonomialIdeal& I, int j,
                                   std::uint64_t max_subsets)
{
    if (J.n() != I.n())
        throw PreconditionError("J and I live in different rings");
    if (!I.is_subideal_of(J))
        throw PreconditionError("not a subideal: some generator of I does not lie in J");
    const int n = J.n();
    if (j < 0 || j > n)
        return 0;
    if (binomial(n, j) > max_subsets)
        throw ResourceLimitError("C(" + std::to_string(n) + "," + std::to_string(j) +
                                 ") subsets exceed the oracle enumeration limit");
    std::uint64_t count = 0;
    detail::for_each_k_subset(n, j, [&](Mask u) {
        VarSet mono(n, u);
        if (J.contains(mono) && !I.contains(mono))
            ++count;
        return true;
    });
    return count;
}

} // namespace stanley
