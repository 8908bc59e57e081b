#pragma once

#include "stanley/ideal.hpp"
#include "stanley/varset.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace stanley {

/// Guard on algorithms that walk the full lattice 2^[n].
struct LatticeLimits {
    int max_vars = 24;
};

/**
 * An explicit family of subsets of [n]: the posets P_I, P_{S/I}, P_{J/I}.
 * Members are deduplicated and kept in ascending bit-pattern order, which is
 * the canonical member order for every algorithm downstream.
 */
class SubsetFamily {
public:
    SubsetFamily() = default;
    explicit SubsetFamily(int n) : n_(n) {}
    SubsetFamily(int n, std::vector<VarSet> members);
    static SubsetFamily from_masks(int n, std::vector<Mask> masks);
    /// The whole Boolean lattice 2^[n].
    static SubsetFamily full(int n, LatticeLimits limits = {});

    int n() const noexcept { return n_; }
    std::size_t size() const noexcept { return masks_.size(); }
    bool empty() const noexcept { return masks_.empty(); }
    std::span<const Mask> masks() const noexcept { return masks_; }
    std::vector<VarSet> members() const;
    VarSet member(std::size_t i) const { return VarSet(n_, masks_[i]); }

    bool contains(Mask m) const noexcept;
    bool contains(const VarSet& v) const noexcept { return v.n() == n_ && contains(v.bits()); }

    /// Largest member cardinality, or -1 for the empty family.
    int max_cardinality() const noexcept;

    bool is_upward_closed() const;
    bool is_downward_closed() const;

    SubsetFamily united(const SubsetFamily& other) const;
    SubsetFamily intersected(const SubsetFamily& other) const;
    bool disjoint_from(const SubsetFamily& other) const;
    /// Members whose cardinality lies in [lo, hi].
    SubsetFamily slice(int lo, int hi) const;

    friend bool operator==(const SubsetFamily&, const SubsetFamily&) = default;

private:
    int n_ = 0;
    std::vector<Mask> masks_;
};

/// alpha_k = number of members of cardinality k, for k = 0..n.
struct AlphaVector {
    std::vector<std::uint64_t> counts;

    int n() const noexcept { return static_cast<int>(counts.size()) - 1; }
    std::uint64_t operator[](int k) const { return counts.at(static_cast<std::size_t>(k)); }
    std::uint64_t total() const noexcept;

    /// alpha of the full lattice: C(n, k).
    static AlphaVector full_lattice(int n);

    friend bool operator==(const AlphaVector&, const AlphaVector&) = default;
};

/// P_I: every C in 2^[n] containing the support of some generator.
SubsetFamily poset_of_ideal(const MonomialIdeal& ideal, LatticeLimits limits = {});

/// P_{S/I} = 2^[n] \ P_I.
SubsetFamily poset_of_quotient(const MonomialIdeal& ideal, LatticeLimits limits = {});

/// P_{J/I} = P_J cap P_{S/I}. Throws PreconditionError unless I is contained in J.
SubsetFamily poset_of_subquotient(const MonomialIdeal& J, const MonomialIdeal& I,
                                  LatticeLimits limits = {});

AlphaVector alpha_vector(const SubsetFamily& family);

/**
 * Counts degree-j squarefree monomials in J \ I by walking the j-subsets of
 * [n] directly. This is the Hilbert function of (J + squares)/(I + squares)
 * in degree j and is kept independent of the lattice-walk pipeline so it can
 * cross-check alpha_vector(poset_of_subquotient(J, I)).
 */
std::uint64_t hilbert_alpha_oracle(const MonomialIdeal& J, const MonomialIdeal& I, int j,
                                   std::uint64_t max_subsets = std::uint64_t{1} << 28);

} // namespace stanley
