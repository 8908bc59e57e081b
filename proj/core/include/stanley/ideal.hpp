#pragma once

#include "stanley/varset.hpp"

#include <span>
#include <vector>

namespace stanley {

struct MinimalizeOptions {
    /// When false, a generator list containing the empty support (the unit
    /// ideal) is rejected.
    bool allow_unit = true;
};

/**
 * A squarefree monomial ideal in n variables, held as its minimal generators
 * G(I). Generators are deduplicated, pairwise incomparable under support
 * containment, and sorted by bit pattern. No generators means the zero ideal;
 * the single generator {} means the unit ideal S.
 */
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    static MonomialIdeal zero(int n);
    static MonomialIdeal unit(int n);
    /// m = (x1, ..., xn).
    static MonomialIdeal maximal(int n);
    /// I_{n,m}: all squarefree monomials of degree m.
    static MonomialIdeal squarefree_veronese(int n, int m);

    int n() const noexcept { return n_; }
    std::span<const VarSet> generators() const noexcept { return generators_; }
    std::size_t size() const noexcept { return generators_.size(); }
    bool is_zero() const noexcept { return generators_.empty(); }
    bool is_unit() const noexcept { return generators_.size() == 1 && generators_.front().empty(); }

    /// True when the squarefree monomial u lies in the ideal.
    bool contains(const VarSet& u) const noexcept;

    /// True when every generator of this ideal lies in `other`.
    bool is_subideal_of(const MonomialIdeal& other) const noexcept;

    /// Degree of every generator when all share one, else -1 (also for the zero ideal).
    int generating_degree() const noexcept;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    friend MonomialIdeal minimalize(std::span<const VarSet>, int, MinimalizeOptions);
    MonomialIdeal(int n, std::vector<VarSet> gens) : n_(n), generators_(std::move(gens)) {}

    int n_ = 0;
    std::vector<VarSet> generators_;
};

/// Reduces a generator list to its inclusion-minimal antichain. Idempotent
/// and independent of input order. Throws PreconditionError on an ambient
/// count mismatch, or on the unit ideal when options forbid it.
MonomialIdeal minimalize(std::span<const VarSet> gens, int n, MinimalizeOptions options = {});

/// Colon ideal (I : u) of a squarefree ideal by a squarefree monomial.
MonomialIdeal colon(const MonomialIdeal& ideal, const VarSet& u);

} // namespace stanley
