#pragma once

#include "stanley/binomial.hpp"
#include "stanley/subset_family.hpp"

#include <optional>
#include <vector>

namespace stanley {

/**
 * The beta sequence of an alpha vector for a candidate depth d:
 *
 *   beta_0 = alpha_0,
 *   beta_k = alpha_k - sum_{j<k} beta_j * C(d-j, k-j)     (1 <= k <= d).
 *
 * When the family has a partition whose tops all have size >= d, beta_k is
 * the number of intervals with bottom of size k, so every beta_k is >= 0.
 */
struct BetaProfile {
    int d = 0;
    std::vector<BigInt> betas;
    AlphaVector alphas;

    bool nonnegative() const;
    /// Smallest k with beta_k < 0.
    std::optional<int> first_negative() const;
};

/// Throws PreconditionError unless 0 <= d <= n.
BetaProfile beta_profile(const AlphaVector& alphas, int d);

struct QDepth {
    int value = 0;
    /// The family was empty (the zero module). value is then n by convention:
    /// alpha is identically 0, so every beta vanishes for every d.
    bool empty_module = false;
};

/// Largest d <= n with beta_0..beta_d all non-negative.
QDepth qdepth(const AlphaVector& alphas);
QDepth qdepth(const SubsetFamily& family);

/// C(n+k-d-1, k): the beta sequence of the full lattice 2^[n] at depth d.
/// Requires 1 <= d <= n and 0 <= k <= d.
BigInt closed_form_beta(int n, int d, int k);

/**
 * Upper bound for qdepth of I_{n,m} (all squarefree monomials of degree m):
 * floor((n-m)/(m+1)) + m. Requires 1 <= m <= n.
 */
int veronese_qdepth_bound(int n, int m);

struct GeneratorCountBound {
    /// Upper bound for qdepth(S/I) and sdepth(S/I).
    int bound = 0;
    /// C(n-1, m) < g: then qdepth(S/I) = sdepth(S/I) = m - 1 exactly.
    bool exact = false;
};

/**
 * For I generated by g squarefree monomials of degree m < n: the least d with
 * C(n+m-d-1, m) < g, minus one. Arithmetic only; throws PreconditionError when
 * g <= 0, g > C(n, m), or m is not in [1, n).
 */
GeneratorCountBound generator_count_bound(int n, int m, const BigInt& g);

} // namespace stanley
