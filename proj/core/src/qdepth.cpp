#include "stanley/qdepth.hpp"

#include "stanley/error.hpp"

namespace stanley {

bool BetaProfile::nonnegative() const
{
    return !first_negative().has_value();
}

std::optional<int> BetaProfile::first_negative() const
{
    for (std::size_t k = 0; k < betas.size(); ++k)
        if (betas[k] < 0)
            return static_cast<int>(k);
    return std::nullopt;
}

BetaProfile beta_profile(const AlphaVector& alphas, int d)
{
    const int n = alphas.n();
    if (d < 0 || d > n)
        throw PreconditionError("candidate depth d=" + std::to_string(d) + " outside 0.." + std::to_string(n));
    BetaProfile p;
    p.d = d;
    p.alphas = alphas;
    p.betas.reserve(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) {
        BigInt b = alphas[k];
        for (int j = 0; j < k; ++j)
            b -= p.betas[static_cast<std::size_t>(j)] * binomial(d - j, k - j);
        p.betas.push_back(std::move(b));
    }
    return p;
}

QDepth qdepth(const AlphaVector& alphas)
{
    QDepth q;
    q.empty_module = alphas.total() == 0;
    for (int d = alphas.n(); d >= 0; --d) {
        if (beta_profile(alphas, d).nonnegative()) {
            q.value = d;
            return q;
        }
    }
    // Unreachable: beta_0 = alpha_0 >= 0 makes d = 0 admissible.
    return q;
}

QDepth qdepth(const SubsetFamily& family)
{
    return qdepth(alpha_vector(family));
}

BigInt closed_form_beta(int n, int d, int k)
{
    if (d < 1 || d > n || k < 0 || k > d)
        throw PreconditionError("closed_form_beta requires 1 <= d <= n and 0 <= k <= d");
    return binomial(static_cast<std::int64_t>(n) + k - d - 1, k);
}

int veronese_qdepth_bound(int n, int m)
{
    if (m < 1 || m > n)
        throw PreconditionError("veronese bound requires 1 <= m <= n");
    return (n - m) / (m + 1) + m;
}

GeneratorCountBound generator_count_bound(int n, int m, const BigInt& g)
{
    if (m < 1 || m >= n)
        throw PreconditionError("generator count bound requires 1 <= m < n");
    if (g <= 0)
        throw PreconditionError("generator count must be positive");
    if (g > binomial(n, m))
        throw PreconditionError("more generators than squarefree monomials of degree m");
    GeneratorCountBound out;
    out.bound = n - 1;
    for (int d = 0; d <= n; ++d) {
        if (binomial(static_cast<std::int64_t>(n) + m - d - 1, m) < g) {
            out.bound = d - 1;
            break;
        }
    }
    out.exact = binomial(n - 1, m) < g;
    return out;
}

} // namespace stanley
