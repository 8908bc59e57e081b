#include "stanley/binomial.hpp"

#include "stanley/error.hpp"

#include <limits>

namespace stanley {

BigInt binomial(std::int64_t top, std::int64_t k)
{
    if (k < 0)
        return 0;
    if (k == 0)
        return 1;
    if (top < k)
        return 0;
    if (k > top - k)
        k = top - k;
    BigInt result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= top - k + i;
        result /= i;
    }
    return result;
}

std::uint64_t binomial_u64(std::int64_t top, std::int64_t k)
{
    BigInt b = binomial(top, k);
    if (b > std::numeric_limits<std::uint64_t>::max())
        throw ResourceLimitError("binomial C(" + std::to_string(top) + "," + std::to_string(k) +
                                 ") exceeds 64 bits");
    return static_cast<std::uint64_t>(b);
}

} // namespace stanley
