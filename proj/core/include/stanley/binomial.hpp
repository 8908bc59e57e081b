#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace stanley {

using BigInt = boost::multiprecision::cpp_int;

/**
 * Binomial coefficient C(top, k) with the conventions used throughout:
 * C(top, 0) = 1 for every top, and C(top, k) = 0 whenever k < 0 or top < k
 * (a negative top with k > 0 is therefore 0, not the generalized value).
 */
BigInt binomial(std::int64_t top, std::int64_t k);

/// Same conventions, 64-bit; throws ResourceLimitError on overflow.
std::uint64_t binomial_u64(std::int64_t top, std::int64_t k);

} // namespace stanley
