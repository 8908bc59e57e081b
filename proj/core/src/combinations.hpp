#pragma once

#include "stanley/varset.hpp"

#include <bit>

namespace stanley::detail {

/// Calls f(mask) for every k-subset of n bits in increasing numeric order.
/// f returns false to stop early.
template <typename F>
void for_each_k_subset(int n, int k, F&& f)
{
    if (k < 0 || k > n)
        return;
    if (k == 0) {
        f(Mask{0});
        return;
    }
    using Wide = unsigned __int128;
    const Wide limit = Wide{1} << n;
    Wide v = (Wide{1} << k) - 1;
    while (v < limit) {
        if (!f(static_cast<Mask>(v)))
            return;
        Wide t = v | (v - 1);
        Wide low = ~t & (t + 1);
        int shift = std::countr_zero(static_cast<Mask>(v)) + 1;
        v = (t + 1) | ((low - 1) >> shift);
    }
}

} // namespace stanley::detail
