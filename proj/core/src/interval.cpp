#include "stanley/interval.hpp"

#include "stanley/error.hpp"

#include <algorithm>
#include <unordered_set>

namespace stanley {

Interval::Interval(VarSet lo, VarSet hi) : lo_(lo), hi_(hi)
{
    if (lo.n() != hi.n())
        throw PreconditionError("interval endpoints live in different lattices");
    if (!lo.is_subset_of(hi))
        throw PreconditionError("interval bottom " + lo.to_string() + " is not below top " + hi.to_string());
}

std::vector<VarSet> Interval::members(int max_width) const
{
    if (width() > max_width)
        throw ResourceLimitError("interval of width " + std::to_string(width()) + " exceeds limit " +
                                 std::to_string(max_width));
    const Mask free = hi_.bits() & ~lo_.bits();
    std::vector<VarSet> out;
    out.reserve(size());
    // Subsets of `free` in ascending order: s -> (s - free) & free.
    Mask s = 0;
    do {
        out.emplace_back(lo_.n(), lo_.bits() | s);
        s = (s - free) & free;
    } while (s != 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<int> IntervalPartition::sdepth() const
{
    if (intervals.empty())
        return std::nullopt;
    int best = intervals.front().hi().cardinality();
    for (const Interval& iv : intervals)
        best = std::min(best, iv.hi().cardinality());
    return best;
}

PartitionCheck verify_partition(const SubsetFamily& target, std::span<const Interval> intervals, int d)
{
    std::unordered_set<Mask> seen;
    seen.reserve(target.size() * 2);
    for (const Interval& iv : intervals) {
        if (iv.lo().n() != target.n())
            return {false, "interval [" + iv.lo().to_string() + "," + iv.hi().to_string() +
                               "] lives in a different lattice"};
        if (iv.hi().cardinality() < d)
            return {false, "interval [" + iv.lo().to_string() + "," + iv.hi().to_string() + "] has top of size " +
                               std::to_string(iv.hi().cardinality()) + " < " + std::to_string(d)};
        if (iv.width() > 30)
            return {false, "interval too wide to check"};
        for (const VarSet& h : iv.members(30)) {
            if (!target.contains(h))
                return {false, "member " + h.to_string() + " of [" + iv.lo().to_string() + "," +
                                   iv.hi().to_string() + "] is outside the family"};
            if (!seen.insert(h.bits()).second)
                return {false, "member " + h.to_string() + " is covered twice"};
        }
    }
    if (seen.size() != target.size()) {
        for (Mask m : target.masks())
            if (!seen.count(m))
                return {false, "member " + VarSet(target.n(), m).to_string() + " is not covered"};
    }
    return {true, {}};
}

} // namespace stanley
