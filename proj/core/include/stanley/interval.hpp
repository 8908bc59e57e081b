#pragma once

#include "stanley/subset_family.hpp"
#include "stanley/varset.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace stanley {

/// The interval [lo, hi] = { H : lo <= H <= hi } of the Boolean lattice.
class Interval {
public:
    /// Throws PreconditionError unless lo is a subset of hi in the same lattice.
    Interval(VarSet lo, VarSet hi);

    const VarSet& lo() const noexcept { return lo_; }
    const VarSet& hi() const noexcept { return hi_; }
    int width() const noexcept { return hi_.cardinality() - lo_.cardinality(); }
    /// 2^(|hi| - |lo|).
    std::uint64_t size() const noexcept { return std::uint64_t{1} << width(); }
    bool contains(const VarSet& h) const noexcept
    {
        return h.n() == lo_.n() && lo_.is_subset_of(h) && h.is_subset_of(hi_);
    }

    /// All members in ascending bit-pattern order. Throws ResourceLimitError
    /// when the width exceeds max_width.
    std::vector<VarSet> members(int max_width = 24) const;

    friend bool operator==(const Interval&, const Interval&) = default;
    friend auto operator<=>(const Interval&, const Interval&) = default;

private:
    VarSet lo_;
    VarSet hi_;
};

/// A list of intervals meant to partition some family.
struct IntervalPartition {
    std::vector<Interval> intervals;

    /// min |hi| over the intervals; nullopt when there are none.
    std::optional<int> sdepth() const;
};

struct PartitionCheck {
    bool ok = false;
    std::string reason;

    explicit operator bool() const noexcept { return ok; }
};

/**
 * Independent certificate check: the intervals are pairwise disjoint, lie
 * inside `target`, cover it exactly, and every top has at least d elements.
 * Enumerates every interval member; never relies on how the intervals were found.
 */
PartitionCheck verify_partition(const SubsetFamily& target, std::span<const Interval> intervals, int d);

inline PartitionCheck verify_partition(const SubsetFamily& target, const IntervalPartition& p, int d)
{
    return verify_partition(target, p.intervals, d);
}

} // namespace stanley
