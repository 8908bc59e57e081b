#pragma once

#include "stanley/exact_cover.hpp"
#include "stanley/interval.hpp"
#include "stanley/subset_family.hpp"

#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

namespace stanley {

inline constexpr double kDefaultBudgetSeconds = 300.0;

/// Which interval partitions the search considers.
enum class SearchForm {
    /// Tops of size exactly d for every interval that reaches below level d;
    /// everything else is a singleton. Complete by the normal-form theorem for
    /// interval partitions.
    normal,
    /// Any top of size >= d. Larger search space; used to cross-check `normal`.
    general,
};

struct SearchOptions {
    /// Wall-clock limit. Zero or less skips the search: results are undecided.
    double budget_seconds = kDefaultBudgetSeconds;
    unsigned threads = 1;
    SearchForm form = SearchForm::normal;
    const std::atomic<bool>* cancel = nullptr;
};

enum class SearchStatus { found, none, undecided };

struct PartitionSearch {
    SearchStatus status = SearchStatus::undecided;
    /// Complete partition of the family (sorted by bottom, then top) when found.
    std::vector<Interval> witness;
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

/**
 * Decides whether `family` has an interval partition whose tops all have at
 * least d elements. The search is an exact cover over the members of size
 * < d; it is exhaustive, so `none` is a proof. Every returned witness has been
 * re-checked with verify_partition. Running out of budget gives `undecided`.
 *
 * With threads > 1 the root branches are distributed over workers; the
 * witness is the one from the lowest-numbered successful branch, which is
 * what the sequential search returns.
 */
PartitionSearch has_partition(const SubsetFamily& family, int d, const SearchOptions& options = {});

enum class DepthStatus { decided, undecided, empty };

struct LevelOutcome {
    int d = 0;
    SearchStatus status = SearchStatus::undecided;
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

struct SDepthResult {
    DepthStatus status = DepthStatus::undecided;
    /// decided: the Stanley depth. undecided: the level the budget ran out on,
    /// an upper bound. empty: n, by the same convention as qdepth.
    int value = 0;
    /// Where the descending scan started: min(qdepth, largest member size).
    int start = 0;
    std::vector<Interval> witness;
    std::vector<LevelOutcome> levels;
};

/// Exact Stanley depth: the largest d with has_partition(family, d) found,
/// scanning downwards from min(qdepth, largest member size). The budget is
/// shared by all levels.
SDepthResult sdepth(const SubsetFamily& family, const SearchOptions& options = {});

struct UnionBound {
    DepthStatus status = DepthStatus::undecided;
    /// min(sdepth(first), sdepth(second)), a lower bound for sdepth of the union.
    int bound = 0;
    /// Concatenation of both witnesses; a partition of the union.
    std::vector<Interval> witness;
};

/// Throws PreconditionError when the families overlap or live in different lattices.
UnionBound union_lower_bound(const SubsetFamily& first, const SubsetFamily& second,
                             const SearchOptions& options = {});

} // namespace stanley
