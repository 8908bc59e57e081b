#include "stanley/sdepth.hpp"

#include "stanley/error.hpp"
#include "stanley/qdepth.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace stanley {

namespace {

using Clock = std::chrono::steady_clock;

Clock::time_point deadline_after(double seconds)
{
    if (!(seconds < 1e9))
        return Clock::time_point::max();
    return Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
}

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// The exact-cover instance for one (family, d) pair.
struct CoverModel {
    std::vector<Mask> members;        // sorted, as in the family
    std::vector<int> item_of_member;  // item id or -1
    std::vector<Interval> option_interval;
    ExactCover cover{0, 0};
};

int index_of(const std::vector<Mask>& sorted, Mask m)
{
    auto it = std::lower_bound(sorted.begin(), sorted.end(), m);
    if (it == sorted.end() || *it != m)
        return -1;
    return static_cast<int>(it - sorted.begin());
}

// Maps bit i of `compressed` onto the i-th set position of a top.
Mask expand(Mask compressed, const std::vector<int>& bits)
{
    Mask out = 0;
    for (std::size_t i = 0; i < bits.size(); ++i)
        if ((compressed >> i) & 1U)
            out |= Mask{1} << bits[i];
    return out;
}

CoverModel build_model(const SubsetFamily& family, int d, SearchForm form)
{
    CoverModel model;
    const int n = family.n();
    model.members.assign(family.masks().begin(), family.masks().end());
    const auto& members = model.members;

    int primary = 0;
    int secondary = 0;
    model.item_of_member.assign(members.size(), -1);
    for (std::size_t i = 0; i < members.size(); ++i)
        if (std::popcount(members[i]) < d)
            model.item_of_member[i] = primary++;
    for (std::size_t i = 0; i < members.size(); ++i) {
        const int c = std::popcount(members[i]);
        const bool top_candidate = form == SearchForm::normal ? c == d : c >= d;
        if (top_candidate)
            model.item_of_member[i] = primary + secondary++;
    }
    model.cover = ExactCover(primary, secondary);

    std::vector<int> top_bits;
    std::vector<std::uint8_t> good;
    std::vector<int> option_items;
    for (std::size_t gi = 0; gi < members.size(); ++gi) {
        const Mask top = members[gi];
        const int width = std::popcount(top);
        const bool top_candidate = form == SearchForm::normal ? width == d : width >= d;
        if (!top_candidate)
            continue;
        if (width > 24)
            throw ResourceLimitError("interval tops wider than 24 variables are not searched");
        top_bits.clear();
        for (Mask b = top; b != 0; b &= b - 1)
            top_bits.push_back(std::countr_zero(b));
        const Mask full = (Mask{1} << width) - 1;
        // good[s]: every H with expand(s) <= H <= top is a member. Fill from
        // the top down: good[s] = member(s) && good[s + e] for each missing e.
        good.assign(std::size_t{1} << width, 0);
        for (Mask s = full + 1; s-- > 0;) {
            const Mask real = expand(s, top_bits);
            if (index_of(members, real) < 0)
                continue;
            bool ok = true;
            for (Mask missing = full & ~s; missing != 0 && ok; missing &= missing - 1)
                ok = good[s | (missing & -missing)] != 0;
            good[s] = ok ? 1 : 0;
        }
        for (Mask s = 0; s <= full; ++s) {
            if (!good[s] || std::popcount(s) >= d)
                continue;
            const Mask lo = expand(s, top_bits);
            option_items.clear();
            // Every member of [lo, top].
            const Mask free = top & ~lo;
            Mask sub = 0;
            do {
                const int idx = index_of(members, lo | sub);
                const int item = model.item_of_member[static_cast<std::size_t>(idx)];
                if (item >= 0)
                    option_items.push_back(item);
                sub = (sub - free) & free;
            } while (sub != 0);
            model.cover.add_option(option_items);
            model.option_interval.emplace_back(VarSet(n, lo), VarSet(n, top));
        }
    }
    return model;
}

std::vector<Interval> assemble_witness(const SubsetFamily& family, const CoverModel& model,
                                       const std::vector<int>& chosen)
{
    const int n = family.n();
    std::vector<Interval> witness;
    std::vector<std::uint8_t> covered(model.members.size(), 0);
    for (int option : chosen) {
        const Interval& iv = model.option_interval[static_cast<std::size_t>(option)];
        witness.push_back(iv);
        for (const VarSet& h : iv.members())
            covered[static_cast<std::size_t>(index_of(model.members, h.bits()))] = 1;
    }
    for (std::size_t i = 0; i < model.members.size(); ++i)
        if (!covered[i])
            witness.emplace_back(VarSet(n, model.members[i]), VarSet(n, model.members[i]));
    std::sort(witness.begin(), witness.end(), [](const Interval& a, const Interval& b) {
        if (a.lo() != b.lo())
            return a.lo() < b.lo();
        return a.hi() < b.hi();
    });
    return witness;
}

ExactCover::Outcome solve_parallel(const CoverModel& model, std::vector<int>& chosen, const SearchControl& control,
                                   unsigned threads, std::uint64_t& nodes)
{
    const int branches = model.cover.root_branch_count();
    if (branches <= 1 || threads <= 1) {
        ExactCover local = model.cover;
        auto outcome = local.solve(chosen, control);
        nodes = local.nodes();
        return outcome;
    }

    std::atomic<int> next{0};
    std::atomic<int> best{std::numeric_limits<int>::max()};
    std::atomic<bool> any_interrupted{false};
    std::atomic<std::uint64_t> total_nodes{0};
    std::mutex mutex;
    std::vector<int> best_chosen;

    auto worker = [&] {
        ExactCover local = model.cover;
        std::vector<int> mine;
        while (true) {
            const int branch = next.fetch_add(1);
            if (branch >= branches || branch > best.load())
                break;
            SearchControl sub = control;
            sub.stop = [&best, branch, parent = control.stop] {
                return best.load(std::memory_order_relaxed) < branch || (parent && parent());
            };
            auto outcome = local.solve(mine, sub, branch);
            if (outcome == ExactCover::Outcome::solved) {
                std::lock_guard<std::mutex> lock(mutex);
                if (branch < best.load()) {
                    best.store(branch);
                    best_chosen = mine;
                }
            } else if (outcome == ExactCover::Outcome::interrupted && best.load() > branch) {
                any_interrupted.store(true);
            }
        }
        total_nodes.fetch_add(local.nodes());
    };

    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    nodes = total_nodes.load();
    if (best.load() != std::numeric_limits<int>::max()) {
        chosen = best_chosen;
        return ExactCover::Outcome::solved;
    }
    return any_interrupted.load() ? ExactCover::Outcome::interrupted : ExactCover::Outcome::exhausted;
}

PartitionSearch run_search(const SubsetFamily& family, int d, const SearchOptions& options,
                           const SearchControl& control)
{
    if (d < 0 || d > family.n())
        throw PreconditionError("candidate depth d=" + std::to_string(d) + " outside 0.." +
                                std::to_string(family.n()));
    const auto start = Clock::now();
    PartitionSearch result;
    CoverModel model = build_model(family, d, options.form);
    std::vector<int> chosen;
    auto outcome = solve_parallel(model, chosen, control, std::max(1U, options.threads), result.nodes);
    switch (outcome) {
    case ExactCover::Outcome::solved: {
        result.status = SearchStatus::found;
        result.witness = assemble_witness(family, model, chosen);
        auto check = verify_partition(family, result.witness, d);
        if (!check)
            throw std::logic_error("partition search produced an invalid witness: " + check.reason);
        break;
    }
    case ExactCover::Outcome::exhausted:
        result.status = SearchStatus::none;
        break;
    case ExactCover::Outcome::interrupted:
        result.status = SearchStatus::undecided;
        break;
    }
    result.seconds = seconds_since(start);
    return result;
}

} // namespace

PartitionSearch has_partition(const SubsetFamily& family, int d, const SearchOptions& options)
{
    if (!(options.budget_seconds > 0))
        return {};
    SearchControl control;
    control.deadline = deadline_after(options.budget_seconds);
    control.cancel = options.cancel;
    return run_search(family, d, options, control);
}

SDepthResult sdepth(const SubsetFamily& family, const SearchOptions& options)
{
    SDepthResult result;
    if (family.empty()) {
        result.status = DepthStatus::empty;
        result.value = family.n();
        result.start = family.n();
        return result;
    }
    SearchControl control;
    control.deadline = deadline_after(options.budget_seconds);
    control.cancel = options.cancel;

    result.start = std::min(qdepth(family).value, family.max_cardinality());
    if (!(options.budget_seconds > 0)) {
        result.status = DepthStatus::undecided;
        result.value = result.start;
        return result;
    }
    for (int d = result.start; d >= 0; --d) {
        PartitionSearch level = run_search(family, d, options, control);
        result.levels.push_back({d, level.status, level.nodes, level.seconds});
        if (level.status == SearchStatus::found) {
            result.status = DepthStatus::decided;
            result.value = d;
            result.witness = std::move(level.witness);
            return result;
        }
        if (level.status == SearchStatus::undecided) {
            result.status = DepthStatus::undecided;
            result.value = d;
            return result;
        }
    }
    // d = 0 always succeeds with singletons.
    throw std::logic_error("sdepth scan fell through level 0");
}

UnionBound union_lower_bound(const SubsetFamily& first, const SubsetFamily& second, const SearchOptions& options)
{
    if (first.n() != second.n())
        throw PreconditionError("families live in different lattices");
    if (!first.disjoint_from(second))
        throw PreconditionError("families overlap; union_lower_bound needs a disjoint split");
    UnionBound out;
    SDepthResult a = sdepth(first, options);
    SDepthResult b = sdepth(second, options);
    if (a.status == DepthStatus::undecided || b.status == DepthStatus::undecided) {
        out.status = DepthStatus::undecided;
        return out;
    }
    if (a.status == DepthStatus::empty && b.status == DepthStatus::empty) {
        out.status = DepthStatus::empty;
        out.bound = first.n();
        return out;
    }
    out.status = DepthStatus::decided;
    if (a.status == DepthStatus::empty)
        out.bound = b.value;
    else if (b.status == DepthStatus::empty)
        out.bound = a.value;
    else
        out.bound = std::min(a.value, b.value);
    out.witness = a.witness;
    out.witness.insert(out.witness.end(), b.witness.begin(), b.witness.end());
    std::sort(out.witness.begin(), out.witness.end(), [](const Interval& x, const Interval& y) {
        if (x.lo() != y.lo())
            return x.lo() < y.lo();
        return x.hi() < y.hi();
    });
    return out;
}

} // namespace stanley
