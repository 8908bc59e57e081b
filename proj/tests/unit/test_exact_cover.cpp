#include "stanley/error.hpp"
#include "stanley/exact_cover.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace stanley;

namespace {

// Counts exact covers by plain recursion over option subsets.
bool brute_force_has_cover(int primary, int secondary, const std::vector<std::vector<int>>& options)
{
    const std::size_t m = options.size();
    for (std::uint32_t pick = 0; pick < (1U << m); ++pick) {
        std::vector<int> count(static_cast<std::size_t>(primary + secondary), 0);
        for (std::size_t i = 0; i < m; ++i)
            if ((pick >> i) & 1U)
                for (int item : options[i])
                    ++count[static_cast<std::size_t>(item)];
        bool ok = true;
        for (int i = 0; i < primary + secondary; ++i) {
            const int c = count[static_cast<std::size_t>(i)];
            if ((i < primary && c != 1) || c > 1)
                ok = false;
        }
        if (ok)
            return true;
    }
    return false;
}

} // namespace

TEST(ExactCover, KnuthExample)
{
    // The 7-item example with the unique cover {A D}, {B G}, {C E F}.
    ExactCover ec(7, 0);
    const std::vector<std::vector<int>> options{{2, 4}, {0, 3, 6}, {1, 2, 5}, {0, 3, 5}, {1, 6}, {3, 4, 6}};
    for (const auto& o : options)
        ec.add_option(o);
    std::vector<int> chosen;
    ASSERT_EQ(ec.solve(chosen, {}), ExactCover::Outcome::solved);
    std::sort(chosen.begin(), chosen.end());
    EXPECT_EQ(chosen, (std::vector<int>{0, 3, 4}));
}

TEST(ExactCover, SecondaryItemsAtMostOnce)
{
    // Items 0,1 primary; item 2 secondary shared by both options covering 0 and 1.
    ExactCover ec(2, 1);
    ec.add_option(std::vector<int>{0, 2});
    ec.add_option(std::vector<int>{1, 2});
    std::vector<int> chosen;
    EXPECT_EQ(ec.solve(chosen, {}), ExactCover::Outcome::exhausted);

    ExactCover ok(2, 1);
    ok.add_option(std::vector<int>{0, 2});
    ok.add_option(std::vector<int>{1});
    EXPECT_EQ(ok.solve(chosen, {}), ExactCover::Outcome::solved);
}

TEST(ExactCover, NoPrimaryItemsIsTriviallySolved)
{
    ExactCover ec(0, 2);
    std::vector<int> chosen;
    EXPECT_EQ(ec.solve(chosen, {}), ExactCover::Outcome::solved);
    EXPECT_TRUE(chosen.empty());
}

TEST(ExactCover, RejectsMalformedOptions)
{
    ExactCover ec(2, 0);
    EXPECT_THROW(ec.add_option(std::vector<int>{}), PreconditionError);
    EXPECT_THROW(ec.add_option(std::vector<int>{2}), PreconditionError);
    EXPECT_THROW(ec.add_option(std::vector<int>{1, 1}), PreconditionError);
}

TEST(ExactCover, AgreesWithBruteForce)
{
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 400; ++trial) {
        const int primary = 1 + static_cast<int>(rng() % 6);
        const int secondary = static_cast<int>(rng() % 3);
        const int m = 1 + static_cast<int>(rng() % 10);
        std::vector<std::vector<int>> options;
        ExactCover ec(primary, secondary);
        for (int i = 0; i < m; ++i) {
            std::set<int> items;
            const int size = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::min(3, primary + secondary)));
            while (static_cast<int>(items.size()) < size)
                items.insert(static_cast<int>(rng() % static_cast<unsigned>(primary + secondary)));
            options.emplace_back(items.begin(), items.end());
            ec.add_option(options.back());
        }
        std::vector<int> chosen;
        const auto outcome = ec.solve(chosen, {});
        const bool expected = brute_force_has_cover(primary, secondary, options);
        ASSERT_EQ(outcome == ExactCover::Outcome::solved, expected) << "trial " << trial;
        if (expected) {
            std::vector<int> count(static_cast<std::size_t>(primary + secondary), 0);
            for (int o : chosen)
                for (int item : options[static_cast<std::size_t>(o)])
                    ++count[static_cast<std::size_t>(item)];
            for (int i = 0; i < primary; ++i)
                EXPECT_EQ(count[static_cast<std::size_t>(i)], 1);
            for (int i = primary; i < primary + secondary; ++i)
                EXPECT_LE(count[static_cast<std::size_t>(i)], 1);
        }
    }
}

TEST(ExactCover, RootBranchesPartitionTheSearch)
{
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 200; ++trial) {
        const int primary = 2 + static_cast<int>(rng() % 5);
        ExactCover ec(primary, 0);
        for (int i = 0; i < 12; ++i) {
            std::set<int> items;
            const int size = 1 + static_cast<int>(rng() % 2);
            while (static_cast<int>(items.size()) < size)
                items.insert(static_cast<int>(rng() % static_cast<unsigned>(primary)));
            ec.add_option(std::vector<int>(items.begin(), items.end()));
        }
        std::vector<int> chosen;
        const bool whole = ec.solve(chosen, {}) == ExactCover::Outcome::solved;
        bool any = false;
        for (int b = 0; b < ec.root_branch_count(); ++b)
            any = any || ec.solve(chosen, {}, b) == ExactCover::Outcome::solved;
        EXPECT_EQ(whole, any);
    }
}

TEST(ExactCover, DeadlineInterrupts)
{
    // Perfect matchings of 25 points via all pairs: none exist, and proving
    // it takes far more than the nodes explored between deadline checks.
    ExactCover ec(25, 0);
    for (int i = 0; i < 25; ++i)
        for (int j = i + 1; j < 25; ++j)
            ec.add_option(std::vector<int>{i, j});
    std::vector<int> chosen;
    SearchControl control;
    control.deadline = std::chrono::steady_clock::now();
    EXPECT_EQ(ec.solve(chosen, control), ExactCover::Outcome::interrupted);

    std::atomic<bool> cancel{true};
    SearchControl cancelled;
    cancelled.cancel = &cancel;
    EXPECT_EQ(ec.solve(chosen, cancelled), ExactCover::Outcome::interrupted);
}
