#include "stanley/binomial.hpp"
#include "stanley/error.hpp"
#include "stanley/ideal.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace stanley;

namespace {

std::vector<VarSet> random_sets(std::mt19937_64& rng, int n, int count)
{
    std::vector<VarSet> out;
    for (int i = 0; i < count; ++i)
        out.emplace_back(n, rng() & low_bits(n));
    return out;
}

bool divides_any(const std::vector<VarSet>& gens, const VarSet& u)
{
    for (const auto& g : gens)
        if (g.is_subset_of(u))
            return true;
    return false;
}

} // namespace

TEST(MonomialIdeal, MinimalizeDropsMultiplesAndDuplicates)
{
    const std::vector<VarSet> gens{VarSet(4, {1, 2}), VarSet(4, {1}), VarSet(4, {1, 3}), VarSet(4, {2, 3}),
                                   VarSet(4, {2, 3})};
    const MonomialIdeal I = minimalize(gens, 4);
    ASSERT_EQ(I.size(), 2U);
    EXPECT_EQ(I.generators()[0], VarSet(4, {1}));
    EXPECT_EQ(I.generators()[1], VarSet(4, {2, 3}));
}

TEST(MonomialIdeal, MinimalizeMatchesDivisibilityOnRandomInputs)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const auto gens = random_sets(rng, n, 1 + static_cast<int>(rng() % 8));
        const MonomialIdeal I = minimalize(gens, n);
        // Membership agrees with the raw generator list on every subset.
        for (Mask s = 0; s <= low_bits(n); ++s)
            ASSERT_EQ(I.contains(VarSet(n, s)), divides_any(gens, VarSet(n, s)));
        // No generator divides another.
        for (const auto& a : I.generators())
            for (const auto& b : I.generators())
                if (a != b)
                    ASSERT_FALSE(a.is_subset_of(b));
    }
}

TEST(MonomialIdeal, UnitAndZero)
{
    const MonomialIdeal zero = MonomialIdeal::zero(3);
    EXPECT_TRUE(zero.is_zero());
    EXPECT_FALSE(zero.contains(VarSet::full(3)));
    const MonomialIdeal unit = MonomialIdeal::unit(3);
    EXPECT_TRUE(unit.is_unit());
    EXPECT_TRUE(unit.contains(VarSet(3, Mask{0})));
    EXPECT_THROW(minimalize(std::vector<VarSet>{VarSet(3, Mask{0})}, 3, MinimalizeOptions{false}),
                 PreconditionError);
}

TEST(MonomialIdeal, SquarefreeVeronese)
{
    for (int n = 1; n <= 8; ++n)
        for (int m = 0; m <= n; ++m) {
            const MonomialIdeal I = MonomialIdeal::squarefree_veronese(n, m);
            EXPECT_EQ(BigInt(I.size()), binomial(n, m));
            for (const auto& g : I.generators())
                EXPECT_EQ(g.cardinality(), m);
        }
    EXPECT_EQ(MonomialIdeal::maximal(5).size(), 5U);
    EXPECT_EQ(MonomialIdeal::maximal(5).generating_degree(), 1);
    EXPECT_THROW(MonomialIdeal::squarefree_veronese(3, 4), PreconditionError);
}

TEST(MonomialIdeal, SubidealByDivisibility)
{
    const MonomialIdeal J = minimalize(std::vector<VarSet>{VarSet(4, {1}), VarSet(4, {2, 3})}, 4);
    const MonomialIdeal I = minimalize(std::vector<VarSet>{VarSet(4, {1, 4}), VarSet(4, {2, 3, 4})}, 4);
    EXPECT_TRUE(I.is_subideal_of(J));
    EXPECT_FALSE(J.is_subideal_of(I));
    EXPECT_TRUE(J.is_subideal_of(J));
}

TEST(MonomialIdeal, ColonIdeal)
{
    // (x1x2, x3) : x2 = (x1, x3)
    const MonomialIdeal I = minimalize(std::vector<VarSet>{VarSet(3, {1, 2}), VarSet(3, {3})}, 3);
    const MonomialIdeal Q = colon(I, VarSet(3, {2}));
    EXPECT_EQ(Q, minimalize(std::vector<VarSet>{VarSet(3, {1}), VarSet(3, {3})}, 3));
    // u in I gives the unit ideal.
    EXPECT_TRUE(colon(I, VarSet(3, {3})).is_unit());
}

TEST(MonomialIdeal, ColonMatchesDefinitionOnRandomInputs)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const MonomialIdeal I = minimalize(random_sets(rng, n, 1 + static_cast<int>(rng() % 5)), n);
        const VarSet u(n, rng() & low_bits(n));
        const MonomialIdeal Q = colon(I, u);
        // v in I : u iff lcm(u, v) in I, for squarefree monomials.
        for (Mask s = 0; s <= low_bits(n); ++s) {
            const VarSet v(n, s);
            ASSERT_EQ(Q.contains(v), I.contains(v | u));
        }
    }
}

TEST(Binomial, Conventions)
{
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(binomial(5, 0), 1);
    EXPECT_EQ(binomial(0, 0), 1);
    EXPECT_EQ(binomial(-1, 0), 1);
    EXPECT_EQ(binomial(3, 4), 0);
    EXPECT_EQ(binomial(-2, 1), 0);
    EXPECT_EQ(binomial(5, -1), 0);
    EXPECT_EQ(binomial(100, 50), BigInt("100891344545564193334812497256"));
    EXPECT_EQ(binomial_u64(62, 31), 465428353255261088ULL);
    EXPECT_THROW(binomial_u64(100, 50), ResourceLimitError);
}

TEST(Binomial, PascalRule)
{
    for (int top = 1; top <= 60; ++top)
        for (int k = 1; k <= top; ++k)
            ASSERT_EQ(binomial(top, k), binomial(top - 1, k) + binomial(top - 1, k - 1));
}
