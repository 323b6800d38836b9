#include <functional>

#include <gtest/gtest.h>

#include <pbn/bn_numerics.hpp>
#include <pbn/limit_series.hpp>

using namespace pbn;

namespace {

using Seqs = std::vector<VanishingSequence>;

/// Test-only oracle: all sequences in [0, d] of length r+1 with the given sum
/// and parity (or gap >= 2), generated recursively without touching rho.
Seqs oracle_candidates(int d, int r, long sum, bool gap_only)
{
    Seqs out;
    std::vector<int> v;
    std::function<void(int)> walk = [&](int lo) {
        if (static_cast<int>(v.size()) == r + 1) {
            long total = 0;
            for (int x : v)
                total += x;
            if (sum >= 0 && total != sum)
                return;
            for (std::size_t i = 1; i < v.size(); ++i) {
                if (gap_only ? v[i] - v[i - 1] < 2 : (v[i] - v[0]) % 2 != 0)
                    return;
            }
            out.emplace_back(v);
            return;
        }
        for (int x = lo; x <= d; ++x) {
            v.push_back(x);
            walk(x + 1);
            v.pop_back();
        }
    };
    walk(0);
    return out;
}

} // namespace

TEST(ComplementaryVanishing, Values)
{
    EXPECT_EQ(complementary_vanishing(8, {3, 5}), VanishingSequence({3, 5}));
    EXPECT_EQ(complementary_vanishing(8, {0, 8}), VanishingSequence({0, 8}));
    EXPECT_EQ(complementary_vanishing(10, {1, 4, 6}), VanishingSequence({4, 6, 9}));
    EXPECT_THROW(complementary_vanishing(4, {0, 5}), RangeError);
}

TEST(ComplementaryVanishing, Involution)
{
    for (int d = 0; d <= 12; ++d)
        for (int r = 0; r <= 3; ++r)
            for (auto& a : oracle_candidates(d, r, -1, false)) // any sum
                EXPECT_EQ(complementary_vanishing(d, complementary_vanishing(d, a)), a);
    VanishingSequence a{1, 2, 7, 9};
    EXPECT_EQ(complementary_vanishing(11, complementary_vanishing(11, a)), a);
}

TEST(PrymLimitVanishing, ClosedForms)
{
    EXPECT_EQ(prym_limit_vanishing(5, 1), VanishingSequence({3, 5}));
    EXPECT_EQ(prym_limit_vanishing(4, 2), VanishingSequence({1, 3, 5}));
    EXPECT_EQ(prym_limit_vanishing(7, 0), VanishingSequence({6}));
    EXPECT_THROW(prym_limit_vanishing(2, 2), ParameterError);

    EXPECT_EQ(prym_limit_vanishing_ramified(5, 1), VanishingSequence({4, 6}));
    EXPECT_EQ(prym_limit_vanishing_ramified(3, 2), VanishingSequence({1, 3, 5}));
    EXPECT_EQ(prym_limit_vanishing_ramified(7, 0), VanishingSequence({7}));
    EXPECT_THROW(prym_limit_vanishing_ramified(2, 2), ParameterError);

    EXPECT_EQ(prym_limit_vanishing_dual(5, 1), VanishingSequence({3, 5}));
    EXPECT_EQ(prym_limit_vanishing_dual(6, 2), VanishingSequence({3, 5, 7}));
    EXPECT_EQ(prym_limit_vanishing_dual(7, 0), VanishingSequence({6}));
    EXPECT_THROW(prym_limit_vanishing_dual(5, 2), ParameterError); // needs g >= 6 at r = 2
}

TEST(PrymLimitVanishing, SelfComplementary)
{
    for (int g = 1; g <= 20; ++g)
        for (int r = 0; r <= 5; ++r) {
            if (g - 1 - r * (r + 1) / 2 < 0)
                continue;
            auto a = prym_limit_vanishing(g, r);
            EXPECT_EQ(complementary_vanishing(2 * g - 2, a), a);
        }
}

TEST(PrymLimitVanishing, SumIdentities)
{
    for (int g = 1; g <= 50; ++g)
        for (int r = 0; r <= 8; ++r) {
            if (g - 1 - r * (r + 1) / 2 >= 0) {
                EXPECT_EQ(prym_limit_vanishing(g, r).weight(), Int{r + 1} * (g - 1));
            }
            if (g - r * (r + 1) / 2 >= 0) {
                EXPECT_EQ(prym_limit_vanishing_ramified(g, r).weight(), Int{r + 1} * g);
            }
            if (g - (r + 1) * (r + 2) / 2 >= 0) {
                EXPECT_EQ(prym_limit_vanishing_dual(g, r), prym_limit_vanishing(g, r));
            }
        }
}

TEST(EnumerateCandidates, UnramifiedGenusFive)
{
    auto got = enumerate_candidates({LimitFlavor::unramified_delta1, 5, 1});
    Seqs expected{{0, 8}, {1, 7}, {2, 6}, {3, 5}};
    EXPECT_EQ(got, expected);
}

TEST(EnumerateCandidates, UnramifiedGenusThree)
{
    auto got = enumerate_candidates({LimitFlavor::unramified_delta1, 3, 1});
    Seqs expected{{0, 4}, {1, 3}};
    EXPECT_EQ(got, expected);
}

TEST(EnumerateCandidates, EmptyWhenUnsolvable)
{
    EXPECT_TRUE(enumerate_candidates({LimitFlavor::unramified_delta1, 2, 2}).empty());
    EXPECT_TRUE(enumerate_candidates({LimitFlavor::ramified_x_plus_y, 2, 2}).empty());
    EXPECT_TRUE(enumerate_candidates({LimitFlavor::ramified_dual, 5, 2}).empty());
}

TEST(EnumerateCandidates, MatchesIndependentOracle)
{
    for (int g = 1; g <= 9; ++g)
        for (int r = 0; r <= 3; ++r) {
            LimitProblem un{LimitFlavor::unramified_delta1, g, r};
            LimitProblem xy{LimitFlavor::ramified_x_plus_y, g, r};
            LimitProblem du{LimitFlavor::ramified_dual, g, r};
            if (un.solvable()) {
                EXPECT_EQ(enumerate_candidates(un), oracle_candidates(2 * g - 2, r, (r + 1L) * (g - 1), false));
            }
            if (xy.solvable()) {
                EXPECT_EQ(enumerate_candidates(xy), oracle_candidates(2 * g, r, (r + 1L) * g, true));
            }
            if (du.solvable()) {
                EXPECT_EQ(enumerate_candidates(du), oracle_candidates(2 * g - 2, r, (r + 1L) * (g - 1), false));
            }
        }
}

TEST(SolveUnique, Values)
{
    EXPECT_EQ(solve_unique({LimitFlavor::unramified_delta1, 5, 1}), VanishingSequence({3, 5}));
    EXPECT_EQ(solve_unique({LimitFlavor::ramified_x_plus_y, 5, 1}), VanishingSequence({4, 6}));
    EXPECT_EQ(solve_unique({LimitFlavor::unramified_delta1, 4, 2}), VanishingSequence({1, 3, 5}));
    EXPECT_EQ(solve_unique({LimitFlavor::ramified_dual, 6, 2}), VanishingSequence({3, 5, 7}));
    EXPECT_THROW(solve_unique({LimitFlavor::unramified_delta1, 2, 2}), ParameterError);
}

TEST(SolveUnique, EndpointFilterRejectsSpuriousCandidates)
{
    LimitProblem p{LimitFlavor::unramified_delta1, 5, 1};
    EXPECT_FALSE(passes_endpoint_filter(p, {0, 8}));
    EXPECT_FALSE(passes_endpoint_filter(p, {1, 7}));
    EXPECT_FALSE(passes_endpoint_filter(p, {2, 6}));
    EXPECT_TRUE(passes_endpoint_filter(p, {3, 5}));
}

TEST(SolveUnique, AgreesWithClosedFormsOverRange)
{
    for (int g = 1; g <= 12; ++g)
        for (int r = 0; r <= 4; ++r) {
            LimitProblem un{LimitFlavor::unramified_delta1, g, r};
            LimitProblem xy{LimitFlavor::ramified_x_plus_y, g, r};
            LimitProblem du{LimitFlavor::ramified_dual, g, r};
            if (un.solvable()) {
                EXPECT_EQ(solve_unique(un), prym_limit_vanishing(g, r));
            }
            if (xy.solvable()) {
                EXPECT_EQ(solve_unique(xy), prym_limit_vanishing_ramified(g, r));
            }
            if (du.solvable()) {
                EXPECT_EQ(solve_unique(du), prym_limit_vanishing_dual(g, r));
            }
        }
}

TEST(Additivity, Reports)
{
    auto rep = additivity_report(5, 1, {3, 5}, {3, 5});
    EXPECT_EQ(rep.lhs, 5);
    EXPECT_EQ(rep.aspect_a, 3);
    EXPECT_EQ(rep.aspect_b, 3);
    EXPECT_EQ(rep.bridge, -1);
    EXPECT_TRUE(rep.equality);
    EXPECT_EQ(rep.total(), rep.lhs);

    // rho alone cannot tell (0,8) from (3,5)
    rep = additivity_report(5, 1, {0, 8}, {0, 8});
    EXPECT_EQ(rep.aspect_a, 3);
    EXPECT_EQ(rep.aspect_b, 3);
    EXPECT_TRUE(rep.equality);

    rep = additivity_report(4, 0, {3}, {3});
    EXPECT_EQ(rep.lhs, 2 * rep.s);
    EXPECT_EQ(rep.bridge, 0);
    EXPECT_TRUE(rep.equality);
}

TEST(Additivity, HoldsForEverySolvedInstance)
{
    for (int g = 2; g <= 12; ++g)
        for (int r = 0; r <= 4; ++r) {
            LimitProblem p{LimitFlavor::unramified_delta1, g, r};
            if (!p.solvable())
                continue;
            auto a = solve_unique(p);
            auto rep = additivity_report(g, r, a, complementary_vanishing(p.degree(), a));
            EXPECT_TRUE(rep.equality) << g << " " << r;
            EXPECT_EQ(rep.total(), rep.lhs);
            EXPECT_EQ(rep.lhs, -r + 2 * rep.s);
        }
}

TEST(WLocus, Values)
{
    EXPECT_EQ(w_locus_expected_dim(4, 6, {0, 2}), 5);
    EXPECT_EQ(w_locus_expected_dim(4, 5, {0, 2}), 3);
    for (int gy = 1; gy <= 8; ++gy)
        for (int r = 0; r <= 3; ++r)
            EXPECT_EQ(w_locus_expected_dim(gy, gy + r, VanishingSequence::trivial(r)), gy);
}

TEST(WLocus, MatchesUnramifiedDimension)
{
    for (int g = 2; g <= 30; ++g)
        for (int r = 0; r <= 6 && r <= g - 1; ++r) {
            std::vector<int> even;
            for (int i = 0; i <= r; ++i)
                even.push_back(2 * i);
            EXPECT_EQ(w_locus_expected_dim(g - 1, g + r - 1, VanishingSequence(even)), expected_dim_V(g, 0, r).value);
            EXPECT_EQ(expected_dim_V(g, 0, r).value, g - 1 - r * (r + 1) / 2);
        }
}
