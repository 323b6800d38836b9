#include <gtest/gtest.h>

#include <pbn/theta_ring.hpp>

using namespace pbn;

namespace {

Rational q(long n, long d = 1)
{
    return Rational(n, d);
}

ThetaClass tp(Rational c, int e)
{
    return {std::move(c), e, Generator::theta_prime};
}

} // namespace

TEST(MakeSpace, UnramifiedPlusMinus)
{
    auto s = make_space(PrymFlavor::unramified_pm, 4, 0);
    EXPECT_EQ(s.dim, 3);
    ASSERT_TRUE(s.theta_top);
    EXPECT_EQ(*s.theta_top, 6);
    EXPECT_EQ(s.generator(), Generator::xi);
}

TEST(MakeSpace, RamifiedTwoBranchPoints)
{
    auto s = make_space(PrymFlavor::ramified_twisted, 3, 1);
    EXPECT_EQ(s.dim, 3);
    EXPECT_EQ(*s.theta_top, 48);
}

TEST(MakeSpace, RamifiedFourBranchPoints)
{
    auto s = make_space(PrymFlavor::ramified_twisted, 2, 2);
    EXPECT_EQ(s.dim, 3);
    EXPECT_EQ(*s.theta_top, 24);
}

TEST(MakeSpace, UnramifiedTwistedHasNoTopDegree)
{
    auto s = make_space(PrymFlavor::ramified_twisted, 5, 0);
    EXPECT_EQ(s.dim, 4);
    EXPECT_FALSE(s.theta_top);
    EXPECT_THROW(degree(tp(1, 4), s), UnsupportedError);
}

TEST(MakeSpace, RejectsUnsupportedCombinations)
{
    EXPECT_THROW(make_space(PrymFlavor::unramified_pm, 4, 1), ParameterError);
    EXPECT_THROW(make_space(PrymFlavor::ramified_twisted, 4, 3), ParameterError);
    EXPECT_THROW(make_space(PrymFlavor::ramified_twisted, 1, 1), ParameterError);
}

TEST(MakeSpace, TopDegreeTable)
{
    Integer fact = 1;
    for (int g = 2; g <= 30; ++g) {
        Integer fact_gm1 = fact; // (g-1)!
        fact *= g;               // g!
        Integer two_g = Integer(1) << g;
        EXPECT_EQ(*make_space(PrymFlavor::unramified_pm, g, 0).theta_top, fact_gm1);
        EXPECT_EQ(*make_space(PrymFlavor::ramified_twisted, g, 1).theta_top, two_g * fact);
        EXPECT_EQ(*make_space(PrymFlavor::ramified_twisted, g, 2).theta_top, two_g * fact * (g + 1));

        auto pm = make_space(PrymFlavor::unramified_pm, g, 0);
        EXPECT_EQ(degree(ThetaClass(1, g - 1, Generator::xi), pm), Rational(fact_gm1));
    }
}

TEST(Multiply, AddsExponentsAndMultipliesCoefficients)
{
    EXPECT_EQ(tp(1, 1) * tp(q(1, 2), 2), tp(q(1, 2), 3));
    auto x = tp(q(3, 7), 4);
    EXPECT_EQ(ThetaClass::unit(Generator::theta_prime) * x, x);
}

TEST(Multiply, GeneratorMismatch)
{
    EXPECT_THROW(multiply(ThetaClass(1, 1, Generator::xi), tp(1, 1)), GeneratorMismatch);
}

TEST(ThetaClassTest, ZeroIsCanonical)
{
    EXPECT_EQ(tp(0, 5), tp(0, 0));
    EXPECT_EQ(tp(0, 5).exponent(), 0);
    EXPECT_EQ(tp(q(2, 4), 1).coeff(), q(1, 2));
}

TEST(Degree, EvaluatesAgainstTopSelfIntersection)
{
    EXPECT_EQ(degree(tp(q(1, 24), 3), make_space(PrymFlavor::ramified_twisted, 3, 1)), 2);
    EXPECT_EQ(degree(ThetaClass(q(1, 3), 3, Generator::xi), make_space(PrymFlavor::unramified_pm, 4, 0)), 2);
}

TEST(Degree, Errors)
{
    auto s = make_space(PrymFlavor::ramified_twisted, 3, 1);
    EXPECT_THROW(degree(tp(1, 2), s), DimensionMismatch);
    EXPECT_THROW(degree(ThetaClass(1, 3, Generator::xi), s), GeneratorMismatch);
}

TEST(Substitute, ThetaPrimeIsTwiceXi)
{
    EXPECT_EQ(substitute_theta_prime_as_2xi(tp(q(1, 2), 1)), ThetaClass(1, 1, Generator::xi));
    EXPECT_EQ(substitute_theta_prime_as_2xi(tp(q(1, 24), 3)), ThetaClass(q(1, 3), 3, Generator::xi));
    EXPECT_EQ(substitute_theta_prime_as_2xi(tp(q(5, 9), 0)), ThetaClass(q(5, 9), 0, Generator::xi));
    EXPECT_THROW(substitute_theta_prime_as_2xi(ThetaClass(1, 1, Generator::xi)), GeneratorMismatch);
}

TEST(Substitute, ScalingBackIsIdentityOnCoefficients)
{
    for (int e = 0; e <= 12; ++e) {
        auto c = tp(q(7, 3 + e), e);
        auto s = substitute_theta_prime_as_2xi(c);
        EXPECT_EQ(s.coeff() / Rational(pow2(static_cast<unsigned>(e))), c.coeff());
        EXPECT_EQ(s.exponent(), e);
    }
}
