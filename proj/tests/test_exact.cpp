#include "racahkit/exact.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace racahkit;

TEST(Rational, ParseAndCanonicalize)
{
    EXPECT_EQ(parse_rational("6/4"), make_rational(3, 2));
    EXPECT_EQ(parse_rational("-5"), BigRational(-5));
    EXPECT_EQ(parse_rational(" 2/-4 "), make_rational(-1, 2));
    EXPECT_TRUE(is_lowest_terms(parse_rational("10/15")));
    EXPECT_EQ(to_string(parse_rational("10/15")), "2/3");
}

TEST(Rational, ParseRejectsGarbage)
{
    EXPECT_THROW(parse_rational("abc"), DomainError);
    EXPECT_THROW(parse_rational("1/0"), DomainError);
    EXPECT_THROW(make_rational(1, 0), DomainError);
}

TEST(Rational, PowHandlesNegativeExponents)
{
    EXPECT_EQ(pow(make_rational(2, 3), 3), make_rational(8, 27));
    EXPECT_EQ(pow(make_rational(2, 3), -2), make_rational(9, 4));
    EXPECT_EQ(pow(make_rational(-7, 5), 0), BigRational(1));
    EXPECT_THROW(pow(BigRational(0), -1), DomainError);
}

TEST(Factorial, MatchesDirectProduct)
{
    for (long n = 0; n <= 30; ++n) {
        EXPECT_EQ(factorial(n), oracle::fact(n)) << n;
        EXPECT_EQ(factored_factorial(n).to_rational(), BigRational(oracle::fact(n))) << n;
    }
    EXPECT_THROW(factorial(-1), DomainError);
    EXPECT_THROW(factored_factorial(-1), DomainError);
}

TEST(Factorial, LegendreExponents)
{
    const FactoredRational f = factored_factorial(100);
    EXPECT_EQ(f.exponent(2), 97);
    EXPECT_EQ(f.exponent(5), 24);
    EXPECT_EQ(f.exponent(97), 1);
    EXPECT_EQ(f.exponent(101), 0);
}

TEST(HalfIntTest, Arithmetic)
{
    const HalfInt a = HalfInt::from_twice(3), b = HalfInt::from_int(2);
    EXPECT_EQ((a + b).twice(), 7);
    EXPECT_EQ((b - a).twice(), 1);
    EXPECT_FALSE(a.is_integer());
    EXPECT_EQ(b.as_integer(), 2);
    EXPECT_THROW(a.as_integer(), DomainError);
    EXPECT_EQ(a.str(), "3/2");
    EXPECT_EQ(a.to_rational(), make_rational(3, 2));
    EXPECT_LT(a, b);
}

TEST(FactoredRationalTest, RoundTripsIntegers)
{
    for (std::int64_t n : {-360, -1, 1, 2, 97, 1024, 999983}) {
        EXPECT_EQ(FactoredRational::from_integer(n).to_rational(), BigRational(n)) << n;
    }
    EXPECT_TRUE(FactoredRational::from_integer(0).is_zero());
}

TEST(FactoredRationalTest, MultiplyDividePow)
{
    auto x = FactoredRational::from_integer(12);
    auto y = FactoredRational::from_integer(-18);
    EXPECT_EQ((x * y).to_rational(), BigRational(-216));
    EXPECT_EQ((x / y).to_rational(), make_rational(-2, 3));
    EXPECT_EQ((x / y).pow(3).to_rational(), make_rational(-8, 27));
    EXPECT_EQ((x / y).pow(-2).to_rational(), make_rational(9, 4));
    EXPECT_THROW(x / FactoredRational::zero(), DomainError);
    EXPECT_TRUE((x * FactoredRational::zero()).is_zero());
}

TEST(SurdTest, SqrtExtractsSquares)
{
    const Surd s = sqrt_to_surd(FactoredRational::from_integer(72));
    EXPECT_EQ(s.coeff, BigRational(6));
    EXPECT_EQ(s.radicand, BigInt(2));
    const Surd t = sqrt_to_surd(FactoredRational::from_integer(3) / FactoredRational::from_integer(8));
    EXPECT_EQ(t.coeff, make_rational(1, 4));
    EXPECT_EQ(t.radicand, BigInt(6));
    EXPECT_TRUE(sqrt_to_surd(FactoredRational::zero()).is_zero());
    EXPECT_THROW(sqrt_to_surd(FactoredRational::from_integer(-4)), DomainError);
    EXPECT_EQ(to_string(s), "6*sqrt(2)");
    EXPECT_EQ(to_string(Surd(make_rational(1, 2))), "1/2");
}

TEST(SurdTest, SquareRootRoundTripProperty)
{
    std::mt19937_64 gen(2024);
    std::uniform_int_distribution<std::int64_t> num(1, 5000), den(1, 700);
    for (int k = 0; k < 300; ++k) {
        const std::int64_t p = num(gen), q = den(gen);
        const FactoredRational x = FactoredRational::from_integer(p) / FactoredRational::from_integer(q);
        const Surd s = sqrt_to_surd(x);
        const SurdSum sq = s * s;
        ASSERT_EQ(sq, SurdSum(make_rational(p, q))) << p << "/" << q;
    }
}

namespace
{

SurdSum random_sum(std::mt19937_64& gen)
{
    static const long radicands[] = {1, 2, 3, 5, 6, 7, 10, 15, 30};
    std::uniform_int_distribution<int> pick(0, 8), terms(0, 3);
    std::uniform_int_distribution<long> c(-9, 9), d(1, 6);
    SurdSum s;
    for (int t = terms(gen); t > 0; --t)
        s += SurdSum(Surd(make_rational(c(gen), d(gen)), BigInt(radicands[pick(gen)])));
    return s;
}

} // namespace

TEST(SurdSumTest, RingLaws)
{
    std::mt19937_64 gen(7);
    for (int k = 0; k < 200; ++k) {
        const SurdSum x = random_sum(gen), y = random_sum(gen), z = random_sum(gen);
        ASSERT_EQ(x * y, y * x);
        ASSERT_EQ((x * y) * z, x * (y * z));
        ASSERT_EQ(x * (y + z), x * y + x * z);
        ASSERT_EQ(x + y, y + x);
        ASSERT_TRUE((x - x).is_zero());
        ASSERT_NEAR((x * y).approx(), x.approx() * y.approx(), 1e-9 * (1 + std::abs(x.approx() * y.approx())));
    }
}

TEST(SurdSumTest, ProductOfSurdsUsesSquarefreeRadicand)
{
    const SurdSum p = Surd(BigRational(2), BigInt(6)) * Surd(make_rational(1, 3), BigInt(10));
    ASSERT_EQ(p.terms().size(), 1u);
    EXPECT_EQ(p.terms().begin()->first, BigInt(15));
    EXPECT_EQ(p.terms().begin()->second, make_rational(4, 3));
    EXPECT_EQ(p.str(), "4/3*sqrt(15)");
    EXPECT_EQ(SurdSum().str(), "0");
}
