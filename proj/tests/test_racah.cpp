#include "racahkit/racah.hpp"
#include "racahkit/verify.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace racahkit;

namespace
{

SpinSextuple tw(long a, long b, long c, long d, long e, long f) { return SpinSextuple::from_twice(a, b, c, d, e, f); }

BigRational square(const Surd& w)
{
    const SurdSum s = w * w;
    return s.is_zero() ? BigRational(0) : s.terms().begin()->second;
}

void expect_matches_oracle(long a, long b, long c, long d, long e, long f)
{
    const Surd w = racah_w(tw(a, b, c, d, e, f));
    const oracle::WSquared o = oracle::racah_w(a, b, c, d, e, f);
    ASSERT_EQ(square(w), o.square) << tw(a, b, c, d, e, f).str();
    ASSERT_EQ(sgn(w.coeff), o.sign) << tw(a, b, c, d, e, f).str();
}

} // namespace

TEST(RacahW, DeskValues)
{
    EXPECT_EQ(racah_w(tw(1, 1, 1, 1, 0, 0)), Surd(make_rational(-1, 2)));
    EXPECT_EQ(racah_w(tw(1, 1, 2, 2, 2, 1)), Surd(make_rational(1, 3)));
}

TEST(RacahW, InadmissibleGivesZero)
{
    EXPECT_TRUE(racah_w(tw(1, 1, 1, 1, 1, 1)).is_zero());
    EXPECT_TRUE(racah_w(tw(2, 2, 2, 2, 6, 0)).is_zero());
    EXPECT_FALSE(all_triads_admissible(tw(1, 1, 1, 1, 1, 1)));
}

TEST(RacahW, NegativeSpinThrows)
{
    EXPECT_THROW(is_admissible(HalfInt::from_twice(-1), HalfInt::from_twice(1), HalfInt::from_twice(0)), DomainError);
}

TEST(RacahW, FrameIsSorted)
{
    const WIndexFrame fr = w_frame(tw(4, 2, 6, 2, 4, 4));
    EXPECT_TRUE(std::is_sorted(fr.alpha.begin(), fr.alpha.end()));
    EXPECT_TRUE(std::is_sorted(fr.beta.begin(), fr.beta.end()));
    EXPECT_GE(fr.beta[0], fr.alpha[3]);
}

TEST(RacahW, FramePermutationInvariance)
{
    const SpinSextuple s = tw(4, 3, 5, 4, 3, 3);
    WIndexFrame fr = w_frame(s);
    const Surd ref = racah_w_in_frame(s, fr);
    std::sort(fr.alpha.begin(), fr.alpha.end());
    do {
        std::array<std::int64_t, 3> b = fr.beta;
        std::sort(b.begin() + 1, b.end());
        do {
            WIndexFrame g{fr.alpha, b};
            ASSERT_EQ(racah_w_in_frame(s, g), ref);
        } while (std::next_permutation(b.begin() + 1, b.end()));
    } while (std::next_permutation(fr.alpha.begin(), fr.alpha.end()));
}

TEST(RacahW, ExhaustiveAgainstSingleSumFormula)
{
    // every sextuple with twice-spins up to 5
    int nonzero = 0;
    for (long a = 0; a <= 5; ++a)
        for (long b = 0; b <= 5; ++b)
            for (long c = 0; c <= 5; ++c)
                for (long d = 0; d <= 5; ++d)
                    for (long e = 0; e <= 5; ++e)
                        for (long f = 0; f <= 5; ++f) {
                            expect_matches_oracle(a, b, c, d, e, f);
                            nonzero += !racah_w(tw(a, b, c, d, e, f)).is_zero();
                        }
    EXPECT_GT(nonzero, 1000);
}

TEST(RacahW, RandomLargerSpinsAgainstSingleSumFormula)
{
    std::mt19937_64 gen(11);
    std::uniform_int_distribution<long> spin(0, 24);
    int hits = 0;
    while (hits < 300) {
        long s[6];
        for (auto& x : s)
            x = spin(gen);
        if (!oracle::racah_w(s[0], s[1], s[2], s[3], s[4], s[5]).sign)
            continue;
        ++hits;
        expect_matches_oracle(s[0], s[1], s[2], s[3], s[4], s[5]);
    }
}

TEST(RacahW, Symmetries)
{
    for (long a = 0; a <= 4; ++a)
        for (long b = 0; b <= 4; ++b)
            for (long c = 0; c <= 4; ++c)
                for (long d = 0; d <= 4; ++d)
                    for (long e = 0; e <= 4; ++e)
                        for (long f = 0; f <= 4; ++f) {
                            const Surd w = racah_w(tw(a, b, c, d, e, f));
                            ASSERT_EQ(racah_w(tw(b, a, d, c, e, f)), w);
                            ASSERT_EQ(racah_w(tw(c, d, a, b, e, f)), w);
                            ASSERT_EQ(racah_w(tw(a, c, b, d, f, e)), w);
                        }
}

TEST(RacahW, QuarterClosedForm)
{
    for (long D = 1; D <= 8; ++D)
        for (long i = 0; i <= D; ++i)
            for (long j = 0; j <= D; ++j)
                ASSERT_EQ(racah_w(tw(D, D, D, D, 2 * i, 2 * j)), Surd(w_quarter_closed(D, i, j))) << D << i << j;
    EXPECT_THROW(w_quarter_closed(0, 0, 0), DomainError);
    EXPECT_THROW(w_quarter_closed(3, 4, 0), DomainError);
}

TEST(BiedenharnElliott, SampledResidualsVanish)
{
    SampleStream rng(5);
    long nontrivial = 0;
    for (int k = 0; k < 300; ++k) {
        const BeTuple t = sample_be_tuple(rng, 10);
        const BeSides s = be_sides(t);
        ASSERT_EQ(s.lhs, s.rhs) << t.str();
        nontrivial += !s.rhs.is_zero();
    }
    EXPECT_GT(nontrivial, 100);
}

TEST(BiedenharnElliott, RightSideMatchesOracle)
{
    // a=a'=b=b'=c=c'=1/2, e=f=g=0 reduces the right side to W(1/2,1/2,0,0;0,1/2)^2
    const HalfInt h = HalfInt::from_twice(1), z = HalfInt::from_twice(0);
    const BeSides s = be_sides({h, h, h, h, h, h, z, z, z});
    EXPECT_EQ(s.lhs, s.rhs);
    EXPECT_EQ(s.rhs, SurdSum(oracle::racah_w(1, 1, 0, 0, 0, 1).square));
}

TEST(BiedenharnElliott, NegativeSpinThrows)
{
    const HalfInt h = HalfInt::from_twice(1), m = HalfInt::from_twice(-1);
    EXPECT_THROW(be_sides({h, h, h, h, h, m, h, h, h}), DomainError);
}
