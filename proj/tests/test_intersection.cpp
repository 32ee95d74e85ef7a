#include "racahkit/intersection.hpp"

#include <gtest/gtest.h>

using namespace racahkit;

TEST(BMatrix, DeskValues)
{
    EXPECT_EQ(b_matrix(build_system(1), 1)(1, 1), BigRational(2));
    const RationalMatrix B2 = b_matrix(build_system(2), 2);
    EXPECT_EQ(B2, (RationalMatrix{{0, 0, 5}, {0, make_rational(5, 4), make_rational(15, 4)},
                                  {1, make_rational(9, 4), make_rational(7, 4)}}));
    EXPECT_EQ(b_matrix(build_system(2), 1)(2, 1), make_rational(3, 4));
}

TEST(BMatrix, IndexOutOfRange)
{
    const RacahSystem sys = build_system(3);
    EXPECT_THROW(b_matrix(sys, 4), DomainError);
    EXPECT_THROW(b_matrix(sys, -1), DomainError);
    EXPECT_THROW(b_star_matrix(sys, 5), DomainError);
}

TEST(BMatrix, RowSumsAndIntertwining)
{
    for (long D = 1; D <= 8; ++D) {
        const RacahSystem sys = build_system(D);
        const RationalMatrix P = matrix_p(sys);
        const auto B = b_matrices(sys);
        for (long i = 0; i <= D; ++i) {
            for (std::size_t h = 0; h < sys.order(); ++h) {
                BigRational s = 0;
                for (std::size_t j = 0; j < sys.order(); ++j)
                    s += B[i](h, j);
                EXPECT_EQ(s, sys.k[i]);
            }
            EXPECT_EQ(P * B[i], b_star_matrix(sys, i) * P);
        }
    }
}

TEST(Routes, AllFourAgree)
{
    for (long D = 1; D <= 9; ++D) {
        const RacahSystem sys = build_system(D);
        const IntersectionTensor base = p_tensor(sys, TensorRoute::matrix);
        for (TensorRoute r : all_routes)
            EXPECT_TRUE(p_tensor(sys, r).same_values(base)) << D << ' ' << to_string(r);
    }
}

TEST(Routes, ParseNames)
{
    EXPECT_EQ(parse_route("sum"), TensorRoute::triple_sum);
    EXPECT_EQ(parse_route("appendix"), TensorRoute::appendix);
    EXPECT_FALSE(parse_route("bogus"));
    for (TensorRoute r : all_routes)
        EXPECT_EQ(parse_route(to_string(r)), r);
}

TEST(ClosedForm, DeskCoefficient)
{
    EXPECT_EQ(closed_form_coefficient(2, 2, 1, 1), make_rational(1, 36));
    EXPECT_THROW(closed_form_coefficient(2, 1, 2, 2), DomainError);
}

TEST(Tensor, NonnegativeBandedSymmetric)
{
    for (long D = 1; D <= 10; ++D) {
        const RacahSystem sys = build_system(D);
        const IntersectionTensor t = p_tensor(sys, TensorRoute::matrix);
        for (long h = 0; h <= D; ++h)
            for (long i = 0; i <= D; ++i)
                for (long j = 0; j <= D; ++j) {
                    const BigRational& p = t.at(h, i, j);
                    ASSERT_GE(p, 0);
                    ASSERT_EQ(p, t.at(h, j, i));
                    ASSERT_EQ(sys.k[h] * p, sys.k[i] * t.at(i, h, j));
                    if (h < std::abs(i - j) || h > i + j) {
                        ASSERT_EQ(p, 0) << D << h << i << j;
                    }
                }
    }
}

TEST(Structure, ConstantsAreExact)
{
    for (long D = 1; D <= 6; ++D)
        EXPECT_TRUE(structure_check(build_system(D))) << D;
}

TEST(Structure, DetectsCorruptedTensor)
{
    const RacahSystem sys = build_system(3);
    const auto B = b_matrices(sys);
    IntersectionTensor p = p_tensor(sys, TensorRoute::matrix);
    p.at(1, 1, 2) += 1;
    const auto bad = structure_violation(sys, B, p);
    ASSERT_TRUE(bad);
    EXPECT_EQ(*bad, (std::pair<long, long>{1, 2}));
}
