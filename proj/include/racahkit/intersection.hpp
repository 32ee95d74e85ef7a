///
/// \file   racahkit/intersection.hpp
///
/// \brief  The matrices B_i = v_i(A), B*_i = v_i(A*) and the intersection
///         numbers p^h_{i,j} = (B_i)_{h,j}, computed along four independent
///         routes.
///

#ifndef RACAHKIT_INTERSECTION_HPP
#define RACAHKIT_INTERSECTION_HPP

#include "racahkit/exact.hpp"
#include "racahkit/hyper.hpp"
#include "racahkit/leonard.hpp"
#include "racahkit/matrix.hpp"
#include "racahkit/racah.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

namespace racahkit
{

/// B_0 .. B_D by B_{i+1} = (A B_i - a_i B_i - b_{i-1} B_{i-1}) / c_{i+1}.
inline std::vector<RationalMatrix> b_matrices(const RacahSystem& sys, long up_to = -1)
{
    if (up_to < 0)
        up_to = sys.D;
    const RationalMatrix A = matrix_a(sys);
    std::vector<RationalMatrix> B;
    B.reserve(static_cast<std::size_t>(up_to) + 1);
    B.push_back(RationalMatrix::identity(sys.order()));
    if (up_to >= 1)
        B.push_back(A);
    for (long i = 1; i < up_to; ++i) {
        RationalMatrix next = A * B[i];
        next -= B[i] * sys.a[i];
        next -= B[i - 1] * sys.b[i - 1];
        next *= 1 / sys.c[i + 1];
        B.push_back(std::move(next));
    }
    return B;
}

inline RationalMatrix b_matrix(const RacahSystem& sys, long i)
{
    if (i < 0 || i > sys.D)
        throw DomainError("B index " + std::to_string(i) + " outside [0, " + std::to_string(sys.D) + "]");
    return std::move(b_matrices(sys, i).back());
}

/// diag(v_i(theta_0), ..., v_i(theta_D)).
inline RationalMatrix b_star_matrix(const RacahSystem& sys, const RationalMatrix& v, long i)
{
    if (i < 0 || i > sys.D)
        throw DomainError("B* index " + std::to_string(i) + " outside [0, " + std::to_string(sys.D) + "]");
    RationalMatrix m(sys.order());
    for (std::size_t j = 0; j < sys.order(); ++j)
        m(j, j) = v(static_cast<std::size_t>(i), j);
    return m;
}

inline RationalMatrix b_star_matrix(const RacahSystem& sys, long i) { return b_star_matrix(sys, v_table(sys), i); }

enum class TensorRoute
{
    matrix,     ///< entries of B_i
    triple_sum, ///< k_i k_j / nu * sum_t k_t u_t(theta_i) u_t(theta_j) u_t(theta_h)
    racah,      ///< (2i+1)(2j+1)(D+1) W(D/2, D/2, i, h; j, D/2)^2
    appendix,   ///< closed form C^h_{i,j} on the cone i <= j <= h <= i+j
};

inline constexpr std::array<TensorRoute, 4> all_routes = {TensorRoute::matrix, TensorRoute::triple_sum,
                                                          TensorRoute::racah, TensorRoute::appendix};

inline std::string to_string(TensorRoute r)
{
    switch (r) {
    case TensorRoute::matrix: return "matrix";
    case TensorRoute::triple_sum: return "triple_sum";
    case TensorRoute::racah: return "racah";
    case TensorRoute::appendix: return "appendix";
    }
    return "?";
}

inline std::optional<TensorRoute> parse_route(const std::string& s)
{
    if (s == "matrix")
        return TensorRoute::matrix;
    if (s == "sum" || s == "triple_sum")
        return TensorRoute::triple_sum;
    if (s == "racah")
        return TensorRoute::racah;
    if (s == "appendix")
        return TensorRoute::appendix;
    return std::nullopt;
}

/// p^h_{i,j} for one D, indexed (h, i, j).
struct IntersectionTensor
{
    long                     D     = 0;
    TensorRoute              route = TensorRoute::matrix;
    std::vector<BigRational> p;

    IntersectionTensor() = default;
    IntersectionTensor(long d, TensorRoute r) : D(d), route(r), p(cube(d)) {}

    std::size_t order() const { return static_cast<std::size_t>(D) + 1; }

    BigRational& at(std::size_t h, std::size_t i, std::size_t j) { return p[(h * order() + i) * order() + j]; }
    const BigRational& at(std::size_t h, std::size_t i, std::size_t j) const
    {
        return p[(h * order() + i) * order() + j];
    }

    /// Entry-wise equality; the route tag is ignored.
    bool same_values(const IntersectionTensor& o) const { return D == o.D && p == o.p; }

private:
    static std::size_t cube(long d)
    {
        const auto n = static_cast<std::size_t>(d) + 1;
        return n * n * n;
    }
};

namespace detail
{

inline IntersectionTensor tensor_from_matrices(const RacahSystem& sys, const std::vector<RationalMatrix>& B)
{
    IntersectionTensor t(sys.D, TensorRoute::matrix);
    const std::size_t n = sys.order();
    for (std::size_t h = 0; h < n; ++h)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                t.at(h, i, j) = B[i](h, j);
    return t;
}

inline IntersectionTensor tensor_triple_sum(const RacahSystem& sys)
{
    IntersectionTensor t(sys.D, TensorRoute::triple_sum);
    const RationalMatrix u = u_table(sys);
    const std::size_t n = sys.order();
    for (std::size_t h = 0; h < n; ++h) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                BigRational s = 0;
                for (std::size_t m = 0; m < n; ++m)
                    s += sys.k[m] * u(m, i) * u(m, j) * u(m, h);
                t.at(h, i, j) = sys.k[i] * sys.k[j] / sys.nu * s;
            }
        }
    }
    return t;
}

/// W(D/2, D/2, i, h; j, D/2).
inline Surd tensor_w(long D, long h, long i, long j)
{
    return racah_w(SpinSextuple::from_twice(D, D, 2 * i, 2 * h, 2 * j, D));
}

inline BigRational surd_square(const Surd& w)
{
    SurdSum sq = SurdSum(w) * SurdSum(w);
    if (sq.is_zero())
        return 0;
    if (sq.terms().size() != 1 || sq.terms().begin()->first != 1)
        throw InternalError("square of a surd kept a radicand");
    return sq.terms().begin()->second;
}

inline IntersectionTensor tensor_racah(const RacahSystem& sys)
{
    IntersectionTensor t(sys.D, TensorRoute::racah);
    const long D = sys.D;
    for (long h = 0; h <= D; ++h)
        for (long i = 0; i <= D; ++i)
            for (long j = 0; j <= D; ++j)
                t.at(h, i, j) = BigRational((2 * i + 1) * (2 * j + 1) * (D + 1)) * surd_square(tensor_w(D, h, i, j));
    return t;
}

} // namespace detail

/// C^h_{i,j} for i <= j <= h <= i+j.
inline BigRational closed_form_coefficient(long D, long h, long i, long j)
{
    if (!(0 <= i && i <= j && j <= h && h <= i + j && h <= D))
        throw DomainError("closed-form coefficient needs 0 <= i <= j <= h <= min(i+j, D)");
    auto f = [](long n) { return factored_factorial(n); };
    FactoredRational lead = f(D - i) * f(D - j) * f(D - h) * f(j + h - i) * f(h + i - j)
                            / (f(D + i + 1) * f(D + j + 1) * f(D + h + 1) * f(i + j + h + 1) * f(i + j - h));
    FactoredRational inner = f(h) * f(D + i + j + 1) / (f(h - i) * f(h - j) * f(D - h));
    return (lead * inner.pow(2)).to_rational();
}

/// p^h_{i,j} from the closed form. Off the cone i <= j <= h the
/// value is recovered from k_h p^h_{i,j} being symmetric in (h, i, j).
inline BigRational closed_form_p(const RacahSystem& sys, long h, long i, long j)
{
    std::array<long, 3> s{h, i, j};
    std::sort(s.begin(), s.end());
    const auto [x, y, z] = s;
    if (z > x + y)
        return 0;
    HypParams series{{BigRational(-y), BigRational(-x), BigRational(z - x - y), BigRational(z - sys.D)},
                     {BigRational(-sys.D - x - y - 1), BigRational(z - y + 1), BigRational(z - x + 1)}};
    const BigRational F = eval_4f3_unit(series);
    const BigRational canonical =
        closed_form_coefficient(sys.D, z, x, y) * BigRational((2 * x + 1) * (2 * y + 1) * (sys.D + 1)) * F * F;
    return canonical * sys.k[z] / sys.k[h];
}

inline IntersectionTensor p_tensor(const RacahSystem& sys, TensorRoute route)
{
    switch (route) {
    case TensorRoute::matrix: return detail::tensor_from_matrices(sys, b_matrices(sys));
    case TensorRoute::triple_sum: return detail::tensor_triple_sum(sys);
    case TensorRoute::racah: return detail::tensor_racah(sys);
    case TensorRoute::appendix: {
        IntersectionTensor t(sys.D, TensorRoute::appendix);
        for (long h = 0; h <= sys.D; ++h)
            for (long i = 0; i <= sys.D; ++i)
                for (long j = 0; j <= sys.D; ++j)
                    t.at(h, i, j) = closed_form_p(sys, h, i, j);
        return t;
    }
    }
    throw DomainError("unknown route");
}

/// First (i, j) where B_i B_j != sum_h p^h_{i,j} B_h, checked for both the
/// B and the B* families; nullopt when the structure constants are exact.
inline std::optional<std::pair<long, long>> structure_violation(const RacahSystem& sys,
                                                               const std::vector<RationalMatrix>& B,
                                                               const IntersectionTensor& p)
{
    const RationalMatrix v = v_table(sys);
    std::vector<RationalMatrix> Bs;
    for (long i = 0; i <= sys.D; ++i)
        Bs.push_back(b_star_matrix(sys, v, i));
    const std::size_t n = sys.order();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            RationalMatrix expected(n), expected_star(n);
            for (std::size_t h = 0; h < n; ++h) {
                const BigRational& c = p.at(h, i, j);
                if (sgn(c) == 0)
                    continue;
                expected += B[h] * c;
                expected_star += Bs[h] * c;
            }
            if (B[i] * B[j] != expected || Bs[i] * Bs[j] != expected_star)
                return std::pair{static_cast<long>(i), static_cast<long>(j)};
        }
    }
    return std::nullopt;
}

inline bool structure_check(const RacahSystem& sys)
{
    const auto B = b_matrices(sys);
    return !structure_violation(sys, B, detail::tensor_from_matrices(sys, B));
}

} // namespace racahkit

#endif // RACAHKIT_INTERSECTION_HPP
