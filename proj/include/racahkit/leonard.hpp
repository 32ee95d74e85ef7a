///
/// \file   racahkit/leonard.hpp
///
/// \brief  The self-dual Racah-type Leonard pair of diameter D: parameter
///         tables, the matrices A, A*, P and the polynomial tables u, v.
///
/// For 0 <= i <= D,
///
///   c_i = 3 (D-i+1) i (D+i+1) / (D (D+2) (2i+1))
///   a_i = 3 i (i+1) / (D (D+2))
///   b_i = 3 (D-i) (i+1) (D+i+2) / (D (D+2) (2i+1))
///   theta_i = 3 - 2 a_i,   k_i = 2i + 1,   nu = (D+1)^2
///
/// and u_i(theta_j) = 4F3[-i, i+1, -j, j+1; 1, D+2, -D; 1].
///

#ifndef RACAHKIT_LEONARD_HPP
#define RACAHKIT_LEONARD_HPP

#include "racahkit/exact.hpp"
#include "racahkit/hyper.hpp"
#include "racahkit/matrix.hpp"

#include <string>
#include <vector>

namespace racahkit
{

/// Scalar data of the Leonard pair. All tables have length D+1 and are
/// indexed 0..D; c[0] and b[D] lie outside the defined ranges and hold 0.
struct RacahSystem
{
    long                     D = 0;
    std::vector<BigRational> c;
    std::vector<BigRational> a;
    std::vector<BigRational> b;
    std::vector<BigRational> theta;
    std::vector<BigRational> k;
    BigRational              nu;

    std::size_t order() const { return static_cast<std::size_t>(D) + 1; }
};

inline RacahSystem build_system(long D)
{
    if (D < 1)
        throw DomainError("diameter D must be at least 1, got " + std::to_string(D));

    RacahSystem sys;
    sys.D = D;
    const std::size_t n = sys.order();
    sys.c.assign(n, 0);
    sys.a.assign(n, 0);
    sys.b.assign(n, 0);
    sys.theta.assign(n, 0);
    sys.k.assign(n, 0);

    const BigRational scale = make_rational(3, D * (D + 2));
    for (long i = 0; i <= D; ++i) {
        if (i >= 1)
            sys.c[i] = scale * make_rational((D - i + 1) * i * (D + i + 1), 2 * i + 1);
        sys.a[i] = scale * (i * (i + 1));
        if (i <= D - 1)
            sys.b[i] = scale * make_rational((D - i) * (i + 1) * (D + i + 2), 2 * i + 1);
        sys.theta[i] = 3 - 2 * sys.a[i];
    }

    // k_i = b_0 ... b_{i-1} / (c_1 ... c_i)
    BigRational ki = 1;
    for (long i = 0; i <= D; ++i) {
        if (i >= 1)
            ki *= sys.b[i - 1] / sys.c[i];
        sys.k[i] = ki;
    }
    sys.nu = BigRational((D + 1) * (D + 1));

    BigRational total = 0;
    for (long i = 0; i <= D; ++i) {
        if (sys.k[i] != 2 * i + 1)
            throw InternalError("k_" + std::to_string(i) + " != 2i+1 at D=" + std::to_string(D));
        total += sys.k[i];
        if ((i >= 1 && sgn(sys.c[i]) <= 0) || (i < D && sgn(sys.b[i]) <= 0))
            throw InternalError("nonpositive c_i or b_i at D=" + std::to_string(D));
        for (long j = 0; j < i; ++j)
            if (sys.theta[i] == sys.theta[j])
                throw InternalError("repeated eigenvalue at D=" + std::to_string(D));
    }
    if (total != sys.nu)
        throw InternalError("sum of k_i != nu at D=" + std::to_string(D));
    return sys;
}

/// Irreducible tridiagonal A with rows (c_i, a_i, b_i).
inline RationalMatrix matrix_a(const RacahSystem& sys)
{
    RationalMatrix m(sys.order());
    for (long i = 0; i <= sys.D; ++i) {
        if (i >= 1)
            m(i, i - 1) = sys.c[i];
        m(i, i) = sys.a[i];
        if (i < sys.D)
            m(i, i + 1) = sys.b[i];
    }
    return m;
}

inline RationalMatrix matrix_a_star(const RacahSystem& sys) { return RationalMatrix::diagonal(sys.theta); }

/// Entry (i, j) is u_i(theta_j), by the three-term recurrence
/// u_{i+1} = ((lambda - a_i) u_i - c_i u_{i-1}) / b_i.
inline RationalMatrix u_table(const RacahSystem& sys)
{
    const std::size_t n = sys.order();
    RationalMatrix u(n);
    for (std::size_t j = 0; j < n; ++j) {
        const BigRational& lam = sys.theta[j];
        u(0, j) = 1;
        u(1, j) = lam / 3;
        for (std::size_t i = 1; i + 1 < n; ++i)
            u(i + 1, j) = ((lam - sys.a[i]) * u(i, j) - sys.c[i] * u(i - 1, j)) / sys.b[i];
    }
    return u;
}

inline HypParams u_series_params(long D, long i, long j)
{
    return {{BigRational(-i), BigRational(i + 1), BigRational(-j), BigRational(j + 1)},
            {BigRational(1), BigRational(D + 2), BigRational(-D)}};
}

/// u_i(theta_j) evaluated as a 4F3 series, entry by entry.
inline RationalMatrix u_table_hypergeometric(const RacahSystem& sys)
{
    const std::size_t n = sys.order();
    RationalMatrix u(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            u(i, j) = eval_4f3_unit(u_series_params(sys.D, static_cast<long>(i), static_cast<long>(j)));
    return u;
}

/// Entry (i, j) is v_i(theta_j) = k_i u_i(theta_j).
inline RationalMatrix v_table(const RacahSystem& sys, const RationalMatrix& u)
{
    RationalMatrix v = u;
    for (std::size_t i = 0; i < sys.order(); ++i)
        for (std::size_t j = 0; j < sys.order(); ++j)
            v(i, j) *= sys.k[i];
    return v;
}

inline RationalMatrix v_table(const RacahSystem& sys) { return v_table(sys, u_table(sys)); }

/// v_i(theta_j) by its own recurrence v_{i+1} = ((lambda - a_i) v_i - b_{i-1} v_{i-1}) / c_{i+1}.
inline RationalMatrix v_table_recurrence(const RacahSystem& sys)
{
    const std::size_t n = sys.order();
    RationalMatrix v(n);
    for (std::size_t j = 0; j < n; ++j) {
        const BigRational& lam = sys.theta[j];
        v(0, j) = 1;
        v(1, j) = lam;
        for (std::size_t i = 1; i + 1 < n; ++i)
            v(i + 1, j) = ((lam - sys.a[i]) * v(i, j) - sys.b[i - 1] * v(i - 1, j)) / sys.c[i + 1];
    }
    return v;
}

/// P_{i,j} = v_j(theta_i).
inline RationalMatrix matrix_p(const RacahSystem& sys, const RationalMatrix& v)
{
    const std::size_t n = sys.order();
    RationalMatrix p(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            p(i, j) = v(j, i);
    return p;
}

inline RationalMatrix matrix_p(const RacahSystem& sys) { return matrix_p(sys, v_table(sys)); }

enum class OrthogonalityRelation
{
    u_first,   ///< sum_j k_j u_n(theta_j) u_m(theta_j) = nu / k_n delta
    u_second,  ///< sum_j k_j u_j(theta_n) u_j(theta_m) = nu / k_n delta
    v_first,   ///< sum_j k_j v_n(theta_j) v_m(theta_j) = nu k_n delta
    v_second,  ///< sum_j v_j(theta_n) v_j(theta_m) / k_j = nu / k_n delta
};

inline std::string to_string(OrthogonalityRelation r)
{
    switch (r) {
    case OrthogonalityRelation::u_first: return "u-first";
    case OrthogonalityRelation::u_second: return "u-second";
    case OrthogonalityRelation::v_first: return "v-first";
    case OrthogonalityRelation::v_second: return "v-second";
    }
    return "?";
}

/// Left side of the selected relation at (n, m), from precomputed tables.
inline BigRational orthogonality_sum(const RacahSystem& sys, const RationalMatrix& u, const RationalMatrix& v,
                                     OrthogonalityRelation rel, std::size_t n, std::size_t m)
{
    BigRational s = 0;
    for (std::size_t j = 0; j < sys.order(); ++j) {
        switch (rel) {
        case OrthogonalityRelation::u_first: s += sys.k[j] * u(n, j) * u(m, j); break;
        case OrthogonalityRelation::u_second: s += sys.k[j] * u(j, n) * u(j, m); break;
        case OrthogonalityRelation::v_first: s += sys.k[j] * v(n, j) * v(m, j); break;
        case OrthogonalityRelation::v_second: s += v(j, n) * v(j, m) / sys.k[j]; break;
        }
    }
    return s;
}

/// Right side of the selected relation at (n, m).
inline BigRational orthogonality_target(const RacahSystem& sys, OrthogonalityRelation rel, std::size_t n,
                                        std::size_t m)
{
    if (n != m)
        return 0;
    return rel == OrthogonalityRelation::v_first ? sys.nu * sys.k[n] : BigRational(sys.nu / sys.k[n]);
}

inline bool orthogonality_check(const RacahSystem& sys, OrthogonalityRelation rel)
{
    const RationalMatrix u = u_table(sys);
    const RationalMatrix v = v_table(sys, u);
    for (std::size_t n = 0; n < sys.order(); ++n)
        for (std::size_t m = 0; m < sys.order(); ++m)
            if (orthogonality_sum(sys, u, v, rel, n, m) != orthogonality_target(sys, rel, n, m))
                return false;
    return true;
}

} // namespace racahkit

#endif // RACAHKIT_LEONARD_HPP
