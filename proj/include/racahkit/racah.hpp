///
/// \file   racahkit/racah.hpp
///
/// \brief  Racah coefficients W(a,b,c,d;e,f) as exact surds, and the
///         Biedenharn-Elliott identity.
///
/// W is evaluated from its single 4F3 representation: with the four triad
/// sums alpha and the three quadrilateral sums beta (beta_1 the smallest),
///
///   W = Delta(abe) Delta(cde) Delta(acf) Delta(bdf) (beta_1 + 1)! (-1)^(beta_1 - a - b - c - d)
///       / [ (beta_2 - beta_1)! (beta_3 - beta_1)! prod_k (beta_1 - alpha_k)! ]
///       * 4F3[alpha_k - beta_1; -beta_1 - 1, beta_2 - beta_1 + 1, beta_3 - beta_1 + 1; 1]
///
/// and W = 0 as soon as one of the four triads is not admissible.
///

#ifndef RACAHKIT_RACAH_HPP
#define RACAHKIT_RACAH_HPP

#include "racahkit/exact.hpp"
#include "racahkit/hyper.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace racahkit
{

struct NotAdmissible : DomainError
{
    using DomainError::DomainError;
};

struct SpinSextuple
{
    HalfInt a, b, c, d, e, f;

    static SpinSextuple from_twice(std::int64_t ta, std::int64_t tb, std::int64_t tc, std::int64_t td,
                                   std::int64_t te, std::int64_t tf)
    {
        return {HalfInt::from_twice(ta), HalfInt::from_twice(tb), HalfInt::from_twice(tc),
                HalfInt::from_twice(td), HalfInt::from_twice(te), HalfInt::from_twice(tf)};
    }

    std::string str() const
    {
        return "W(" + a.str() + "," + b.str() + "," + c.str() + "," + d.str() + ";" + e.str() + ","
               + f.str() + ")";
    }

    bool operator==(const SpinSextuple&) const = default;
};

/// The alpha (triad) and beta (quadrilateral) sums of a sextuple, as
/// integers. `beta[0]` is the minimum.
struct WIndexFrame
{
    std::array<std::int64_t, 4> alpha;
    std::array<std::int64_t, 3> beta;
};

inline bool is_admissible(HalfInt a, HalfInt b, HalfInt c)
{
    if (a.twice() < 0 || b.twice() < 0 || c.twice() < 0)
        throw DomainError("negative spin in admissibility test");
    return (a + b + c).is_integer() && a <= b + c && b <= c + a && c <= a + b;
}

/// Delta(a,b,c)^2 = (a+b-c)! (b+c-a)! (c+a-b)! / (a+b+c+1)!.
inline FactoredRational triangle_delta_sq(HalfInt a, HalfInt b, HalfInt c)
{
    if (!is_admissible(a, b, c))
        throw NotAdmissible("triple (" + a.str() + "," + b.str() + "," + c.str() + ") is not admissible");
    return factored_factorial((a + b - c).as_integer()) * factored_factorial((b + c - a).as_integer())
           * factored_factorial((c + a - b).as_integer())
           / factored_factorial((a + b + c).as_integer() + 1);
}

inline bool all_triads_admissible(const SpinSextuple& s)
{
    return is_admissible(s.a, s.b, s.e) && is_admissible(s.c, s.d, s.e) && is_admissible(s.a, s.c, s.f)
           && is_admissible(s.b, s.d, s.f);
}

/// Canonical frame: alphas ascending, betas ascending. Requires all four
/// triads admissible.
inline WIndexFrame w_frame(const SpinSextuple& s)
{
    if (!all_triads_admissible(s))
        throw NotAdmissible(s.str() + " has an inadmissible triad");
    const auto& [a, b, c, d, e, f] = s;
    WIndexFrame fr{{(a + b + e).as_integer(), (c + d + e).as_integer(), (a + c + f).as_integer(),
                    (b + d + f).as_integer()},
                   {(a + b + c + d).as_integer(), (a + d + e + f).as_integer(), (b + c + e + f).as_integer()}};
    std::sort(fr.alpha.begin(), fr.alpha.end());
    std::sort(fr.beta.begin(), fr.beta.end());
    return fr;
}

/// W evaluated with the alphas and betas in the order given by `frame`.
/// `frame` must be a rearrangement of w_frame(s) with the minimal beta first.
inline Surd racah_w_in_frame(const SpinSextuple& s, const WIndexFrame& frame)
{
    if (!all_triads_admissible(s))
        return {};

    const WIndexFrame canon = w_frame(s);
    auto alpha_sorted = frame.alpha;
    auto beta_sorted  = frame.beta;
    std::sort(alpha_sorted.begin(), alpha_sorted.end());
    std::sort(beta_sorted.begin(), beta_sorted.end());
    if (alpha_sorted != canon.alpha || beta_sorted != canon.beta || frame.beta[0] != canon.beta[0])
        throw DomainError("frame is not a valid arrangement for " + s.str());

    const std::int64_t beta1 = frame.beta[0];
    for (std::int64_t al : frame.alpha)
        if (beta1 - al < 0)
            throw InternalError("beta_1 < alpha in " + s.str());

    const HalfInt sign_exp = HalfInt::from_int(beta1) - (s.a + s.b + s.c + s.d);
    if (!sign_exp.is_integer())
        throw InternalError("non-integer sign exponent in " + s.str());

    FactoredRational delta_sq = triangle_delta_sq(s.a, s.b, s.e) * triangle_delta_sq(s.c, s.d, s.e)
                                * triangle_delta_sq(s.a, s.c, s.f) * triangle_delta_sq(s.b, s.d, s.f);

    FactoredRational prefactor = factored_factorial(beta1 + 1) / factored_factorial(frame.beta[1] - beta1)
                                 / factored_factorial(frame.beta[2] - beta1);
    for (std::int64_t al : frame.alpha)
        prefactor /= factored_factorial(beta1 - al);

    HypParams series;
    for (std::size_t k = 0; k < 4; ++k)
        series.upper[k] = BigRational(frame.alpha[k] - beta1);
    series.lower = {BigRational(-beta1 - 1), BigRational(frame.beta[1] - beta1 + 1),
                    BigRational(frame.beta[2] - beta1 + 1)};

    Surd w = sqrt_to_surd(delta_sq);
    BigRational scale = prefactor.to_rational() * eval_4f3_unit(series);
    if (sign_exp.as_integer() % 2 != 0)
        scale = -scale;
    return Surd(w.coeff * scale, w.radicand);
}

inline Surd racah_w(const SpinSextuple& s)
{
    if (!all_triads_admissible(s))
        return {};
    return racah_w_in_frame(s, w_frame(s));
}

/// (-1)^(i+j-D)/(D+1) * 4F3[-i, i+1, -j, j+1; 1, D+2, -D; 1], the closed form
/// of W(D/2, D/2, D/2, D/2; i, j).
inline BigRational w_quarter_closed(long D, long i, long j)
{
    if (D < 1)
        throw DomainError("D must be positive");
    if (i < 0 || i > D || j < 0 || j > D)
        throw DomainError("indices must lie in [0, D]");
    HypParams p{{BigRational(-i), BigRational(i + 1), BigRational(-j), BigRational(j + 1)},
                {BigRational(1), BigRational(D + 2), BigRational(-D)}};
    BigRational v = eval_4f3_unit(p) / (D + 1);
    return ((i + j - D) % 2 == 0) ? v : BigRational(-v);
}

/// Nine spins of a Biedenharn-Elliott instance.
struct BeTuple
{
    HalfInt a, a2, b, b2, c, c2, e, f, g;

    std::string str() const
    {
        return "(" + a.str() + "," + a2.str() + "," + b.str() + "," + b2.str() + "," + c.str() + ","
               + c2.str() + "," + e.str() + "," + f.str() + "," + g.str() + ")";
    }
};

struct BeSides
{
    SurdSum lhs;
    SurdSum rhs;
    long    nonzero_terms = 0;
};

/// Both sides of
///   sum_d (-1)^(c+c'-d) (2d+1) W(b,b',c,c';d,e) W(a,a',c,c';d,f) W(a,a',b,b';d,g)
///     = (-1)^(e+f-g) W(a,b,f,e;g,c) W(a',b',f,e;g,c').
/// d runs over the intersection of the triangle ranges of (b,b'), (c,c') and
/// (a,a'); outside it every summand has an inadmissible triad.
inline BeSides be_sides(const BeTuple& t)
{
    for (HalfInt x : {t.a, t.a2, t.b, t.b2, t.c, t.c2, t.e, t.f, t.g})
        if (x.twice() < 0)
            throw DomainError("negative spin in Biedenharn-Elliott tuple");

    auto absdiff = [](HalfInt x, HalfInt y) { return x < y ? y - x : x - y; };
    const HalfInt lo = std::max({absdiff(t.b, t.b2), absdiff(t.c, t.c2), absdiff(t.a, t.a2)});
    const HalfInt hi = std::min({t.b + t.b2, t.c + t.c2, t.a + t.a2});

    BeSides out;
    for (HalfInt d = lo; d <= hi; d = d + HalfInt::from_int(1)) {
        Surd w1 = racah_w({t.b, t.b2, t.c, t.c2, d, t.e});
        if (w1.is_zero())
            continue;
        Surd w2 = racah_w({t.a, t.a2, t.c, t.c2, d, t.f});
        if (w2.is_zero())
            continue;
        Surd w3 = racah_w({t.a, t.a2, t.b, t.b2, d, t.g});
        if (w3.is_zero())
            continue;
        const HalfInt sign_exp = t.c + t.c2 - d;
        if (!sign_exp.is_integer())
            throw InternalError("non-integer sign exponent in Biedenharn-Elliott sum");
        BigRational weight = d.to_rational() * 2 + 1;
        if (sign_exp.as_integer() % 2 != 0)
            weight = -weight;
        out.lhs += (w1 * w2) * SurdSum(w3) * weight;
        ++out.nonzero_terms;
    }

    Surd r1 = racah_w({t.a, t.b, t.f, t.e, t.g, t.c});
    Surd r2 = racah_w({t.a2, t.b2, t.f, t.e, t.g, t.c2});
    if (!r1.is_zero() && !r2.is_zero()) {
        const HalfInt sign_exp = t.e + t.f - t.g;
        if (!sign_exp.is_integer())
            throw InternalError("non-integer sign exponent on Biedenharn-Elliott right side");
        out.rhs = r1 * r2;
        if (sign_exp.as_integer() % 2 != 0)
            out.rhs = -out.rhs;
    }
    return out;
}

/// LHS - RHS of the Biedenharn-Elliott identity; always the zero sum.
inline SurdSum be_residual(const BeTuple& t)
{
    BeSides s = be_sides(t);
    return s.lhs - s.rhs;
}

} // namespace racahkit

#endif // RACAHKIT_RACAH_HPP
