///
/// \file   racahkit/hyper.hpp
///
/// \brief  Terminating 4F3 series at unit argument and the Whipple
///         transformation of balanced series.
///

#ifndef RACAHKIT_HYPER_HPP
#define RACAHKIT_HYPER_HPP

#include "racahkit/exact.hpp"

#include <array>
#include <optional>
#include <string>

namespace racahkit
{

struct NonTerminating : DomainError
{
    NonTerminating() : DomainError("no upper parameter is a nonpositive integer") {}
};

struct DivergentLowerParam : DomainError
{
    using DomainError::DomainError;
};

struct BalanceViolation : DomainError
{
    using DomainError::DomainError;
};

struct ZeroDenominator : DomainError
{
    using DomainError::DomainError;
};

/// Parameters of 4F3[a1..a4; b1..b3; 1].
struct HypParams
{
    std::array<BigRational, 4> upper;
    std::array<BigRational, 3> lower;

    bool operator==(const HypParams&) const = default;
};

inline std::string to_string(const HypParams& p)
{
    std::string s = "[";
    for (std::size_t k = 0; k < 4; ++k)
        s += (k ? "," : "") + p.upper[k].get_str();
    s += ";";
    for (std::size_t k = 0; k < 3; ++k)
        s += (k ? "," : "") + p.lower[k].get_str();
    return s + "]";
}

/// (a)_n = a (a+1) ... (a+n-1).
inline BigRational pochhammer(const BigRational& a, long n)
{
    if (n < 0)
        throw DomainError("pochhammer with negative length");
    BigRational r = 1;
    BigRational x = a;
    for (long k = 0; k < n; ++k) {
        r *= x;
        x += 1;
    }
    return r;
}

namespace detail
{

inline bool is_nonpositive_integer(const BigRational& a) { return is_integer(a) && a <= 0; }

/// Smallest n >= 0 with (b)_{n+1} = 0, i.e. -b when b is a nonpositive integer.
inline std::optional<long> first_vanishing_index(const BigRational& b)
{
    if (!is_nonpositive_integer(b))
        return std::nullopt;
    return -b.get_num().get_si();
}

} // namespace detail

/// Index of the last possibly nonzero term.
inline long termination_index(const HypParams& p)
{
    std::optional<long> n;
    for (const auto& a : p.upper) {
        if (detail::is_nonpositive_integer(a)) {
            long m = -a.get_num().get_si();
            if (!n || m < *n)
                n = m;
        }
    }
    if (!n)
        throw NonTerminating();
    return *n;
}

/// Exact value of the terminating series at z = 1.
inline BigRational eval_4f3_unit(const HypParams& p)
{
    const long last = termination_index(p);
    for (const auto& b : p.lower) {
        // (b)_n picks up the zero factor b + (-b) once n > -b.
        if (auto m = detail::first_vanishing_index(b); m && *m < last)
            throw DivergentLowerParam("lower parameter " + b.get_str() + " vanishes within "
                                      + std::to_string(last) + " terms");
    }
    BigRational sum  = 1;
    BigRational term = 1;
    for (long n = 0; n < last; ++n) {
        for (const auto& a : p.upper)
            term *= a + n;
        for (const auto& b : p.lower)
            term /= b + n;
        term /= n + 1;
        sum += term;
    }
    return sum;
}

/// Which slots play which role in a Whipple transformation. `upper` holds the
/// upper-slot indices of (-p, q, a1, a2), `lower` those of (r, b1, b2).
struct WhippleRoles
{
    std::array<int, 4> upper = {0, 1, 2, 3};
    std::array<int, 3> lower = {0, 1, 2};
};

struct WhippleResult
{
    BigRational coefficient;
    HypParams   transformed;
};

/// 4F3[-p, q, a1, a2; r, b1, b2] =
///   (b1-q)_p (b2-q)_p / ((b1)_p (b2)_p) * 4F3[-p, q, r-a1, r-a2; r, 1+q-b1-p, 1+q-b2-p]
/// for balanced series, q + a1 + a2 + 1 = r + b1 + b2 + p.
inline WhippleResult whipple_transform(const HypParams& params, const WhippleRoles& roles)
{
    std::array<bool, 4> used_upper{};
    std::array<bool, 3> used_lower{};
    for (int k : roles.upper) {
        if (k < 0 || k > 3 || used_upper[k])
            throw DomainError("whipple roles do not permute the upper slots");
        used_upper[k] = true;
    }
    for (int k : roles.lower) {
        if (k < 0 || k > 2 || used_lower[k])
            throw DomainError("whipple roles do not permute the lower slots");
        used_lower[k] = true;
    }

    const BigRational& minus_p = params.upper[roles.upper[0]];
    const BigRational& q       = params.upper[roles.upper[1]];
    const BigRational& a1      = params.upper[roles.upper[2]];
    const BigRational& a2      = params.upper[roles.upper[3]];
    const BigRational& r       = params.lower[roles.lower[0]];
    const BigRational& b1      = params.lower[roles.lower[1]];
    const BigRational& b2      = params.lower[roles.lower[2]];

    if (!detail::is_nonpositive_integer(minus_p))
        throw DomainError("the -p slot " + minus_p.get_str() + " is not a nonpositive integer");
    const long p = -minus_p.get_num().get_si();

    if (q + a1 + a2 + 1 != r + b1 + b2 + p)
        throw BalanceViolation("series " + to_string(params) + " is not balanced for these roles");

    const BigRational den = pochhammer(b1, p) * pochhammer(b2, p);
    if (den == 0)
        throw ZeroDenominator("(b1)_p (b2)_p vanishes");

    WhippleResult out;
    out.coefficient = pochhammer(b1 - q, p) * pochhammer(b2 - q, p) / den;
    out.transformed.upper = {minus_p, q, r - a1, r - a2};
    out.transformed.lower = {r, 1 + q - b1 - p, 1 + q - b2 - p};
    return out;
}

} // namespace racahkit

#endif // RACAHKIT_HYPER_HPP
