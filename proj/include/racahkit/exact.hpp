///
/// \file   racahkit/exact.hpp
///
/// \brief  Exact number kernel: rationals, half-integers, factored
///         factorials and surds (sums of rational multiples of square roots).
///

#ifndef RACAHKIT_EXACT_HPP
#define RACAHKIT_EXACT_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace racahkit
{

using BigInt      = mpz_class;
using BigRational = mpq_class;

/// Raised when an operation is called outside its mathematical domain.
struct DomainError : std::domain_error
{
    using std::domain_error::domain_error;
};

/// Raised when an internal consistency check fails; never a user error.
struct InternalError : std::logic_error
{
    using std::logic_error::logic_error;
};

inline BigRational make_rational(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw DomainError("rational with zero denominator");
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

inline BigRational make_rational(long num, long den = 1)
{
    return make_rational(BigInt(num), BigInt(den));
}

/// Parses "p", "-p" or "p/q" (decimal integers).
inline BigRational parse_rational(const std::string& text)
{
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return BigRational(BigInt(text));
        return make_rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw DomainError("not a rational number: '" + text + "'");
    }
}

inline std::string to_string(const BigRational& r) { return r.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

inline bool is_integer(const BigRational& r) { return r.get_den() == 1; }

inline bool is_lowest_terms(const BigRational& r)
{
    BigInt g;
    mpz_gcd(g.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return r.get_den() >= 1 && g == 1;
}

inline BigInt factorial(long n)
{
    if (n < 0)
        throw DomainError("factorial of a negative integer");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline BigRational pow(const BigRational& base, long exponent)
{
    if (exponent < 0 && base == 0)
        throw DomainError("zero to a negative power");
    BigRational r = 1;
    BigRational b = exponent < 0 ? BigRational(1 / base) : base;
    for (long e = exponent < 0 ? -exponent : exponent; e > 0; e >>= 1) {
        if (e & 1)
            r *= b;
        b *= b;
    }
    return r;
}

// ---------------------------------------------------------------------------
// HalfInt
// ---------------------------------------------------------------------------

/// An element of (1/2)Z stored as twice its value.
class HalfInt
{
public:
    constexpr HalfInt() = default;

    static constexpr HalfInt from_twice(std::int64_t twice) { return HalfInt(twice); }
    static constexpr HalfInt from_int(std::int64_t value) { return HalfInt(2 * value); }

    constexpr std::int64_t twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }

    /// Integer value; throws if the value is a proper half-integer.
    std::int64_t as_integer() const
    {
        if (!is_integer())
            throw DomainError("half-integer " + str() + " is not an integer");
        return twice_ / 2;
    }

    BigRational to_rational() const { return make_rational(twice_, 2); }

    std::string str() const
    {
        return is_integer() ? std::to_string(twice_ / 2) : std::to_string(twice_) + "/2";
    }

    friend constexpr HalfInt operator+(HalfInt x, HalfInt y) { return HalfInt(x.twice_ + y.twice_); }
    friend constexpr HalfInt operator-(HalfInt x, HalfInt y) { return HalfInt(x.twice_ - y.twice_); }
    friend constexpr HalfInt operator-(HalfInt x) { return HalfInt(-x.twice_); }
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

private:
    constexpr explicit HalfInt(std::int64_t twice) : twice_(twice) {}

    std::int64_t twice_ = 0;
};

// ---------------------------------------------------------------------------
// Primes and factored rationals
// ---------------------------------------------------------------------------

namespace detail
{

/// Primes up to `limit`. The table is per thread and only ever grows.
inline const std::vector<std::uint64_t>& primes_up_to(std::uint64_t limit)
{
    thread_local std::vector<std::uint64_t> primes;
    thread_local std::uint64_t sieved = 1;
    if (limit <= sieved)
        return primes;
    const std::uint64_t n = std::max<std::uint64_t>(limit, 2 * sieved);
    std::vector<bool> composite(n + 1, false);
    primes.clear();
    for (std::uint64_t p = 2; p <= n; ++p) {
        if (composite[p])
            continue;
        primes.push_back(p);
        for (std::uint64_t m = p * p; m <= n; m += p)
            composite[m] = true;
    }
    sieved = n;
    return primes;
}

} // namespace detail

/// A nonzero rational kept as sign times a product of prime powers, or zero.
class FactoredRational
{
public:
    using Exponents = std::map<std::uint64_t, std::int64_t>;

    FactoredRational() : sign_(1) {}

    static FactoredRational zero()
    {
        FactoredRational z;
        z.sign_ = 0;
        return z;
    }

    /// Factors a small nonzero integer by trial division.
    static FactoredRational from_integer(std::int64_t n)
    {
        if (n == 0)
            return zero();
        FactoredRational r;
        if (n < 0) {
            r.sign_ = -1;
            n = -n;
        }
        auto m = static_cast<std::uint64_t>(n);
        for (std::uint64_t p = 2; p * p <= m; ++p) {
            while (m % p == 0) {
                ++r.exponents_[p];
                m /= p;
            }
        }
        if (m > 1)
            ++r.exponents_[m];
        return r;
    }

    /// Builds sign * prod p^e; keys must be prime. Zero exponents are dropped.
    static FactoredRational from_exponents(int sign, Exponents exps)
    {
        if (sign == 0)
            return zero();
        FactoredRational r;
        r.sign_ = sign < 0 ? -1 : 1;
        std::erase_if(exps, [](const auto& kv) { return kv.second == 0; });
        r.exponents_ = std::move(exps);
        return r;
    }

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    const Exponents& exponents() const { return exponents_; }

    std::int64_t exponent(std::uint64_t prime) const
    {
        auto it = exponents_.find(prime);
        return it == exponents_.end() ? 0 : it->second;
    }

    FactoredRational& operator*=(const FactoredRational& other)
    {
        combine(other, +1);
        return *this;
    }

    FactoredRational& operator/=(const FactoredRational& other)
    {
        if (other.is_zero())
            throw DomainError("division by zero");
        combine(other, -1);
        return *this;
    }

    friend FactoredRational operator*(FactoredRational x, const FactoredRational& y) { return x *= y; }
    friend FactoredRational operator/(FactoredRational x, const FactoredRational& y) { return x /= y; }

    FactoredRational pow(std::int64_t e) const
    {
        if (e == 0)
            return {};
        if (is_zero()) {
            if (e < 0)
                throw DomainError("zero to a negative power");
            return zero();
        }
        FactoredRational r;
        r.sign_ = (sign_ < 0 && (e % 2 != 0)) ? -1 : 1;
        for (const auto& [p, k] : exponents_)
            r.exponents_[p] = k * e;
        return r;
    }

    FactoredRational negated() const
    {
        FactoredRational r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    BigRational to_rational() const
    {
        if (is_zero())
            return 0;
        BigInt num = 1, den = 1, pk;
        for (const auto& [p, k] : exponents_) {
            mpz_ui_pow_ui(pk.get_mpz_t(), p, static_cast<unsigned long>(k < 0 ? -k : k));
            (k > 0 ? num : den) *= pk;
        }
        return make_rational(sign_ * num, den);
    }

    bool operator==(const FactoredRational&) const = default;

private:
    void combine(const FactoredRational& other, int direction)
    {
        sign_ *= other.sign_;
        if (sign_ == 0) {
            exponents_.clear();
            return;
        }
        for (const auto& [p, k] : other.exponents_) {
            auto& e = exponents_[p];
            e += direction * k;
            if (e == 0)
                exponents_.erase(p);
        }
    }

    int sign_;
    Exponents exponents_;
};

/// n! in prime-factored form, exponents by Legendre's formula.
inline FactoredRational factored_factorial(std::int64_t n)
{
    if (n < 0)
        throw DomainError("factorial of negative integer " + std::to_string(n));
    const auto un = static_cast<std::uint64_t>(n);
    const auto& primes = detail::primes_up_to(un);
    FactoredRational::Exponents exps;
    for (std::uint64_t p : primes) {
        if (p > un)
            break;
        std::int64_t e = 0;
        for (std::uint64_t q = un / p; q > 0; q /= p)
            e += static_cast<std::int64_t>(q);
        exps[p] = e;
    }
    return FactoredRational::from_exponents(1, std::move(exps));
}

// ---------------------------------------------------------------------------
// Surds
// ---------------------------------------------------------------------------

/// coeff * sqrt(radicand) with radicand squarefree; zero is 0 * sqrt(1).
struct Surd
{
    BigRational coeff    = 0;
    BigInt      radicand = 1;

    Surd() = default;
    Surd(BigRational c) : coeff(std::move(c)) {}

    Surd(BigRational c, BigInt m) : coeff(std::move(c)), radicand(std::move(m))
    {
        if (coeff == 0)
            radicand = 1;
    }

    bool is_zero() const { return coeff == 0; }
    bool is_rational() const { return radicand == 1; }

    /// Decimal approximation; display only.
    double approx() const { return coeff.get_d() * std::sqrt(radicand.get_d()); }

    bool operator==(const Surd& o) const { return coeff == o.coeff && radicand == o.radicand; }
};

/// sqrt(x) for x >= 0. Odd exponents go to the radicand, halves of the even
/// parts to the coefficient.
inline Surd sqrt_to_surd(const FactoredRational& x)
{
    if (x.sign() < 0)
        throw DomainError("square root of a negative number");
    if (x.is_zero())
        return {};
    BigInt num = 1, den = 1, radicand = 1, pk;
    for (const auto& [p, e] : x.exponents()) {
        // e = 2h + r with r in {0, 1}
        std::int64_t r = ((e % 2) + 2) % 2;
        std::int64_t h = (e - r) / 2;
        if (r == 1)
            radicand *= static_cast<unsigned long>(p);
        mpz_ui_pow_ui(pk.get_mpz_t(), p, static_cast<unsigned long>(h < 0 ? -h : h));
        (h >= 0 ? num : den) *= pk;
    }
    return Surd(make_rational(num, den), radicand);
}

/// A finite sum of surds keyed by squarefree radicand.
class SurdSum
{
public:
    using Terms = std::map<BigInt, BigRational>;

    SurdSum() = default;
    SurdSum(const Surd& s) { add_term(s.radicand, s.coeff); }
    SurdSum(const BigRational& q) { add_term(1, q); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    SurdSum& operator+=(const SurdSum& o)
    {
        for (const auto& [m, q] : o.terms_)
            add_term(m, q);
        return *this;
    }

    SurdSum& operator-=(const SurdSum& o)
    {
        for (const auto& [m, q] : o.terms_)
            add_term(m, -q);
        return *this;
    }

    SurdSum& operator*=(const BigRational& q)
    {
        if (q == 0)
            terms_.clear();
        else
            for (auto& [m, c] : terms_)
                c *= q;
        return *this;
    }

    SurdSum operator-() const
    {
        SurdSum r = *this;
        for (auto& [m, c] : r.terms_)
            c = -c;
        return r;
    }

    friend SurdSum operator+(SurdSum x, const SurdSum& y) { return x += y; }
    friend SurdSum operator-(SurdSum x, const SurdSum& y) { return x -= y; }
    friend SurdSum operator*(SurdSum x, const BigRational& q) { return x *= q; }

    /// sqrt(m) sqrt(n) = g sqrt((m/g)(n/g)) with g = gcd(m, n); the product
    /// of two coprime squarefree numbers is squarefree.
    friend SurdSum operator*(const SurdSum& x, const SurdSum& y)
    {
        SurdSum r;
        BigInt g;
        for (const auto& [m, p] : x.terms_) {
            for (const auto& [n, q] : y.terms_) {
                mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
                BigInt rad = (m / g) * (n / g);
                r.add_term(rad, p * q * BigRational(g));
            }
        }
        return r;
    }

    double approx() const
    {
        double s = 0;
        for (const auto& [m, q] : terms_)
            s += q.get_d() * std::sqrt(m.get_d());
        return s;
    }

    std::string str() const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        for (const auto& [m, q] : terms_) {
            if (!out.empty())
                out += " + ";
            out += q.get_str();
            if (m != 1)
                out += "*sqrt(" + m.get_str() + ")";
        }
        return out;
    }

    bool operator==(const SurdSum& o) const { return terms_ == o.terms_; }

private:
    void add_term(const BigInt& radicand, const BigRational& coeff)
    {
        if (coeff == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(radicand, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    Terms terms_;
};

inline SurdSum operator*(const Surd& x, const Surd& y) { return SurdSum(x) * SurdSum(y); }

inline std::string to_string(const Surd& s)
{
    if (s.radicand == 1)
        return s.coeff.get_str();
    return s.coeff.get_str() + "*sqrt(" + s.radicand.get_str() + ")";
}

} // namespace racahkit

#endif // RACAHKIT_EXACT_HPP
