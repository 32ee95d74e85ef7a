// Independent reference computations used to cross-check the library.
// Nothing here calls the code under test except the exact number types.

#ifndef RACAHKIT_TESTS_ORACLES_HPP
#define RACAHKIT_TESTS_ORACLES_HPP

#include "racahkit/exact.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace oracle
{

using racahkit::BigInt;
using racahkit::BigRational;

inline BigInt fact(long n)
{
    BigInt r = 1;
    for (long k = 2; k <= n; ++k)
        r *= k;
    return r;
}

/// Direct term-by-term sum of a 4F3 at z = 1, stopping once an upper
/// Pochhammer hits zero.
inline BigRational f43(const std::vector<BigRational>& up, const std::vector<BigRational>& lo, long max_terms = 200)
{
    BigRational total = 0;
    for (long n = 0; n < max_terms; ++n) {
        BigRational num = 1, den = 1;
        for (const auto& a : up)
            for (long k = 0; k < n; ++k)
                num *= a + k;
        if (num == 0)
            return total;
        for (const auto& b : lo)
            for (long k = 0; k < n; ++k)
                den *= b + k;
        den *= BigRational(fact(n));
        total += num / den;
    }
    return total;
}

struct WSquared
{
    BigRational square; ///< W^2
    int         sign = 0;
};

/// Racah's single-sum formula; arguments are twice-spins.
inline WSquared racah_w(long ta, long tb, long tc, long td, long te, long tf)
{
    auto tri_ok = [](long x, long y, long z) {
        return (x + y + z) % 2 == 0 && z <= x + y && x <= y + z && y <= z + x;
    };
    if (!tri_ok(ta, tb, te) || !tri_ok(tc, td, te) || !tri_ok(ta, tc, tf) || !tri_ok(tb, td, tf))
        return {};
    auto delta = [](long x, long y, long z) -> BigRational {
        return BigRational(fact((x + y - z) / 2) * fact((y + z - x) / 2) * fact((z + x - y) / 2))
               / BigRational(fact((x + y + z) / 2 + 1));
    };
    const std::array<long, 4> alpha{(ta + tb + te) / 2, (tc + td + te) / 2, (ta + tc + tf) / 2, (tb + td + tf) / 2};
    const std::array<long, 3> beta{(ta + tb + tc + td) / 2, (ta + td + te + tf) / 2, (tb + tc + te + tf) / 2};
    const long sabcd = (ta + tb + tc + td) / 2;
    BigRational s = 0;
    for (long k = *std::max_element(alpha.begin(), alpha.end()); k <= *std::min_element(beta.begin(), beta.end());
         ++k) {
        BigInt den = 1;
        for (long al : alpha)
            den *= fact(k - al);
        for (long be : beta)
            den *= fact(be - k);
        BigRational term = BigRational(fact(k + 1)) / BigRational(den);
        s += ((k + sabcd) % 2 == 0) ? term : BigRational(-term);
    }
    WSquared out;
    out.square = s * s * delta(ta, tb, te) * delta(tc, td, te) * delta(ta, tc, tf) * delta(tb, td, tf);
    out.sign   = sgn(s);
    return out;
}

} // namespace oracle

#endif
