///
/// \file   racahkit/verify.hpp
///
/// \brief  Verification campaigns: exhaustive or seeded exact checks of the
///         bound |u_i(theta_j)| <= 1 and of the identities it rests on.
///
/// Campaigns over a range of D are sharded one D per task and merged in
/// canonical order, so the report does not depend on the thread count.
/// Sampled campaigns draw from std::mt19937_64 with a rejection-based
/// bounded draw, which is fully specified and portable.
///

#ifndef RACAHKIT_VERIFY_HPP
#define RACAHKIT_VERIFY_HPP

#include "racahkit/exact.hpp"
#include "racahkit/hyper.hpp"
#include "racahkit/intersection.hpp"
#include "racahkit/leonard.hpp"
#include "racahkit/racah.hpp"
#include "racahkit/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <thread>
#include <vector>

namespace racahkit
{

inline constexpr const char* rng_name = "mt19937_64/rejection";

struct SampleSpec
{
    std::uint64_t seed           = 42;
    std::int64_t  count          = 200;
    std::int64_t  max_twice_spin = 12;
};

/// Deterministic sample stream: mt19937_64 with unbiased bounded draws.
class SampleStream
{
public:
    explicit SampleStream(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n)
    {
        if (n == 0)
            throw DomainError("empty sampling range");
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max()
                                    - std::numeric_limits<std::uint64_t>::max() % n;
        std::uint64_t x;
        do
            x = engine_();
        while (x >= limit);
        return x % n;
    }

    /// Uniform in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi)
    {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    template <typename T, std::size_t N>
    void shuffle(std::array<T, N>& xs)
    {
        for (std::size_t k = N; k > 1; --k)
            std::swap(xs[k - 1], xs[below(k)]);
    }

private:
    std::mt19937_64 engine_;
};

struct RangeOptions
{
    unsigned threads = 0; ///< 0 picks std::thread::hardware_concurrency()
};

namespace detail
{

inline std::int64_t millis_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
}

inline void check_range(long d_min, long d_max)
{
    if (d_min < 1 || d_max < d_min)
        throw DomainError("need 1 <= d_min <= d_max, got [" + std::to_string(d_min) + ", " + std::to_string(d_max)
                          + "]");
}

/// Runs `shard(D, report)` for every D in range on a worker pool, each shard
/// filling its own report, then merges in D order.
inline VerificationReport run_over_d(const VerificationReport& header, long d_min, long d_max, unsigned threads,
                                     const std::function<void(long, VerificationReport&)>& shard)
{
    const auto t0 = std::chrono::steady_clock::now();
    const auto n  = static_cast<std::size_t>(d_max - d_min + 1);
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(n));

    std::vector<VerificationReport> parts(n, header);
    std::vector<std::exception_ptr> errors(n);
    // Largest D first: shard cost grows steeply with D.
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < n;) {
            const std::size_t slot = n - 1 - k;
            try {
                shard(d_min + static_cast<long>(slot), parts[slot]);
            } catch (...) {
                errors[slot] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    VerificationReport out = header;
    if (header.equality_cases)
        out.equality_cases.emplace();
    for (const auto& p : parts)
        out = merge(out, p);
    out.elapsed_ms = millis_since(t0);
    return out;
}

inline Json at_d(long D) { return Json{{"D", D}}; }

inline Json at_dij(long D, long i, long j) { return Json{{"D", D}, {"i", i}, {"j", j}}; }

} // namespace detail

// ---------------------------------------------------------------------------
// Bound on the normalized polynomials
// ---------------------------------------------------------------------------

struct KtOptions : RangeOptions
{
    /// Bound asserted on |u_i(theta_j)|.
    BigRational bound = 1;
    /// Test hook: may alter the u table of a given D before it is checked.
    std::function<void(long, RationalMatrix&)> tamper;
};

/// |u_i(theta_j)| <= 1 for all 0 <= i, j <= D, and its Perron-Frobenius
/// form max_j |v_i(theta_j)| = k_i attained at j = 0.
inline VerificationReport verify_kt(long d_min, long d_max, const KtOptions& opt = {})
{
    detail::check_range(d_min, d_max);
    VerificationReport header;
    header.campaign       = "kt";
    header.params         = Json{{"d_min", d_min}, {"d_max", d_max}};
    header.equality_cases = std::vector<Json>{};
    if (opt.bound != 1)
        header.params["bound"] = opt.bound.get_str();

    return detail::run_over_d(header, d_min, d_max, opt.threads, [&](long D, VerificationReport& r) {
        const RacahSystem sys = build_system(D);
        RationalMatrix    u   = u_table(sys);
        if (opt.tamper)
            opt.tamper(D, u);
        const RationalMatrix v = v_table(sys, u);
        const std::size_t    n = sys.order();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const BigRational mag = abs(u(i, j));
                const Json        at  = detail::at_dij(D, static_cast<long>(i), static_cast<long>(j));
                r.check(mag <= opt.bound, "abs_u_le_bound", at, "|u| <= " + opt.bound.get_str(), u(i, j).get_str());
                if (mag == 1) {
                    Json eq = at;
                    eq["value"] = u(i, j).get_str();
                    r.equality_cases->push_back(std::move(eq));
                }
            }
            // Perron-Frobenius: the all-ones eigenvalue k_i dominates.
            BigRational vmax = 0;
            for (std::size_t j = 0; j < n; ++j)
                vmax = std::max<BigRational>(vmax, abs(v(i, j)));
            const Json at = Json{{"D", D}, {"i", static_cast<long>(i)}};
            r.check(vmax == sys.k[i], "max_abs_v_eq_k", at, sys.k[i].get_str(), vmax.get_str());
            r.check(v(i, 0) == sys.k[i], "v_at_theta0_eq_k", at, sys.k[i].get_str(), v(i, 0).get_str());
        }
    });
}

// ---------------------------------------------------------------------------
// Leonard pair relations
// ---------------------------------------------------------------------------

/// P^2 = nu I, PA = A*P, PA* = AP, PB_i = B*_i P, PB*_i = B_i P,
/// B_i 1 = k_i 1, distinct theta, A irreducible tridiagonal, plus the
/// agreement of the recurrence and 4F3 routes for u and v and the four
/// orthogonality relations.
inline VerificationReport verify_leonard(long d_min, long d_max, const RangeOptions& opt = {})
{
    detail::check_range(d_min, d_max);
    VerificationReport header;
    header.campaign = "leonard";
    header.params   = Json{{"d_min", d_min}, {"d_max", d_max}};

    return detail::run_over_d(header, d_min, d_max, opt.threads, [](long D, VerificationReport& r) {
        const RacahSystem    sys = build_system(D);
        const std::size_t    n   = sys.order();
        const RationalMatrix A   = matrix_a(sys);
        const RationalMatrix As  = matrix_a_star(sys);
        const RationalMatrix u   = u_table(sys);
        const RationalMatrix v   = v_table(sys, u);
        const RationalMatrix P   = matrix_p(sys, v);
        const Json           at  = detail::at_d(D);
        auto flag = [](bool b) { return std::string(b ? "true" : "false"); };

        const bool p_squared = P * P == RationalMatrix::identity(n) * sys.nu;
        r.check(p_squared, "P^2 = nu I", at, "true", flag(p_squared));
        const bool pa = P * A == As * P;
        r.check(pa, "PA = A*P", at, "true", flag(pa));
        const bool pas = P * As == A * P;
        r.check(pas, "PA* = AP", at, "true", flag(pas));

        const bool u_routes = u == u_table_hypergeometric(sys);
        r.check(u_routes, "u recurrence = u 4F3", at, "true", flag(u_routes));
        const bool v_routes = v == v_table_recurrence(sys);
        r.check(v_routes, "v = k u = v recurrence", at, "true", flag(v_routes));

        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                r.check(u(i, j) == u(j, i), "u symmetric", detail::at_dij(D, (long)i, (long)j), u(j, i).get_str(),
                        u(i, j).get_str());
            }
            r.check(P(i, 0) == 1, "P column 0 is 1", Json{{"D", D}, {"i", (long)i}}, "1", P(i, 0).get_str());
            r.check(P(0, i) == sys.k[i], "P row 0 is k", Json{{"D", D}, {"j", (long)i}}, sys.k[i].get_str(),
                    P(0, i).get_str());
        }

        const auto B = b_matrices(sys);
        const std::vector<BigRational> ones(n, BigRational(1));
        for (std::size_t i = 0; i < n; ++i) {
            const Json           ati = Json{{"D", D}, {"i", (long)i}};
            const RationalMatrix Bs  = b_star_matrix(sys, v, (long)i);
            const bool           l1  = P * B[i] == Bs * P;
            r.check(l1, "P B_i = B*_i P", ati, "true", flag(l1));
            const bool l2 = P * Bs == B[i] * P;
            r.check(l2, "P B*_i = B_i P", ati, "true", flag(l2));
            const auto Bi1 = B[i] * ones;
            const bool l3  = std::all_of(Bi1.begin(), Bi1.end(), [&](const BigRational& x) { return x == sys.k[i]; });
            r.check(l3, "B_i 1 = k_i 1", ati, "true", flag(l3));
        }

        bool distinct = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j)
                distinct = distinct && sys.theta[i] != sys.theta[j];
        r.check(distinct, "theta distinct", at, "true", flag(distinct));

        bool tridiagonal = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const bool off_band = (i > j + 1) || (j > i + 1);
                const bool adjacent = (i == j + 1) || (j == i + 1);
                if ((off_band && sgn(A(i, j)) != 0) || (adjacent && sgn(A(i, j)) == 0))
                    tridiagonal = false;
            }
        r.check(tridiagonal, "A irreducible tridiagonal", at, "true", flag(tridiagonal));

        bool a_star_diagonal = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && sgn(As(i, j)) != 0)
                    a_star_diagonal = false;
        r.check(a_star_diagonal, "A* diagonal", at, "true", flag(a_star_diagonal));

        for (auto rel : {OrthogonalityRelation::u_first, OrthogonalityRelation::u_second,
                         OrthogonalityRelation::v_first, OrthogonalityRelation::v_second}) {
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    const BigRational lhs = orthogonality_sum(sys, u, v, rel, a, b);
                    const BigRational rhs = orthogonality_target(sys, rel, a, b);
                    r.check(lhs == rhs, "orthogonality " + to_string(rel),
                            Json{{"D", D}, {"n", (long)a}, {"m", (long)b}}, rhs.get_str(), lhs.get_str());
                }
        }
    });
}

// ---------------------------------------------------------------------------
// Intersection numbers
// ---------------------------------------------------------------------------

struct IntersectionOptions : RangeOptions
{
    /// Four-route comparison and the specialized Biedenharn-Elliott identity
    /// run for D <= routes_max_d; negative means no limit.
    long routes_max_d = -1;
    /// Structure constants run for D <= structure_max_d; negative means no limit.
    long structure_max_d = -1;
};

inline VerificationReport verify_intersection(long d_min, long d_max, const IntersectionOptions& opt = {})
{
    detail::check_range(d_min, d_max);
    VerificationReport header;
    header.campaign = "intersection";
    header.params   = Json{{"d_min", d_min}, {"d_max", d_max}, {"routes_max_d", opt.routes_max_d},
                         {"structure_max_d", opt.structure_max_d}};

    return detail::run_over_d(header, d_min, d_max, opt.threads, [&](long D, VerificationReport& r) {
        const RacahSystem sys = build_system(D);
        const std::size_t n   = sys.order();
        const auto        B   = b_matrices(sys);
        const auto        p   = detail::tensor_from_matrices(sys, B);
        const RationalMatrix u = u_table(sys);
        const RationalMatrix v = v_table(sys, u);
        const RationalMatrix P = matrix_p(sys, v);
        auto at = [&](std::size_t h, std::size_t i, std::size_t j) {
            return Json{{"D", D}, {"h", (long)h}, {"i", (long)i}, {"j", (long)j}};
        };

        for (std::size_t h = 0; h < n; ++h) {
            for (std::size_t i = 0; i < n; ++i) {
                BigRational row_sum = 0;
                for (std::size_t j = 0; j < n; ++j) {
                    const BigRational& x = p.at(h, i, j);
                    row_sum += x;
                    r.check(sgn(x) >= 0, "p >= 0", at(h, i, j), ">= 0", x.get_str());
                    r.check(x == p.at(h, j, i), "p^h_ij = p^h_ji", at(h, i, j), p.at(h, j, i).get_str(), x.get_str());
                    const BigRational kp = sys.k[h] * x;
                    const BigRational k2 = sys.k[j] * p.at(j, h, i);
                    const BigRational k3 = sys.k[i] * p.at(i, j, h);
                    r.check(kp == k2 && kp == k3, "k_h p^h_ij symmetric", at(h, i, j), kp.get_str(),
                            k2.get_str() + "," + k3.get_str());
                    const long hl = (long)h, il = (long)i, jl = (long)j;
                    const bool in_band = std::abs(il - jl) <= hl && hl <= il + jl;
                    r.check(in_band || sgn(x) == 0, "p vanishes off the triangle", at(h, i, j), "0", x.get_str());
                    if (h == 0) {
                        const BigRational want = i == j ? sys.k[i] : BigRational(0);
                        r.check(x == want, "p^0_ij = delta k_i", at(h, i, j), want.get_str(), x.get_str());
                    }
                }
                r.check(row_sum == sys.k[i], "sum_j p^h_ij = k_i", Json{{"D", D}, {"h", (long)h}, {"i", (long)i}},
                        sys.k[i].get_str(), row_sum.get_str());
            }
        }

        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const auto col = P.column(j);
                const auto lhs = B[i] * col;
                bool       ok  = true;
                for (std::size_t t = 0; t < n; ++t)
                    ok = ok && lhs[t] == v(i, j) * col[t];
                r.check(ok, "B_i P e_j = v_i(theta_j) P e_j", detail::at_dij(D, (long)i, (long)j), "true",
                        ok ? "true" : "false");
            }
        }

        if (opt.routes_max_d < 0 || D <= opt.routes_max_d) {
            for (TensorRoute route : {TensorRoute::triple_sum, TensorRoute::racah, TensorRoute::appendix}) {
                const IntersectionTensor other = p_tensor(sys, route);
                for (std::size_t h = 0; h < n; ++h)
                    for (std::size_t i = 0; i < n; ++i)
                        for (std::size_t j = 0; j < n; ++j)
                            r.check(other.at(h, i, j) == p.at(h, i, j), "route " + to_string(route) + " = matrix",
                                    at(h, i, j), p.at(h, i, j).get_str(), other.at(h, i, j).get_str());
            }
            // sum_t (2t+1) u_t(theta_h) u_t(theta_i) u_t(theta_j) = (D+1)^3 W(D/2,D/2,i,h;j,D/2)^2
            const BigRational cube = BigRational((D + 1) * (D + 1) * (D + 1));
            for (std::size_t h = 0; h < n; ++h)
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) {
                        BigRational lhs = 0;
                        for (std::size_t t = 0; t < n; ++t)
                            lhs += BigRational(2 * (long)t + 1) * u(t, h) * u(t, i) * u(t, j);
                        const BigRational rhs = cube * detail::surd_square(detail::tensor_w(D, (long)h, (long)i, (long)j));
                        r.check(lhs == rhs, "specialized Biedenharn-Elliott", at(h, i, j), rhs.get_str(), lhs.get_str());
                    }
        }

        if (opt.structure_max_d < 0 || D <= opt.structure_max_d) {
            const auto bad = structure_violation(sys, B, p);
            r.check(!bad, "B_i B_j = sum_h p^h_ij B_h", detail::at_d(D), "exact",
                    bad ? "fails at i=" + std::to_string(bad->first) + ", j=" + std::to_string(bad->second) : "exact");
        }
    });
}

// ---------------------------------------------------------------------------
// Racah coefficient closed form
// ---------------------------------------------------------------------------

/// W(D/2, D/2, D/2, D/2; i, j) from the general definition against its
/// closed form, for 1 <= D <= d_max and all i, j.
inline VerificationReport verify_w_closed(long d_max, const RangeOptions& opt = {})
{
    detail::check_range(1, d_max);
    VerificationReport header;
    header.campaign = "wclosed";
    header.params   = Json{{"d_max", d_max}};

    return detail::run_over_d(header, 1, d_max, opt.threads, [](long D, VerificationReport& r) {
        for (long i = 0; i <= D; ++i)
            for (long j = 0; j <= D; ++j) {
                const Surd        w      = racah_w(SpinSextuple::from_twice(D, D, D, D, 2 * i, 2 * j));
                const BigRational closed = w_quarter_closed(D, i, j);
                Json              at     = detail::at_dij(D, i, j);
                at["branch"]             = i + j <= D ? "i+j<=D" : "i+j>D";
                r.check(w.is_rational() && w.coeff == closed, "W general = closed form", at, closed.get_str(),
                        to_string(w));
            }
    });
}

// ---------------------------------------------------------------------------
// Biedenharn-Elliott identity
// ---------------------------------------------------------------------------

namespace detail
{

/// A spin z with (x, y, z) admissible and 2z <= max_twice, if one exists.
inline HalfInt sample_third(SampleStream& rng, HalfInt x, HalfInt y, std::int64_t max_twice)
{
    const std::int64_t lo = std::abs(x.twice() - y.twice());
    if (lo > max_twice)
        return HalfInt::from_twice(rng.between(0, max_twice));
    const std::int64_t hi = std::min(x.twice() + y.twice(), max_twice - (max_twice - lo) % 2);
    if (hi < lo)
        return HalfInt::from_twice(rng.between(0, max_twice));
    return HalfInt::from_twice(lo + 2 * rng.between(0, (hi - lo) / 2));
}

} // namespace detail

/// Draws a 9-tuple biased toward configurations in which the right side
/// is nonzero: (a,b,g), (a,c,f), (b,c,e), (a',b',g) and (a',c',f) are
/// constructed admissible; the remaining triads are left to chance.
inline BeTuple sample_be_tuple(SampleStream& rng, std::int64_t max_twice)
{
    auto spin = [&] { return HalfInt::from_twice(rng.between(0, max_twice)); };
    BeTuple t;
    t.a  = spin();
    t.b  = spin();
    t.g  = detail::sample_third(rng, t.a, t.b, max_twice);
    t.c  = spin();
    t.f  = detail::sample_third(rng, t.a, t.c, max_twice);
    t.e  = detail::sample_third(rng, t.b, t.c, max_twice);
    t.a2 = spin();
    t.b2 = detail::sample_third(rng, t.a2, t.g, max_twice);
    t.c2 = detail::sample_third(rng, t.a2, t.f, max_twice);
    return t;
}

inline Json be_params_json(const BeTuple& t)
{
    return Json{{"twice", {t.a.twice(), t.a2.twice(), t.b.twice(), t.b2.twice(), t.c.twice(), t.c2.twice(),
                           t.e.twice(), t.f.twice(), t.g.twice()}}};
}

inline VerificationReport verify_be(const SampleSpec& spec)
{
    if (spec.count < 1 || spec.max_twice_spin < 0)
        throw DomainError("sample count must be positive and max spin nonnegative");
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport r;
    r.campaign = "be";
    r.params   = Json{{"seed", spec.seed}, {"count", spec.count}, {"max_twice_spin", spec.max_twice_spin}};
    r.rng      = rng_name;

    SampleStream rng(spec.seed);
    for (std::int64_t s = 0; s < spec.count; ++s) {
        const BeTuple t   = sample_be_tuple(rng, spec.max_twice_spin);
        const SurdSum res = be_residual(t);
        Json at = be_params_json(t);
        at["sample"] = s;
        r.check(res.is_zero(), "Biedenharn-Elliott residual", at, "0", res.str());
    }
    r.normalize();
    r.elapsed_ms = detail::millis_since(t0);
    return r;
}

// ---------------------------------------------------------------------------
// Whipple transformation
// ---------------------------------------------------------------------------

struct WhippleInstance
{
    HypParams    params;
    WhippleRoles roles;
};

/// 4F3[-1,-1,-1,-1; 1,-5,1] with roles (-p,q,a1,a2) = slots 0..3 and
/// (r,b1,b2) = (1,-5,1): the D = 2, i = j = 1 instance of the first
/// transformation in the closed-form evaluation of W(D/2,D/2,D/2,D/2;i,j).
inline WhippleInstance whipple_worked_instance()
{
    return {{{BigRational(-1), BigRational(-1), BigRational(-1), BigRational(-1)},
             {BigRational(1), BigRational(-5), BigRational(1)}},
            {{0, 1, 2, 3}, {0, 1, 2}}};
}

namespace detail
{

inline BigRational sample_param(SampleStream& rng)
{
    static constexpr long denominators[] = {1, 1, 2, 3};
    const long den = denominators[rng.below(4)];
    return make_rational(rng.between(-12, 12), den);
}

inline bool poch_nonzero(const BigRational& x, long p) { return sgn(pochhammer(x, p)) != 0; }

} // namespace detail

/// A balanced instance whose lower Pochhammers on both sides stay nonzero
/// through index p, with the roles scattered over random slots.
inline WhippleInstance sample_whipple_instance(SampleStream& rng)
{
    for (;;) {
        const long        p  = rng.between(0, 6);
        const BigRational q  = detail::sample_param(rng);
        const BigRational a1 = detail::sample_param(rng);
        const BigRational a2 = detail::sample_param(rng);
        const BigRational r  = detail::sample_param(rng);
        const BigRational b1 = detail::sample_param(rng);
        const BigRational b2 = q + a1 + a2 + 1 - r - b1 - p;
        const bool ok = detail::poch_nonzero(r, p) && detail::poch_nonzero(b1, p) && detail::poch_nonzero(b2, p)
                        && detail::poch_nonzero(1 + q - b1 - p, p) && detail::poch_nonzero(1 + q - b2 - p, p);
        if (!ok)
            continue;

        const std::array<BigRational, 4> up_vals{BigRational(-p), q, a1, a2};
        const std::array<BigRational, 3> lo_vals{r, b1, b2};
        std::array<int, 4> up_slot{0, 1, 2, 3};
        std::array<int, 3> lo_slot{0, 1, 2};
        rng.shuffle(up_slot);
        rng.shuffle(lo_slot);

        WhippleInstance inst;
        inst.roles.upper = up_slot;
        inst.roles.lower = lo_slot;
        for (std::size_t k = 0; k < 4; ++k)
            inst.params.upper[up_slot[k]] = up_vals[k];
        for (std::size_t k = 0; k < 3; ++k)
            inst.params.lower[lo_slot[k]] = lo_vals[k];
        return inst;
    }
}

inline Json whipple_params_json(const WhippleInstance& w)
{
    Json up = Json::array(), lo = Json::array();
    for (const auto& x : w.params.upper)
        up.push_back(x.get_str());
    for (const auto& x : w.params.lower)
        lo.push_back(x.get_str());
    return Json{{"upper", up}, {"lower", lo}, {"upper_roles", w.roles.upper}, {"lower_roles", w.roles.lower}};
}

/// Whipple invariance on the worked instance plus `count` sampled ones.
inline VerificationReport verify_whipple(const SampleSpec& spec)
{
    if (spec.count < 1)
        throw DomainError("sample count must be positive");
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport r;
    r.campaign = "whipple";
    r.params   = Json{{"seed", spec.seed}, {"count", spec.count}};
    r.rng      = rng_name;

    auto run = [&](const WhippleInstance& w, Json at) {
        const WhippleResult t   = whipple_transform(w.params, w.roles);
        const BigRational   lhs = eval_4f3_unit(w.params);
        const BigRational   rhs = t.coefficient * eval_4f3_unit(t.transformed);
        r.check(lhs == rhs, "Whipple invariance", std::move(at), lhs.get_str(), rhs.get_str());
    };

    Json worked = whipple_params_json(whipple_worked_instance());
    worked["sample"] = "worked";
    run(whipple_worked_instance(), worked);

    SampleStream rng(spec.seed);
    for (std::int64_t s = 0; s < spec.count; ++s) {
        const WhippleInstance w = sample_whipple_instance(rng);
        Json at = whipple_params_json(w);
        at["sample"] = s;
        run(w, std::move(at));
    }
    r.normalize();
    r.elapsed_ms = detail::millis_since(t0);
    return r;
}

} // namespace racahkit

#endif // RACAHKIT_VERIFY_HPP
