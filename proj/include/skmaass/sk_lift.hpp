#pragma once

// Exact Saito-Kurokawa eigenvalues.
//
// For the lift F of the weight 2k-2 eigenform f with coefficients a(n):
//
//   lambda_F(p^m) / p^{m(k-1)} =
//       1 + 1/p + (1 + 1/p) sum_{l=1}^{m-1} a(p^l)/p^{l(k-1)} + a(p^m)/p^{m(k-1)}
//
// (empty sum = 0), extended multiplicatively to all n. Cleared of
// denominators this gives lambda_F(p^m) as an exact integer; the normalized
// ratios r(n) = lambda_F(n)/n^{k-1} are a separate, rounded view.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "skmaass/eigenform.hpp"
#include "skmaass/errors.hpp"
#include "skmaass/primes.hpp"
#include "skmaass/real.hpp"

namespace skmaass {

class SkContext {
  public:
    // Builds the coefficient table to N and, when primeLimit > N, extracts
    // a(p) for the primes in (N, primeLimit] by per-coefficient convolution.
    // primeLimit = 0 means primeLimit = N.
    static SkContext build(unsigned k, std::uint64_t N, std::uint64_t primeLimit = 0,
                           unsigned jobs = 1) {
        require_supported_weight(k);
        if (N < 2) throw ConfigError("SkContext: N must be >= 2");
        if (primeLimit == 0) primeLimit = N;
        if (primeLimit < N) primeLimit = N;
        SkContext ctx;
        ctx.primeLimit_ = primeLimit;
        ctx.primes_ = sieve_primes(primeLimit);
        const DenseSeries delta = build_delta(primeLimit, jobs);
        const DenseSeries eis = eisenstein_series(2 * k - 14, primeLimit, jobs);
        ctx.table_ = eigenform_from_factors(k, N, delta, eis, jobs);
        if (primeLimit > N)
            ctx.extended_ = prime_coefficients(delta, eis, ctx.primes_, N, primeLimit, jobs);
        // Prime-power coefficients reachable inside the table, precomputed
        // once so lambda(n) queries stay allocation-light.
        for (std::uint64_t p : ctx.primes_.primes) {
            if (p * p > N) break;
            unsigned m = 0;
            std::uint64_t q = 1;
            while (q <= N / p) {
                q *= p;
                ++m;
            }
            ctx.ppowCache_[p] = coeff_prime_power(ctx.table_, p, m);
        }
        return ctx;
    }

    static SkContext from_table(CoefficientTable table) {
        SkContext ctx;
        ctx.primeLimit_ = table.truncation;
        ctx.primes_ = sieve_primes(table.truncation);
        ctx.table_ = std::move(table);
        return ctx;
    }

    unsigned k() const { return table_.k; }
    unsigned w() const { return table_.w; }
    std::uint64_t table_limit() const { return table_.truncation; }
    std::uint64_t prime_limit() const { return primeLimit_; }
    const CoefficientTable& table() const { return table_; }
    const PrimeTable& primes() const { return primes_; }

    bool prime_in_range(std::uint64_t p) const { return p <= primeLimit_; }

    const mpz_class& a_at_prime(std::uint64_t p) const {
        if (p <= table_.truncation) return table_.a[p];
        const auto it = std::lower_bound(
            extended_.begin(), extended_.end(), p,
            [](const auto& entry, std::uint64_t key) { return entry.first < key; });
        if (it == extended_.end() || it->first != p)
            throw RangeError("prime " + std::to_string(p) + " outside coefficient range (limit " +
                             std::to_string(primeLimit_) + ")");
        return it->second;
    }

    std::vector<mpz_class> prime_power_coeffs(std::uint64_t p, unsigned M) const {
        const auto it = ppowCache_.find(p);
        if (it != ppowCache_.end() && it->second.values.size() > M) {
            return {it->second.values.begin(), it->second.values.begin() + M + 1};
        }
        return hecke_prime_powers(a_at_prime(p), p, table_.w, M).values;
    }

    Real b_value(std::uint64_t p) const { return normalized_b(a_at_prime(p), p, table_.w); }

    // Factorization of n by the sieved primes; every prime factor must lie
    // within the coefficient range.
    std::vector<std::pair<std::uint64_t, unsigned>> factor_in_range(std::uint64_t n) const {
        if (n == 0) throw ConfigError("n must be >= 1");
        std::vector<std::pair<std::uint64_t, unsigned>> out;
        std::uint64_t rem = n;
        for (std::uint64_t p : primes_.primes) {
            if (p * p > rem) break;
            if (rem % p != 0) continue;
            unsigned m = 0;
            while (rem % p == 0) {
                rem /= p;
                ++m;
            }
            out.emplace_back(p, m);
        }
        if (rem > 1) {
            if (rem > primeLimit_)
                throw RangeError("n=" + std::to_string(n) + " has prime factor " +
                                 std::to_string(rem) + " outside coefficient range");
            out.emplace_back(rem, 1u);
        }
        return out;
    }

  private:
    CoefficientTable table_;
    std::vector<std::pair<std::uint64_t, mpz_class>> extended_;  // primes in (N, primeLimit]
    std::uint64_t primeLimit_ = 0;
    PrimeTable primes_;
    std::map<std::uint64_t, PrimePowerCoeffs> ppowCache_;
};

namespace detail {
inline mpz_class upow(std::uint64_t p, unsigned long e) {
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), p, e);
    return t;
}
}  // namespace detail

// lambda_F(p^m) as an exact integer, from precomputed a(p^0..p^m).
inline mpz_class lambda_prime_power_value(unsigned k, std::uint64_t p, unsigned m,
                                          const std::vector<mpz_class>& apows) {
    if (m == 0) return 1;
    mpz_class total =
        detail::upow(p, m * (k - 1)) + detail::upow(p, m * (k - 1) - 1);
    for (unsigned l = 1; l < m; ++l) {
        const unsigned long e = static_cast<unsigned long>(m - l) * (k - 1);
        total += (detail::upow(p, e) + detail::upow(p, e - 1)) * apows[l];
    }
    total += apows[m];
    if (sgn(total) <= 0)
        throw VerificationError("positivity violated: lambda_F(" + std::to_string(p) + "^" +
                                std::to_string(m) + ") <= 0");
    return total;
}

inline mpz_class lambda_prime_power(const SkContext& ctx, std::uint64_t p, unsigned m) {
    if (m == 0) return 1;
    return lambda_prime_power_value(ctx.k(), p, m, ctx.prime_power_coeffs(p, m));
}

// lambda_F(n) = prod lambda_F(p^{m_p}); multiplicative, lambda_F(1) = 1.
inline mpz_class lambda(const SkContext& ctx, std::uint64_t n) {
    mpz_class result = 1;
    for (const auto& [p, m] : ctx.factor_in_range(n))
        result *= lambda_prime_power(ctx, p, m);
    return result;
}

inline mpq_class exact_ratio_prime_power(const SkContext& ctx, std::uint64_t p, unsigned m) {
    mpq_class q(lambda_prime_power(ctx, p, m), detail::upow(p, m * (ctx.k() - 1)));
    q.canonicalize();
    return q;
}

inline mpq_class exact_ratio(const SkContext& ctx, std::uint64_t n) {
    mpq_class q(lambda(ctx, n), detail::upow(n, ctx.k() - 1));
    q.canonicalize();
    return q;
}

// One normalized eigenvalue: the exact integer plus the rounded ratio view.
struct RatioValue {
    std::uint64_t n = 0;
    mpz_class lambdaValue;
    mpq_class exact;  // lambda / n^{k-1}
    Real r;
};

inline RatioValue ratio(const SkContext& ctx, std::uint64_t n) {
    RatioValue v;
    v.n = n;
    v.lambdaValue = lambda(ctx, n);  // positivity asserted inside
    v.exact = mpq_class(v.lambdaValue, detail::upow(n, ctx.k() - 1));
    v.exact.canonicalize();
    v.r = Real(v.exact);
    return v;
}

// log of the product of r(p^{m_p}) over a list of distinct primes, summed in
// ascending-prime order. Avoids materializing lambda_F of the product.
inline Real ratio_log(const SkContext& ctx,
                      std::vector<std::pair<std::uint64_t, unsigned>> factors) {
    std::sort(factors.begin(), factors.end());
    for (std::size_t i = 1; i < factors.size(); ++i)
        if (factors[i].first == factors[i - 1].first)
            throw ConfigError("ratio_log: duplicate prime " + std::to_string(factors[i].first));
    Real sum;
    for (const auto& [p, m] : factors) {
        if (m == 0) continue;
        sum += log(Real(exact_ratio_prime_power(ctx, p, m)));
    }
    return sum;
}

// alpha_p = sum_{n>=2} (n+1) p^{-n/2} = (3 sqrt(p) - 2) / (sqrt(p)(sqrt(p)-1)^2).
inline Real alpha(std::uint64_t p) {
    if (p < 2) throw ConfigError("alpha: p must be >= 2");
    const Real s = sqrt(Real(static_cast<unsigned long>(p)));
    const Real sm1 = s - Real(1L);
    return (Real(3L) * s - Real(2L)) / (s * sm1 * sm1);
}

// sum_{l > M} (l+1) x^l = x^{M+1} ((M+2) - (M+1) x) / (1-x)^2 for |x| < 1.
inline Real tail_series_closed(const Real& x, unsigned M) {
    if (!Real(1L).certainly_greater(x)) throw ConfigError("tail_series_closed: need x < 1");
    const Real one(1L);
    const Real head = pow_ui(x, M + 1);
    const Real lin = Real(static_cast<long>(M) + 2) - Real(static_cast<long>(M) + 1) * x;
    const Real den = (one - x) * (one - x);
    return head * lin / den;
}

// Rigorous bound on |sum_{l > M} a(p^l)/p^{l(k-1)}| via the Deligne
// majorization |a(p^l)| <= (l+1) p^{l(w-1)/2}.
inline Real tail_bound(std::uint64_t p, unsigned M) {
    if (p < 2) throw ConfigError("tail_bound: p must be >= 2");
    const Real x = Real(1L) / sqrt(Real(static_cast<unsigned long>(p)));
    return tail_series_closed(x, M);
}

// The limit of r(p^m) as m -> infinity. Closed form from the Euler factor:
//   L_p = (1 + 1/p) / (1 - a(p)/p^{k-1} + 1/p),
// verified on construction against the truncated series plus its tail bound.
struct LimitPoint {
    std::uint64_t p = 0;
    Real value;
    unsigned truncationM = 0;
    mpq_class exact;
};

namespace detail {
// base_M = 1 + 1/p + (1+1/p) sum_{l=1}^{M} a(p^l)/p^{l(k-1)}, exact.
inline mpq_class partial_ratio_base(const SkContext& ctx, std::uint64_t p, unsigned M,
                                    const std::vector<mpz_class>& apows) {
    const unsigned k = ctx.k();
    mpz_class num = 0;
    for (unsigned l = 1; l <= M; ++l) num += apows[l] * upow(p, (M - l) * (k - 1));
    mpq_class partial(num, upow(p, M * (k - 1)));
    partial.canonicalize();
    const mpq_class onePlus(static_cast<unsigned long>(p) + 1, static_cast<unsigned long>(p));
    mpq_class base = onePlus + onePlus * partial;
    base.canonicalize();
    return base;
}
}  // namespace detail

inline LimitPoint limit_point(const SkContext& ctx, std::uint64_t p, unsigned M = 64) {
    const mpz_class& ap = ctx.a_at_prime(p);
    const unsigned k = ctx.k();
    const mpz_class pk1 = detail::upow(p, k - 1);
    mpz_class den = (mpz_class(p) + 1) * pk1 - ap * p;
    if (sgn(den) <= 0)
        throw VerificationError("limit_point: Euler factor denominator not positive at p=" +
                                std::to_string(p));
    mpq_class exact(mpz_class((mpz_class(p) + 1) * pk1), den);
    exact.canonicalize();

    // Cross-check: |L - S_M| <= (1 + 1/p) tail_bound(p, M).
    const auto apows = ctx.prime_power_coeffs(p, M);
    const mpq_class sM = detail::partial_ratio_base(ctx, p, M, apows);
    mpq_class diff = exact - sM;
    mpq_class absdiff = diff >= 0 ? diff : mpq_class(-diff);
    const Real onePlus = Real(1L) + Real(1L) / Real(static_cast<unsigned long>(p));
    const Real bound = onePlus * tail_bound(p, M);
    if (!Real(absdiff).certainly_le(bound))
        throw VerificationError("limit_point: closed form disagrees with truncated series at p=" +
                                std::to_string(p));
    return LimitPoint{p, Real(exact), M, std::move(exact)};
}

// Certified enclosure of inf_{m>=1} r(p^m) (and sup): the minimum over
// m <= M of the exact ratios, combined with a uniform bound for all m > M
// built from the partial sum, the series tail bound, and the single-term
// Deligne bound (M+2) p^{-(M+1)/2}.
struct CertifiedInfimum {
    std::uint64_t p = 0;
    unsigned M = 0;
    Real lower;            // inf >= lower (as a certified ball lower bound)
    Real upper;            // inf <= upper (the smallest computed ratio)
    mpq_class minComputed; // min_{m<=M} r(p^m), exact
    bool vacuousPositivity = false;  // lower bound fails to certify inf > 0
};

struct CertifiedSupremum {
    std::uint64_t p = 0;
    unsigned M = 0;
    Real lower;  // sup >= lower (the largest computed ratio)
    Real upper;  // sup <= upper
    mpq_class maxComputed;
};

namespace detail {
struct UniformTail {
    Real lower;  // r(p^m) >= lower for every m > M
    Real upper;  // r(p^m) <= upper for every m > M
};

inline UniformTail uniform_tail_bounds(const SkContext& ctx, std::uint64_t p, unsigned M,
                                       const std::vector<mpz_class>& apows) {
    const Real base(partial_ratio_base(ctx, p, M, apows));
    const Real onePlus = Real(1L) + Real(1L) / Real(static_cast<unsigned long>(p));
    const Real tail = tail_bound(p, M);
    const Real x = Real(1L) / sqrt(Real(static_cast<unsigned long>(p)));
    const Real point = Real(static_cast<long>(M) + 2) * pow_ui(x, M + 1);
    const Real spread = onePlus * tail + point;
    return UniformTail{base - spread, base + spread};
}

inline const Real& min_by_lower(const Real& a, const Real& b) {
    return Real::cmp_lower_bounds(a, b) <= 0 ? a : b;
}
inline const Real& max_by_upper(const Real& a, const Real& b) {
    return Real::cmp_upper_bounds(a, b) >= 0 ? a : b;
}
}  // namespace detail

inline CertifiedInfimum certified_inf_ratio(const SkContext& ctx, std::uint64_t p, unsigned M) {
    if (M < 1) throw ConfigError("certified_inf_ratio: M must be >= 1");
    const auto apows = ctx.prime_power_coeffs(p, M);
    mpq_class minQ = exact_ratio_prime_power(ctx, p, 1);
    for (unsigned m = 2; m <= M; ++m) {
        mpq_class r(lambda_prime_power_value(ctx.k(), p, m, apows),
                    detail::upow(p, m * (ctx.k() - 1)));
        r.canonicalize();
        if (r < minQ) minQ = r;
    }
    const auto tails = detail::uniform_tail_bounds(ctx, p, M, apows);
    CertifiedInfimum out;
    out.p = p;
    out.M = M;
    out.upper = Real(minQ);
    out.lower = detail::min_by_lower(Real(minQ), tails.lower);
    out.minComputed = std::move(minQ);
    out.vacuousPositivity = !out.lower.certainly_positive();
    return out;
}

inline CertifiedSupremum certified_sup_ratio(const SkContext& ctx, std::uint64_t p, unsigned M) {
    if (M < 1) throw ConfigError("certified_sup_ratio: M must be >= 1");
    const auto apows = ctx.prime_power_coeffs(p, M);
    mpq_class maxQ = exact_ratio_prime_power(ctx, p, 1);
    for (unsigned m = 2; m <= M; ++m) {
        mpq_class r(lambda_prime_power_value(ctx.k(), p, m, apows),
                    detail::upow(p, m * (ctx.k() - 1)));
        r.canonicalize();
        if (r > maxQ) maxQ = r;
    }
    const auto tails = detail::uniform_tail_bounds(ctx, p, M, apows);
    CertifiedSupremum out;
    out.p = p;
    out.M = M;
    out.lower = Real(maxQ);
    out.upper = detail::max_by_upper(Real(maxQ), tails.upper);
    out.maxComputed = std::move(maxQ);
    return out;
}

}  // namespace skmaass
