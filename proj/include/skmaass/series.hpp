#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "skmaass/errors.hpp"
#include "skmaass/parallel.hpp"

namespace skmaass {

// Truncated q-expansion sum c(n) q^n + O(q^{N+1}) with exact integer
// coefficients; coeffs has size N+1.
struct DenseSeries {
    std::uint64_t truncation = 0;
    std::vector<mpz_class> coeffs;

    static DenseSeries zero(std::uint64_t N) {
        return DenseSeries{N, std::vector<mpz_class>(N + 1, mpz_class(0))};
    }
    static DenseSeries one(std::uint64_t N) {
        DenseSeries s = zero(N);
        s.coeffs[0] = 1;
        return s;
    }
};

// Same truncation convention, but only the nonzero terms are stored, as
// (exponent, coefficient) pairs with strictly ascending exponents.
struct SparseSeries {
    std::uint64_t truncation = 0;
    std::vector<std::pair<std::uint64_t, mpz_class>> terms;
};

inline void validate(const SparseSeries& s) {
    std::uint64_t prev = 0;
    bool first = true;
    for (const auto& [e, c] : s.terms) {
        if (e > s.truncation) throw ConfigError("SparseSeries: exponent beyond truncation");
        if (!first && e <= prev) throw ConfigError("SparseSeries: exponents not ascending");
        if (c == 0) throw ConfigError("SparseSeries: zero coefficient stored");
        prev = e;
        first = false;
    }
}

inline DenseSeries densify(const SparseSeries& s) {
    DenseSeries d = DenseSeries::zero(s.truncation);
    for (const auto& [e, c] : s.terms) d.coeffs[e] = c;
    return d;
}

inline DenseSeries series_mul(const DenseSeries& a, const DenseSeries& b, unsigned jobs = 1) {
    if (a.truncation != b.truncation)
        throw ConfigError("series_mul: truncation mismatch");
    const std::uint64_t N = a.truncation;
    DenseSeries out = DenseSeries::zero(N);
    parallel_for(N + 1, jobs, [&](std::size_t n) {
        mpz_ptr acc = out.coeffs[n].get_mpz_t();
        for (std::uint64_t i = 0; i <= n; ++i) {
            mpz_srcptr ai = a.coeffs[i].get_mpz_t();
            if (mpz_sgn(ai) == 0) continue;
            mpz_addmul(acc, ai, b.coeffs[n - i].get_mpz_t());
        }
    });
    return out;
}

inline DenseSeries series_mul_sparse(const DenseSeries& a, const SparseSeries& s,
                                     unsigned jobs = 1) {
    if (a.truncation != s.truncation)
        throw ConfigError("series_mul_sparse: truncation mismatch");
    const std::uint64_t N = a.truncation;
    DenseSeries out = DenseSeries::zero(N);
    parallel_for(N + 1, jobs, [&](std::size_t n) {
        mpz_ptr acc = out.coeffs[n].get_mpz_t();
        for (const auto& [e, c] : s.terms) {
            if (e > n) break;
            mpz_srcptr an = a.coeffs[n - e].get_mpz_t();
            if (mpz_sgn(an) == 0) continue;
            // +-1 coefficients dominate (pentagonal factors); avoid the mul.
            if (mpz_cmp_ui(c.get_mpz_t(), 1) == 0)
                mpz_add(acc, acc, an);
            else if (mpz_cmp_si(c.get_mpz_t(), -1) == 0)
                mpz_sub(acc, acc, an);
            else
                mpz_addmul(acc, c.get_mpz_t(), an);
        }
    });
    return out;
}

// Single coefficient of a*b at index n, without materializing the product.
inline mpz_class conv_coefficient(const DenseSeries& a, const DenseSeries& b,
                                  std::uint64_t n) {
    if (n > a.truncation || n > b.truncation)
        throw RangeError("conv_coefficient: index beyond truncation");
    mpz_class acc = 0;
    for (std::uint64_t i = 0; i <= n; ++i) {
        mpz_srcptr ai = a.coeffs[i].get_mpz_t();
        if (mpz_sgn(ai) == 0) continue;
        mpz_addmul(acc.get_mpz_t(), ai, b.coeffs[n - i].get_mpz_t());
    }
    return acc;
}

inline DenseSeries truncate(const DenseSeries& a, std::uint64_t N) {
    if (N > a.truncation) throw ConfigError("truncate: cannot extend a series");
    DenseSeries out;
    out.truncation = N;
    out.coeffs.assign(a.coeffs.begin(), a.coeffs.begin() + static_cast<std::ptrdiff_t>(N + 1));
    return out;
}

}  // namespace skmaass
