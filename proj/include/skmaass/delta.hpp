#pragma once

#include <algorithm>
#include <cstdint>

#include "skmaass/series.hpp"

namespace skmaass {

// Euler's pentagonal expansion prod_{n>=1} (1 - q^n) =
// sum_{j in Z} (-1)^j q^{j(3j-1)/2}, truncated at N. The generalized
// pentagonal exponents grow quadratically, so the series has O(sqrt(N))
// terms.
inline SparseSeries pentagonal_series(std::uint64_t N) {
    SparseSeries s;
    s.truncation = N;
    s.terms.emplace_back(0, mpz_class(1));
    for (std::uint64_t j = 1;; ++j) {
        const std::uint64_t lo = j * (3 * j - 1) / 2;  // index +j
        const std::uint64_t hi = j * (3 * j + 1) / 2;  // index -j
        if (lo > N) break;
        const mpz_class sign((j % 2 == 0) ? 1 : -1);
        s.terms.emplace_back(lo, sign);
        if (hi <= N) s.terms.emplace_back(hi, sign);
    }
    std::sort(s.terms.begin(), s.terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return s;
}

// Delta = q prod (1 - q^n)^24, built as 24 sparse pentagonal passes followed
// by the shift by q. O(N sqrt(N)) additions in total.
inline DenseSeries build_delta(std::uint64_t N, unsigned jobs = 1) {
    if (N < 1) throw ConfigError("build_delta: N must be >= 1");
    const std::uint64_t M = N - 1;  // truncation before the q shift
    const SparseSeries pent = pentagonal_series(M);
    DenseSeries acc = DenseSeries::one(M);
    for (int pass = 0; pass < 24; ++pass) acc = series_mul_sparse(acc, pent, jobs);
    DenseSeries delta = DenseSeries::zero(N);
    for (std::uint64_t n = 1; n <= N; ++n) delta.coeffs[n] = std::move(acc.coeffs[n - 1]);
    return delta;
}

}  // namespace skmaass
