#pragma once

#include <cstdint>

#include "skmaass/divisor_sums.hpp"
#include "skmaass/errors.hpp"
#include "skmaass/series.hpp"

namespace skmaass {

// -2w / B_w for the weights this library needs.
inline long eisenstein_constant(unsigned weight) {
    switch (weight) {
        case 4: return 240;
        case 6: return -504;
        case 10: return -264;
        case 14: return -24;
        default:
            throw ConfigError("eisenstein: unsupported weight " + std::to_string(weight) +
                              " (supported: 4, 6, 10, 14)");
    }
}

// E_w = 1 - (2w/B_w) sum_{n>=1} sigma_{w-1}(n) q^n, straight from the
// divisor-sum sieve.
inline DenseSeries eisenstein_series_direct(unsigned weight, std::uint64_t N) {
    const long c = eisenstein_constant(weight);
    DenseSeries out = DenseSeries::one(N);
    if (N == 0) return out;
    const auto sig = sigma_table(weight - 1, N);
    for (std::uint64_t n = 1; n <= N; ++n) out.coeffs[n] = mpz_class(c) * sig[n];
    return out;
}

// E_4 and E_6 come from their divisor sums; E_10 = E_4 E_6 and
// E_14 = E_4^2 E_6 are assembled by series multiplication.
inline DenseSeries eisenstein_series(unsigned weight, std::uint64_t N, unsigned jobs = 1) {
    eisenstein_constant(weight);  // reject unsupported weights
    if (weight == 4 || weight == 6) return eisenstein_series_direct(weight, N);
    const DenseSeries e4 = eisenstein_series_direct(4, N);
    const DenseSeries e6 = eisenstein_series_direct(6, N);
    if (weight == 10) return series_mul(e4, e6, jobs);
    return series_mul(series_mul(e4, e4, jobs), e6, jobs);  // weight 14
}

}  // namespace skmaass
