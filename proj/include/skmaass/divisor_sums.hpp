#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "skmaass/errors.hpp"

namespace skmaass {

// sigma_r(n) = sum_{d | n} d^r for n = 1..N, by the divisor sieve
// (O(N log N) additions). Index 0 of the result is unused.
// Supported exponents are the ones the Eisenstein series need plus r = 0
// for the divisor-count function d(n).
inline std::vector<mpz_class> sigma_table(unsigned r, std::uint64_t N) {
    switch (r) {
        case 0: case 3: case 5: case 9: case 13: break;
        default:
            throw ConfigError("sigma_table: unsupported exponent r=" + std::to_string(r) +
                              " (supported: 0, 3, 5, 9, 13)");
    }
    if (N < 1) throw ConfigError("sigma_table: N must be >= 1");
    std::vector<mpz_class> table(N + 1, mpz_class(0));
    mpz_class dr;
    for (std::uint64_t d = 1; d <= N; ++d) {
        mpz_ui_pow_ui(dr.get_mpz_t(), d, r);
        for (std::uint64_t m = d; m <= N; m += d)
            mpz_add(table[m].get_mpz_t(), table[m].get_mpz_t(), dr.get_mpz_t());
    }
    return table;
}

}  // namespace skmaass
