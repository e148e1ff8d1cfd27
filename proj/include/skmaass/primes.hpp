#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "skmaass/errors.hpp"

namespace skmaass {

struct PrimeTable {
    std::uint64_t limit = 0;
    std::vector<std::uint64_t> primes;  // ascending, all primes <= limit

    bool contains(std::uint64_t p) const {
        return std::binary_search(primes.begin(), primes.end(), p);
    }
    std::size_t count_below(std::uint64_t x) const {  // pi(x)
        return static_cast<std::size_t>(
            std::upper_bound(primes.begin(), primes.end(), x) - primes.begin());
    }
};

inline PrimeTable sieve_primes(std::uint64_t limit) {
    PrimeTable table;
    table.limit = limit;
    if (limit < 2) return table;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i * i <= limit; ++i) {
        if (composite[i]) continue;
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    for (std::uint64_t i = 2; i <= limit; ++i)
        if (!composite[i]) table.primes.push_back(i);
    return table;
}

// Number of distinct prime divisors; nu(1) = 0.
inline unsigned nu(std::uint64_t n) {
    if (n == 0) throw ConfigError("nu: argument must be >= 1");
    unsigned count = 0;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        ++count;
        while (n % d == 0) n /= d;
    }
    if (n > 1) ++count;
    return count;
}

// (prime, exponent) pairs, ascending primes.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    if (n == 0) throw ConfigError("factorize: argument must be >= 1");
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        unsigned m = 0;
        while (n % d == 0) {
            n /= d;
            ++m;
        }
        out.emplace_back(d, m);
    }
    if (n > 1) out.emplace_back(n, 1u);
    return out;
}

}  // namespace skmaass
