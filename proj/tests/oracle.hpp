#pragma once

// Brute-force reference implementations used only by the test suites.
// Everything here is deliberately naive and independent of the library
// code paths it checks: trial division instead of sieves, direct divisor
// enumeration instead of divisor sieves, dense schoolbook products instead
// of sparse eta-product passes, and the literal textbook formulas.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace oracle {

inline std::vector<std::uint64_t> trial_division_primes(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t n = 2; n <= limit; ++n) {
        bool prime = true;
        for (std::uint64_t d = 2; d * d <= n; ++d) {
            if (n % d == 0) {
                prime = false;
                break;
            }
        }
        if (prime) primes.push_back(n);
    }
    return primes;
}

inline mpz_class sigma_direct(unsigned r, std::uint64_t n) {
    mpz_class sum = 0;
    for (std::uint64_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        mpz_class t;
        mpz_ui_pow_ui(t.get_mpz_t(), d, r);
        sum += t;
    }
    return sum;
}

inline unsigned distinct_prime_factors(std::uint64_t n) {
    unsigned count = 0;
    for (std::uint64_t d = 2; d <= n; ++d) {
        if (n % d != 0) continue;
        ++count;
        while (n % d == 0) n /= d;
    }
    return count;
}

using Poly = std::vector<mpz_class>;  // poly[i] = coefficient of q^i

inline Poly poly_mul(const Poly& a, const Poly& b, std::size_t n) {
    Poly out(n + 1, mpz_class(0));
    for (std::size_t i = 0; i <= n && i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j <= n && j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

// prod_{m=1..n} (1 - q^m), expanded term by term.
inline Poly euler_product_naive(std::size_t n) {
    Poly prod(n + 1, mpz_class(0));
    prod[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        Poly factor(n + 1, mpz_class(0));
        factor[0] = 1;
        factor[m] = -1;
        prod = poly_mul(prod, factor, n);
    }
    return prod;
}

// Delta = q prod (1 - q^m)^24 by 24 dense multiplications.
inline Poly delta_naive(std::size_t n) {
    const Poly base = euler_product_naive(n);
    Poly p(n + 1, mpz_class(0));
    p[0] = 1;
    for (int i = 0; i < 24; ++i) p = poly_mul(p, base, n);
    Poly shifted(n + 1, mpz_class(0));
    for (std::size_t i = 1; i <= n; ++i) shifted[i] = p[i - 1];
    return shifted;
}

// E_w = 1 - (2w / B_w) sum_m sigma_{w-1}(m) q^m with the classical constants.
inline Poly eisenstein_naive(unsigned weight, std::size_t n) {
    long c = 0;
    switch (weight) {
        case 4: c = 240; break;
        case 6: c = -504; break;
        case 10: c = -264; break;
        case 14: c = -24; break;
        default: return {};
    }
    Poly out(n + 1, mpz_class(0));
    out[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) out[m] = mpz_class(c) * sigma_direct(weight - 1, m);
    return out;
}

// The weight 2k-2 eigenform for k in {10, 12, 14}: Delta times E_{2k-14}.
inline Poly eigenform_naive(unsigned k, std::size_t n) {
    const unsigned ew = 2 * k - 14;
    return poly_mul(delta_naive(n), eisenstein_naive(ew, n), n);
}

// a(p^0..p^M) from a(p) via a(p^{m+1}) = a(p) a(p^m) - p^{w-1} a(p^{m-1}).
inline std::vector<mpz_class> hecke_powers(const mpz_class& ap, std::uint64_t p, unsigned w,
                                           unsigned M) {
    std::vector<mpz_class> vals{mpz_class(1), ap};
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), p, w - 1);
    for (unsigned m = 2; m <= M; ++m) vals.push_back(ap * vals[m - 1] - pw * vals[m - 2]);
    vals.resize(M + 1);
    return vals;
}

// lambda_F(p^m) = p^{m(k-1)} + p^{m(k-1)-1}
//               + sum_{l=1}^{m-1} (p^{(m-l)(k-1)} + p^{(m-l)(k-1)-1}) a(p^l) + a(p^m)
inline mpz_class lambda_prime_power_naive(unsigned k, std::uint64_t p, unsigned m,
                                          const std::vector<mpz_class>& apows) {
    if (m == 0) return 1;
    auto ppow = [&](unsigned long e) {
        mpz_class t;
        mpz_ui_pow_ui(t.get_mpz_t(), p, e);
        return t;
    };
    mpz_class total = ppow(m * (k - 1)) + ppow(m * (k - 1) - 1);
    for (unsigned l = 1; l < m; ++l)
        total += (ppow((m - l) * (k - 1)) + ppow((m - l) * (k - 1) - 1)) * apows[l];
    return total + apows[m];
}

// lambda_F(n) over the factorization of n, from a naive eigenform table.
inline mpz_class lambda_naive(unsigned k, std::uint64_t n, const Poly& table) {
    mpz_class result = 1;
    for (std::uint64_t d = 2; d <= n; ++d) {
        if (n % d != 0) continue;
        unsigned m = 0;
        while (n % d == 0) {
            n /= d;
            ++m;
        }
        const auto apows = hecke_powers(table[d], d, 2 * k - 2, m);
        result *= lambda_prime_power_naive(k, d, m, apows);
    }
    return result;
}

// Exact normalized ratio lambda_F(n) / n^{k-1}.
inline mpq_class ratio_naive(unsigned k, std::uint64_t n, const Poly& table) {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), n, k - 1);
    mpq_class q(lambda_naive(k, n, table), den);
    q.canonicalize();
    return q;
}

}  // namespace oracle
