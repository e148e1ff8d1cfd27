#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "skmaass/delta.hpp"
#include "skmaass/eisenstein.hpp"
#include "skmaass/errors.hpp"
#include "skmaass/parallel.hpp"
#include "skmaass/primes.hpp"
#include "skmaass/real.hpp"
#include "skmaass/series.hpp"

namespace skmaass {

// The spaces S_18, S_22, S_26 of elliptic cusp forms are one-dimensional,
// which keeps every coefficient a rational integer; those are exactly the
// Siegel weights k = 10, 12, 14.
inline bool supported_siegel_weight(unsigned k) { return k == 10 || k == 12 || k == 14; }

inline void require_supported_weight(unsigned k) {
    if (k % 2 != 0)
        throw ConfigError("k=" + std::to_string(k) +
                          " rejected: Saito-Kurokawa lifts require even k; supported k: 10, 12, 14");
    if (!supported_siegel_weight(k))
        throw ConfigError("k=" + std::to_string(k) +
                          " rejected: the elliptic space of weight 2k-2 must be one-dimensional; "
                          "supported k: 10, 12, 14");
}

// Exact Fourier coefficients a(1..N) of the normalized eigenform of weight
// w = 2k-2. a[0] is kept zero so that a[n] is the coefficient of q^n.
struct CoefficientTable {
    unsigned k = 0;
    unsigned w = 0;
    std::uint64_t truncation = 0;
    std::vector<mpz_class> a;

    const mpz_class& at(std::uint64_t n) const {
        if (n < 1 || n > truncation)
            throw RangeError("coefficient index " + std::to_string(n) + " outside table (N=" +
                             std::to_string(truncation) + ")");
        return a[n];
    }
};

// f = Delta * E_{w-12}, normalized by construction since Delta = q - ...
// and E has constant term 1.
inline CoefficientTable build_eigenform(unsigned k, std::uint64_t N, unsigned jobs = 1) {
    require_supported_weight(k);
    if (N < 2) throw ConfigError("build_eigenform: N must be >= 2");
    const DenseSeries delta = build_delta(N, jobs);
    const DenseSeries eis = eisenstein_series(2 * k - 14, N, jobs);
    DenseSeries f = series_mul(delta, eis, jobs);
    CoefficientTable table{k, 2 * k - 2, N, std::move(f.coeffs)};
    if (table.a[1] != 1) throw VerificationError("eigenform not normalized: a(1) != 1");
    return table;
}

// As build_eigenform, but reusing prebuilt Delta and Eisenstein series of a
// larger truncation.
inline CoefficientTable eigenform_from_factors(unsigned k, std::uint64_t N,
                                               const DenseSeries& delta,
                                               const DenseSeries& eis, unsigned jobs = 1) {
    require_supported_weight(k);
    DenseSeries f = series_mul(truncate(delta, N), truncate(eis, N), jobs);
    CoefficientTable table{k, 2 * k - 2, N, std::move(f.coeffs)};
    if (table.a[1] != 1) throw VerificationError("eigenform not normalized: a(1) != 1");
    return table;
}

// a(p) for every prime p <= primeLimit, by the per-coefficient convolution
// path: a(p) = sum_j Delta_j E_{p-j}, costing O(p) multiply-adds per prime
// without materializing the full product series.
inline std::vector<std::pair<std::uint64_t, mpz_class>> prime_coefficients(
    const DenseSeries& delta, const DenseSeries& eis, const PrimeTable& primes,
    std::uint64_t primeLow, std::uint64_t primeHigh, unsigned jobs = 1) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t p : primes.primes)
        if (p > primeLow && p <= primeHigh) ps.push_back(p);
    std::vector<std::pair<std::uint64_t, mpz_class>> out(ps.size());
    parallel_for(ps.size(), jobs, [&](std::size_t i) {
        out[i] = {ps[i], conv_coefficient(delta, eis, ps[i])};
    });
    return out;
}

// a(p^0 .. p^M) via the Hecke relation a(p^{m+1}) = a(p) a(p^m) - p^{w-1} a(p^{m-1}).
struct PrimePowerCoeffs {
    std::uint64_t p = 0;
    std::vector<mpz_class> values;  // values[m] = a(p^m)
};

inline PrimePowerCoeffs hecke_prime_powers(const mpz_class& ap, std::uint64_t p, unsigned w,
                                           unsigned M) {
    PrimePowerCoeffs out{p, {mpz_class(1)}};
    out.values.reserve(M + 1);
    if (M >= 1) out.values.push_back(ap);
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), p, w - 1);
    for (unsigned m = 2; m <= M; ++m) {
        mpz_class next = ap * out.values[m - 1] - pw * out.values[m - 2];
        out.values.push_back(std::move(next));
    }
    return out;
}

inline PrimePowerCoeffs coeff_prime_power(const CoefficientTable& table, std::uint64_t p,
                                          unsigned M) {
    return hecke_prime_powers(table.at(p), p, table.w, M);
}

// Multiplicative extension: a(n) = prod a(p^{m_p}) over the factorization.
inline mpz_class coeff(const CoefficientTable& table, std::uint64_t n) {
    if (n == 0) throw ConfigError("coeff: n must be >= 1");
    if (n == 1) return 1;
    mpz_class result = 1;
    for (const auto& [p, m] : factorize(n)) {
        if (p > table.truncation)
            throw RangeError("coeff: prime factor " + std::to_string(p) + " outside table");
        result *= coeff_prime_power(table, p, m).values[m];
    }
    return result;
}

// b(p) = a(p) / p^{(w-1)/2}, the Deligne-normalized coefficient in [-2, 2].
inline Real normalized_b(const mpz_class& ap, std::uint64_t p, unsigned w) {
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), p, w - 1);
    return Real(ap) / sqrt(Real(pw));
}

inline Real normalized_b(const CoefficientTable& table, std::uint64_t p) {
    return normalized_b(table.at(p), p, table.w);
}

// |a(n)| <= d(n) n^{(w-1)/2} for every stored coefficient, checked exactly
// as a(n)^2 <= d(n)^2 n^{w-1}. A violation is a library bug, never data.
struct DeligneMargin {
    std::uint64_t n = 0;
    Real margin;  // |a(n)| / (d(n) n^{(w-1)/2}), in [0, 1]
};

struct DeligneReport {
    std::uint64_t checked = 0;
    std::vector<DeligneMargin> tightest;  // descending margin
};

inline DeligneReport deligne_check(const CoefficientTable& table, std::size_t top = 5,
                                   unsigned jobs = 1) {
    const std::uint64_t N = table.truncation;
    const auto d = sigma_table(0, N);
    std::vector<int> ok(N + 1, 1);
    parallel_for(N, jobs, [&](std::size_t i) {
        const std::uint64_t n = i + 1;
        mpz_class lhs = table.a[n] * table.a[n];
        mpz_class rhs;
        mpz_ui_pow_ui(rhs.get_mpz_t(), n, table.w - 1);
        rhs *= d[n] * d[n];
        ok[n] = (lhs <= rhs) ? 1 : 0;
    });
    for (std::uint64_t n = 1; n <= N; ++n)
        if (!ok[n])
            throw VerificationError("Deligne bound violated at n=" + std::to_string(n) +
                                    " (implementation bug)");
    // Rank margins |a(n)| / (d(n) n^{(w-1)/2}); ties resolved by smaller n.
    std::vector<DeligneMargin> margins;
    margins.reserve(N);
    for (std::uint64_t n = 1; n <= N; ++n) {
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), n, table.w - 1);
        Real bound = Real(d[n]) * sqrt(Real(pw));
        margins.push_back({n, abs(Real(table.a[n])) / bound});
    }
    std::stable_sort(margins.begin(), margins.end(), [](const auto& x, const auto& y) {
        return x.margin.cmp_mid(y.margin) > 0;
    });
    if (margins.size() > top) margins.resize(top);
    return DeligneReport{N, std::move(margins)};
}

// ---- coefficient cache persistence -------------------------------------
//
// UTF-8 text, LF endings, bit-exact:
//   line 1: "# skmaass-cache v1"
//   line 2: "# k=<k> w=<w> N=<N>"
//   lines 3..N+2: "<n>\t<a(n)>", n ascending from 1.

inline std::string cache_header_line(const CoefficientTable& t) {
    return "# k=" + std::to_string(t.k) + " w=" + std::to_string(t.w) +
           " N=" + std::to_string(t.truncation);
}

inline void write_cache(const CoefficientTable& table, const std::filesystem::path& path) {
    std::error_code ec;
    const auto dir = path.parent_path();
    if (!dir.empty()) std::filesystem::create_directories(dir, ec);
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw IoError("cannot open " + tmp + " for writing");
        out << "# skmaass-cache v1\n" << cache_header_line(table) << "\n";
        for (std::uint64_t n = 1; n <= table.truncation; ++n)
            out << n << '\t' << table.a[n].get_str() << '\n';
        if (!out) throw IoError("write failed: " + tmp);
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw IoError("atomic rename failed: " + path.string() + ": " + ec.message());
}

inline CoefficientTable read_cache(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open cache " + path.string());
    std::string line;
    if (!std::getline(in, line) || line != "# skmaass-cache v1")
        throw IoError("bad cache magic in " + path.string());
    unsigned k = 0, w = 0;
    std::uint64_t N = 0;
    if (!std::getline(in, line) ||
        std::sscanf(line.c_str(), "# k=%u w=%u N=%llu", &k, &w,
                    reinterpret_cast<unsigned long long*>(&N)) != 3)
        throw IoError("bad cache header in " + path.string());
    if (!supported_siegel_weight(k) || w != 2 * k - 2 || N < 2)
        throw IoError("cache header (k,w,N) inconsistent in " + path.string());
    CoefficientTable table{k, w, N, std::vector<mpz_class>(N + 1, mpz_class(0))};
    for (std::uint64_t n = 1; n <= N; ++n) {
        if (!std::getline(in, line)) throw IoError("cache truncated at n=" + std::to_string(n));
        const auto tab = line.find('\t');
        if (tab == std::string::npos) throw IoError("cache line " + std::to_string(n) + " malformed");
        if (std::stoull(line.substr(0, tab)) != n)
            throw IoError("cache index mismatch at n=" + std::to_string(n));
        if (mpz_set_str(table.a[n].get_mpz_t(), line.c_str() + tab + 1, 10) != 0)
            throw IoError("cache value unparsable at n=" + std::to_string(n));
    }
    if (table.a[1] != 1) throw IoError("cache not a normalized eigenform: a(1) != 1");
    return table;
}

}  // namespace skmaass
