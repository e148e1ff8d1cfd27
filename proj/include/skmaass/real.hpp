#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>

#include "skmaass/errors.hpp"

namespace skmaass {

namespace ball {
// Upward-rounded double helpers for radius bookkeeping. Every double
// operation is followed by one nextafter step toward +inf, which dominates
// the rounding error of a correctly rounded operation.
inline double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }
inline double down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
inline double add(double a, double b) { return up(a + b); }
inline double mul(double a, double b) { return up(a * b); }
inline double div(double a, double b) { return up(a / b); }
inline double sqrt_down(double x) { return x <= 0 ? 0.0 : down(std::sqrt(x)); }
}  // namespace ball

// A real number carried as (midpoint, radius): an MPFR midpoint at the
// working precision plus a double upper bound on the absolute error.
// Arithmetic propagates the radius conservatively, so every certified
// comparison (certainly_*) is rigorous.
class Real {
  public:
    // Floor of 160 keeps >= 128 fractional bits for every magnitude this
    // library works with.
    static void set_working_precision(mpfr_prec_t bits) {
        if (bits < 160) bits = 160;
        default_prec_.store(bits, std::memory_order_relaxed);
    }
    static mpfr_prec_t working_precision() {
        return default_prec_.load(std::memory_order_relaxed);
    }

    Real() { init_(); }
    explicit Real(long v) : Real() { mpfr_set_si(v_, v, MPFR_RNDN); }
    explicit Real(unsigned long v) : Real() { mpfr_set_ui(v_, v, MPFR_RNDN); }
    explicit Real(int v) : Real(static_cast<long>(v)) {}
    explicit Real(double v) : Real() { mpfr_set_d(v_, v, MPFR_RNDN); }  // exact
    explicit Real(const mpz_class& v) : Real() {
        mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
        rad_ = round_err_();
    }
    explicit Real(const mpq_class& v) : Real() {
        mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
        rad_ = round_err_();
    }
    static Real ratio_of(const mpz_class& num, const mpz_class& den) {
        mpq_class q(num, den);
        q.canonicalize();
        return Real(q);
    }

    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
        rad_ = o.rad_;
    }
    Real(Real&& o) noexcept {
        v_[0] = o.v_[0];
        rad_ = o.rad_;
        mpfr_init2(o.v_, MPFR_PREC_MIN);
    }
    Real& operator=(Real o) noexcept {
        std::swap(v_[0], o.v_[0]);
        std::swap(rad_, o.rad_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    double err() const { return rad_; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero_exact() const { return mpfr_zero_p(v_) && rad_ == 0.0; }

    std::string str(int significant = 15) const {
        char* buf = nullptr;
        mpfr_asprintf(&buf, "%.*Rg", significant, v_);
        std::string out(buf);
        mpfr_free_str(buf);
        return out;
    }

    // ---- certified predicates (rigorous with respect to the radius) ----

    bool certainly_positive() const { return cmp_lo_hi_(*this, Real(0L)) > 0; }
    bool certainly_negative() const { return Real(0L).certainly_greater(*this); }
    bool certainly_greater(const Real& o) const { return cmp_lo_hi_(*this, o) > 0; }
    bool certainly_less(const Real& o) const { return o.certainly_greater(*this); }
    bool certainly_ge(const Real& o) const { return cmp_lo_hi_(*this, o) >= 0; }
    bool certainly_le(const Real& o) const { return o.certainly_ge(*this); }

    // True iff the exact rational q lies inside the ball.
    bool contains(const mpq_class& q) const {
        mpfr_t d;
        mpfr_init2(d, mpfr_get_prec(v_) + 64);
        mpfr_sub_q(d, v_, q.get_mpq_t(), MPFR_RNDA);
        mpfr_abs(d, d, MPFR_RNDU);
        double bound = ball::add(rad_, ulp_of_(d));
        const bool ok = mpfr_cmp_d(d, bound) <= 0;
        mpfr_clear(d);
        return ok;
    }

    // Deterministic midpoint ordering (not certified); used only for
    // reproducible argmin/argmax selection.
    int cmp_mid(const Real& o) const { return mpfr_cmp(v_, o.v_); }
    int sign_mid() const { return mpfr_sgn(v_); }

    // Three-way comparisons of the outward-rounded endpoints. Selecting a
    // ball by these keeps min/max reductions conservative.
    static int cmp_lower_bounds(const Real& a, const Real& b) {
        mpfr_t la, lb;
        mpfr_init2(la, mpfr_get_prec(a.v_));
        mpfr_init2(lb, mpfr_get_prec(b.v_));
        mpfr_sub_d(la, a.v_, a.rad_, MPFR_RNDD);
        mpfr_sub_d(lb, b.v_, b.rad_, MPFR_RNDD);
        const int c = mpfr_cmp(la, lb);
        mpfr_clear(la);
        mpfr_clear(lb);
        return c;
    }
    static int cmp_upper_bounds(const Real& a, const Real& b) {
        mpfr_t ha, hb;
        mpfr_init2(ha, mpfr_get_prec(a.v_));
        mpfr_init2(hb, mpfr_get_prec(b.v_));
        mpfr_add_d(ha, a.v_, a.rad_, MPFR_RNDU);
        mpfr_add_d(hb, b.v_, b.rad_, MPFR_RNDU);
        const int c = mpfr_cmp(ha, hb);
        mpfr_clear(ha);
        mpfr_clear(hb);
        return c;
    }

    // ---- arithmetic ----

    friend Real operator-(const Real& a) {
        Real r = a;
        mpfr_neg(r.v_, r.v_, MPFR_RNDN);
        return r;
    }

    friend Real operator+(const Real& a, const Real& b) {
        Real r;
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        r.rad_ = ball::add(ball::add(a.rad_, b.rad_), r.round_err_());
        return r;
    }
    friend Real operator-(const Real& a, const Real& b) {
        Real r;
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        r.rad_ = ball::add(ball::add(a.rad_, b.rad_), r.round_err_());
        return r;
    }
    friend Real operator*(const Real& a, const Real& b) {
        Real r;
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        const double au = a.abs_upper_();
        const double bu = b.abs_upper_();
        double rad = ball::add(ball::mul(au, b.rad_), ball::mul(bu, a.rad_));
        rad = ball::add(rad, ball::mul(a.rad_, b.rad_));
        r.rad_ = ball::add(rad, r.round_err_());
        return r;
    }
    friend Real operator/(const Real& a, const Real& b) {
        Real r;
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        const double bl = ball::down(ball::down(b.abs_lower_()) - b.rad_);
        if (!(bl > 0.0)) {
            r.rad_ = std::numeric_limits<double>::infinity();
            return r;
        }
        const double qu = r.abs_upper_();
        // |x/y - a/b| <= (ra + |a/b| rb) / (|b| - rb)
        double rad = ball::div(ball::add(a.rad_, ball::mul(qu, b.rad_)), bl);
        r.rad_ = ball::add(rad, r.round_err_());
        return r;
    }

    Real& operator+=(const Real& o) { return *this = *this + o; }
    Real& operator-=(const Real& o) { return *this = *this - o; }
    Real& operator*=(const Real& o) { return *this = *this * o; }
    Real& operator/=(const Real& o) { return *this = *this / o; }

    friend Real abs(const Real& a) {
        Real r = a;
        mpfr_abs(r.v_, r.v_, MPFR_RNDN);
        return r;
    }

    friend Real sqrt(const Real& a) {
        if (mpfr_sgn(a.v_) < 0) throw ConfigError("sqrt: negative midpoint");
        Real r;
        if (mpfr_zero_p(a.v_)) {
            mpfr_set_ui(r.v_, 0, MPFR_RNDN);
            r.rad_ = ball::up(std::sqrt(a.rad_));
            return r;
        }
        mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
        // |sqrt(x) - sqrt(v)| = |x - v| / (sqrt(x) + sqrt(v)) <= rad / sqrt(v)
        const double sl = r.abs_lower_();
        double rad = sl > 0.0 ? ball::div(a.rad_, sl)
                              : std::numeric_limits<double>::infinity();
        r.rad_ = ball::add(rad, r.round_err_());
        return r;
    }

    friend Real log(const Real& a) {
        const double lo = ball::down(ball::down(a.abs_lower_()) - a.rad_);
        if (mpfr_sgn(a.v_) <= 0 || !(lo > 0.0))
            throw ConfigError("log: ball not certainly positive");
        Real r;
        mpfr_log(r.v_, a.v_, MPFR_RNDN);
        r.rad_ = ball::add(ball::div(a.rad_, lo), r.round_err_());
        return r;
    }

    friend Real acos(const Real& a) {
        const double me = ball::add(a.abs_upper_(), a.rad_);
        if (!(me < 1.0)) throw ConfigError("acos: ball not inside (-1, 1)");
        Real r;
        mpfr_acos(r.v_, a.v_, MPFR_RNDN);
        const double denom = ball::sqrt_down(ball::down(1.0 - ball::mul(me, me)));
        double rad = denom > 0.0 ? ball::div(a.rad_, denom)
                                 : std::numeric_limits<double>::infinity();
        r.rad_ = ball::add(rad, r.round_err_());
        return r;
    }

    friend Real sin(const Real& a) {
        Real r;
        mpfr_sin(r.v_, a.v_, MPFR_RNDN);
        r.rad_ = ball::add(a.rad_, r.round_err_());  // |sin'| <= 1
        return r;
    }
    friend Real cos(const Real& a) {
        Real r;
        mpfr_cos(r.v_, a.v_, MPFR_RNDN);
        r.rad_ = ball::add(a.rad_, r.round_err_());
        return r;
    }

    static Real pi() {
        Real r;
        mpfr_const_pi(r.v_, MPFR_RNDN);
        r.rad_ = r.round_err_();
        return r;
    }

    friend Real pow_ui(const Real& a, unsigned long e) {
        Real acc(1L);
        Real base = a;
        while (e > 0) {
            if (e & 1UL) acc *= base;
            e >>= 1UL;
            if (e > 0) base *= base;
        }
        return acc;
    }

  private:
    mpfr_t v_;
    double rad_ = 0.0;

    static inline std::atomic<mpfr_prec_t> default_prec_{192};

    void init_() {
        mpfr_init2(v_, default_prec_.load(std::memory_order_relaxed));
        mpfr_set_ui(v_, 0, MPFR_RNDN);
    }

    static double ulp_of_(const mpfr_t x) {
        if (mpfr_zero_p(x)) return 0.0;
        if (!mpfr_number_p(x)) return std::numeric_limits<double>::infinity();
        const long e = static_cast<long>(mpfr_get_exp(x)) -
                       static_cast<long>(mpfr_get_prec(x));
        if (e > 1000) return std::numeric_limits<double>::infinity();
        return std::ldexp(1.0, static_cast<int>(std::max(e, -1060L)));
    }
    double round_err_() const { return ulp_of_(v_); }

    double abs_upper_() const {  // double >= |v_|
        mpfr_t t;
        mpfr_init2(t, mpfr_get_prec(v_));
        mpfr_abs(t, v_, MPFR_RNDU);
        const double d = mpfr_get_d(t, MPFR_RNDU);
        mpfr_clear(t);
        return d;
    }
    double abs_lower_() const {  // double <= |v_|
        mpfr_t t;
        mpfr_init2(t, mpfr_get_prec(v_));
        mpfr_abs(t, v_, MPFR_RNDD);
        const double d = mpfr_get_d(t, MPFR_RNDD);
        mpfr_clear(t);
        return d;
    }

    // Sign of lo(a) - hi(b) as a three-way comparison on mpfr values.
    static int cmp_lo_hi_(const Real& a, const Real& b) {
        if (!std::isfinite(a.rad_) || !std::isfinite(b.rad_)) return -1;
        mpfr_t lo, hi;
        mpfr_init2(lo, mpfr_get_prec(a.v_));
        mpfr_init2(hi, mpfr_get_prec(b.v_));
        mpfr_sub_d(lo, a.v_, a.rad_, MPFR_RNDD);
        mpfr_add_d(hi, b.v_, b.rad_, MPFR_RNDU);
        const int c = mpfr_cmp(lo, hi);
        mpfr_clear(lo);
        mpfr_clear(hi);
        return c;
    }
};

}  // namespace skmaass
