#pragma once

// High-precision real scalar backed by MPFR.  Carries algebraic roots such as
// (1 +- sqrt 7)/4 when no exact rational value exists.
//
// Precision model: every value owns its bit precision; binary operations
// round to the larger of the two operand precisions.  The library works in
// decimal digits P at the surface (default 128) and converts once:
// bits = ceil(P * log2 10) + 64 guard bits.  Comparison against zero in
// numeric code uses the derived tolerance 10^-(P-20), never ad-hoc epsilons.

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "cuboid/errors.hpp"
#include "cuboid/rational.hpp"

namespace cuboid {

inline mpfr_prec_t digits_to_bits(int decimal_digits) {
    // 10^P needs P*log2(10) bits; the constant is rounded up.
    return static_cast<mpfr_prec_t>(decimal_digits * 3.3219280948873626 + 64);
}

class BigReal {
public:
    explicit BigReal(mpfr_prec_t bits = 64) {
        mpfr_init2(v_, bits);
        mpfr_set_zero(v_, 1);
    }
    BigReal(const BigReal& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigReal(BigReal&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigReal& operator=(const BigReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigReal& operator=(BigReal&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigReal() { mpfr_clear(v_); }

    static BigReal from_long(long n, mpfr_prec_t bits) {
        BigReal r(bits);
        mpfr_set_si(r.v_, n, MPFR_RNDN);
        return r;
    }
    static BigReal from_rational(const Rational& q, mpfr_prec_t bits) {
        BigReal r(bits);
        mpq_class raw(q.numerator());
        raw /= mpq_class(q.denominator());
        mpfr_set_q(r.v_, raw.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    // Base-10 parse at the given precision; throws on malformed input.
    static BigReal parse(const std::string& text, mpfr_prec_t bits) {
        BigReal r(bits);
        if (mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0)
            throw domain_error("parse", "malformed real literal: " + text);
        return r;
    }

    mpfr_prec_t precision_bits() const { return mpfr_get_prec(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Scientific notation with the requested number of significant digits.
    std::string to_string(int significant_digits = 40) const {
        char buf[256];
        int prec = std::max(1, significant_digits - 1);
        if (prec > 200) prec = 200;
        mpfr_snprintf(buf, sizeof buf, "%.*Re", prec, v_);
        return buf;
    }

    friend BigReal operator+(const BigReal& a, const BigReal& b) {
        BigReal r(join(a, b));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator-(const BigReal& a, const BigReal& b) {
        BigReal r(join(a, b));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator*(const BigReal& a, const BigReal& b) {
        BigReal r(join(a, b));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator/(const BigReal& a, const BigReal& b) {
        if (b.is_zero())
            throw domain_error("division-by-zero", "big-real division by zero");
        BigReal r(join(a, b));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator-(const BigReal& a) {
        BigReal r(a.precision_bits());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    BigReal& operator+=(const BigReal& o) { *this = *this + o; return *this; }
    BigReal& operator-=(const BigReal& o) { *this = *this - o; return *this; }
    BigReal& operator*=(const BigReal& o) { *this = *this * o; return *this; }
    BigReal& operator/=(const BigReal& o) { *this = *this / o; return *this; }

    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

    friend BigReal abs(const BigReal& a) {
        BigReal r(a.precision_bits());
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

private:
    static mpfr_prec_t join(const BigReal& a, const BigReal& b) {
        return std::max(a.precision_bits(), b.precision_bits());
    }

    mpfr_t v_;
};

// 10^e at the given precision.
inline BigReal pow10(long e, mpfr_prec_t bits) {
    BigReal ten = BigReal::from_long(10, bits);
    BigReal acc = BigReal::from_long(1, bits);
    bool inv = e < 0;
    unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    while (k--) acc *= ten;
    return inv ? BigReal::from_long(1, bits) / acc : acc;
}

// The tolerance contract: zero tests at P decimal digits use 10^-(P-20).
inline BigReal tolerance_for(int decimal_digits) {
    return pow10(-(static_cast<long>(decimal_digits) - 20), digits_to_bits(decimal_digits));
}

}  // namespace cuboid
