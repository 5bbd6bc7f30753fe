#pragma once

// Exact rational scalar used throughout the library: a thin canonicalizing
// wrapper over GMP's mpq_class.
//
// Invariants: gcd(|numerator|, denominator) = 1, denominator > 0, zero is
// 0/1.  Arithmetic is closed and exact; equality is structural equality of
// the canonical form, so values compare without tolerance.  Division by zero
// throws instead of hitting GMP's undefined behaviour.

#include <gmpxx.h>

#include <cstdlib>
#include <optional>
#include <string>
#include <utility>

#include "cuboid/errors.hpp"

namespace cuboid {

using Integer = mpz_class;

class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // implicit: lets mixed expressions read naturally
    Rational(long n, long d) : Rational(Integer(n), Integer(d)) {}
    Rational(const Integer& n) : q_(n) {}
    Rational(const Integer& n, const Integer& d) {
        if (sgn(d) == 0)
            throw domain_error("division-by-zero", "rational with zero denominator");
        q_ = mpq_class(n);
        q_ /= mpq_class(d);  // mpq_class division canonicalizes
    }

    // Accepts "n", "n/d", and plain decimals like "-0.125".  Returns nullopt
    // on anything it does not fully consume.
    static std::optional<Rational> parse(const std::string& text);

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    // max(|numerator|, denominator): the enumeration measure for scans.
    Integer height() const {
        Integer n = abs(numerator());
        Integer d = denominator();
        return n > d ? n : d;
    }

    // "n" when integral, "n/d" otherwise; canonical and parse-roundtrippable.
    std::string to_string() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    double to_double() const { return q_.get_d(); }  // diagnostics only

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw domain_error("division-by-zero", "rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) { Rational r; r.q_ = -a.q_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    // Integer powers, negative exponents included (throws on 0^negative).
    Rational pow_int(long e) const {
        if (e == 0) return Rational(1);
        if (e < 0) {
            if (is_zero())
                throw domain_error("division-by-zero", "zero to a negative power");
            return (Rational(1) / *this).pow_int(-e);
        }
        Rational base = *this, acc = 1;
        unsigned long k = static_cast<unsigned long>(e);
        while (k) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

private:
    mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline std::optional<Rational> Rational::parse(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };

    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::string num = text.substr(0, slash), den = text.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) return std::nullopt;
        Integer n(num), d(den);
        if (sgn(d) == 0) return std::nullopt;
        return Rational(n, d);
    }

    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string ip = text.substr(0, dot), fp = text.substr(dot + 1);
        if (ip.empty() || ip == "+" || ip == "-") ip += "0";
        if (!is_int(ip)) return std::nullopt;
        if (fp.empty()) return Rational(Integer(ip));
        for (char ch : fp)
            if (ch < '0' || ch > '9') return std::nullopt;
        Integer scale = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
        Integer whole(ip), frac(fp);
        Integer n = abs(whole) * scale + frac;
        if (ip[0] == '-') n = -n;
        return Rational(n, scale);
    }

    if (!is_int(text)) return std::nullopt;
    return Rational(Integer(text));
}

}  // namespace cuboid
