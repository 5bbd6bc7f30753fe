#pragma once

// Glue for code that is templated over the two scalar domains (Rational for
// exact mode, BigReal for numeric mode).  Exact code passes tol = 0 so the
// single predicate `negligible` covers both "equals zero exactly" and
// "within the derived tolerance".

#include "cuboid/bigreal.hpp"
#include "cuboid/rational.hpp"

namespace cuboid {

template <class S>
S scalar_from_rational(const Rational& r, mpfr_prec_t bits);

template <>
inline Rational scalar_from_rational<Rational>(const Rational& r, mpfr_prec_t) {
    return r;
}

template <>
inline BigReal scalar_from_rational<BigReal>(const Rational& r, mpfr_prec_t bits) {
    return BigReal::from_rational(r, bits);
}

template <class S>
S scalar_from_long(long n, mpfr_prec_t bits);

template <>
inline Rational scalar_from_long<Rational>(long n, mpfr_prec_t) {
    return Rational(n);
}

template <>
inline BigReal scalar_from_long<BigReal>(long n, mpfr_prec_t bits) {
    return BigReal::from_long(n, bits);
}

// Small integer constant in the domain of `like` (BigReal constants inherit
// its precision; the witness is ignored for rationals).
template <class S>
S scalar_int(long n, const S& like);

template <>
inline Rational scalar_int<Rational>(long n, const Rational&) {
    return Rational(n);
}

template <>
inline BigReal scalar_int<BigReal>(long n, const BigReal& like) {
    return BigReal::from_long(n, like.precision_bits());
}

template <class S>
bool negligible(const S& v, const S& tol) {
    return abs(v) <= tol;
}

template <class S>
inline constexpr bool is_exact_scalar = false;
template <>
inline constexpr bool is_exact_scalar<Rational> = true;

}  // namespace cuboid
