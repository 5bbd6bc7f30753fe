#pragma once

// Cubic-to-reduced-form machinery and the sextic surface.
//
// An admissible cubic A3 x^3 + A2 x^2 + A1 x + A0 transforms to y^3 + y^2 + D
// with a single rational invariant D.  All three roots of the cubic are
// rational exactly when the degree-six curve D (w^2+3)^3 + 4 (w-1)^2 (1+w)^2
// has a rational point w, and in that case the roots come back as explicit
// rational functions of w.  For a cubic given by its roots, D has a closed
// form in the pairwise deviations u_i, and the six w-values attached to the
// root triple carry a fixed S3 permutation structure.

#include <array>

#include "cuboid/cuboid_model.hpp"
#include "cuboid/errors.hpp"
#include "cuboid/int_polynomial.hpp"
#include "cuboid/scalar.hpp"

namespace cuboid {

template <class S>
struct CubicCoeffs {
    S A3, A2, A1, A0;
};

enum class Admissibility {
    ok,
    first_violated,   // A3 = 0
    second_violated,  // A1/A3 - A2^2/(3 A3^2) = 0 (vanishing depressed linear term)
    third_violated,   // A0/A3 - A1 A2/(3 A3^2) + 2 A2^3/(27 A3^3) = 0
};

inline const char* describe(Admissibility a) {
    switch (a) {
        case Admissibility::ok: return "ok";
        case Admissibility::first_violated: return "first condition violated: leading coefficient is zero";
        case Admissibility::second_violated: return "second condition violated: depressed linear coefficient is zero";
        case Admissibility::third_violated: return "third condition violated: depressed constant term is zero";
    }
    return "?";
}

template <class S>
Admissibility admissibility(const CubicCoeffs<S>& A, const S& tol) {
    if (negligible(A.A3, tol)) return Admissibility::first_violated;
    S three = scalar_int<S>(3, A.A3);
    S second = A.A1 / A.A3 - (A.A2 * A.A2) / (three * A.A3 * A.A3);
    if (negligible(second, tol)) return Admissibility::second_violated;
    S third = A.A0 / A.A3 - (A.A1 * A.A2) / (three * A.A3 * A.A3) +
              (scalar_int<S>(2, A.A3) * A.A2 * A.A2 * A.A2) /
                  (scalar_int<S>(27, A.A3) * A.A3 * A.A3 * A.A3);
    if (negligible(third, tol)) return Admissibility::third_violated;
    return Admissibility::ok;
}

// D = -(9 A1 A2 A3 - 27 A0 A3^2 - 2 A2^3)^2 / (27 (A2^2 - 3 A1 A3)^3).
template <class S>
S reduce_D(const CubicCoeffs<S>& A, const S& tol) {
    Admissibility a = admissibility(A, tol);
    if (a != Admissibility::ok)
        throw domain_error("admissibility", describe(a));
    S num = scalar_int<S>(9, A.A3) * A.A1 * A.A2 * A.A3 -
            scalar_int<S>(27, A.A3) * A.A0 * A.A3 * A.A3 -
            scalar_int<S>(2, A.A3) * A.A2 * A.A2 * A.A2;
    S q = A.A2 * A.A2 - scalar_int<S>(3, A.A3) * A.A1 * A.A3;
    return -(num * num) / (scalar_int<S>(27, A.A3) * q * q * q);
}

// Pairwise deviations u_i = 2 x_i - x_j - x_k; they sum to zero, and all
// three must be nonzero for the root triple to sit on an admissible cubic.
template <class S>
std::array<S, 3> deviations(const S& x1, const S& x2, const S& x3) {
    return {x1 + x1 - x2 - x3, x2 + x2 - x3 - x1, x3 + x3 - x1 - x2};
}

// D = -8 (u1 u2 u3)^2 / (u1^2 + u2^2 + u3^2)^3 for the cubic with the given
// root triple; agrees exactly with reduce_D of the expanded cubic.
template <class S>
S D_from_roots(const S& x1, const S& x2, const S& x3, const S& tol) {
    auto u = deviations(x1, x2, x3);
    for (const auto& ui : u)
        if (negligible(ui, tol))
            throw domain_error("degenerate-deviation",
                               "a root deviation 2 x_i - x_j - x_k vanishes");
    S prod = u[0] * u[1] * u[2];
    S sum = u[0] * u[0] + u[1] * u[1] + u[2] * u[2];
    return -(scalar_int<S>(8, x1) * prod * prod) / (sum * sum * sum);
}

template <class S>
S sextic_residual(const S& D, const S& w) {
    S one = scalar_int<S>(1, w);
    S wsq3 = w * w + scalar_int<S>(3, w);
    S a = w - one, b = one + w;
    return D * wsq3 * wsq3 * wsq3 + scalar_int<S>(4, w) * a * a * b * b;
}

// Roots of y^3 + y^2 + D(w) = 0 with D(w) = -4 (w-1)^2 (w+1)^2 / (w^2+3)^3.
template <class S>
std::array<S, 3> reduced_roots(const S& w) {
    S one = scalar_int<S>(1, w);
    S den = w * w + scalar_int<S>(3, w);
    return {-(scalar_int<S>(2, w) * (w + one)) / den,
            (scalar_int<S>(2, w) * (w - one)) / den,
            (one - w * w) / den};
}

// Backward transformation: roots of an admissible cubic from a point w on
// its sextic (w = +-1 is outside the domain; off-surface w is rejected, not
// silently evaluated).
template <class S>
std::array<S, 3> cubic_roots_from_w(const CubicCoeffs<S>& A, const S& w, const S& tol) {
    S one = scalar_int<S>(1, A.A3);
    if (negligible(w - one, tol) || negligible(w + one, tol))
        throw domain_error("w-degenerate", "w = +-1 puts the root formulas' denominators to zero");
    S D = reduce_D(A, tol);  // checks admissibility
    if (!negligible(sextic_residual(D, w), tol))
        throw domain_error("off-sextic", "w does not satisfy the sextic equation of this cubic");

    S k2 = scalar_int<S>(2, w) * A.A2 * A.A2 * A.A2 -
           scalar_int<S>(9, w) * A.A1 * A.A2 * A.A3 +
           scalar_int<S>(27, w) * A.A0 * A.A3 * A.A3;
    S k1 = scalar_int<S>(18, w) * A.A2 * A.A1 * A.A3 - scalar_int<S>(6, w) * A.A2 * A.A2 * A.A2;
    S k0 = -scalar_int<S>(9, w) * A.A1 * A.A2 * A.A3 + scalar_int<S>(81, w) * A.A0 * A.A3 * A.A3;
    S q = A.A2 * A.A2 - scalar_int<S>(3, w) * A.A1 * A.A3;
    S c18 = scalar_int<S>(18, w), c9 = scalar_int<S>(9, w);
    S x1 = (k2 * w * w + k1 * w + k0) / (c18 * A.A3 * q * (one + w));
    S x2 = (k2 * w * w - k1 * w + k0) / (c18 * A.A3 * q * (one - w));
    S x3 = ((A.A2 * A.A2 * A.A2 - scalar_int<S>(27, w) * A.A0 * A.A3 * A.A3) * w * w +
            scalar_int<S>(36, w) * A.A1 * A.A2 * A.A3 -
            scalar_int<S>(81, w) * A.A0 * A.A3 * A.A3 - c9 * A.A2 * A.A2 * A.A2) /
           (c9 * A.A3 * q * (one - w) * (one + w));
    return {x1, x2, x3};
}

// The six w-values of the sextic attached to a root triple, each with the
// permutation that the backward transformation applies at that w.  The sixth
// entry's permutation swaps the last two roots; this was established by
// evaluating the backward transformation, and the roundtrip tests pin it.
template <class S>
struct SexticRootEntry {
    S w;
    Permutation sigma;  // backward transformation at w returns (x_sigma1, x_sigma2, x_sigma3)
};

template <class S>
std::array<SexticRootEntry<S>, 6> sextic_roots_from_cubic_roots(const S& x1, const S& x2,
                                                                const S& x3, const S& tol) {
    auto u = deviations(x1, x2, x3);
    for (const auto& ui : u)
        if (negligible(ui, tol))
            throw domain_error("degenerate-deviation",
                               "a root deviation 2 x_i - x_j - x_k vanishes");
    S a = (u[0] - u[1]) / u[2];
    S b = (u[1] - u[2]) / u[0];
    S c = (u[2] - u[0]) / u[1];
    return {{{a, {{1, 2, 3}}},
             {-a, {{2, 1, 3}}},
             {b, {{2, 3, 1}}},
             {-b, {{3, 2, 1}}},
             {c, {{3, 1, 2}}},
             {-c, {{1, 3, 2}}}}};
}

// w = 3 (x1 - x2) / (2 x3 - x1 - x2): the first sextic root of the ordered
// triple, since u1 - u2 = 3 (x1 - x2).
template <class S>
S w_from_roots(const S& x1, const S& x2, const S& x3, const S& tol) {
    S den = x3 + x3 - x1 - x2;
    if (negligible(den, tol))
        throw domain_error("degenerate-deviation", "2 x3 - x1 - x2 vanishes");
    return scalar_int<S>(3, x1) * (x1 - x2) / den;
}

// Vieta expansion: the monic cubic with the given roots.
template <class S>
CubicCoeffs<S> cubic_from_roots(const S& x1, const S& x2, const S& x3) {
    S one = scalar_int<S>(1, x1);
    return {one, -(x1 + x2 + x3), x1 * x2 + x2 * x3 + x3 * x1, -(x1 * x2 * x3)};
}

// Integer form of D (w^2+3)^3 + 4 (w-1)^2 (1+w)^2 for exact rational-root
// extraction.
inline IntPolynomial cleared_sextic(const Rational& D) {
    std::vector<Rational> c = {Rational(27) * D + 4, Rational(0), Rational(27) * D - 8,
                               Rational(0),          Rational(9) * D + 4,
                               Rational(0),          D};
    return to_integer_polynomial(c).first;
}

}  // namespace cuboid
