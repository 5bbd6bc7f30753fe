#pragma once

// Integer polynomials (dense, low degree first) and certified root finding.
//
// rational_roots never factors over Z and never trusts floating point: it
// isolates real roots of each squarefree factor with Sturm sequences and
// exact bisection, shrinks each isolating interval far enough that it can
// contain at most one fraction whose denominator divides the leading
// coefficient, reconstructs that unique candidate as the simplest rational in
// the interval, and certifies it by exact evaluation.  real_roots shares the
// isolation machinery and refines enclosures to the requested decimal width.

#include <utility>
#include <vector>

#include "cuboid/bigreal.hpp"
#include "cuboid/rational.hpp"

namespace cuboid {

struct IntPolynomial {
    // c[k] is the coefficient of x^k.  High zero coefficients are legal (the
    // clearing constructor mirrors its input's length); degree() ignores them.
    std::vector<Integer> coeffs;

    int degree() const {
        for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k)
            if (coeffs[static_cast<std::size_t>(k)] != 0) return k;
        return -1;
    }
    bool is_zero() const { return degree() < 0; }
    Integer leading() const {
        int d = degree();
        return d < 0 ? Integer(0) : coeffs[static_cast<std::size_t>(d)];
    }

    // Exact Horner evaluation.
    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (int k = degree(); k >= 0; --k)
            acc = acc * x + Rational(coeffs[static_cast<std::size_t>(k)]);
        return acc;
    }
};

// Clears denominators and the coefficient content: returns (q, scale) with
// scale * q == input coefficient-by-coefficient and scale > 0.
std::pair<IntPolynomial, Rational> to_integer_polynomial(const std::vector<Rational>& coeffs);

// All rational roots, ascending, repeated per multiplicity.  Throws
// "indeterminate" on the zero polynomial.
std::vector<Rational> rational_roots(const IntPolynomial& p);

struct RealRoot {
    BigReal value;     // enclosed to width < 10^(5 - precision_digits)
    int multiplicity;  // from the squarefree decomposition
};

// All real roots, ascending, with multiplicities.  Enclosures from distinct
// squarefree factors are refined until pairwise disjoint, so the ordering is
// certified, not heuristic.
std::vector<RealRoot> real_roots(const IntPolynomial& p, int precision_digits = 128);

}  // namespace cuboid
