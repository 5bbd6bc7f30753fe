#pragma once

// The cuboid equations and their symmetrized forms.
//
// A tuple carries three edges x1..x3, three face diagonals d1..d3 and the
// space diagonal L in one scalar domain (exact rationals or big reals).  The
// four cuboid residuals p0..p3 are the left-hand sides of the defining
// equations; the eight factor residuals f1..f8 are the multisymmetric
// combinations of the p's whose simultaneous vanishing, on an all-positive
// tuple, forces the cuboid equations themselves.  Nothing here assumes
// positivity: tuples with zero or negative components are first-class values.

#include <array>

#include "cuboid/scalar.hpp"

namespace cuboid {

template <class S>
struct CuboidTuple {
    S x1, x2, x3;  // edges
    S d1, d2, d3;  // face diagonals; d_i spans the face avoiding x_i
    S L;           // space diagonal
};

// p0 = x1^2+x2^2+x3^2-L^2, p_i = (sum of the other two edge squares) - d_i^2.
template <class S>
std::array<S, 4> cuboid_residuals(const CuboidTuple<S>& t) {
    S p0 = t.x1 * t.x1 + t.x2 * t.x2 + t.x3 * t.x3 - t.L * t.L;
    S p1 = t.x2 * t.x2 + t.x3 * t.x3 - t.d1 * t.d1;
    S p2 = t.x3 * t.x3 + t.x1 * t.x1 - t.d2 * t.d2;
    S p3 = t.x1 * t.x1 + t.x2 * t.x2 - t.d3 * t.d3;
    return {p0, p1, p2, p3};
}

// The eight factor residuals, in a fixed reporting order:
//   f1 = p0                    f5 = d1^2 p1 + d2^2 p2 + d3^2 p3
//   f2 = p1 + p2 + p3          f6 = x1^2 p1 + x2^2 p2 + x3^2 p3
//   f3 = d1 p1 + d2 p2 + d3 p3 f7 = x1 d1 p1 + x2 d2 p2 + x3 d3 p3
//   f4 = x1 p1 + x2 p2 + x3 p3 f8 = x1^2 d1^2 p1 + x2^2 d2^2 p2 + x3^2 d3^2 p3
template <class S>
std::array<S, 8> factor_residuals(const CuboidTuple<S>& t) {
    auto p = cuboid_residuals(t);
    const S &p1 = p[1], &p2 = p[2], &p3 = p[3];
    return {
        p[0],
        p1 + p2 + p3,
        t.d1 * p1 + t.d2 * p2 + t.d3 * p3,
        t.x1 * p1 + t.x2 * p2 + t.x3 * p3,
        t.d1 * t.d1 * p1 + t.d2 * t.d2 * p2 + t.d3 * t.d3 * p3,
        t.x1 * t.x1 * p1 + t.x2 * t.x2 * p2 + t.x3 * t.x3 * p3,
        t.x1 * t.d1 * p1 + t.x2 * t.d2 * p2 + t.x3 * t.d3 * p3,
        t.x1 * t.x1 * t.d1 * t.d1 * p1 + t.x2 * t.x2 * t.d2 * t.d2 * p2 +
            t.x3 * t.x3 * t.d3 * t.d3 * p3,
    };
}

// An element of S3 as the image list of (1,2,3); acts simultaneously on the
// edges and the face diagonals, leaving L fixed.
struct Permutation {
    std::array<int, 3> image;  // 1-based

    static constexpr std::array<std::array<int, 3>, 6> all = {{
        {1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}}};
};

template <class S>
CuboidTuple<S> apply_permutation(const Permutation& sigma, const CuboidTuple<S>& t) {
    std::array<const S*, 3> x{&t.x1, &t.x2, &t.x3}, d{&t.d1, &t.d2, &t.d3};
    auto at = [&](const std::array<const S*, 3>& v, int slot) -> const S& {
        return *v[static_cast<std::size_t>(sigma.image[static_cast<std::size_t>(slot)] - 1)];
    };
    return {at(x, 0), at(x, 1), at(x, 2), at(d, 0), at(d, 1), at(d, 2), t.L};
}

// The nine elementary multisymmetric values of a tuple, plus L.  Both index
// conventions at a glance: E_{a b} sums monomials of degree a in the edges
// and degree b in the diagonals.
template <class S>
struct EProfile {
    S E10, E20, E30;  // elementary symmetric in x alone
    S E01, E02, E03;  // elementary symmetric in d alone
    S E21, E11, E12;  // mixed layers
    S L;
};

template <class S>
EProfile<S> e_profile(const CuboidTuple<S>& t) {
    EProfile<S> e{
        /*E10=*/t.x1 + t.x2 + t.x3,
        /*E20=*/t.x1 * t.x2 + t.x2 * t.x3 + t.x3 * t.x1,
        /*E30=*/t.x1 * t.x2 * t.x3,
        /*E01=*/t.d1 + t.d2 + t.d3,
        /*E02=*/t.d1 * t.d2 + t.d2 * t.d3 + t.d3 * t.d1,
        /*E03=*/t.d1 * t.d2 * t.d3,
        /*E21=*/t.x1 * t.x2 * t.d3 + t.x2 * t.x3 * t.d1 + t.x3 * t.x1 * t.d2,
        // E11 is the six-term sum over distinct index pairs
        /*E11=*/t.x1 * t.d2 + t.d1 * t.x2 + t.x2 * t.d3 + t.d2 * t.x3 + t.x3 * t.d1 +
            t.d3 * t.x1,
        /*E12=*/t.x1 * t.d2 * t.d3 + t.x2 * t.d3 * t.d1 + t.x3 * t.d1 * t.d2,
        t.L};
    return e;
}

// Falsification probe for the implication "all eight factor residuals vanish
// on an all-positive tuple => the cuboid residuals vanish".  Exact mode only.
struct ImplicationReport {
    bool factor_zero;
    bool positive;
    bool cuboid_zero;
    bool implication_holds;  // false would be a counterexample — escalate
};

inline ImplicationReport factor_cuboid_implication(const CuboidTuple<Rational>& t) {
    ImplicationReport r{};
    auto f = factor_residuals(t);
    r.factor_zero = true;
    for (const auto& v : f)
        if (!v.is_zero()) r.factor_zero = false;
    r.positive = t.x1 > Rational(0) && t.x2 > Rational(0) && t.x3 > Rational(0) &&
                 t.d1 > Rational(0) && t.d2 > Rational(0) && t.d3 > Rational(0) &&
                 t.L > Rational(0);
    auto p = cuboid_residuals(t);
    r.cuboid_zero = true;
    for (const auto& v : p)
        if (!v.is_zero()) r.cuboid_zero = false;
    r.implication_holds = !(r.factor_zero && r.positive && !r.cuboid_zero);
    return r;
}

}  // namespace cuboid
