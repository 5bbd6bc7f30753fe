// Two-parameter rational family (b, c) feeding the whole pipeline: the linear
// E-triple, the full E-profile, the two D parameters, and the cubic
// coefficients for both branches.  Everything here is exact rational
// arithmetic; numeric evaluation happens downstream by converting results.
//
// All formulas share a small set of named denominator factors Q1..Q6.  A point
// where a required factor vanishes is outside the domain of the corresponding
// operation and raises singularity_error listing every vanished factor, so
// scan logs can distinguish singular points from genuine failures.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cuboid/cubic.hpp"
#include "cuboid/cuboid_model.hpp"
#include "cuboid/rational.hpp"

namespace cuboid {

struct ParamPoint {
    Rational b;
    Rational c;
};

// Which of the two cubic/sextic/solution families an operation refers to.
// Branch 1 runs the x-cubic through root recovery and obtains d linearly;
// branch 2 does the mirror image starting from the d-cubic.
enum class BranchTag : int { branch1 = 1, branch2 = 2 };

inline int branch_index(BranchTag t) { return static_cast<int>(t); }

// Vanishing denominator factors at a parameter point.  Factor names are
// "Q1".."Q6"; the report lists every vanished factor, not only the first.
struct SingularityReport {
    std::vector<std::string> vanished_factors;

    bool singular() const { return !vanished_factors.empty(); }
};

// Value of one named denominator factor (k in 1..6).
Rational denominator_factor(const ParamPoint& pt, int k);

// Evaluate all six factors and report which vanish.
SingularityReport singularities(const ParamPoint& pt);

// The linear part of the profile: E10, E01 and the six-term cross sum E11.
// Defined wherever Q1 != 0.
struct ELinear {
    Rational E10;
    Rational E01;
    Rational E11;
};

ELinear e_linear(const ParamPoint& pt);

// Full profile at a parameter point, L = 1.  The committed fields are the
// printed closed forms.  The two E21 readings are diagnostics only: the
// printed formula for E21 disagrees with the value forced by the rest of the
// profile (see branch solving, which derives E21 by consistency), and its
// denominator admits two readings differing by a -4c^3 term.  Neither reading
// is ever substituted for the derived value.
struct ParamProfile {
    Rational E10, E01, E11;
    Rational E20, E30;
    Rational E02, E03;
    Rational E12;
    // Reading with the extra -4c^3 in the denominator, exactly as printed.
    // Empty when that denominator vanishes even though the profile itself is
    // defined.
    std::optional<Rational> E21_printed_verbatim;
    // Reading with the shared quartic factor Q4, as in every neighbouring
    // formula.
    Rational E21_printed_q4variant;
    Rational L;

    // Assemble a full e-profile once an E21 value has been chosen (normally
    // the consistency-derived one).
    EProfile<Rational> with_e21(const Rational& e21) const {
        return EProfile<Rational>{E10, E20, E30, E01, E02, E03,
                                  e21, E11, E12, L};
    }
};

ParamProfile e_full(const ParamPoint& pt);

// Residual of the biquadratic constraint tying the linear triple to L:
//   (2 E11)^2 + (E01^2 + L^2 - E10^2)^2 - 8 E01^2 L^2.
// Identically zero along the family.
template <typename S>
S biquadratic_residual(const S& E10, const S& E01, const S& E11, const S& L) {
    S two = scalar_int<S>(2, E11);
    S eight = scalar_int<S>(8, E11);
    S t1 = two * E11 * (two * E11);
    S mid = E01 * E01 + L * L - E10 * E10;
    return t1 + mid * mid - eight * E01 * E01 * L * L;
}

// Which reading of the one disputed exponent in the D1 closed form to use.
// The corrected reading (c^3, matching the shared factor Q4) is the one that
// agrees with reduce_D of the branch-1 cubic; the verbatim reading (c^-3) is
// kept only as a diagnostic.
enum class D1Exponent { corrected, verbatim };

struct DParams {
    Rational D1;
    Rational D2;
};

// Closed forms for the two reduced-cubic invariants.  Defined wherever
// Q2..Q6 != 0 (the verbatim D1 reading additionally needs c != 0).
DParams d_parameters(const ParamPoint& pt, D1Exponent mode = D1Exponent::corrected);

// One invariant alone: branch 1 needs Q2..Q5, branch 2 needs Q2..Q4 and Q6.
Rational d_parameter(const ParamPoint& pt, BranchTag branch,
                     D1Exponent mode = D1Exponent::corrected);

// Monic cubic for the requested branch: branch 1 has roots with elementary
// symmetric values (E10, E20, E30), branch 2 likewise (E01, E02, E03).
CubicCoeffs<Rational> cubic_coeffs(const ParamPoint& pt, BranchTag branch);

}  // namespace cuboid
