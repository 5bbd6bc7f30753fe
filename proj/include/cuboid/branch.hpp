// Branch solvers: turn a parameter point plus an on-surface sextic value into
// a full seven-component tuple, convert the sextic parameter between the two
// branches, and check that the two constructions land on the same tuple.
//
// Branch 1 recovers (x1,x2,x3) from the x-cubic and obtains (d1,d2,d3) from a
// 3x3 linear system; branch 2 mirrors this, starting from the d-cubic.  The
// branch-1 system needs the cross sum E21, whose printed closed form is
// untrusted (see parametrization.hpp): the value used here is derived from
// the rest of the profile by consistency, and the printed readings are kept
// as diagnostics only.
//
// Everything is templated over the scalar domain: Rational for exact work,
// BigReal for high-precision numeric work.  Template definitions live in
// branch.cpp with explicit instantiations for both scalars.
#pragma once

#include <array>
#include <optional>
#include <string>

#include "cuboid/bigreal.hpp"
#include "cuboid/cubic.hpp"
#include "cuboid/cuboid_model.hpp"
#include "cuboid/parametrization.hpp"

namespace cuboid {

// Which value stands in for E21 where a construction needs one.  "derived" is
// the production setting; the two printed readings exist so the mismatch can
// be demonstrated executably instead of taken on faith.
enum class E21Source { derived, printed_verbatim, printed_q4variant };

inline const char* e21_source_name(E21Source s) {
    switch (s) {
        case E21Source::printed_verbatim: return "printed-verbatim";
        case E21Source::printed_q4variant: return "printed-q4variant";
        default: return "derived";
    }
}

// Exact consistency-derived E21.  Primary route: interpolate x as a quadratic
// in d through the three (d_i, x_i) pairs using only power moments of the
// profile (no root extraction), then read E21 off the interpolant; the
// interpolant is certified by reproducing E20 and E30 exactly.  When the
// moment matrix is singular (repeated d-roots) the routine falls back to
// aligning explicit rational root multisets.  If neither route applies the
// value is left empty with method "undetermined".
struct DerivedE21 {
    std::optional<Rational> value;
    std::string method;  // "moment", "roots", or "undetermined"
};

DerivedE21 derive_e21(const ParamProfile& profile);

// Alignment of a root multiset against a fixed triple so that the two cross
// sums are reproduced.  Used both as the derivation oracle for E21 and as the
// fallback when a branch's linear system is singular.
template <typename S>
struct PairingResult {
    std::array<S, 3> aligned;  // the moving multiset, in its aligned order
    S e21;                     // cross sum implied by the alignment
    bool ambiguous;            // several alignments matched; canonical one taken
};

// Align `moving` (interpreted as the d-side when `fixed` is the x-side)
// against `fixed` so that  sum_{i != j} fixed_i moving_j = E11  and
// sum_i fixed_i * prod(moving_{j != i}) = E12, within tol.  Throws
// "profile-inconsistent" when no alignment matches; when several essentially
// different alignments match, the lexicographically smallest aligned triple
// is chosen and `ambiguous` is set.
template <typename S>
PairingResult<S> derive_pairing(const std::array<S, 3>& fixed,
                                const std::array<S, 3>& moving, const S& E11,
                                const S& E12, const S& tol);

struct SolveOptions {
    int precision_digits = 128;               // BigReal instantiations only
    E21Source e21_source = E21Source::derived;
};

template <typename S>
struct BranchDiagnostics {
    std::array<S, 4> cuboid_residuals;
    std::array<S, 8> factor_residuals;
    // largest deviation of the tuple's nine-component profile from the
    // committed closed forms (with the E21 slot compared against e21_used)
    S profile_residual_max;
    S sextic_residual;   // of (D_branch, w)
    S residual_max;      // max over everything above
};

template <typename S>
struct BranchSolution {
    CuboidTuple<S> tuple;  // L = 1
    BranchTag branch;
    S w;
    int precision_digits;  // 0 in exact mode
    // E21 actually used by / implied by the construction, and how it arose:
    // "moment", "roots" (derivation routes), "pairing" (system fallback),
    // "printed-verbatim", "printed-q4variant", or "implied" (branch 2, read
    // off the finished tuple).
    S e21_used;
    std::string e21_method;
    bool used_pairing_fallback;
    bool pairing_ambiguous;
    BranchDiagnostics<S> diagnostics;
};

// Solve a branch at parameter point pt and sextic value w.  Preconditions, in
// checking order: profile defined at pt (else singularity_error); w != +-1
// ("w-degenerate"); w on the branch sextic ("off-sextic"); branch cubic
// admissible ("admissibility"); the closing linear system solvable or the
// pairing fallback applicable ("singular-linear-system").
template <typename S>
BranchSolution<S> solve_branch1(const ParamPoint& pt, const S& w1,
                                const SolveOptions& opt = {});
template <typename S>
BranchSolution<S> solve_branch2(const ParamPoint& pt, const S& w2,
                                const SolveOptions& opt = {});

// Conversion formulas between the two sextic parameters: w2 from the d-triple
// of the branch-1 solution, w1 from the x-triple of the branch-2 solution.
// Both verify that the converted value lands on the target sextic.  Errors:
// anything from the underlying solve, plus "conversion-denominator" when the
// defining ratio degenerates.
template <typename S>
S convert_w1_to_w2(const ParamPoint& pt, const S& w1, const SolveOptions& opt = {});
template <typename S>
S convert_w2_to_w1(const ParamPoint& pt, const S& w2, const SolveOptions& opt = {});

// |round-tripped w - w|: branch 1 composes w1 -> w2 -> w1, branch 2 the other
// way around.  Zero in exact mode, below tolerance in numeric mode.
template <typename S>
S roundtrip_check(const ParamPoint& pt, const S& w, BranchTag branch,
                  const SolveOptions& opt = {});

// Componentwise comparison of the branch-1 tuple at w1 against the branch-2
// tuple at the converted parameter: the two constructions present one
// solution.
template <typename S>
struct CoincidenceReport {
    std::array<S, 3> x_difference;
    std::array<S, 3> d_difference;
    S max_abs;
};

template <typename S>
CoincidenceReport<S> coincidence_check(const ParamPoint& pt, const S& w1,
                                       const SolveOptions& opt = {});

// Produce an on-surface sextic value for a branch from the branch cubic's own
// roots (ascending), guaranteeing surface membership by construction.  Exact
// mode needs the cubic to split over the rationals; numeric mode needs three
// real roots; otherwise "w-manufacture" is thrown.
template <typename S>
S manufacture_w(const ParamPoint& pt, BranchTag branch, const SolveOptions& opt = {});

}  // namespace cuboid
