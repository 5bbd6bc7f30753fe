// Branch solver implementation.  Scalar-generic code with explicit
// instantiations for Rational and BigReal at the bottom of the file.

#include "cuboid/branch.hpp"

#include <algorithm>
#include <optional>
#include <vector>

#include "cuboid/errors.hpp"
#include "cuboid/int_polynomial.hpp"
#include "cuboid/scalar.hpp"

namespace cuboid {

namespace {

template <typename S>
S mode_tolerance(const SolveOptions& opt);

template <>
Rational mode_tolerance<Rational>(const SolveOptions&) {
    return Rational(0);
}

template <>
BigReal mode_tolerance<BigReal>(const SolveOptions& opt) {
    return tolerance_for(opt.precision_digits);
}

template <typename S>
S max_s(const S& a, const S& b) {
    return a < b ? b : a;
}

template <typename S>
CubicCoeffs<S> cubic_as(const CubicCoeffs<Rational>& A, mpfr_prec_t bits) {
    return {scalar_from_rational<S>(A.A3, bits), scalar_from_rational<S>(A.A2, bits),
            scalar_from_rational<S>(A.A1, bits), scalar_from_rational<S>(A.A0, bits)};
}

// The three cross sums of an aligned pair of triples (x-side first):
//   E11 = sum over i != j of x_i d_j
//   E12 = sum over i of x_i * (product of the two d's away from i)
//   E21 = sum over i of d_i * (product of the two x's away from i)
template <typename S>
S cross_sum_e11(const std::array<S, 3>& x, const std::array<S, 3>& d) {
    return x[0] * (d[1] + d[2]) + x[1] * (d[2] + d[0]) + x[2] * (d[0] + d[1]);
}

template <typename S>
S cross_sum_e12(const std::array<S, 3>& x, const std::array<S, 3>& d) {
    return x[0] * d[1] * d[2] + x[1] * d[2] * d[0] + x[2] * d[0] * d[1];
}

template <typename S>
S cross_sum_e21(const std::array<S, 3>& x, const std::array<S, 3>& d) {
    return d[0] * x[1] * x[2] + d[1] * x[2] * x[0] + d[2] * x[0] * x[1];
}

template <typename S>
bool triple_equal(const std::array<S, 3>& a, const std::array<S, 3>& b, const S& tol) {
    for (std::size_t i = 0; i < 3; ++i)
        if (!negligible(a[i] - b[i], tol)) return false;
    return true;
}

template <typename S>
bool triple_less(const std::array<S, 3>& a, const std::array<S, 3>& b) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return false;
}

// Shared enumeration behind derive_pairing and the branch-2 mirror: align
// `moving` against `fixed` so the cross sums match.  moving_is_d says which
// side of the (x, d) pair the moving multiset is.
template <typename S>
PairingResult<S> align_multisets(const std::array<S, 3>& fixed,
                                 const std::array<S, 3>& moving, const S& E11,
                                 const S& E12, const S& tol, bool moving_is_d) {
    std::vector<std::array<S, 3>> accepted;
    for (const std::array<int, 3>& img : Permutation::all) {
        std::array<S, 3> cand{moving[static_cast<std::size_t>(img[0] - 1)],
                              moving[static_cast<std::size_t>(img[1] - 1)],
                              moving[static_cast<std::size_t>(img[2] - 1)]};
        const std::array<S, 3>& xs = moving_is_d ? fixed : cand;
        const std::array<S, 3>& ds = moving_is_d ? cand : fixed;
        if (!negligible(cross_sum_e11(xs, ds) - E11, tol)) continue;
        if (!negligible(cross_sum_e12(xs, ds) - E12, tol)) continue;
        bool duplicate = false;
        for (const auto& a : accepted)
            if (triple_equal(a, cand, tol)) {
                duplicate = true;
                break;
            }
        if (!duplicate) accepted.push_back(cand);
    }
    if (accepted.empty())
        throw domain_error("profile-inconsistent",
                           "no alignment of the root multisets reproduces the cross sums");
    std::size_t best = 0;
    for (std::size_t i = 1; i < accepted.size(); ++i)
        if (triple_less(accepted[i], accepted[best])) best = i;
    const std::array<S, 3>& chosen = accepted[best];
    const std::array<S, 3>& xs = moving_is_d ? fixed : chosen;
    const std::array<S, 3>& ds = moving_is_d ? chosen : fixed;
    return PairingResult<S>{chosen, cross_sum_e21(xs, ds), accepted.size() > 1};
}

// All real (or all rational) roots of an exact cubic, ascending, expanded by
// multiplicity; empty when the cubic does not yield three of them.
template <typename S>
std::optional<std::array<S, 3>> cubic_root_triple(const CubicCoeffs<Rational>& A,
                                                  const SolveOptions& opt);

template <>
std::optional<std::array<Rational, 3>> cubic_root_triple<Rational>(
    const CubicCoeffs<Rational>& A, const SolveOptions&) {
    auto roots = rational_roots(to_integer_polynomial({A.A0, A.A1, A.A2, A.A3}).first);
    if (roots.size() != 3) return std::nullopt;
    return std::array<Rational, 3>{roots[0], roots[1], roots[2]};
}

template <>
std::optional<std::array<BigReal, 3>> cubic_root_triple<BigReal>(
    const CubicCoeffs<Rational>& A, const SolveOptions& opt) {
    auto roots = real_roots(to_integer_polynomial({A.A0, A.A1, A.A2, A.A3}).first,
                            opt.precision_digits);
    std::vector<BigReal> flat;
    for (const auto& r : roots)
        for (int m = 0; m < r.multiplicity; ++m) flat.push_back(r.value);
    if (flat.size() != 3) return std::nullopt;
    return std::array<BigReal, 3>{flat[0], flat[1], flat[2]};
}

// Cramer solve of a 3x3 system; empty when the determinant is negligible.
template <typename S>
std::optional<std::array<S, 3>> solve3(const std::array<std::array<S, 3>, 3>& M,
                                       const std::array<S, 3>& r, const S& tol) {
    auto det3 = [](const std::array<S, 3>& a, const std::array<S, 3>& b,
                   const std::array<S, 3>& c) {
        return a[0] * (b[1] * c[2] - b[2] * c[1]) - b[0] * (a[1] * c[2] - a[2] * c[1]) +
               c[0] * (a[1] * b[2] - a[2] * b[1]);
    };
    std::array<S, 3> c0{M[0][0], M[1][0], M[2][0]};
    std::array<S, 3> c1{M[0][1], M[1][1], M[2][1]};
    std::array<S, 3> c2{M[0][2], M[1][2], M[2][2]};
    S det = det3(c0, c1, c2);
    if (negligible(det, tol)) return std::nullopt;
    return std::array<S, 3>{det3(r, c1, c2) / det, det3(c0, r, c2) / det,
                            det3(c0, c1, r) / det};
}

// Diagnostics are recomputed from the finished tuple, never cached from
// construction-time intermediates.
template <typename S>
BranchDiagnostics<S> make_diagnostics(const CuboidTuple<S>& t, const ParamProfile& prof,
                                      const S& e21_used, const S& D, const S& w,
                                      mpfr_prec_t bits) {
    BranchDiagnostics<S> diag{cuboid_residuals(t), factor_residuals(t),
                              scalar_from_long<S>(0, bits), sextic_residual(D, w),
                              scalar_from_long<S>(0, bits)};
    EProfile<S> got = e_profile(t);
    S m = abs(got.E10 - scalar_from_rational<S>(prof.E10, bits));
    m = max_s(m, abs(got.E20 - scalar_from_rational<S>(prof.E20, bits)));
    m = max_s(m, abs(got.E30 - scalar_from_rational<S>(prof.E30, bits)));
    m = max_s(m, abs(got.E01 - scalar_from_rational<S>(prof.E01, bits)));
    m = max_s(m, abs(got.E02 - scalar_from_rational<S>(prof.E02, bits)));
    m = max_s(m, abs(got.E03 - scalar_from_rational<S>(prof.E03, bits)));
    m = max_s(m, abs(got.E11 - scalar_from_rational<S>(prof.E11, bits)));
    m = max_s(m, abs(got.E12 - scalar_from_rational<S>(prof.E12, bits)));
    m = max_s(m, abs(got.E21 - e21_used));
    diag.profile_residual_max = m;
    S r = max_s(m, abs(diag.sextic_residual));
    for (const S& v : diag.cuboid_residuals) r = max_s(r, abs(v));
    for (const S& v : diag.factor_residuals) r = max_s(r, abs(v));
    diag.residual_max = r;
    return diag;
}

// Common front of both solvers: profile, degeneracy check, surface check,
// root recovery.
template <typename S>
struct SolveFront {
    ParamProfile prof;
    S D;
    std::array<S, 3> roots;  // of this branch's own cubic, in recovery order
};

template <typename S>
SolveFront<S> solve_front(const ParamPoint& pt, const S& w, BranchTag branch,
                          const SolveOptions& opt) {
    mpfr_prec_t bits = digits_to_bits(opt.precision_digits);
    S tol = mode_tolerance<S>(opt);
    ParamProfile prof = e_full(pt);

    // the closed-form D agrees identically with the cubic's own reduction, so
    // computing it up front adds only the branch's singularity precondition
    S D = scalar_from_rational<S>(d_parameter(pt, branch), bits);

    // degenerate-w, admissibility, and on-surface checks happen inside, in
    // that order
    auto A = cubic_as<S>(cubic_coeffs(pt, branch), bits);
    return SolveFront<S>{std::move(prof), std::move(D), cubic_roots_from_w(A, w, tol)};
}

}  // namespace

DerivedE21 derive_e21(const ParamProfile& p) {
    const Rational &e1 = p.E01, &e2 = p.E02, &e3 = p.E03;
    // Newton power sums of the d-cubic roots
    Rational p1 = e1;
    Rational p2 = e1 * p1 - Rational(2) * e2;
    Rational p3 = e1 * p2 - e2 * p1 + Rational(3) * e3;
    Rational p4 = e1 * p3 - e2 * p2 + e3 * p1;

    // moments of x against d for x = c0 + c1 d + c2 d^2:
    //   sum x_i = E10,  sum x_i d_i = e1 E10 - E11,
    //   sum x_i d_i^2 = E12 - e2 E10 + e1 sum x_i d_i
    Rational t0 = p.E10;
    Rational t1 = e1 * p.E10 - p.E11;
    Rational t2 = p.E12 - e2 * p.E10 + e1 * t1;

    Rational det = Rational(3) * (p2 * p4 - p3 * p3) - p1 * (p1 * p4 - p3 * p2) +
                   p2 * (p1 * p3 - p2 * p2);
    if (!det.is_zero()) {
        Rational det0 = t0 * (p2 * p4 - p3 * p3) - p1 * (t1 * p4 - p3 * t2) +
                        p2 * (t1 * p3 - p2 * t2);
        Rational det1 = Rational(3) * (t1 * p4 - t2 * p3) - t0 * (p1 * p4 - p3 * p2) +
                        p2 * (p1 * t2 - p2 * t1);
        Rational det2 = Rational(3) * (p2 * t2 - p3 * t1) - p1 * (p1 * t2 - t1 * p2) +
                        t0 * (p1 * p3 - p2 * p2);
        Rational c0 = det0 / det, c1 = det1 / det, c2 = det2 / det;

        Rational e21 = c0 * c0 * e1 +
                       c0 * (Rational(2) * c1 * e2 + c2 * e1 * e2 - Rational(3) * c2 * e3) +
                       Rational(3) * c1 * c1 * e3 + Rational(2) * c1 * c2 * e1 * e3 +
                       c2 * c2 * e2 * e3;
        // certify the interpolant: its image must reproduce the committed
        // elementary symmetric values exactly
        Rational e20chk = Rational(3) * c0 * c0 +
                          c0 * (Rational(2) * c1 * e1 + Rational(2) * c2 * e1 * e1 -
                                Rational(4) * c2 * e2) +
                          c1 * c1 * e2 + c1 * c2 * (e1 * e2 - Rational(3) * e3) +
                          c2 * c2 * (e2 * e2 - Rational(2) * e1 * e3);
        Rational e30chk = c0.pow_int(3) + c0 * c0 * c1 * e1 +
                          c0 * c0 * c2 * (e1 * e1 - Rational(2) * e2) +
                          c0 * c1 * c1 * e2 + c0 * c1 * c2 * (e1 * e2 - Rational(3) * e3) +
                          c0 * c2 * c2 * (e2 * e2 - Rational(2) * e1 * e3) +
                          c1.pow_int(3) * e3 + c1 * c1 * c2 * e1 * e3 +
                          c1 * c2 * c2 * e2 * e3 + c2.pow_int(3) * e3 * e3;
        if (e20chk != p.E20 || e30chk != p.E30)
            throw domain_error(
                "profile-inconsistent",
                "moment interpolant fails to reproduce the symmetric profile");
        return DerivedE21{e21, "moment"};
    }

    // Singular moment matrix means repeated d-roots, so the d-cubic splits
    // over the rationals; align explicit root multisets if the x-cubic splits
    // too.
    auto dr = rational_roots(
        to_integer_polynomial({-p.E03, p.E02, -p.E01, Rational(1)}).first);
    auto xr = rational_roots(
        to_integer_polynomial({-p.E30, p.E20, -p.E10, Rational(1)}).first);
    if (dr.size() == 3 && xr.size() == 3) {
        auto pr = align_multisets<Rational>({xr[0], xr[1], xr[2]}, {dr[0], dr[1], dr[2]},
                                            p.E11, p.E12, Rational(0), true);
        return DerivedE21{pr.e21, "roots"};
    }
    return DerivedE21{std::nullopt, "undetermined"};
}

template <typename S>
PairingResult<S> derive_pairing(const std::array<S, 3>& fixed,
                                const std::array<S, 3>& moving, const S& E11,
                                const S& E12, const S& tol) {
    return align_multisets(fixed, moving, E11, E12, tol, true);
}

template <typename S>
BranchSolution<S> solve_branch1(const ParamPoint& pt, const S& w1,
                                const SolveOptions& opt) {
    mpfr_prec_t bits = digits_to_bits(opt.precision_digits);
    S tol = mode_tolerance<S>(opt);
    SolveFront<S> front = solve_front(pt, w1, BranchTag::branch1, opt);
    const ParamProfile& prof = front.prof;
    const std::array<S, 3>& x = front.roots;

    // pick the E21 feeding the linear system
    std::optional<S> e21;
    std::string method;
    switch (opt.e21_source) {
        case E21Source::printed_verbatim:
            if (!prof.E21_printed_verbatim)
                throw domain_error("division-by-zero",
                                   "printed verbatim E21 reading is undefined here");
            e21 = scalar_from_rational<S>(*prof.E21_printed_verbatim, bits);
            method = "printed-verbatim";
            break;
        case E21Source::printed_q4variant:
            e21 = scalar_from_rational<S>(prof.E21_printed_q4variant, bits);
            method = "printed-q4variant";
            break;
        default: {
            DerivedE21 dv = derive_e21(prof);
            if (dv.value) {
                e21 = scalar_from_rational<S>(*dv.value, bits);
                method = dv.method;
            }
            break;
        }
    }

    S one = scalar_from_long<S>(1, bits);
    S E01s = scalar_from_rational<S>(prof.E01, bits);
    S E11s = scalar_from_rational<S>(prof.E11, bits);
    S E12s = scalar_from_rational<S>(prof.E12, bits);

    bool pairing_used = false, ambiguous = false;
    std::optional<std::array<S, 3>> d;
    if (e21) {
        std::array<std::array<S, 3>, 3> M{
            {{one, one, one},
             {x[1] + x[2], x[0] + x[2], x[0] + x[1]},
             {x[1] * x[2], x[2] * x[0], x[0] * x[1]}}};
        d = solve3(M, std::array<S, 3>{E01s, E11s, *e21}, tol);
    }
    if (!d) {
        // singular system (or no usable E21): align the d-cubic's own roots
        auto dm = cubic_root_triple<S>(cubic_coeffs(pt, BranchTag::branch2), opt);
        if (!dm)
            throw domain_error("singular-linear-system",
                               "branch undefined at this point: the d-side linear "
                               "system is singular and the d-cubic does not yield "
                               "an alignable root triple");
        PairingResult<S> pr = derive_pairing<S>(x, *dm, E11s, E12s, tol);
        d = pr.aligned;
        e21 = pr.e21;
        method = "pairing";
        pairing_used = true;
        ambiguous = pr.ambiguous;
    }

    CuboidTuple<S> t{x[0], x[1], x[2], (*d)[0], (*d)[1], (*d)[2], one};
    BranchDiagnostics<S> diag = make_diagnostics(t, prof, *e21, front.D, w1, bits);
    return BranchSolution<S>{std::move(t),
                             BranchTag::branch1,
                             w1,
                             is_exact_scalar<S> ? 0 : opt.precision_digits,
                             *e21,
                             method,
                             pairing_used,
                             ambiguous,
                             std::move(diag)};
}

template <typename S>
BranchSolution<S> solve_branch2(const ParamPoint& pt, const S& w2,
                                const SolveOptions& opt) {
    mpfr_prec_t bits = digits_to_bits(opt.precision_digits);
    S tol = mode_tolerance<S>(opt);
    SolveFront<S> front = solve_front(pt, w2, BranchTag::branch2, opt);
    const ParamProfile& prof = front.prof;
    const std::array<S, 3>& d = front.roots;

    S one = scalar_from_long<S>(1, bits);
    S E10s = scalar_from_rational<S>(prof.E10, bits);
    S E11s = scalar_from_rational<S>(prof.E11, bits);
    S E12s = scalar_from_rational<S>(prof.E12, bits);

    // unlike branch 1, every right-hand side here is a committed profile value
    std::array<std::array<S, 3>, 3> M{
        {{one, one, one},
         {d[1] + d[2], d[0] + d[2], d[0] + d[1]},
         {d[1] * d[2], d[2] * d[0], d[0] * d[1]}}};
    bool pairing_used = false, ambiguous = false;
    std::string method = "implied";
    std::optional<std::array<S, 3>> x = solve3(M, std::array<S, 3>{E10s, E11s, E12s}, tol);
    if (!x) {
        auto xm = cubic_root_triple<S>(cubic_coeffs(pt, BranchTag::branch1), opt);
        if (!xm)
            throw domain_error("singular-linear-system",
                               "branch undefined at this point: the x-side linear "
                               "system is singular and the x-cubic does not yield "
                               "an alignable root triple");
        PairingResult<S> pr = align_multisets<S>(d, *xm, E11s, E12s, tol, false);
        x = pr.aligned;
        method = "pairing";
        pairing_used = true;
        ambiguous = pr.ambiguous;
    }

    CuboidTuple<S> t{(*x)[0], (*x)[1], (*x)[2], d[0], d[1], d[2], one};
    S e21 = cross_sum_e21(*x, d);
    BranchDiagnostics<S> diag = make_diagnostics(t, prof, e21, front.D, w2, bits);
    return BranchSolution<S>{std::move(t),
                             BranchTag::branch2,
                             w2,
                             is_exact_scalar<S> ? 0 : opt.precision_digits,
                             std::move(e21),
                             method,
                             pairing_used,
                             ambiguous,
                             std::move(diag)};
}

namespace {

// w2 read off a finished branch-1 tuple, with the on-surface postcondition.
template <typename S>
S w2_from_tuple(const ParamPoint& pt, const CuboidTuple<S>& t, const SolveOptions& opt) {
    mpfr_prec_t bits = digits_to_bits(opt.precision_digits);
    S tol = mode_tolerance<S>(opt);
    S denom = scalar_from_long<S>(2, bits) * t.d3 - t.d1 - t.d2;
    if (negligible(denom, tol))
        throw domain_error("conversion-denominator",
                           "conversion denominator 2 d3 - d1 - d2 vanishes");
    S w2 = scalar_from_long<S>(3, bits) * (t.d1 - t.d2) / denom;
    S D2 = scalar_from_rational<S>(d_parameter(pt, BranchTag::branch2), bits);
    if (!negligible(sextic_residual(D2, w2), tol))
        throw domain_error("off-sextic", "converted value misses the target sextic");
    return w2;
}

template <typename S>
S w1_from_tuple(const ParamPoint& pt, const CuboidTuple<S>& t, const SolveOptions& opt) {
    mpfr_prec_t bits = digits_to_bits(opt.precision_digits);
    S tol = mode_tolerance<S>(opt);
    S denom = scalar_from_long<S>(2, bits) * t.x3 - t.x1 - t.x2;
    if (negligible(denom, tol))
        throw domain_error("conversion-denominator",
                           "conversion denominator 2 x3 - x1 - x2 vanishes");
    S w1 = scalar_from_long<S>(3, bits) * (t.x1 - t.x2) / denom;
    S D1 = scalar_from_rational<S>(d_parameter(pt, BranchTag::branch1), bits);
    if (!negligible(sextic_residual(D1, w1), tol))
        throw domain_error("off-sextic", "converted value misses the target sextic");
    return w1;
}

}  // namespace

template <typename S>
S convert_w1_to_w2(const ParamPoint& pt, const S& w1, const SolveOptions& opt) {
    return w2_from_tuple(pt, solve_branch1(pt, w1, opt).tuple, opt);
}

template <typename S>
S convert_w2_to_w1(const ParamPoint& pt, const S& w2, const SolveOptions& opt) {
    return w1_from_tuple(pt, solve_branch2(pt, w2, opt).tuple, opt);
}

template <typename S>
S roundtrip_check(const ParamPoint& pt, const S& w, BranchTag branch,
                  const SolveOptions& opt) {
    if (branch == BranchTag::branch1)
        return abs(convert_w2_to_w1(pt, convert_w1_to_w2(pt, w, opt), opt) - w);
    return abs(convert_w1_to_w2(pt, convert_w2_to_w1(pt, w, opt), opt) - w);
}

template <typename S>
CoincidenceReport<S> coincidence_check(const ParamPoint& pt, const S& w1,
                                       const SolveOptions& opt) {
    BranchSolution<S> s1 = solve_branch1(pt, w1, opt);
    S w2 = w2_from_tuple(pt, s1.tuple, opt);
    BranchSolution<S> s2 = solve_branch2(pt, w2, opt);
    CoincidenceReport<S> rep{{s1.tuple.x1 - s2.tuple.x1, s1.tuple.x2 - s2.tuple.x2,
                              s1.tuple.x3 - s2.tuple.x3},
                             {s1.tuple.d1 - s2.tuple.d1, s1.tuple.d2 - s2.tuple.d2,
                              s1.tuple.d3 - s2.tuple.d3},
                             abs(s1.tuple.x1 - s2.tuple.x1)};
    S m = rep.max_abs;
    for (std::size_t i = 1; i < 3; ++i) m = max_s(m, abs(rep.x_difference[i]));
    for (std::size_t i = 0; i < 3; ++i) m = max_s(m, abs(rep.d_difference[i]));
    rep.max_abs = m;
    return rep;
}

template <typename S>
S manufacture_w(const ParamPoint& pt, BranchTag branch, const SolveOptions& opt) {
    S tol = mode_tolerance<S>(opt);
    auto triple = cubic_root_triple<S>(cubic_coeffs(pt, branch), opt);
    if (!triple)
        throw domain_error("w-manufacture",
                           is_exact_scalar<S>
                               ? "branch cubic does not split over the rationals"
                               : "branch cubic has fewer than three real roots");
    return w_from_roots((*triple)[0], (*triple)[1], (*triple)[2], tol);
}

template PairingResult<Rational> derive_pairing<Rational>(const std::array<Rational, 3>&,
                                                          const std::array<Rational, 3>&,
                                                          const Rational&, const Rational&,
                                                          const Rational&);
template PairingResult<BigReal> derive_pairing<BigReal>(const std::array<BigReal, 3>&,
                                                        const std::array<BigReal, 3>&,
                                                        const BigReal&, const BigReal&,
                                                        const BigReal&);
template BranchSolution<Rational> solve_branch1<Rational>(const ParamPoint&,
                                                          const Rational&,
                                                          const SolveOptions&);
template BranchSolution<BigReal> solve_branch1<BigReal>(const ParamPoint&, const BigReal&,
                                                        const SolveOptions&);
template BranchSolution<Rational> solve_branch2<Rational>(const ParamPoint&,
                                                          const Rational&,
                                                          const SolveOptions&);
template BranchSolution<BigReal> solve_branch2<BigReal>(const ParamPoint&, const BigReal&,
                                                        const SolveOptions&);
template Rational convert_w1_to_w2<Rational>(const ParamPoint&, const Rational&,
                                             const SolveOptions&);
template BigReal convert_w1_to_w2<BigReal>(const ParamPoint&, const BigReal&,
                                           const SolveOptions&);
template Rational convert_w2_to_w1<Rational>(const ParamPoint&, const Rational&,
                                             const SolveOptions&);
template BigReal convert_w2_to_w1<BigReal>(const ParamPoint&, const BigReal&,
                                           const SolveOptions&);
template Rational roundtrip_check<Rational>(const ParamPoint&, const Rational&, BranchTag,
                                            const SolveOptions&);
template BigReal roundtrip_check<BigReal>(const ParamPoint&, const BigReal&, BranchTag,
                                          const SolveOptions&);
template CoincidenceReport<Rational> coincidence_check<Rational>(const ParamPoint&,
                                                                 const Rational&,
                                                                 const SolveOptions&);
template CoincidenceReport<BigReal> coincidence_check<BigReal>(const ParamPoint&,
                                                               const BigReal&,
                                                               const SolveOptions&);
template Rational manufacture_w<Rational>(const ParamPoint&, BranchTag,
                                          const SolveOptions&);
template BigReal manufacture_w<BigReal>(const ParamPoint&, BranchTag, const SolveOptions&);

}  // namespace cuboid
