#include "cuboid/fixtures.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "cuboid/cubic.hpp"
#include "cuboid/cuboid_model.hpp"
#include "cuboid/errors.hpp"
#include "cuboid/int_polynomial.hpp"
#include "cuboid/scan.hpp"
#include "cuboid/search.hpp"

namespace cuboid {

namespace {

// first-failure collector; a fixture passes iff msg stays empty
struct Check {
    std::string msg;

    void fail(const std::string& m) {
        if (msg.empty()) msg = m;
    }
    void require(bool ok, const std::string& what) {
        if (!ok) fail(what);
    }
    void equal(const Rational& got, const Rational& want, const std::string& what) {
        if (got != want)
            fail(what + ": got " + got.to_string() + ", want " + want.to_string());
    }
    void near(const BigReal& got, const BigReal& want, const BigReal& tol,
              const std::string& what) {
        if (!negligible(got - want, tol)) fail(what + ": outside tolerance");
    }
    void small(const BigReal& got, const BigReal& tol, const std::string& what) {
        if (!negligible(got, tol)) fail(what + ": residual too large");
    }
    template <typename F>
    void throws(F&& f, const std::string& condition, const std::string& what) {
        try {
            f();
        } catch (const domain_error& e) {
            if (e.condition() != condition)
                fail(what + ": wrong condition " + e.condition());
            return;
        }
        fail(what + ": expected " + condition + " error");
    }
};

Rational R(const char* s) { return Rational::parse(s).value(); }

std::vector<Rational> RL(std::initializer_list<const char*> ss) {
    std::vector<Rational> out;
    for (const char* s : ss) out.push_back(R(s));
    return out;
}

struct Fixture {
    const char* name;
    std::function<void(const FixtureOptions&, Check&)> run;
};

const ParamPoint kMain{Rational(1), Rational(1)};
const ParamPoint kDegenerate{Rational(0), Rational(2)};

BigReal numeric_w1_main(int digits) {
    // -3*sqrt(7): the first sextic root of the main point's edge cubic
    return real_roots(
               to_integer_polynomial({Rational(-63), Rational(0), Rational(1)}).first,
               digits)[0]
        .value;
}

BigReal numeric_sqrt7(int digits) {
    return real_roots(
               to_integer_polynomial({Rational(-7), Rational(0), Rational(1)}).first,
               digits)[1]
        .value;
}

const std::vector<Fixture>& registry() {
    static const std::vector<Fixture> fixtures = {
        {"rational-canonical-form",
         [](const FixtureOptions&, Check& ck) {
             ck.equal(Rational(2, 4), R("1/2"), "2/4 reduces");
             ck.equal(R("-3/6"), Rational(-1, 2), "parse -3/6");
             ck.require(Rational(0).to_string() == "0", "zero prints as 0");
             ck.require(R("-22/7").to_string() == "-22/7", "string roundtrip");
             ck.require(Rational(3, -9) == Rational(-1, 3), "sign normalizes to top");
         }},
        {"polynomial-denominator-clearing",
         [](const FixtureOptions&, Check& ck) {
             auto [p1, s1] = to_integer_polynomial({R("1/2"), R("-1/3"), Rational(1)});
             ck.require(p1.coeffs == std::vector<Integer>({3, -2, 6}), "lcm clearing");
             ck.equal(s1, R("1/6"), "scale 1/6");
             auto [p2, s2] = to_integer_polynomial({Rational(0), Rational(0), Rational(1)});
             ck.require(p2.coeffs == std::vector<Integer>({0, 0, 1}), "already integral");
             ck.equal(s2, Rational(1), "unit scale");
             auto [p3, s3] = to_integer_polynomial({R("2/4"), R("1/2")});
             ck.require(p3.coeffs == std::vector<Integer>({1, 1}),
                        "content normalization");
             ck.equal(s3, R("1/2"), "scale 1/2");
         }},
        {"rational-root-enumeration",
         [](const FixtureOptions&, Check& ck) {
             IntPolynomial quad{{-1, -1, 6}};  // 6x^2 - x - 1
             ck.require(rational_roots(quad) == RL({"-1/3", "1/2"}),
                        "quadratic splits");
             IntPolynomial none{{1, 0, 1}};  // x^2 + 1
             ck.require(rational_roots(none).empty(), "no real roots");
         }},
        {"sextic-rational-roots",
         [](const FixtureOptions&, Check& ck) {
             ck.require(rational_roots(cleared_sextic(R("-400/9261"))) ==
                            RL({"-9", "-3/2", "-3/5", "3/5", "3/2", "9"}),
                        "six rational roots, ascending");
         }},
        {"real-root-isolation",
         [](const FixtureOptions& opt, Check& ck) {
             const BigReal tol = tolerance_for(opt.precision_digits);
             auto s7 = real_roots(
                 to_integer_polynomial({Rational(-7), Rational(0), Rational(1)}).first,
                 opt.precision_digits);
             ck.require(s7.size() == 2, "two square roots");
             ck.small(s7[0].value + s7[1].value, tol, "roots are opposite");
             ck.small(s7[1].value * s7[1].value -
                          scalar_from_long<BigReal>(7, digits_to_bits(opt.precision_digits)),
                      tol, "square is 7");
             // 8x^3 - 4x^2 - 3x: one rational root flanked by (1 -+ sqrt7)/4
             auto tri = real_roots(IntPolynomial{{0, -3, -4, 8}}, opt.precision_digits);
             ck.require(tri.size() == 3, "three real roots");
             const BigReal q = scalar_from_rational<BigReal>(
                 R("1/4"), digits_to_bits(opt.precision_digits));
             const BigReal one = scalar_from_long<BigReal>(
                 1, digits_to_bits(opt.precision_digits));
             ck.near(tri[0].value, (one - numeric_sqrt7(opt.precision_digits)) * q, tol,
                     "low root");
             ck.small(tri[1].value, tol, "middle root is zero");
             ck.near(tri[2].value, (one + numeric_sqrt7(opt.precision_digits)) * q, tol,
                     "high root");
             ck.require(real_roots(IntPolynomial{{1, 0, 1}}).empty(), "x^2+1 rootless");
         }},
        {"cuboid-residual-evaluation",
         [](const FixtureOptions&, Check& ck) {
             CuboidTuple<Rational> zero{Rational(0), Rational(0), Rational(0),
                                        Rational(0), Rational(0), Rational(0),
                                        Rational(0)};
             for (const Rational& p : cuboid_residuals(zero))
                 ck.equal(p, Rational(0), "all-zero tuple");
             CuboidTuple<Rational> pythagorean{R("3/5"), R("4/5"), Rational(0),
                                               R("4/5"), R("3/5"), Rational(1),
                                               Rational(1)};
             for (const Rational& p : cuboid_residuals(pythagorean))
                 ck.equal(p, Rational(0), "degenerate solution");
             CuboidTuple<Rational> ones{Rational(1), Rational(1), Rational(1),
                                        Rational(1), Rational(1), Rational(1),
                                        Rational(1)};
             auto pr = cuboid_residuals(ones);
             ck.equal(pr[0], Rational(2), "p0 at ones");
             ck.equal(pr[1], Rational(1), "p1 at ones");
             ck.equal(pr[2], Rational(1), "p2 at ones");
             ck.equal(pr[3], Rational(1), "p3 at ones");
         }},
        {"factor-residual-evaluation",
         [](const FixtureOptions&, Check& ck) {
             CuboidTuple<Rational> pythagorean{R("3/5"), R("4/5"), Rational(0),
                                               R("4/5"), R("3/5"), Rational(1),
                                               Rational(1)};
             for (const Rational& f : factor_residuals(pythagorean))
                 ck.equal(f, Rational(0), "degenerate solution");
             CuboidTuple<Rational> edge{Rational(1), Rational(0), Rational(0),
                                        Rational(0), Rational(0), Rational(0),
                                        Rational(1)};
             auto fr = factor_residuals(edge);
             const Rational want[8] = {Rational(0), Rational(2), Rational(0),
                                       Rational(0), Rational(0), Rational(0),
                                       Rational(0), Rational(0)};
             for (int i = 0; i < 8; ++i) ck.equal(fr[i], want[i], "single-edge tuple");
         }},
        {"implication-probe",
         [](const FixtureOptions&, Check& ck) {
             CuboidTuple<Rational> pythagorean{R("3/5"), R("4/5"), Rational(0),
                                               R("4/5"), R("3/5"), Rational(1),
                                               Rational(1)};
             ImplicationReport a = factor_cuboid_implication(pythagorean);
             ck.require(a.factor_zero, "factors vanish on degenerate tuple");
             ck.require(!a.positive, "zero edge fails positivity");
             ck.require(a.implication_holds, "vacuous case holds");
             CuboidTuple<Rational> ones{Rational(1), Rational(1), Rational(1),
                                        Rational(1), Rational(1), Rational(1),
                                        Rational(1)};
             ImplicationReport b = factor_cuboid_implication(ones);
             ck.require(!b.factor_zero, "ones violate the factor equations");
             ck.require(b.implication_holds, "vacuous case holds");
         }},
        {"multisymmetric-profile",
         [](const FixtureOptions&, Check& ck) {
             CuboidTuple<Rational> ones{Rational(1), Rational(1), Rational(1),
                                        Rational(1), Rational(1), Rational(1),
                                        Rational(1)};
             EProfile<Rational> e = e_profile(ones);
             ck.equal(e.E10, Rational(3), "E10 symmetric");
             ck.equal(e.E20, Rational(3), "E20 symmetric");
             ck.equal(e.E30, Rational(1), "E30 symmetric");
             ck.equal(e.E01, Rational(3), "E01 symmetric");
             ck.equal(e.E02, Rational(3), "E02 symmetric");
             ck.equal(e.E03, Rational(1), "E03 symmetric");
             ck.equal(e.E21, Rational(3), "E21 symmetric");
             ck.equal(e.E11, Rational(6), "E11 symmetric");
             ck.equal(e.E12, Rational(3), "E12 symmetric");
             CuboidTuple<Rational> dzero{Rational(1), Rational(2), Rational(3),
                                         Rational(0), Rational(0), Rational(0),
                                         Rational(1)};
             EProfile<Rational> z = e_profile(dzero);
             ck.equal(z.E10, Rational(6), "x-side alone");
             ck.equal(z.E20, Rational(11), "x-side alone");
             ck.equal(z.E30, Rational(6), "x-side alone");
             ck.equal(z.E11 + z.E12 + z.E21 + z.E01 + z.E02 + z.E03, Rational(0),
                      "d = 0 kills the rest");
             CuboidTuple<Rational> mixed{Rational(1), Rational(2), Rational(3),
                                         Rational(4), Rational(5), Rational(6),
                                         Rational(1)};
             EProfile<Rational> m = e_profile(mixed);
             ck.equal(m.E11, Rational(58), "six-term cross sum");
             ck.equal(m.E21, Rational(51), "pair-product cross sum");
             ck.equal(m.E12, Rational(138), "pair-product cross sum");
         }},
        {"permutation-invariance",
         [](const FixtureOptions&, Check& ck) {
             CuboidTuple<Rational> t{Rational(1), Rational(2), Rational(3),
                                     Rational(4), Rational(5), Rational(6),
                                     Rational(1)};
             Permutation ident{{1, 2, 3}};
             CuboidTuple<Rational> same = apply_permutation(ident, t);
             ck.equal(same.x1, t.x1, "identity fixes x1");
             ck.equal(same.d3, t.d3, "identity fixes d3");
             Permutation swap12{{2, 1, 3}};
             CuboidTuple<Rational> sw = apply_permutation(swap12, t);
             ck.equal(sw.x1, Rational(2), "swap reindexes x");
             ck.equal(sw.x2, Rational(1), "swap reindexes x");
             ck.equal(sw.d1, Rational(5), "swap reindexes d");
             ck.equal(sw.d2, Rational(4), "swap reindexes d");
             ck.equal(sw.x3, Rational(3), "slot three untouched");
             EProfile<Rational> base = e_profile(t);
             for (const auto& img : Permutation::all) {
                 EProfile<Rational> e = e_profile(apply_permutation(Permutation{img}, t));
                 ck.require(e.E10 == base.E10 && e.E20 == base.E20 &&
                                e.E30 == base.E30 && e.E01 == base.E01 &&
                                e.E02 == base.E02 && e.E03 == base.E03 &&
                                e.E21 == base.E21 && e.E11 == base.E11 &&
                                e.E12 == base.E12,
                            "profile is permutation-invariant");
             }
         }},
        {"cubic-admissibility",
         [](const FixtureOptions&, Check& ck) {
             CubicCoeffs<Rational> split{Rational(1), Rational(-7), Rational(14),
                                         Rational(-8)};
             ck.require(admissibility(split, Rational(0)) == Admissibility::ok,
                        "distinct-root cubic admissible");
             CubicCoeffs<Rational> mid{Rational(1), Rational(-3), Rational(2),
                                       Rational(0)};
             ck.require(admissibility(mid, Rational(0)) == Admissibility::third_violated,
                        "vanishing deviation rejected");
             CubicCoeffs<Rational> quad{Rational(0), Rational(1), Rational(1),
                                        Rational(1)};
             ck.require(admissibility(quad, Rational(0)) == Admissibility::first_violated,
                        "degree drop rejected");
         }},
        {"cubic-reduction",
         [](const FixtureOptions&, Check& ck) {
             CubicCoeffs<Rational> split{Rational(1), Rational(-7), Rational(14),
                                         Rational(-8)};
             ck.equal(reduce_D(split, Rational(0)), R("-400/9261"), "reduction");
             CubicCoeffs<Rational> main{Rational(1), R("-1/2"), R("-3/8"), Rational(0)};
             ck.equal(reduce_D(main, Rational(0)), R("-1922/35937"), "reduction");
         }},
        {"discriminant-from-roots",
         [](const FixtureOptions& opt, Check& ck) {
             ck.equal(D_from_roots(Rational(1), Rational(2), Rational(4), Rational(0)),
                      R("-400/9261"), "exact triple");
             const mpfr_prec_t bits = digits_to_bits(opt.precision_digits);
             const BigReal tol = tolerance_for(opt.precision_digits);
             const BigReal s7 = numeric_sqrt7(opt.precision_digits);
             const BigReal q = scalar_from_rational<BigReal>(R("1/4"), bits);
             const BigReal one = scalar_from_long<BigReal>(1, bits);
             BigReal hi = (one + s7) * q, lo = (one - s7) * q;
             ck.near(D_from_roots(scalar_from_long<BigReal>(0, bits), hi, lo, tol),
                     scalar_from_rational<BigReal>(R("-1922/35937"), bits), tol,
                     "algebraic triple");
             ck.near(D_from_roots(-one, hi, lo, tol),
                     scalar_from_rational<BigReal>(R("-18050/328509"), bits), tol,
                     "algebraic triple");
         }},
        {"sextic-residual-evaluation",
         [](const FixtureOptions&, Check& ck) {
             ck.equal(sextic_residual(R("-400/9261"), R("3/5")), Rational(0), "on root");
             ck.equal(sextic_residual(R("-4/27"), Rational(0)), Rational(0), "on root");
             ck.equal(sextic_residual(R("-400/9261"), Rational(1)), R("-25600/9261"),
                      "off root");
         }},
        {"reduced-root-formulas",
         [](const FixtureOptions&, Check& ck) {
             auto y0 = reduced_roots(Rational(0));
             ck.equal(y0[0], R("-2/3"), "symmetric case");
             ck.equal(y0[1], R("-2/3"), "symmetric case");
             ck.equal(y0[2], R("1/3"), "symmetric case");
             auto ym = reduced_roots(R("-3/5"));
             ck.equal(ym[0], R("-5/21"), "reduced split triple");
             ck.equal(ym[1], R("-20/21"), "reduced split triple");
             ck.equal(ym[2], R("4/21"), "reduced split triple");
             auto y1 = reduced_roots(Rational(1));
             ck.equal(y1[0], Rational(-1), "degenerate case");
             ck.equal(y1[1], Rational(0), "degenerate case");
             ck.equal(y1[2], Rational(0), "degenerate case");
         }},
        {"root-recovery-permutations",
         [](const FixtureOptions&, Check& ck) {
             CubicCoeffs<Rational> A{Rational(1), Rational(-7), Rational(14),
                                     Rational(-8)};
             auto r1 = cubic_roots_from_w(A, R("-3/5"), Rational(0));
             ck.require(r1 == std::array<Rational, 3>{Rational(1), Rational(2),
                                                      Rational(4)},
                        "identity ordering");
             auto r2 = cubic_roots_from_w(A, R("3/5"), Rational(0));
             ck.require(r2 == std::array<Rational, 3>{Rational(2), Rational(1),
                                                      Rational(4)},
                        "first-two swap");
             auto r3 = cubic_roots_from_w(A, R("3/2"), Rational(0));
             ck.require(r3 == std::array<Rational, 3>{Rational(2), Rational(4),
                                                      Rational(1)},
                        "cycled ordering");
         }},
        {"sextic-root-table",
         [](const FixtureOptions& opt, Check& ck) {
             auto table = sextic_roots_from_cubic_roots(Rational(1), Rational(2),
                                                        Rational(4), Rational(0));
             std::vector<Rational> ws;
             for (const auto& e : table) ws.push_back(e.w);
             std::sort(ws.begin(), ws.end());
             ck.require(ws == RL({"-9", "-3/2", "-3/5", "3/5", "3/2", "9"}),
                        "six transforms");
             ck.equal(table[0].w, R("-3/5"), "leading transform");
             ck.throws(
                 [] {
                     (void)sextic_roots_from_cubic_roots(Rational(0), Rational(1),
                                                         Rational(2), Rational(0));
                 },
                 "degenerate-deviation", "vanishing deviation");
             const mpfr_prec_t bits = digits_to_bits(opt.precision_digits);
             const BigReal tol = tolerance_for(opt.precision_digits);
             const BigReal s7 = numeric_sqrt7(opt.precision_digits);
             const BigReal q = scalar_from_rational<BigReal>(R("1/4"), bits);
             const BigReal one = scalar_from_long<BigReal>(1, bits);
             auto ntab = sextic_roots_from_cubic_roots(
                 (one + s7) * q, (one - s7) * q, scalar_from_long<BigReal>(0, bits), tol);
             ck.near(ntab[0].w, -scalar_from_long<BigReal>(3, bits) * s7, tol,
                     "leading transform, algebraic triple");
         }},
        {"w-from-ordered-roots",
         [](const FixtureOptions& opt, Check& ck) {
             ck.equal(w_from_roots(Rational(1), Rational(2), Rational(4), Rational(0)),
                      R("-3/5"), "split triple");
             const mpfr_prec_t bits = digits_to_bits(opt.precision_digits);
             const BigReal tol = tolerance_for(opt.precision_digits);
             const BigReal s7 = numeric_sqrt7(opt.precision_digits);
             const BigReal q = scalar_from_rational<BigReal>(R("1/4"), bits);
             const BigReal one = scalar_from_long<BigReal>(1, bits);
             ck.near(w_from_roots((one + s7) * q, (one - s7) * q,
                                  scalar_from_long<BigReal>(0, bits), tol),
                     numeric_w1_main(opt.precision_digits), tol, "algebraic triple");
         }},
        {"linear-profile",
         [](const FixtureOptions&, Check& ck) {
             ELinear main = e_linear(kMain);
             ck.equal(main.E10, R("1/2"), "edge sum");
             ck.equal(main.E01, R("-1/2"), "diagonal sum");
             ck.equal(main.E11, R("1/2"), "cross sum");
             ELinear zb = e_linear(kDegenerate);
             ck.equal(zb.E10, Rational(1), "zero-b closed form");
             ck.equal(zb.E01, Rational(0), "zero-b closed form");
             ck.equal(zb.E11, Rational(0), "zero-b closed form");
             ck.throws([] { (void)e_linear(ParamPoint{Rational(0), Rational(0)}); },
                       "singular-denominator", "origin is singular");
         }},
        {"full-profile",
         [](const FixtureOptions&, Check& ck) {
             ParamProfile p = e_full(kMain);
             ck.equal(p.E20, R("-3/8"), "main point");
             ck.equal(p.E30, Rational(0), "main point");
             ck.equal(p.E02, R("-7/8"), "main point");
             ck.equal(p.E03, R("3/8"), "main point");
             ck.equal(p.E12, Rational(-1), "main point");
             ck.require(p.E21_printed_verbatim.has_value(), "printed reading defined");
             ck.equal(*p.E21_printed_verbatim, R("-7/24"), "printed reading");
             ck.equal(p.E21_printed_q4variant, R("7/8"), "shared-quartic reading");
             DerivedE21 d = derive_e21(p);
             ck.require(d.value.has_value(), "derived value exists");
             ck.equal(*d.value, R("3/8"), "value forced by the rest of the profile");
             ck.require(*d.value != *p.E21_printed_verbatim,
                        "printed reading is inconsistent");
             ParamProfile z = e_full(kDegenerate);
             ck.equal(z.E10, Rational(1), "zero-b closed form");
             ck.equal(z.E20, Rational(0), "zero-b closed form");
             ck.equal(z.E30, Rational(0), "zero-b closed form");
             ck.equal(z.E02, Rational(-1), "zero-b closed form");
             ck.equal(z.E03, Rational(0), "zero-b closed form");
             ck.equal(z.E12, Rational(-1), "zero-b closed form");
             DerivedE21 zd = derive_e21(z);
             ck.equal(*zd.value, Rational(0), "zero-b derived value");
         }},
        {"biquadratic-identity",
         [](const FixtureOptions&, Check& ck) {
             ck.equal(biquadratic_residual(R("1/2"), R("-1/2"), R("1/2"), Rational(1)),
                      Rational(0), "main point");
             for (long bn = -3; bn <= 3; ++bn) {
                 for (long cn = -3; cn <= 3; ++cn) {
                     ParamPoint pt{Rational(bn, 2), Rational(cn, 3)};
                     try {
                         ELinear e = e_linear(pt);
                         ck.equal(biquadratic_residual(e.E10, e.E01, e.E11, Rational(1)),
                                  Rational(0), "identity along the family");
                     } catch (const singularity_error&) {
                     }
                 }
             }
         }},
        {"discriminant-values",
         [](const FixtureOptions& opt, Check& ck) {
             DParams d = d_parameters(kMain, opt.d1_exponent);
             ck.equal(d.D1, R("-1922/35937"), "main point first branch");
             ck.equal(d.D2, R("-18050/328509"), "main point second branch");
             DParams z = d_parameters(kDegenerate, opt.d1_exponent);
             ck.equal(z.D1, R("-4/27"), "zero-b first branch");
             ck.equal(z.D2, Rational(0), "zero-b second branch");
         }},
        {"discriminant-cross-check",
         [](const FixtureOptions& opt, Check& ck) {
             // the closed forms must agree with reducing the branch cubics
             const ParamPoint pts[] = {kMain, ParamPoint{Rational(3), Rational(2)},
                                       ParamPoint{R("22/7"), R("10/7")},
                                       ParamPoint{Rational(-4), Rational(-1)}};
             for (const ParamPoint& pt : pts) {
                 DParams d = d_parameters(pt, opt.d1_exponent);
                 ck.equal(d.D1, reduce_D(cubic_coeffs(pt, BranchTag::branch1), Rational(0)),
                          "first closed form vs cubic reduction at b=" +
                              pt.b.to_string() + ", c=" + pt.c.to_string());
                 ck.equal(d.D2, reduce_D(cubic_coeffs(pt, BranchTag::branch2), Rational(0)),
                          "second closed form vs cubic reduction at b=" +
                              pt.b.to_string() + ", c=" + pt.c.to_string());
             }
         }},
        {"branch-cubic-coefficients",
         [](const FixtureOptions&, Check& ck) {
             CubicCoeffs<Rational> b1 = cubic_coeffs(kMain, BranchTag::branch1);
             ck.equal(b1.A3, Rational(1), "main edge cubic");
             ck.equal(b1.A2, R("-1/2"), "main edge cubic");
             ck.equal(b1.A1, R("-3/8"), "main edge cubic");
             ck.equal(b1.A0, Rational(0), "main edge cubic");
             CubicCoeffs<Rational> b2 = cubic_coeffs(kMain, BranchTag::branch2);
             ck.equal(b2.A3, Rational(1), "main diagonal cubic");
             ck.equal(b2.A2, R("1/2"), "main diagonal cubic");
             ck.equal(b2.A1, R("-7/8"), "main diagonal cubic");
             ck.equal(b2.A0, R("-3/8"), "main diagonal cubic");
             CubicCoeffs<Rational> zb = cubic_coeffs(kDegenerate, BranchTag::branch1);
             ck.equal(zb.A2, Rational(-1), "zero-b edge cubic");
             ck.equal(zb.A1, Rational(0), "zero-b edge cubic");
             ck.equal(zb.A0, Rational(0), "zero-b edge cubic");
             ck.require(rational_roots(to_integer_polynomial(
                                           {zb.A0, zb.A1, zb.A2, zb.A3})
                                           .first) == RL({"0", "0", "1"}),
                        "zero-b edge roots");
         }},
        {"degenerate-family-solve",
         [](const FixtureOptions&, Check& ck) {
             BranchSolution<Rational> s = solve_branch1<Rational>(kDegenerate, Rational(0));
             ck.equal(s.tuple.x1, Rational(0), "edge");
             ck.equal(s.tuple.x2, Rational(0), "edge");
             ck.equal(s.tuple.x3, Rational(1), "edge");
             ck.equal(s.tuple.d1, Rational(-1), "diagonal");
             ck.equal(s.tuple.d2, Rational(1), "diagonal");
             ck.equal(s.tuple.d3, Rational(0), "diagonal");
             ck.require(s.used_pairing_fallback, "singular system fell back");
             ck.require(s.pairing_ambiguous, "two alignments reported");
             ck.equal(s.diagnostics.residual_max, Rational(0), "exact residuals");
             ck.throws([] { (void)convert_w1_to_w2<Rational>(kDegenerate, Rational(0)); },
                       "conversion-denominator", "conversion undefined");
             ck.throws([] { (void)solve_branch2<Rational>(kDegenerate, Rational(3)); },
                       "admissibility", "diagonal cubic inadmissible");
             ck.throws([] { (void)solve_branch1<Rational>(kMain, Rational(1)); },
                       "w-degenerate", "excluded parameter value");
         }},
        {"main-point-branch1",
         [](const FixtureOptions& opt, Check& ck) {
             const mpfr_prec_t bits = digits_to_bits(opt.precision_digits);
             const BigReal tol = tolerance_for(opt.precision_digits - 20);
             const BigReal w1 = numeric_w1_main(opt.precision_digits);
             const BigReal s7 = numeric_sqrt7(opt.precision_digits);
             const BigReal q = scalar_from_rational<BigReal>(R("1/4"), bits);
             const BigReal one = scalar_from_long<BigReal>(1, bits);
             SolveOptions sopt{opt.precision_digits, opt.e21_source};
             BranchSolution<BigReal> s = solve_branch1<BigReal>(kMain, w1, sopt);
             ck.near(s.tuple.x1, (one + s7) * q, tol, "edge");
             ck.near(s.tuple.x2, (one - s7) * q, tol, "edge");
             ck.small(s.tuple.x3, tol, "edge");
             ck.near(s.tuple.d1, (one - s7) * q, tol, "diagonal");
             ck.near(s.tuple.d2, (one + s7) * q, tol, "diagonal");
             ck.near(s.tuple.d3, -one, tol, "diagonal");
         }},
        {"main-point-branch2",
         [](const FixtureOptions& opt, Check& ck) {
             const mpfr_prec_t bits = digits_to_bits(opt.precision_digits);
             const BigReal tol = tolerance_for(opt.precision_digits - 20);
             const BigReal s7 = numeric_sqrt7(opt.precision_digits);
             const BigReal q = scalar_from_rational<BigReal>(R("1/4"), bits);
             const BigReal one = scalar_from_long<BigReal>(1, bits);
             const BigReal w2 = scalar_from_long<BigReal>(3, bits) * s7 /
                                scalar_from_long<BigReal>(5, bits);
             BranchSolution<BigReal> s = solve_branch2<BigReal>(
                 kMain, w2, SolveOptions{opt.precision_digits, E21Source::derived});
             // recovery order of the diagonal cubic's roots at this w
             ck.near(s.tuple.d1, (one - s7) * q, tol, "diagonal ordering");
             ck.near(s.tuple.d2, (one + s7) * q, tol, "diagonal ordering");
             ck.near(s.tuple.d3, -one, tol, "diagonal ordering");
             ck.near(s.tuple.x1, (one + s7) * q, tol, "edges match first branch");
             ck.near(s.tuple.x2, (one - s7) * q, tol, "edges match first branch");
             ck.small(s.tuple.x3, tol, "edges match first branch");
             ck.throws(
                 [&] {
                     (void)solve_branch2<BigReal>(
                         kMain, -one, SolveOptions{opt.precision_digits});
                 },
                 "w-degenerate", "excluded parameter value");
         }},
        {"root-pairing",
         [](const FixtureOptions& opt, Check& ck) {
             // exact flavor: x = (0,0,1) against the diagonal multiset
             PairingResult<Rational> ex = derive_pairing<Rational>(
                 {Rational(0), Rational(0), Rational(1)},
                 {Rational(-1), Rational(0), Rational(1)}, Rational(0), Rational(-1),
                 Rational(0));
             ck.equal(ex.aligned[0], Rational(-1), "canonical alignment");
             ck.equal(ex.aligned[1], Rational(1), "canonical alignment");
             ck.equal(ex.aligned[2], Rational(0), "canonical alignment");
             ck.equal(ex.e21, Rational(0), "implied cross sum");
             ck.require(ex.ambiguous, "two alignments fit");
             // numeric flavor at the main point: unique alignment
             const mpfr_prec_t bits = digits_to_bits(opt.precision_digits);
             const BigReal tol = tolerance_for(opt.precision_digits);
             const BigReal s7 = numeric_sqrt7(opt.precision_digits);
             const BigReal q = scalar_from_rational<BigReal>(R("1/4"), bits);
             const BigReal one = scalar_from_long<BigReal>(1, bits);
             const BigReal zero = scalar_from_long<BigReal>(0, bits);
             PairingResult<BigReal> nu = derive_pairing<BigReal>(
                 {(one + s7) * q, (one - s7) * q, zero},
                 {-one, (one + s7) * q, (one - s7) * q},
                 scalar_from_rational<BigReal>(R("1/2"), bits), -one, tol);
             ck.near(nu.aligned[0], (one - s7) * q, tol, "forced alignment");
             ck.near(nu.aligned[1], (one + s7) * q, tol, "forced alignment");
             ck.near(nu.aligned[2], -one, tol, "forced alignment");
             ck.near(nu.e21, scalar_from_rational<BigReal>(R("3/8"), bits), tol,
                     "derived cross sum");
             ck.require(!nu.ambiguous, "alignment unique");
         }},
        {"conversion-roundtrip",
         [](const FixtureOptions& opt, Check& ck) {
             const mpfr_prec_t bits = digits_to_bits(opt.precision_digits);
             const BigReal tol = tolerance_for(opt.precision_digits - 20);
             const BigReal w1 = numeric_w1_main(opt.precision_digits);
             const BigReal s7 = numeric_sqrt7(opt.precision_digits);
             SolveOptions sopt{opt.precision_digits, E21Source::derived};
             BigReal w2 = convert_w1_to_w2<BigReal>(kMain, w1, sopt);
             ck.near(w2,
                     scalar_from_long<BigReal>(3, bits) * s7 /
                         scalar_from_long<BigReal>(5, bits),
                     tol, "forward conversion");
             ck.near(convert_w2_to_w1<BigReal>(kMain, w2, sopt), w1, tol,
                     "backward conversion");
             ck.small(roundtrip_check<BigReal>(kMain, w1, BranchTag::branch1, sopt), tol,
                      "first-branch roundtrip");
             ck.small(roundtrip_check<BigReal>(kMain, w2, BranchTag::branch2, sopt), tol,
                      "second-branch roundtrip");
             ck.throws(
                 [&] {
                     (void)convert_w1_to_w2<BigReal>(
                         kMain, scalar_from_long<BigReal>(1, bits), sopt);
                 },
                 "w-degenerate", "excluded parameter value propagates");
             ck.throws(
                 [] { (void)roundtrip_check<Rational>(kDegenerate, Rational(0),
                                                      BranchTag::branch1); },
                 "conversion-denominator", "degenerate family is conversion-singular");
         }},
        {"coincidence",
         [](const FixtureOptions& opt, Check& ck) {
             const BigReal tol = tolerance_for(opt.precision_digits - 28);  // 1e-80 at 128
             SolveOptions sopt{opt.precision_digits, opt.e21_source};
             CoincidenceReport<BigReal> co = coincidence_check<BigReal>(
                 kMain, numeric_w1_main(opt.precision_digits), sopt);
             ck.small(co.max_abs, tol, "all six differences");
             ck.throws(
                 [] { (void)coincidence_check<Rational>(kDegenerate, Rational(0)); },
                 "conversion-denominator", "degenerate family is conversion-singular");
         }},
        {"profile-reconstruction",
         [](const FixtureOptions& opt, Check& ck) {
             // the solved tuple's own symmetric functions must reproduce the
             // committed profile values
             const BigReal tol = tolerance_for(opt.precision_digits - 28);
             SolveOptions sopt{opt.precision_digits, opt.e21_source};
             BranchSolution<BigReal> s = solve_branch1<BigReal>(
                 kMain, numeric_w1_main(opt.precision_digits), sopt);
             ck.small(s.diagnostics.profile_residual_max, tol, "profile agreement");
             ck.small(s.diagnostics.residual_max, tol, "all residuals");
             for (const BigReal& f : s.diagnostics.factor_residuals)
                 ck.small(f, tol, "factor residuals");
         }},
        {"manufactured-on-surface-solve",
         [](const FixtureOptions& opt, Check& ck) {
             const BigReal tol = tolerance_for(opt.precision_digits - 28);
             SolveOptions sopt{opt.precision_digits, E21Source::derived};
             BigReal w = manufacture_w<BigReal>(kMain, BranchTag::branch1, sopt);
             ck.small(sextic_residual(scalar_from_rational<BigReal>(
                                          d_parameter(kMain, BranchTag::branch1),
                                          digits_to_bits(opt.precision_digits)),
                                      w),
                      tolerance_for(opt.precision_digits), "manufactured on-surface");
             BranchSolution<BigReal> s = solve_branch1<BigReal>(kMain, w, sopt);
             ck.small(s.diagnostics.residual_max, tol, "solve at manufactured w");
             ck.throws([] { (void)manufacture_w<Rational>(kMain, BranchTag::branch1); },
                       "w-manufacture", "no rational split at the main point");
         }},
        {"implication-search",
         [](const FixtureOptions&, Check& ck) {
             ImplicationSearchReport rep = search_factor_implication(8);
             ck.require(rep.x_triples == 3, "triples with an integral long diagonal");
             ck.require(rep.factor_solutions == 0, "no all-positive factor solutions");
             ck.require(rep.counterexamples == 0, "implication unchallenged");
         }},
        {"scan-spot-checks",
         [](const FixtureOptions&, Check& ck) {
             std::vector<ScanRecord> rows = run_scan(1, 1);
             ck.require(rows.size() == 9, "height-1 grid size");
             bool saw_zero_b = false, saw_main = false;
             for (const ScanRecord& r : rows) {
                 ck.require(r.note.find("PERFECT CUBOID CANDIDATE") == std::string::npos,
                            "no candidates at desk height");
                 if (r.b == Rational(0) && r.c == Rational(1)) {
                     saw_zero_b = true;
                     ck.require(r.D1.has_value(), "first branch defined");
                     ck.equal(*r.D1, R("-4/27"), "zero-b discriminant");
                     ck.require(r.rational_w1 == RL({"-3", "0", "3"}),
                                "zero-b sextic roots");
                     ck.require(r.solved, "zero-b point solves");
                     ck.require(!r.positive, "degenerate tuple is not positive");
                 }
                 if (r.b == Rational(1) && r.c == Rational(1)) {
                     saw_main = true;
                     ck.require(r.rational_w1.empty(), "main sextic has no rational root");
                     ck.require(r.D1.has_value() && *r.D1 == R("-1922/35937"),
                                "main discriminant");
                 }
             }
             ck.require(saw_zero_b && saw_main, "expected rows present");
         }},
    };
    return fixtures;
}

}  // namespace

std::vector<FixtureOutcome> run_fixtures(const FixtureOptions& opt) {
    std::vector<FixtureOutcome> out;
    for (const Fixture& f : registry()) {
        FixtureOutcome res;
        res.name = f.name;
        try {
            Check ck;
            f.run(opt, ck);
            res.passed = ck.msg.empty();
            res.detail = ck.msg;
        } catch (const std::exception& e) {
            res.passed = false;
            res.detail = std::string("threw: ") + e.what();
        }
        out.push_back(std::move(res));
    }
    return out;
}

}  // namespace cuboid
