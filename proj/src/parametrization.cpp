// Closed forms for the two-parameter family.  The polynomial parts are stored
// as monomial tables {coefficient, b-power, c-power} and evaluated against
// precomputed power ladders; the tables are machine-generated from a verified
// transcription so that no formula is hand-copied twice.

#include "cuboid/parametrization.hpp"

#include <span>

#include "cuboid/errors.hpp"

namespace cuboid {

namespace {

struct Term {
    long k;   // integer coefficient
    int be;   // power of b
    int ce;   // power of c
};

constexpr Term kQ1[] = {{1, 2, 2}, {-3, 2, 1}, {2, 2, 0}, {-1, 1, 2}, {2, 1, 0}, {1, 0, 1}};
constexpr Term kQ2[] = {{1, 1, 1}, {-1, 1, 0}, {-1, 0, 0}};
constexpr Term kQ3[] = {{1, 1, 1}, {-2, 1, 0}, {-1, 0, 1}};
constexpr Term kQ4[] = {{1, 2, 4}, {-6, 2, 3}, {13, 2, 2}, {-12, 2, 1}, {4, 2, 0}, {1, 0, 2}};
constexpr Term kQ5[] = {{2, 4, 4}, {-12, 4, 3}, {26, 4, 2}, {-24, 4, 1}, {8, 4, 0}, {-6, 3, 4}, {18, 3, 3}, {-36, 3, 1}, {24, 3, 0}, {3, 2, 4}, {8, 2, 3}, {-36, 2, 2}, {16, 2, 1}, {12, 2, 0}, {-6, 1, 3}, {12, 1, 1}, {2, 0, 2}};
constexpr Term kQ6[] = {{6, 4, 4}, {-36, 4, 3}, {78, 4, 2}, {-72, 4, 1}, {24, 4, 0}, {-12, 3, 4}, {36, 3, 3}, {-72, 3, 1}, {48, 3, 0}, {5, 2, 4}, {16, 2, 3}, {-68, 2, 2}, {32, 2, 1}, {20, 2, 0}, {-12, 1, 3}, {24, 1, 1}, {6, 0, 2}};
constexpr Term kNumE10[] = {{1, 2, 2}, {-3, 2, 1}, {2, 2, 0}, {-1, 0, 1}};
constexpr Term kNumE01[] = {{1, 1, 2}, {-2, 1, 1}, {2, 1, 0}};
constexpr Term kNumE11[] = {{1, 1, 2}, {-4, 1, 1}, {2, 1, 0}};
constexpr Term kN12[] = {{1, 6, 8}, {-12, 6, 7}, {62, 6, 6}, {-180, 6, 5}, {321, 6, 4}, {-360, 6, 3}, {248, 6, 2}, {-96, 6, 1}, {16, 6, 0}, {-2, 5, 8}, {18, 5, 7}, {-62, 5, 6}, {90, 5, 5}, {-180, 5, 3}, {248, 5, 2}, {-144, 5, 1}, {32, 5, 0}, {1, 4, 8}, {-6, 4, 7}, {8, 4, 6}, {18, 4, 5}, {-57, 4, 4}, {36, 4, 3}, {32, 4, 2}, {-48, 4, 1}, {16, 4, 0}, {-1, 3, 7}, {7, 3, 6}, {-14, 3, 5}, {28, 3, 3}, {-28, 3, 2}, {8, 3, 1}, {-6, 2, 5}, {17, 2, 4}, {-12, 2, 3}, {2, 1, 5}, {-4, 1, 3}, {-1, 0, 4}};
constexpr Term kN21[] = {{2, 4, 8}, {-26, 4, 7}, {142, 4, 6}, {-426, 4, 5}, {768, 4, 4}, {-852, 4, 3}, {568, 4, 2}, {-208, 4, 1}, {32, 4, 0}, {-1, 3, 8}, {14, 3, 7}, {-61, 3, 6}, {100, 3, 5}, {-200, 3, 3}, {244, 3, 2}, {-112, 3, 1}, {16, 3, 0}, {-2, 2, 7}, {-2, 2, 6}, {52, 2, 5}, {-128, 2, 4}, {104, 2, 3}, {-8, 2, 2}, {-16, 2, 1}, {5, 1, 6}, {-16, 1, 5}, {32, 1, 3}, {-20, 1, 2}, {-2, 0, 5}, {8, 0, 4}};
constexpr Term kNA[] = {{1, 2, 4}, {-5, 2, 3}, {10, 2, 2}, {-10, 2, 1}, {4, 2, 0}, {-1, 1, 3}, {2, 1, 1}, {2, 0, 2}};
constexpr Term kNB[] = {{2, 2, 4}, {-12, 2, 3}, {26, 2, 2}, {-24, 2, 1}, {8, 2, 0}, {-1, 1, 4}, {3, 1, 3}, {-6, 1, 1}, {4, 1, 0}, {1, 0, 3}, {-2, 0, 2}, {2, 0, 1}};
constexpr Term kN02[] = {{-2, 4, 4}, {12, 4, 3}, {-26, 4, 2}, {24, 4, 1}, {-8, 4, 0}, {4, 3, 4}, {-12, 3, 3}, {24, 3, 1}, {-16, 3, 0}, {-1, 2, 4}, {-8, 2, 3}, {28, 2, 2}, {-16, 2, 1}, {-4, 2, 0}, {4, 1, 3}, {-8, 1, 1}, {-2, 0, 2}};
constexpr Term kE30FactorA[] = {{1, 1, 2}, {-4, 1, 1}, {4, 1, 0}, {2, 0, 0}};
constexpr Term kE30FactorB[] = {{2, 1, 2}, {-4, 1, 1}, {2, 1, 0}, {-1, 0, 2}};
constexpr Term kE20FactorA[] = {{1, 1, 2}, {-2, 1, 0}, {-2, 0, 1}};
constexpr Term kE20FactorB[] = {{2, 1, 2}, {-6, 1, 1}, {4, 1, 0}, {-1, 0, 2}, {2, 0, 0}};
constexpr Term kN1[] = {{4, 8, 10}, {-60, 8, 9}, {400, 8, 8}, {-1560, 8, 7}, {3940, 8, 6}, {-6732, 8, 5}, {7880, 8, 4}, {-6240, 8, 3}, {3200, 8, 2}, {-960, 8, 1}, {128, 8, 0}, {-18, 7, 10}, {216, 7, 9}, {-1080, 7, 8}, {2808, 7, 7}, {-3546, 7, 6}, {7092, 7, 4}, {-11232, 7, 3}, {8640, 7, 2}, {-3456, 7, 1}, {576, 7, 0}, {9, 6, 10}, {51, 6, 9}, {-1319, 6, 8}, {7905, 6, 7}, {-24186, 6, 6}, {43740, 6, 5}, {-48372, 6, 4}, {31620, 6, 3}, {-10552, 6, 2}, {816, 6, 1}, {288, 6, 0}, {-162, 5, 9}, {1494, 5, 8}, {-5238, 5, 7}, {7686, 5, 6}, {-15372, 5, 4}, {20952, 5, 3}, {-11952, 5, 2}, {2592, 5, 1}, {45, 4, 9}, {-231, 4, 8}, {-300, 4, 7}, {3906, 4, 6}, {-8904, 4, 5}, {7812, 4, 4}, {-1200, 4, 3}, {-1848, 4, 2}, {720, 4, 1}, {-36, 3, 8}, {378, 3, 7}, {-882, 3, 6}, {1764, 3, 4}, {-1512, 3, 3}, {288, 3, 2}, {-13, 2, 7}, {-108, 2, 6}, {380, 2, 5}, {-216, 2, 4}, {-52, 2, 3}, {18, 1, 6}, {-36, 1, 4}, {-4, 0, 5}};
constexpr Term kN2[] = {{36, 6, 10}, {-504, 6, 9}, {3168, 6, 8}, {-11808, 6, 7}, {28980, 6, 6}, {-49032, 6, 5}, {57960, 6, 4}, {-47232, 6, 3}, {25344, 6, 2}, {-8064, 6, 1}, {1152, 6, 0}, {-45, 5, 10}, {441, 5, 9}, {-1809, 5, 8}, {3951, 5, 7}, {-4410, 5, 6}, {8820, 5, 4}, {-15804, 5, 3}, {14472, 5, 2}, {-7056, 5, 1}, {1440, 5, 0}, {14, 4, 10}, {-6, 4, 9}, {-322, 4, 8}, {758, 4, 7}, {404, 4, 6}, {-2464, 4, 5}, {808, 4, 4}, {3032, 4, 3}, {-2576, 4, 2}, {-96, 4, 1}, {448, 4, 0}, {-45, 3, 9}, {-9, 3, 8}, {1044, 3, 7}, {-2394, 3, 6}, {4788, 3, 4}, {-4176, 3, 3}, {72, 3, 2}, {720, 3, 1}, {104, 2, 8}, {-210, 2, 7}, {-720, 2, 6}, {2288, 2, 5}, {-1440, 2, 4}, {-840, 2, 3}, {832, 2, 2}, {-99, 1, 7}, {252, 1, 6}, {-504, 1, 4}, {396, 1, 3}, {36, 0, 6}, {-72, 0, 5}, {72, 0, 4}};

// Power ladders b^0..b^8 and c^0..c^10, enough for every table above.
struct PowerLadders {
    std::array<Rational, 9> bp;
    std::array<Rational, 11> cp;

    explicit PowerLadders(const ParamPoint& pt) {
        bp[0] = Rational(1);
        for (std::size_t i = 1; i < bp.size(); ++i) bp[i] = bp[i - 1] * pt.b;
        cp[0] = Rational(1);
        for (std::size_t i = 1; i < cp.size(); ++i) cp[i] = cp[i - 1] * pt.c;
    }

    Rational eval(std::span<const Term> terms) const {
        Rational acc(0);
        for (const Term& t : terms)
            acc += Rational(t.k) * bp[static_cast<std::size_t>(t.be)] *
                   cp[static_cast<std::size_t>(t.ce)];
        return acc;
    }
};

Rational factor_value(const PowerLadders& pw, int k) {
    switch (k) {
        case 1: return pw.eval(kQ1);
        case 2: return pw.eval(kQ2);
        case 3: return pw.eval(kQ3);
        case 4: return pw.eval(kQ4);
        case 5: return pw.eval(kQ5);
        case 6: return pw.eval(kQ6);
        default: throw domain_error("factor-index", "denominator factor index must be 1..6");
    }
}

// Throw unless every listed factor is nonzero; the error lists all that vanish.
void require_factors(const PowerLadders& pw, std::initializer_list<int> needed) {
    std::vector<std::string> vanished;
    for (int k : needed)
        if (factor_value(pw, k).is_zero()) vanished.push_back("Q" + std::to_string(k));
    if (!vanished.empty()) throw singularity_error(std::move(vanished));
}

}  // namespace

Rational denominator_factor(const ParamPoint& pt, int k) {
    return factor_value(PowerLadders(pt), k);
}

SingularityReport singularities(const ParamPoint& pt) {
    PowerLadders pw(pt);
    SingularityReport report;
    for (int k = 1; k <= 6; ++k)
        if (factor_value(pw, k).is_zero())
            report.vanished_factors.push_back("Q" + std::to_string(k));
    return report;
}

ELinear e_linear(const ParamPoint& pt) {
    PowerLadders pw(pt);
    require_factors(pw, {1});
    Rational q1 = pw.eval(kQ1);
    return ELinear{-pw.eval(kNumE10) / q1, -pw.eval(kNumE01) / q1,
                   -pw.eval(kNumE11) / q1};
}

ParamProfile e_full(const ParamPoint& pt) {
    PowerLadders pw(pt);
    require_factors(pw, {1, 2, 3, 4});
    ELinear lin = e_linear(pt);

    Rational q2sq = pw.eval(kQ2).pow_int(2);
    Rational q3sq = pw.eval(kQ3).pow_int(2);
    Rational q4 = pw.eval(kQ4);
    Rational den23 = q2sq * q3sq;
    Rational den234 = q4 * den23;
    Rational half_b = pt.b / 2;

    ParamProfile out;
    out.E10 = lin.E10;
    out.E01 = lin.E01;
    out.E11 = lin.E11;
    out.E20 = half_b * pw.eval(kE20FactorA) * pw.eval(kE20FactorB) / den23;
    out.E30 = pt.c * pt.b.pow_int(2) * (Rational(1) - pt.c) * (pt.c - 2) *
              pw.eval(kE30FactorA) * pw.eval(kE30FactorB) / den234;
    out.E02 = pw.eval(kN02) / (Rational(2) * den23);
    out.E03 = half_b * pw.eval(kNA) * pw.eval(kNB) / den234;
    out.E12 = pw.eval(kN12) / den234;
    out.E21_printed_q4variant = half_b * pw.eval(kN21) / den234;
    // The verbatim reading replaces Q4 by Q4 - 4c^3 in the denominator; that
    // variant can vanish where the profile itself is fine, so it stays optional.
    Rational verbatim_den = (q4 - Rational(4) * pw.cp[3]) * den23;
    if (verbatim_den.is_zero())
        out.E21_printed_verbatim = std::nullopt;
    else
        out.E21_printed_verbatim = half_b * pw.eval(kN21) / verbatim_den;
    out.L = Rational(1);
    return out;
}

namespace {

Rational compute_d1(const ParamPoint& pt, const PowerLadders& pw, D1Exponent mode) {
    Rational n1 = pw.eval(kN1);
    if (mode == D1Exponent::corrected)
        return Rational(-2, 27) * n1.pow_int(2) /
               (pw.eval(kQ5).pow_int(3) * pw.eval(kQ4).pow_int(2));
    // Diagnostic reading with the exponent taken as printed: the c^3 term of
    // Q4 becomes c^-3, which additionally requires c != 0.
    if (pt.c.is_zero())
        throw domain_error("division-by-zero", "verbatim D1 reading needs c != 0");
    Rational q4v = pw.eval(kQ4) + Rational(6) * pw.bp[2] * pw.cp[3] -
                   Rational(6) * pw.bp[2] / pw.cp[3];
    if (q4v.is_zero())
        throw domain_error("division-by-zero",
                           "verbatim D1 reading has a vanishing denominator");
    return Rational(-2, 27) * n1.pow_int(2) / (pw.eval(kQ5).pow_int(3) * q4v.pow_int(2));
}

Rational compute_d2(const PowerLadders& pw) {
    return Rational(-2, 27) * pw.bp[2] * pw.eval(kN2).pow_int(2) /
           (pw.eval(kQ6).pow_int(3) * pw.eval(kQ4).pow_int(2));
}

}  // namespace

DParams d_parameters(const ParamPoint& pt, D1Exponent mode) {
    PowerLadders pw(pt);
    require_factors(pw, {2, 3, 4, 5, 6});
    return DParams{compute_d1(pt, pw, mode), compute_d2(pw)};
}

Rational d_parameter(const ParamPoint& pt, BranchTag branch, D1Exponent mode) {
    PowerLadders pw(pt);
    if (branch == BranchTag::branch1) {
        require_factors(pw, {2, 3, 4, 5});
        return compute_d1(pt, pw, mode);
    }
    require_factors(pw, {2, 3, 4, 6});
    return compute_d2(pw);
}

CubicCoeffs<Rational> cubic_coeffs(const ParamPoint& pt, BranchTag branch) {
    ParamProfile p = e_full(pt);
    if (branch == BranchTag::branch1)
        return CubicCoeffs<Rational>{Rational(1), -p.E10, p.E20, -p.E30};
    return CubicCoeffs<Rational>{Rational(1), -p.E01, p.E02, -p.E03};
}

}  // namespace cuboid
