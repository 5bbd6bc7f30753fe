// Acceptance gate: seven end-to-end checks, one pass/fail line each, covering
// the library's headline claims — the polynomial identity behind the profile,
// the cubic/sextic transformation loop, the frozen main-point values, the
// degenerate family, the numeric two-branch coincidence, the small integer
// counterexample search, and the determinism of the command-line scan.
// Exits with the number of failed checks.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cuboid/branch.hpp"
#include "cuboid/cubic.hpp"
#include "cuboid/cuboid_model.hpp"
#include "cuboid/errors.hpp"
#include "cuboid/fixtures.hpp"
#include "cuboid/parametrization.hpp"
#include "cuboid/scan.hpp"
#include "cuboid/search.hpp"

using namespace cuboid;

namespace {

struct Criterion {
    const char* label;
    std::function<bool(std::string&)> run;  // fills a failure note on false
};

// Errors that mark a randomly drawn point as outside a construction's domain
// rather than as a defect.
bool out_of_domain(const std::string& condition) {
    return condition == "singular-denominator" || condition == "w-manufacture" ||
           condition == "degenerate-deviation" || condition == "w-degenerate" ||
           condition == "conversion-denominator" ||
           condition == "singular-linear-system" || condition == "admissibility";
}

bool criterion_biquadratic(std::string& note) {
    std::mt19937 rng(1001);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 50);
    int checked = 0;
    while (checked < 1000) {
        ParamPoint pt{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
        try {
            ELinear e = e_linear(pt);
            Rational res = biquadratic_residual(e.E10, e.E01, e.E11, Rational(1));
            if (!res.is_zero()) {
                note = "nonzero residual " + res.to_string() + " at b=" +
                       pt.b.to_string() + ", c=" + pt.c.to_string();
                return false;
            }
            ++checked;
        } catch (const singularity_error&) {
        }
    }
    return true;
}

bool criterion_transformation_loop(std::string& note) {
    std::mt19937 rng(1002);
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 30);
    const Rational zero(0);
    int checked = 0;
    while (checked < 500) {
        Rational r1(num(rng), den(rng)), r2(num(rng), den(rng)), r3(num(rng), den(rng));
        auto u = deviations(r1, r2, r3);
        if (u[0].is_zero() || u[1].is_zero() || u[2].is_zero()) continue;
        CubicCoeffs<Rational> A = cubic_from_roots(r1, r2, r3);
        Rational D = reduce_D(A, zero);
        if (D != D_from_roots(r1, r2, r3, zero)) {
            note = "the two discriminant routes disagree at (" + r1.to_string() +
                   ", " + r2.to_string() + ", " + r3.to_string() + ")";
            return false;
        }
        auto table = sextic_roots_from_cubic_roots(r1, r2, r3, zero);
        const std::array<Rational, 3> roots{r1, r2, r3};
        for (const auto& entry : table) {
            if (!sextic_residual(D, entry.w).is_zero()) {
                note = "transform value off its own sextic at w=" + entry.w.to_string();
                return false;
            }
            auto rec = cubic_roots_from_w(A, entry.w, zero);
            for (int k = 0; k < 3; ++k) {
                if (rec[static_cast<std::size_t>(k)] !=
                    roots[static_cast<std::size_t>(entry.sigma.image[static_cast<std::size_t>(k)] - 1)]) {
                    note = "recovered triple deviates from the recorded reordering at w=" +
                           entry.w.to_string();
                    return false;
                }
            }
        }
        if (w_from_roots(r1, r2, r3, zero) != table[0].w) {
            note = "direct first transform disagrees with the table";
            return false;
        }
        ++checked;
    }
    return true;
}

bool criterion_main_point(std::string& note) {
    const ParamPoint pt{Rational(1), Rational(1)};
    ParamProfile p = e_full(pt);
    struct Want {
        const char* name;
        const Rational* got;
        Rational want;
    };
    const Want wants[] = {
        {"E10", &p.E10, Rational(1, 2)},  {"E01", &p.E01, Rational(-1, 2)},
        {"E11", &p.E11, Rational(1, 2)},  {"E20", &p.E20, Rational(-3, 8)},
        {"E30", &p.E30, Rational(0)},     {"E02", &p.E02, Rational(-7, 8)},
        {"E03", &p.E03, Rational(3, 8)},  {"E12", &p.E12, Rational(-1)},
    };
    for (const Want& w : wants) {
        if (*w.got != w.want) {
            note = std::string(w.name) + " = " + w.got->to_string() + ", want " +
                   w.want.to_string();
            return false;
        }
    }
    DParams d = d_parameters(pt);
    if (d.D1 != Rational(-1922, 35937) || d.D2 != Rational(-18050, 328509)) {
        note = "D values off: " + d.D1.to_string() + ", " + d.D2.to_string();
        return false;
    }
    if (d.D1 != reduce_D(cubic_coeffs(pt, BranchTag::branch1), Rational(0)) ||
        d.D2 != reduce_D(cubic_coeffs(pt, BranchTag::branch2), Rational(0))) {
        note = "closed forms disagree with the cubic reductions";
        return false;
    }
    DerivedE21 e21 = derive_e21(p);
    if (!e21.value || *e21.value != Rational(3, 8)) {
        note = "derived E21 is not 3/8";
        return false;
    }
    // the printed reading must be present and visibly inconsistent — that
    // mismatch is the documented diagnostic, not a defect
    if (!p.E21_printed_verbatim || *p.E21_printed_verbatim == *e21.value) {
        note = "printed E21 reading missing or silently agreeing";
        return false;
    }
    return true;
}

bool criterion_degenerate_family(std::string& note) {
    int checked = 0;
    for (const Rational& c : scan_rationals(7)) {
        if (checked >= 50) break;
        if (c.is_zero()) continue;
        const ParamPoint pt{Rational(0), c};
        try {
            if (d_parameter(pt, BranchTag::branch1) != Rational(-4, 27)) {
                note = "first-branch D off at c=" + c.to_string();
                return false;
            }
            BranchSolution<Rational> s = solve_branch1<Rational>(pt, Rational(0));
            bool x_ok = s.tuple.x1.is_zero() && s.tuple.x2.is_zero() &&
                        s.tuple.x3 == Rational(1);
            std::array<Rational, 3> ds{s.tuple.d1, s.tuple.d2, s.tuple.d3};
            std::sort(ds.begin(), ds.end());
            bool d_ok = ds[0] == Rational(-1) && ds[1].is_zero() && ds[2] == Rational(1);
            if (!x_ok || !d_ok) {
                note = "unexpected tuple at c=" + c.to_string();
                return false;
            }
            for (const Rational& f : s.diagnostics.factor_residuals) {
                if (!f.is_zero()) {
                    note = "nonzero factor residual at c=" + c.to_string();
                    return false;
                }
            }
            try {
                (void)solve_branch2<Rational>(pt, Rational(3));
                note = "second branch unexpectedly solved at c=" + c.to_string();
                return false;
            } catch (const domain_error& e) {
                if (e.condition() != "admissibility") {
                    note = "second branch failed with " + e.condition() + " at c=" +
                           c.to_string();
                    return false;
                }
            }
            ++checked;
        } catch (const singularity_error&) {
        }
    }
    if (checked < 50) {
        note = "only " + std::to_string(checked) + " usable family members";
        return false;
    }
    return true;
}

bool criterion_two_presentations(std::string& note) {
    std::mt19937 rng(1005);
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 20);
    const SolveOptions opt{128, E21Source::derived};
    const BigReal bound = tolerance_for(100);  // 1e-80
    int checked = 0, attempts = 0;
    while (checked < 100) {
        if (++attempts > 20000) {
            note = "only " + std::to_string(checked) + " admissible points in " +
                   std::to_string(attempts) + " draws";
            return false;
        }
        ParamPoint pt{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
        try {
            BigReal w1 = manufacture_w<BigReal>(pt, BranchTag::branch1, opt);
            BigReal w2 = manufacture_w<BigReal>(pt, BranchTag::branch2, opt);
            if (!(roundtrip_check<BigReal>(pt, w1, BranchTag::branch1, opt) < bound) ||
                !(roundtrip_check<BigReal>(pt, w2, BranchTag::branch2, opt) < bound)) {
                note = "roundtrip above bound at b=" + pt.b.to_string() + ", c=" +
                       pt.c.to_string();
                return false;
            }
            CoincidenceReport<BigReal> co = coincidence_check<BigReal>(pt, w1, opt);
            if (!(co.max_abs < bound)) {
                note = "coincidence above bound at b=" + pt.b.to_string() + ", c=" +
                       pt.c.to_string();
                return false;
            }
            ++checked;
        } catch (const domain_error& e) {
            if (!out_of_domain(e.condition())) {
                note = "unexpected error [" + e.condition() + "] at b=" +
                       pt.b.to_string() + ", c=" + pt.c.to_string();
                return false;
            }
        }
    }
    return true;
}

bool criterion_integer_search(std::string& note) {
    ImplicationSearchReport rep = search_factor_implication(20);
    if (rep.counterexamples != 0) {
        note = std::to_string(rep.counterexamples) +
               " counterexample(s) — escalate immediately";
        return false;
    }
    if (rep.factor_solutions != 0) {
        note = std::to_string(rep.factor_solutions) +
               " all-positive factor solution(s) — escalate immediately";
        return false;
    }
    note = "searched " + std::to_string(rep.tuples_checked) + " tuples over " +
           std::to_string(rep.x_triples) + " edge triples, 0 candidates";
    return true;
}

std::string capture(const std::string& cmd, int& exit_code) {
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return {};
    }
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

std::string golden(const char* name) {
    std::ifstream f(std::string(GOLDEN_DIR) + "/" + name, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

bool criterion_cli_determinism(std::string& note) {
    const std::string bin = CLI_BIN;
    std::string reference;
    for (int run = 0; run < 3; ++run) {
        for (int workers : {1, 4, 8}) {
            int code = 0;
            std::string out = capture(
                bin + " scan --height 3 --workers " + std::to_string(workers), code);
            if (code != 0) {
                note = "scan exited " + std::to_string(code);
                return false;
            }
            if (reference.empty()) reference = out;
            if (out != reference) {
                note = "scan output varied (run " + std::to_string(run) + ", " +
                       std::to_string(workers) + " workers)";
                return false;
            }
        }
    }
    struct Gold {
        const char* args;
        const char* file;
    };
    const Gold golds[] = {
        {" profile 1 1", "profile_1_1.jsonl"},
        {" solve 0 2 0 --branch 1", "solve_0_2_0_b1.jsonl"},
        {" verify 0 0 1 -1 1 0 1", "verify_degenerate.jsonl"},
    };
    for (const Gold& g : golds) {
        int code = 0;
        std::string out = capture(bin + g.args, code);
        if (code != 0 || out != golden(g.file)) {
            note = std::string("golden mismatch for`") + (g.args + 1) + "`";
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"biquadratic identity exactly zero on 1000 random points", criterion_biquadratic},
        {"cubic/sextic transformation loop exact on 500 random triples",
         criterion_transformation_loop},
        {"frozen values and erratum diagnostic at the main point", criterion_main_point},
        {"degenerate family collapses identically for 50 members",
         criterion_degenerate_family},
        {"both branch presentations coincide below 1e-80 on 100 random points",
         criterion_two_presentations},
        {"integer search to bound 20 finds no counterexample", criterion_integer_search},
        {"scan determinism and golden command transcripts", criterion_cli_determinism},
    };

    int failures = 0;
    int index = 0;
    for (const Criterion& c : criteria) {
        ++index;
        auto begin = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("threw: ") + e.what();
        }
        auto seconds = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - begin)
                           .count();
        std::printf("[%s] %d. %s (%.2f s)\n", ok ? "PASS" : "FAIL", index, c.label,
                    seconds);
        if (!ok) ++failures;
        if (!detail.empty()) std::printf("        %s\n", detail.c_str());
    }
    if (failures > 0) std::printf("%d of 7 criteria failed\n", failures);
    return failures;
}
