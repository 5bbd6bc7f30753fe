// Command-line surface over the library: profile evaluation, discriminant
// parameters, branch solving, parameter conversion, roundtrip and coincidence
// checks, tuple verification, grid scanning, and the built-in fixture suite.
//
// Output is machine-readable: one JSON object per line with a fixed key
// order, exact values as "num/den" strings, numeric values as 40-digit
// scientific strings; scans can emit CSV instead.  Exit codes are a stable
// contract: 0 success, 1 usage/parse error, 2 domain/singularity error,
// 3 fixture failures.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cuboid/branch.hpp"
#include "cuboid/cuboid_model.hpp"
#include "cuboid/errors.hpp"
#include "cuboid/fixtures.hpp"
#include "cuboid/parametrization.hpp"
#include "cuboid/scan.hpp"

namespace {

using cuboid::BigReal;
using cuboid::BranchTag;
using cuboid::Rational;
using json = nlohmann::ordered_json;

// Bad values discovered after flag parsing (malformed rationals and the
// like); mapped to the same exit code as flag errors.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational parse_rational(const std::string& text, const char* what) {
    auto v = Rational::parse(text);
    if (!v)
        throw usage_error(std::string("malformed rational for ") + what + ": " + text);
    return *v;
}

// Numeric-mode w: rational literals are honored exactly, anything else must
// parse as a decimal.
BigReal parse_real(const std::string& text, mpfr_prec_t bits) {
    if (auto q = Rational::parse(text)) return BigReal::from_rational(*q, bits);
    try {
        return BigReal::parse(text, bits);
    } catch (const cuboid::domain_error&) {
        throw usage_error("malformed numeric value: " + text);
    }
}

std::string fmt(const Rational& v) { return v.to_string(); }
std::string fmt(const BigReal& v) { return v.to_string(40); }

cuboid::E21Source e21_from_name(const std::string& name) {
    if (name == "printed-verbatim") return cuboid::E21Source::printed_verbatim;
    if (name == "printed-q4variant") return cuboid::E21Source::printed_q4variant;
    return cuboid::E21Source::derived;
}

BranchTag branch_from_number(int n) {
    return n == 2 ? BranchTag::branch2 : BranchTag::branch1;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

// Numeric checks certify about 28 fewer digits than the working precision
// (20 guard digits in the tolerance contract plus headroom lost to the
// conditioning of the root recovery): 1e-80 at the default 128.
BigReal reporting_tolerance(int precision) {
    return cuboid::tolerance_for(precision - 28);
}

template <typename S>
void fill_solution(json& j, const cuboid::BranchSolution<S>& s) {
    j["precision"] = s.precision_digits;
    j["x"] = {fmt(s.tuple.x1), fmt(s.tuple.x2), fmt(s.tuple.x3)};
    j["d"] = {fmt(s.tuple.d1), fmt(s.tuple.d2), fmt(s.tuple.d3)};
    j["L"] = fmt(s.tuple.L);
    j["e21_used"] = fmt(s.e21_used);
    j["e21_method"] = s.e21_method;
    j["used_pairing_fallback"] = s.used_pairing_fallback;
    j["pairing_ambiguous"] = s.pairing_ambiguous;
    json cr = json::array(), fr = json::array();
    for (const S& p : s.diagnostics.cuboid_residuals) cr.push_back(fmt(p));
    for (const S& f : s.diagnostics.factor_residuals) fr.push_back(fmt(f));
    j["cuboid_residuals"] = cr;
    j["factor_residuals"] = fr;
    j["profile_residual_max"] = fmt(s.diagnostics.profile_residual_max);
    j["sextic_residual"] = fmt(s.diagnostics.sextic_residual);
    j["residual_max"] = fmt(s.diagnostics.residual_max);
}

int cmd_profile(const std::string& b_text, const std::string& c_text) {
    cuboid::ParamPoint pt{parse_rational(b_text, "b"), parse_rational(c_text, "c")};
    json j;
    j["b"] = fmt(pt.b);
    j["c"] = fmt(pt.c);
    j["singular"] = cuboid::singularities(pt).vanished_factors;
    try {
        cuboid::ParamProfile p = cuboid::e_full(pt);
        cuboid::DerivedE21 d = cuboid::derive_e21(p);
        j["E10"] = fmt(p.E10);
        j["E01"] = fmt(p.E01);
        j["E11"] = fmt(p.E11);
        j["E20"] = fmt(p.E20);
        j["E30"] = fmt(p.E30);
        j["E02"] = fmt(p.E02);
        j["E03"] = fmt(p.E03);
        j["E12"] = fmt(p.E12);
        j["E21_derived"] = d.value ? json(fmt(*d.value)) : json(nullptr);
        j["E21_method"] = d.method;
        j["E21_printed_verbatim"] =
            p.E21_printed_verbatim ? json(fmt(*p.E21_printed_verbatim)) : json(nullptr);
        j["E21_printed_q4variant"] = fmt(p.E21_printed_q4variant);
        j["biquadratic"] = fmt(cuboid::biquadratic_residual(p.E10, p.E01, p.E11, p.L));
        j["L"] = fmt(p.L);
    } catch (const cuboid::singularity_error& e) {
        j["error"] = "singular-denominator";
        emit(j);
        std::cerr << "profile: " << e.what() << "\n";
        return 2;
    }
    emit(j);
    return 0;
}

int cmd_dparams(const std::string& b_text, const std::string& c_text, bool verbatim) {
    cuboid::ParamPoint pt{parse_rational(b_text, "b"), parse_rational(c_text, "c")};
    cuboid::D1Exponent mode =
        verbatim ? cuboid::D1Exponent::verbatim : cuboid::D1Exponent::corrected;
    json j;
    j["b"] = fmt(pt.b);
    j["c"] = fmt(pt.c);
    j["exponent"] = verbatim ? "verbatim" : "corrected";
    int defined = 0;
    for (BranchTag branch : {BranchTag::branch1, BranchTag::branch2}) {
        const char* key = branch == BranchTag::branch1 ? "D1" : "D2";
        try {
            j[key] = fmt(cuboid::d_parameter(pt, branch, mode));
            ++defined;
        } catch (const cuboid::singularity_error&) {
            j[key] = "undefined";
        }
    }
    emit(j);
    return defined == 0 ? 2 : 0;
}

int cmd_solve(const std::string& b_text, const std::string& c_text,
              const std::string& w_text, int branch_no, const std::string& mode,
              int precision, const std::string& e21, bool w_from_cubic) {
    if (w_text.empty() && !w_from_cubic)
        throw usage_error("solve: pass w or use --w-from-cubic");
    cuboid::ParamPoint pt{parse_rational(b_text, "b"), parse_rational(c_text, "c")};
    BranchTag branch = branch_from_number(branch_no);
    cuboid::SolveOptions opt{precision, e21_from_name(e21)};
    json j;
    j["b"] = fmt(pt.b);
    j["c"] = fmt(pt.c);
    j["branch"] = branch_no;
    j["mode"] = mode;
    if (mode == "exact") {
        Rational w = w_from_cubic ? cuboid::manufacture_w<Rational>(pt, branch, opt)
                                  : parse_rational(w_text, "w");
        auto s = branch == BranchTag::branch1
                     ? cuboid::solve_branch1<Rational>(pt, w, opt)
                     : cuboid::solve_branch2<Rational>(pt, w, opt);
        j["w"] = fmt(s.w);
        fill_solution(j, s);
    } else {
        BigReal w = w_from_cubic
                        ? cuboid::manufacture_w<BigReal>(pt, branch, opt)
                        : parse_real(w_text, cuboid::digits_to_bits(precision));
        auto s = branch == BranchTag::branch1
                     ? cuboid::solve_branch1<BigReal>(pt, w, opt)
                     : cuboid::solve_branch2<BigReal>(pt, w, opt);
        j["w"] = fmt(s.w);
        fill_solution(j, s);
    }
    emit(j);
    return 0;
}

int cmd_convert(const std::string& b_text, const std::string& c_text,
                const std::string& w_text, int branch_no, const std::string& mode,
                int precision, const std::string& e21) {
    cuboid::ParamPoint pt{parse_rational(b_text, "b"), parse_rational(c_text, "c")};
    cuboid::SolveOptions opt{precision, e21_from_name(e21)};
    json j;
    j["b"] = fmt(pt.b);
    j["c"] = fmt(pt.c);
    j["from_branch"] = branch_no;
    j["mode"] = mode;
    if (mode == "exact") {
        Rational w = parse_rational(w_text, "w");
        Rational out = branch_no == 2 ? cuboid::convert_w2_to_w1<Rational>(pt, w, opt)
                                      : cuboid::convert_w1_to_w2<Rational>(pt, w, opt);
        j["w"] = fmt(w);
        j["converted"] = fmt(out);
    } else {
        BigReal w = parse_real(w_text, cuboid::digits_to_bits(precision));
        BigReal out = branch_no == 2 ? cuboid::convert_w2_to_w1<BigReal>(pt, w, opt)
                                     : cuboid::convert_w1_to_w2<BigReal>(pt, w, opt);
        j["w"] = fmt(w);
        j["converted"] = fmt(out);
    }
    emit(j);
    return 0;
}

int cmd_roundtrip(const std::string& b_text, const std::string& c_text,
                  const std::string& w_text, int branch_no, const std::string& mode,
                  int precision, const std::string& e21) {
    cuboid::ParamPoint pt{parse_rational(b_text, "b"), parse_rational(c_text, "c")};
    BranchTag branch = branch_from_number(branch_no);
    cuboid::SolveOptions opt{precision, e21_from_name(e21)};
    json j;
    j["b"] = fmt(pt.b);
    j["c"] = fmt(pt.c);
    j["branch"] = branch_no;
    j["mode"] = mode;
    bool pass;
    if (mode == "exact") {
        Rational w = parse_rational(w_text, "w");
        Rational res = cuboid::roundtrip_check<Rational>(pt, w, branch, opt);
        pass = res.is_zero();
        j["w"] = fmt(w);
        j["residual"] = fmt(res);
        j["tolerance"] = "0";
    } else {
        BigReal w = parse_real(w_text, cuboid::digits_to_bits(precision));
        BigReal res = cuboid::roundtrip_check<BigReal>(pt, w, branch, opt);
        BigReal tol = reporting_tolerance(precision);
        pass = res < tol;
        j["w"] = fmt(w);
        j["residual"] = fmt(res);
        j["tolerance"] = fmt(tol);
    }
    j["pass"] = pass;
    emit(j);
    return pass ? 0 : 2;
}

int cmd_coincide(const std::string& b_text, const std::string& c_text,
                 const std::string& w_text, const std::string& mode, int precision,
                 const std::string& e21, bool w_from_cubic) {
    if (w_text.empty() && !w_from_cubic)
        throw usage_error("coincide: pass w1 or use --w-from-cubic");
    cuboid::ParamPoint pt{parse_rational(b_text, "b"), parse_rational(c_text, "c")};
    cuboid::SolveOptions opt{precision, e21_from_name(e21)};
    json j;
    j["b"] = fmt(pt.b);
    j["c"] = fmt(pt.c);
    j["mode"] = mode;
    bool pass;
    if (mode == "exact") {
        Rational w1 = w_from_cubic
                          ? cuboid::manufacture_w<Rational>(pt, BranchTag::branch1, opt)
                          : parse_rational(w_text, "w1");
        auto co = cuboid::coincidence_check<Rational>(pt, w1, opt);
        pass = co.max_abs.is_zero();
        j["w1"] = fmt(w1);
        j["x_difference"] = {fmt(co.x_difference[0]), fmt(co.x_difference[1]),
                             fmt(co.x_difference[2])};
        j["d_difference"] = {fmt(co.d_difference[0]), fmt(co.d_difference[1]),
                             fmt(co.d_difference[2])};
        j["max_abs"] = fmt(co.max_abs);
        j["tolerance"] = "0";
    } else {
        BigReal w1 = w_from_cubic
                         ? cuboid::manufacture_w<BigReal>(pt, BranchTag::branch1, opt)
                         : parse_real(w_text, cuboid::digits_to_bits(precision));
        auto co = cuboid::coincidence_check<BigReal>(pt, w1, opt);
        BigReal tol = reporting_tolerance(precision);
        pass = co.max_abs < tol;
        j["w1"] = fmt(w1);
        j["x_difference"] = {fmt(co.x_difference[0]), fmt(co.x_difference[1]),
                             fmt(co.x_difference[2])};
        j["d_difference"] = {fmt(co.d_difference[0]), fmt(co.d_difference[1]),
                             fmt(co.d_difference[2])};
        j["max_abs"] = fmt(co.max_abs);
        j["tolerance"] = fmt(tol);
    }
    j["pass"] = pass;
    emit(j);
    return pass ? 0 : 2;
}

int cmd_verify(const std::vector<std::string>& parts) {
    cuboid::CuboidTuple<Rational> t{
        parse_rational(parts[0], "x1"), parse_rational(parts[1], "x2"),
        parse_rational(parts[2], "x3"), parse_rational(parts[3], "d1"),
        parse_rational(parts[4], "d2"), parse_rational(parts[5], "d3"),
        parse_rational(parts[6], "L")};
    auto pr = cuboid::cuboid_residuals(t);
    auto fr = cuboid::factor_residuals(t);
    cuboid::ImplicationReport rep = cuboid::factor_cuboid_implication(t);
    json j;
    j["x"] = {fmt(t.x1), fmt(t.x2), fmt(t.x3)};
    j["d"] = {fmt(t.d1), fmt(t.d2), fmt(t.d3)};
    j["L"] = fmt(t.L);
    json pj = json::array(), fj = json::array();
    for (const Rational& p : pr) pj.push_back(fmt(p));
    for (const Rational& f : fr) fj.push_back(fmt(f));
    j["cuboid_residuals"] = pj;
    j["factor_residuals"] = fj;
    j["factor_zero"] = rep.factor_zero;
    j["positive"] = rep.positive;
    j["cuboid_zero"] = rep.cuboid_zero;
    j["implication_holds"] = rep.implication_holds;
    emit(j);
    return 0;
}

int cmd_scan(long height, int workers, const std::string& output) {
    std::vector<cuboid::ScanRecord> records = cuboid::run_scan(height, workers);
    if (output == "csv") {
        std::cout << cuboid::kScanCsvHeader << "\n";
        for (const auto& r : records) std::cout << cuboid::scan_record_csv(r) << "\n";
    } else {
        for (const auto& r : records) std::cout << cuboid::scan_record_json(r) << "\n";
    }
    return 0;
}

int cmd_fixtures(int precision, const std::string& e21, bool d1_verbatim) {
    cuboid::FixtureOptions opt;
    opt.precision_digits = precision;
    opt.e21_source = e21_from_name(e21);
    opt.d1_exponent =
        d1_verbatim ? cuboid::D1Exponent::verbatim : cuboid::D1Exponent::corrected;
    int failures = 0;
    for (const cuboid::FixtureOutcome& r : cuboid::run_fixtures(opt)) {
        json j;
        j["name"] = r.name;
        j["passed"] = r.passed;
        j["detail"] = r.detail;
        emit(j);
        if (!r.passed) ++failures;
    }
    if (failures > 0) {
        std::cerr << "fixtures: " << failures << " failure(s)\n";
        return 3;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tools for the perfect-cuboid factor equations"};
    app.require_subcommand(1);
    int rc = 0;

    std::string b_text, c_text, w_text;
    std::vector<std::string> tuple_text;
    int branch_no = 1, precision = 128, workers = 1;
    long height = 1;
    std::string mode = "exact", e21 = "derived", output = "json";
    bool w_from_cubic = false, d1_verbatim = false;

    const auto mode_check = CLI::IsMember({"exact", "numeric"});
    const auto e21_check =
        CLI::IsMember({"derived", "printed-verbatim", "printed-q4variant"});

    auto add_point = [&](CLI::App* sub) {
        sub->add_option("b", b_text, "first parameter (rational)")->required();
        sub->add_option("c", c_text, "second parameter (rational)")->required();
    };
    auto add_mode = [&](CLI::App* sub) {
        sub->add_option("--mode", mode, "scalar domain")
            ->check(mode_check)
            ->capture_default_str();
        sub->add_option("--precision", precision, "working decimal digits (numeric mode)")
            ->check(CLI::Range(64, 100000))
            ->capture_default_str();
        sub->add_option("--e21-source", e21, "which E21 value branch 1 consumes")
            ->check(e21_check)
            ->capture_default_str();
    };

    CLI::App* profile =
        app.add_subcommand("profile", "E-profile and its diagnostics at a point");
    add_point(profile);
    profile->callback([&] { rc = cmd_profile(b_text, c_text); });

    CLI::App* dparams =
        app.add_subcommand("dparams", "reduced-cubic invariants D1, D2 at a point");
    add_point(dparams);
    dparams->add_flag("--d1-exponent-verbatim", d1_verbatim,
                      "use the discrepant printed exponent in the D1 closed form");
    dparams->callback([&] { rc = cmd_dparams(b_text, c_text, d1_verbatim); });

    CLI::App* solve =
        app.add_subcommand("solve", "solve one branch at a point and sextic value");
    add_point(solve);
    solve->add_option("w", w_text, "sextic parameter value");
    solve->add_option("--branch", branch_no, "which branch to solve")
        ->check(CLI::Range(1, 2))
        ->capture_default_str();
    solve->add_flag("--w-from-cubic", w_from_cubic,
                    "manufacture an on-surface w from the branch cubic's own roots");
    add_mode(solve);
    solve->callback([&] {
        rc = cmd_solve(b_text, c_text, w_text, branch_no, mode, precision, e21,
                       w_from_cubic);
    });

    CLI::App* convert =
        app.add_subcommand("convert", "convert the sextic parameter between branches");
    add_point(convert);
    convert->add_option("w", w_text, "sextic parameter value")->required();
    convert->add_option("--branch", branch_no, "branch the given w belongs to")
        ->check(CLI::Range(1, 2))
        ->capture_default_str();
    add_mode(convert);
    convert->callback([&] {
        rc = cmd_convert(b_text, c_text, w_text, branch_no, mode, precision, e21);
    });

    CLI::App* roundtrip = app.add_subcommand(
        "roundtrip", "convert there and back, reporting the residual");
    add_point(roundtrip);
    roundtrip->add_option("w", w_text, "sextic parameter value")->required();
    roundtrip->add_option("--branch", branch_no, "branch the given w belongs to")
        ->check(CLI::Range(1, 2))
        ->capture_default_str();
    add_mode(roundtrip);
    roundtrip->callback([&] {
        rc = cmd_roundtrip(b_text, c_text, w_text, branch_no, mode, precision, e21);
    });

    CLI::App* coincide = app.add_subcommand(
        "coincide", "compare the branch-1 tuple against branch 2 at the converted w");
    add_point(coincide);
    coincide->add_option("w1", w_text, "branch-1 sextic parameter value");
    coincide->add_flag("--w-from-cubic", w_from_cubic,
                       "manufacture an on-surface w1 from the branch-1 cubic");
    add_mode(coincide);
    coincide->callback([&] {
        rc = cmd_coincide(b_text, c_text, w_text, mode, precision, e21, w_from_cubic);
    });

    CLI::App* verify = app.add_subcommand(
        "verify", "all twelve residuals and the implication probe for a tuple");
    verify->add_option("tuple", tuple_text, "x1 x2 x3 d1 d2 d3 L (rationals)")
        ->expected(7);
    verify->callback([&] { rc = cmd_verify(tuple_text); });

    CLI::App* scan = app.add_subcommand(
        "scan", "evaluate every parameter point up to a height bound");
    scan->add_option("--height", height, "height bound for both coordinates")
        ->check(CLI::Range(1L, 1000000L))
        ->capture_default_str();
    scan->add_option("--workers", workers, "worker threads")
        ->check(CLI::Range(1, 256))
        ->capture_default_str();
    scan->add_option("--output", output, "record format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    scan->callback([&] { rc = cmd_scan(height, workers, output); });

    CLI::App* fixtures =
        app.add_subcommand("fixtures", "run the built-in named fixture suite");
    fixtures->add_option("--precision", precision, "working decimal digits")
        ->check(CLI::Range(64, 100000))
        ->capture_default_str();
    fixtures->add_option("--e21-source", e21, "which E21 value branch 1 consumes")
        ->check(e21_check)
        ->capture_default_str();
    fixtures->add_flag("--d1-exponent-verbatim", d1_verbatim,
                       "use the discrepant printed exponent in the D1 closed form");
    fixtures->callback([&] { rc = cmd_fixtures(precision, e21, d1_verbatim); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const cuboid::singularity_error& e) {
        std::cerr << "error [singular-denominator]: " << e.what() << "\n";
        return 2;
    } catch (const cuboid::domain_error& e) {
        std::cerr << "error [" << e.condition() << "]: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
