#include "cuboid/scan.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "json.hpp"

#include "cuboid/branch.hpp"
#include "cuboid/cubic.hpp"
#include "cuboid/cuboid_model.hpp"
#include "cuboid/errors.hpp"
#include "cuboid/int_polynomial.hpp"

namespace cuboid {

std::vector<Rational> scan_rationals(long height_bound) {
    // ascending height, then numerator, then denominator; lowest terms only
    std::vector<Rational> out;
    for (long h = 1; h <= height_bound; ++h) {
        std::vector<Rational> layer;
        for (long num = -h; num <= h; ++num) {
            for (long den = 1; den <= h; ++den) {
                Rational r(num, den);
                if (r.height() == h) layer.push_back(r);
            }
        }
        std::sort(layer.begin(), layer.end(), [](const Rational& a, const Rational& b) {
            if (a.numerator() != b.numerator()) return a.numerator() < b.numerator();
            return a.denominator() < b.denominator();
        });
        layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

namespace {

// distinct rational roots of the cleared sextic for a given D, ascending
std::vector<Rational> rational_sextic_roots(const Rational& D) {
    std::vector<Rational> roots = rational_roots(cleared_sextic(D));
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

void attempt_solves(const ParamPoint& pt, BranchTag branch,
                    const std::vector<Rational>& ws, ScanRecord& rec,
                    std::vector<std::string>& troubles) {
    for (const Rational& w : ws) {
        if (w == Rational(1) || w == Rational(-1)) continue;  // degenerate by fiat
        try {
            BranchSolution<Rational> s = branch == BranchTag::branch1
                                             ? solve_branch1<Rational>(pt, w)
                                             : solve_branch2<Rational>(pt, w);
            rec.solved = true;
            if (s.diagnostics.residual_max > rec.residual_max)
                rec.residual_max = s.diagnostics.residual_max;
            ImplicationReport probe = factor_cuboid_implication(s.tuple);
            if (probe.positive) rec.positive = true;
        } catch (const domain_error& e) {
            troubles.push_back("branch " + std::to_string(branch_index(branch)) +
                               " w=" + w.to_string() + ": " + e.condition());
        }
    }
}

}  // namespace

ScanRecord scan_point(const ParamPoint& pt) {
    ScanRecord rec;
    rec.b = pt.b;
    rec.c = pt.c;
    rec.singular = singularities(pt).vanished_factors;

    std::vector<std::string> troubles;
    for (BranchTag branch : {BranchTag::branch1, BranchTag::branch2}) {
        std::optional<Rational>& D =
            branch == BranchTag::branch1 ? rec.D1 : rec.D2;
        std::vector<Rational>& ws =
            branch == BranchTag::branch1 ? rec.rational_w1 : rec.rational_w2;
        try {
            D = d_parameter(pt, branch);
        } catch (const singularity_error&) {
            continue;  // this branch's formulas are singular here; recorded above
        }
        ws = rational_sextic_roots(*D);
        attempt_solves(pt, branch, ws, rec, troubles);
    }

    std::string joined;
    for (const std::string& t : troubles) {
        if (!joined.empty()) joined += "; ";
        joined += t;
    }
    if (rec.positive) {
        rec.note = "PERFECT CUBOID CANDIDATE";
        if (!joined.empty()) rec.note += "; " + joined;
    } else {
        rec.note = joined;
    }
    return rec;
}

std::vector<ScanRecord> run_scan(long height_bound, int workers) {
    const std::vector<Rational> values = scan_rationals(height_bound);
    std::vector<ParamPoint> grid;
    grid.reserve(values.size() * values.size());
    for (const Rational& b : values)
        for (const Rational& c : values) grid.push_back(ParamPoint{b, c});

    std::vector<ScanRecord> records(grid.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < grid.size(); ++i) records[i] = scan_point(grid[i]);
        return records;
    }
    std::atomic<std::size_t> next{0};
    auto drain = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= grid.size()) return;
            records[i] = scan_point(grid[i]);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(drain);
    for (std::thread& t : pool) t.join();
    return records;
}

const char* const kScanCsvHeader =
    "b,c,singular,D1,D2,rational_w1,rational_w2,solved,positive,residual_max,note";

namespace {

std::string join_semicolon(const std::vector<std::string>& items) {
    std::string out;
    for (const std::string& s : items) {
        if (!out.empty()) out += ';';
        out += s;
    }
    return out;
}

std::vector<std::string> as_strings(const std::vector<Rational>& vs) {
    std::vector<std::string> out;
    out.reserve(vs.size());
    for (const Rational& v : vs) out.push_back(v.to_string());
    return out;
}

std::string d_string(const std::optional<Rational>& D) {
    return D ? D->to_string() : "undefined";
}

}  // namespace

std::string scan_record_json(const ScanRecord& r) {
    nlohmann::ordered_json j;
    j["b"] = r.b.to_string();
    j["c"] = r.c.to_string();
    j["singular"] = r.singular;
    j["D1"] = d_string(r.D1);
    j["D2"] = d_string(r.D2);
    j["rational_w1"] = as_strings(r.rational_w1);
    j["rational_w2"] = as_strings(r.rational_w2);
    j["solved"] = r.solved;
    j["positive"] = r.positive;
    j["residual_max"] = r.residual_max.to_string();
    j["note"] = r.note;
    return j.dump();
}

std::string scan_record_csv(const ScanRecord& r) {
    std::string line = r.b.to_string() + ',' + r.c.to_string() + ',' +
                       join_semicolon(r.singular) + ',' + d_string(r.D1) + ',' +
                       d_string(r.D2) + ',' + join_semicolon(as_strings(r.rational_w1)) +
                       ',' + join_semicolon(as_strings(r.rational_w2)) + ',' +
                       (r.solved ? "true" : "false") + ',' +
                       (r.positive ? "true" : "false") + ',' + r.residual_max.to_string() +
                       ",\"" + r.note + '"';
    return line;
}

}  // namespace cuboid
