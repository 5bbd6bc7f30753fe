#pragma once

// Exhaustive exact scan of the (b, c) parameter grid: every rational whose
// numerator and denominator magnitudes stay within a height bound, in a
// canonical deterministic order.  Each grid point gets a self-contained
// record: which denominator factors vanish, both sextic D-parameters, the
// rational roots of both sextics, and the outcome of exact branch solves at
// every usable root.  An all-positive verified tuple would be the discovery
// the scan exists for; it is flagged loudly but nothing at desk heights is
// expected to produce one.

#include <string>
#include <vector>

#include "cuboid/parametrization.hpp"
#include "cuboid/rational.hpp"

namespace cuboid {

struct ScanRecord {
    Rational b, c;
    std::vector<std::string> singular;  // vanished denominator factors, if any
    std::optional<Rational> D1, D2;     // empty when the branch is singular here
    std::vector<Rational> rational_w1;  // distinct rational sextic roots, ascending
    std::vector<Rational> rational_w2;
    bool solved = false;    // at least one exact branch solve succeeded
    bool positive = false;  // some verified tuple had all components positive
    Rational residual_max;  // worst residual over the successful solves
    std::string note;       // candidate flag and/or per-root failure summaries
};

// All rationals of height <= bound, ascending height, then numerator, then
// denominator.  The scan grid is this list crossed with itself (b outer).
std::vector<Rational> scan_rationals(long height_bound);

// The full per-point evaluation; pure, no shared state.
ScanRecord scan_point(const ParamPoint& pt);

// Evaluate the whole grid, optionally on several worker threads.  Records
// come back in canonical grid order no matter how many workers ran.
std::vector<ScanRecord> run_scan(long height_bound, int workers = 1);

// Serialization: one JSON object per line, or CSV rows under a fixed header.
extern const char* const kScanCsvHeader;
std::string scan_record_json(const ScanRecord& r);
std::string scan_record_csv(const ScanRecord& r);

}  // namespace cuboid
