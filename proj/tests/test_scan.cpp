// Grid scan, integer implication search, and the built-in fixture registry:
// enumeration order, frozen spot values, worker-count invariance, serialized
// forms, and the fixture suite's behavior under its diagnostic switches.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "cuboid/fixtures.hpp"
#include "cuboid/scan.hpp"
#include "cuboid/search.hpp"

using namespace cuboid;

namespace {

Rational R(const char* s) { return Rational::parse(s).value(); }

std::vector<std::string> names_of_failures(const std::vector<FixtureOutcome>& rs) {
    std::vector<std::string> out;
    for (const auto& r : rs)
        if (!r.passed) out.push_back(r.name);
    return out;
}

std::string serialize(const std::vector<ScanRecord>& rs) {
    std::string out;
    for (const auto& r : rs) {
        out += scan_record_json(r);
        out += '\n';
    }
    return out;
}

}  // namespace

TEST_CASE("rational enumeration order is frozen") {
    const char* want[] = {"-1",   "0",    "1",   "-2",  "-1/2", "1/2", "2",  "-3",
                          "-3/2", "-2/3", "-1/3", "1/3", "2/3",  "3",   "3/2"};
    auto got = scan_rationals(3);
    REQUIRE(got.size() == 15);
    for (std::size_t k = 0; k < got.size(); ++k) CHECK(got[k] == R(want[k]));
    CHECK(scan_rationals(1).size() == 3);
    CHECK(scan_rationals(2).size() == 7);
}

TEST_CASE("height-1 grid records carry the frozen spot values") {
    auto records = run_scan(1);
    REQUIRE(records.size() == 9);

    // grid order is b-major over the same enumeration
    CHECK(records[0].b == R("-1"));
    CHECK(records[0].c == R("-1"));
    CHECK(records[8].b == R("1"));
    CHECK(records[8].c == R("1"));

    for (const auto& r : records) {
        CAPTURE(r.b.to_string());
        CAPTURE(r.c.to_string());
        CHECK(r.note.empty());
        CHECK_FALSE(r.positive);
        if (r.b == R("0") && r.c == R("1")) {
            REQUIRE(r.D1.has_value());
            CHECK(*r.D1 == R("-4/27"));
            REQUIRE(r.D2.has_value());
            CHECK(r.D2->is_zero());
            CHECK(r.rational_w1 == std::vector<Rational>{R("-3"), R("0"), R("3")});
            // both roots of the second sextic are degenerate, so no solve
            CHECK(r.rational_w2 == std::vector<Rational>{R("-1"), R("1")});
            CHECK(r.solved);
            CHECK(r.residual_max.is_zero());
        }
        if (r.b == R("1") && r.c == R("1")) {
            REQUIRE(r.D1.has_value());
            CHECK(*r.D1 == R("-1922/35937"));
            CHECK(r.rational_w1.empty());
            CHECK(r.rational_w2.empty());
            CHECK_FALSE(r.solved);
        }
        if (r.b == R("0") && r.c == R("0")) {
            CHECK(r.singular ==
                  std::vector<std::string>{"Q1", "Q3", "Q4", "Q5", "Q6"});
            CHECK_FALSE(r.D1.has_value());
            CHECK_FALSE(r.D2.has_value());
        }
        if (r.b == R("-1") && r.c == R("0"))
            CHECK(r.singular == std::vector<std::string>{"Q1", "Q2"});
    }
}

TEST_CASE("scan results are independent of the worker count") {
    std::string one = serialize(run_scan(2, 1));
    CHECK(serialize(run_scan(2, 4)) == one);
    CHECK(serialize(run_scan(2, 8)) == one);
    CHECK(std::count(one.begin(), one.end(), '\n') == 49);
}

TEST_CASE("serialized record forms are frozen") {
    CHECK(std::string(kScanCsvHeader) ==
          "b,c,singular,D1,D2,rational_w1,rational_w2,solved,positive,residual_max,note");
    ScanRecord r = scan_point(ParamPoint{R("0"), R("1")});
    CHECK(scan_record_json(r) ==
          "{\"b\":\"0\",\"c\":\"1\",\"singular\":[],\"D1\":\"-4/27\",\"D2\":\"0\","
          "\"rational_w1\":[\"-3\",\"0\",\"3\"],\"rational_w2\":[\"-1\",\"1\"],"
          "\"solved\":true,\"positive\":false,\"residual_max\":\"0\",\"note\":\"\"}");
    CHECK(scan_record_csv(r) == "0,1,,-4/27,0,-3;0;3,-1;1,true,false,0,\"\"");
    ScanRecord s = scan_point(ParamPoint{R("-1"), R("0")});
    CHECK(scan_record_csv(s) ==
          "-1,0,Q1;Q2,undefined,undefined,,,false,false,0,\"\"");
}

TEST_CASE("every exact solve in a desk-height scan verifies cleanly") {
    // at these heights every rational point of either sextic is also solvable
    // (or degenerate): no per-root trouble entries and no candidate flags
    int solved = 0;
    for (const auto& r : run_scan(3)) {
        CHECK(r.note.empty());
        if (r.solved) {
            ++solved;
            CHECK(r.residual_max.is_zero());
        }
    }
    CHECK(solved == 20);
}

TEST_CASE("small integer search is exhaustive and finds nothing") {
    ImplicationSearchReport rep = search_factor_implication(8);
    CHECK(rep.bound == 8);
    CHECK(rep.x_triples == 3);
    CHECK(rep.tuples_checked == 1536);
    CHECK(rep.factor_solutions == 0);
    CHECK(rep.counterexamples == 0);
    CHECK(rep.factor_witnesses.empty());
}

TEST_CASE("fixture suite passes by default and fails the advertised switches") {
    CHECK(names_of_failures(run_fixtures()).empty());

    FixtureOptions pv;
    pv.e21_source = E21Source::printed_verbatim;
    CHECK(names_of_failures(run_fixtures(pv)) ==
          std::vector<std::string>{"main-point-branch1", "coincidence",
                                   "profile-reconstruction"});

    FixtureOptions pq;
    pq.e21_source = E21Source::printed_q4variant;
    CHECK(names_of_failures(run_fixtures(pq)) ==
          std::vector<std::string>{"main-point-branch1", "coincidence",
                                   "profile-reconstruction"});

    FixtureOptions dv;
    dv.d1_exponent = D1Exponent::verbatim;
    CHECK(names_of_failures(run_fixtures(dv)) ==
          std::vector<std::string>{"discriminant-cross-check"});
}
