#pragma once

// Exhaustive falsification probe for the factor-to-cuboid implication: every
// all-positive integer tuple within a bound whose eight factor residuals all
// vanish must also have vanishing cuboid residuals.  The search enumerates
// candidate tuples directly (sorted x-triple symmetry class, edge and
// diagonal components and the long diagonal all within the bound), collects
// any factor solutions, and cross-checks each against the exact implication
// probe.  A counterexample would falsify the implication; none is expected.

#include <vector>

#include "cuboid/cuboid_model.hpp"
#include "cuboid/rational.hpp"

namespace cuboid {

struct ImplicationSearchReport {
    long bound = 0;                  // max component magnitude, including L
    long long x_triples = 0;         // x1 <= x2 <= x3 classes admitting an integer L
    long long tuples_checked = 0;    // including the d-side assignments
    long long factor_solutions = 0;  // all eight factor residuals vanished
    long long counterexamples = 0;   // ...but some cuboid residual did not
    std::vector<CuboidTuple<Rational>> factor_witnesses;  // expected empty
};

// Exhaustive over 1 <= x1 <= x2 <= x3 <= bound (the factor equations are
// symmetric under simultaneously permuting edge/diagonal pairs, so sorted
// x covers every class), 1 <= d_i <= bound, L = sqrt(x1^2+x2^2+x3^2) <= bound
// when integral.
ImplicationSearchReport search_factor_implication(long bound);

}  // namespace cuboid
