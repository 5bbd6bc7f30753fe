#include "cuboid/search.hpp"

#include <cstdint>

namespace cuboid {

namespace {

// exact integer square root test for small values
bool integer_sqrt(std::int64_t n, std::int64_t& root) {
    std::int64_t r = 0;
    while ((r + 1) * (r + 1) <= n) ++r;
    root = r;
    return r * r == n;
}

}  // namespace

ImplicationSearchReport search_factor_implication(long bound) {
    ImplicationSearchReport rep;
    rep.bound = bound;
    const std::int64_t B = bound;

    for (std::int64_t x1 = 1; x1 <= B; ++x1) {
        for (std::int64_t x2 = x1; x2 <= B; ++x2) {
            for (std::int64_t x3 = x2; x3 <= B; ++x3) {
                const std::int64_t s = x1 * x1 + x2 * x2 + x3 * x3;
                std::int64_t L;
                if (!integer_sqrt(s, L) || L > B) continue;  // f1 pins L
                ++rep.x_triples;
                for (std::int64_t d1 = 1; d1 <= B; ++d1) {
                    const std::int64_t p1 = x2 * x2 + x3 * x3 - d1 * d1;
                    for (std::int64_t d2 = 1; d2 <= B; ++d2) {
                        const std::int64_t p2 = x3 * x3 + x1 * x1 - d2 * d2;
                        for (std::int64_t d3 = 1; d3 <= B; ++d3) {
                            const std::int64_t p3 = x1 * x1 + x2 * x2 - d3 * d3;
                            ++rep.tuples_checked;
                            if (p1 + p2 + p3 != 0) continue;
                            if (d1 * p1 + d2 * p2 + d3 * p3 != 0) continue;
                            if (x1 * p1 + x2 * p2 + x3 * p3 != 0) continue;
                            if (d1 * d1 * p1 + d2 * d2 * p2 + d3 * d3 * p3 != 0)
                                continue;
                            if (x1 * x1 * p1 + x2 * x2 * p2 + x3 * x3 * p3 != 0)
                                continue;
                            if (x1 * d1 * p1 + x2 * d2 * p2 + x3 * d3 * p3 != 0)
                                continue;
                            if (x1 * x1 * d1 * d1 * p1 + x2 * x2 * d2 * d2 * p2 +
                                    x3 * x3 * d3 * d3 * p3 !=
                                0)
                                continue;
                            // all eight factor equations hold on an
                            // all-positive tuple; cross-check the implication
                            // with the exact probe
                            ++rep.factor_solutions;
                            CuboidTuple<Rational> t{
                                Rational(x1), Rational(x2), Rational(x3),
                                Rational(d1), Rational(d2), Rational(d3),
                                Rational(L)};
                            rep.factor_witnesses.push_back(t);
                            ImplicationReport probe = factor_cuboid_implication(t);
                            if (!probe.factor_zero || !probe.cuboid_zero ||
                                !probe.implication_holds)
                                ++rep.counterexamples;
                        }
                    }
                }
            }
        }
    }
    return rep;
}

}  // namespace cuboid
