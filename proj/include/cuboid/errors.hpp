#pragma once

// Error taxonomy for the library.  Mathematical precondition failures are
// values of domain_error with a stable machine-readable condition tag; the
// CLI maps them to exit code 2.  Vanishing parametrization denominators get
// their own subclass that names every vanished factor, because scan logs must
// distinguish "the formulas are singular here" from "something went wrong".

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cuboid {

class domain_error : public std::runtime_error {
public:
    domain_error(std::string condition, const std::string& detail)
        : std::runtime_error(detail), condition_(std::move(condition)) {}

    // Stable tag, e.g. "w-degenerate", "off-sextic", "admissibility",
    // "singular-linear-system", "division-by-zero".
    const std::string& condition() const noexcept { return condition_; }

private:
    std::string condition_;
};

class singularity_error : public domain_error {
public:
    explicit singularity_error(std::vector<std::string> vanished)
        : domain_error("singular-denominator", describe(vanished)),
          vanished_(std::move(vanished)) {}

    // Every vanished denominator factor, by name (Q1..Q6), not only the first.
    const std::vector<std::string>& vanished() const noexcept { return vanished_; }

private:
    static std::string describe(const std::vector<std::string>& names) {
        std::string s = "singular denominator factor(s):";
        for (const auto& n : names) {
            s += ' ';
            s += n;
        }
        return s;
    }

    std::vector<std::string> vanished_;
};

}  // namespace cuboid
