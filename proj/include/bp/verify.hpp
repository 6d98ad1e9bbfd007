#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bp/problem.hpp"
#include "bp/rng.hpp"

namespace bp {

struct CheckResult {
    std::string name;
    bool passed = false;
    bool warning = false;  // passed, but with a caveat in the note
    double value = 0.0;
    double threshold = 0.0;
    std::string note;
};

struct VerifyReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

std::vector<std::string> verify_suite_names();

/// Run one named invariant suite (identity, spectral, riesz, gradient,
/// transforms) across the three problem families.
VerifyReport run_verify_suite(const std::string& suite, uint64_t seed);

void print_report(std::ostream& os, const VerifyReport& report);
void write_report_csv(const std::string& path, const VerifyReport& report);

// Standard instances the suites (and the acceptance tests) run against.
ProblemPtr verify_helmholtz(int n, uint64_t seed);
ProblemPtr verify_cdr(int n, uint64_t seed);
/// Jacobian problem at a representative negative-branch Newton state.
ProblemPtr verify_newton(int n, uint64_t seed);

ComplexField random_probe(const GridSpec& grid, RngState& rng);

}  // namespace bp
