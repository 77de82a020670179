#pragma once

#include "hilb/asym.hpp"

#include <set>
#include <string>
#include <vector>

namespace hilb::verify {

// Outcome of one named self-check. Skipped checks keep passed = true so a
// deliberate skip never affects the aggregate verdict.
struct CheckResult {
    std::string name;
    bool passed = false;
    bool skipped = false;
    std::string detail;
    double seconds = 0.0;
};

struct VerifyOptions {
    long precision = 256;

    // Checks whose name contains any of these substrings are skipped.
    std::set<std::string> skip;

    // Bernoulli source for the d-coefficient closed-form check. Empty means
    // the library's own table. Feeding a perturbed source must flip exactly
    // that one check, which is how the suite proves its checks are live.
    asym::BernoulliFn bernoulli_provider;

    // Largest n swept by the oracle-equivalence check (its cost grows
    // quickly with n; the acceptance suite covers the full documented range).
    long oracle_n_max = 6;

    // Truncation order for the exact-series checks.
    long series_n_max = 30;
};

// Runs the fixed suite. Every check appears in the result in a stable order,
// including skipped ones.
std::vector<CheckResult> run_checks(const VerifyOptions& opts = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace hilb::verify
