#pragma once

#include <string>
#include <vector>

#include "ginlab/arith.hpp"
#include "ginlab/config.hpp"

namespace ginlab {

struct CheckResult {
    std::string name;
    bool passed = true;
    bool skipped = false;
    std::vector<std::string> failures;
};

struct VerificationReport {
    PointConfig config;
    Int max_m = 0;
    std::vector<CheckResult> checks;
    bool passed() const;
};

/// Multiplicities along which the predicted intercepts are attained exactly: multiples of 10,
/// 24 and 102 for r = 6, 7, 8, multiples of 10 otherwise. Never empty: falls back to {max_m}.
std::vector<Int> convergence_sequence(const PointConfig& config, Int max_m);

/// Runs every invariant that applies to the configuration for m = 1..max_m.
VerificationReport verify(const PointConfig& config, Int max_m);

} // namespace ginlab
