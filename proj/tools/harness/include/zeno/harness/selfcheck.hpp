#pragma once

#include <string>
#include <vector>

namespace zeno::harness {

struct CheckResult {
    std::string name;
    double value{0.0};     ///< measured defect
    double tolerance{0.0}; ///< pass when value <= tolerance
    bool pass{false};
};

/// Invariant suite across all modules at the reference parameter set.
std::vector<CheckResult> run_selfcheck(unsigned workers = 0);

} // namespace zeno::harness
