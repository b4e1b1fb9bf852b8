#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hsd {

struct CheckResult {
    int id;
    std::string name;
    bool pass;
    std::string detail;
};

/// The full self-check suite: norm values of the witness mappings, the
/// extremal family, curve constancy, closed-form cross-checks, order
/// formulas, the Marty relation, the randomized property suites, and the
/// radial monotonicity scan. Deterministic (fixed seeds).
std::vector<CheckResult> acceptance_checks();

/// Runs the suite, printing one pass/fail line per criterion.
/// Returns true iff every criterion passed.
bool run_acceptance(std::ostream& out);

}  // namespace hsd
