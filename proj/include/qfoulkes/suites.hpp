#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qfoulkes {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    /// Wall-clock time of the check.
    std::int64_t ms = 0;
};

/// Reference expansions and closed forms, checked
/// for exact equality.
std::vector<CheckResult> suite_paper_goldens();

/// Table counts for n <= min(16, cap) and n <= min(20, cap), the explicit
/// lists, and the e-condition biconditional for n <= min(16, cap).
std::vector<CheckResult> suite_tables(int degree_cap, int jobs);

/// Randomized algebraic identities with a fixed seed.
std::vector<CheckResult> suite_properties(std::uint64_t seed);

}  // namespace qfoulkes
