#ifndef COLKERN_SELFCHECK_HPP
#define COLKERN_SELFCHECK_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "colkern/instance_io.hpp"

namespace colkern {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // counts on success, a replayable witness on failure
};

struct TrialPlan {
    int q;
    int trials;
    int max_n;
    int max_k;
};

/// Deterministic trial schedule: cycles vertex counts, modulator sizes,
/// edge densities {0.2, 0.5, 0.8} and matching fractions, seeded per trial.
GenSpec trial_spec(const TrialPlan& plan, int t, std::uint64_t seed);

/// Palette existence over q in [2,8], p in {2,3,5}: construction succeeds
/// and verifies exactly when q is even or p >= 3, and for q=3 over GF(2)
/// every candidate triple is checked to fail.
CheckResult check_palette_table();

/// Exhaustive zero-pattern scan of f, g, h over all palette-column
/// matrices, for q=3 and q=4 and both palette constructions.
CheckResult check_zero_patterns();

/// deg f = q-1, deg g = q-2, deg h = 2q-3 exactly, q in {3,4,5}.
CheckResult check_degree_identities();

/// Brute-force colorability of each generated instance agrees with
/// colorability of its kernel.
CheckResult check_kernel_equivalence(const std::vector<TrialPlan>& plans, std::uint64_t seed);

/// Recomputes the four kernel size bounds from the reported stats of every
/// generated instance.
CheckResult check_size_bounds(const std::vector<TrialPlan>& plans, std::uint64_t seed);

/// extension_equivalence holds on random instances, and every satisfiable
/// one yields an extend_coloring output that passes an edge scan.
CheckResult check_extension_suite(int trials, std::uint64_t seed);

/// solve_unique on the truncated palette system reproduces
/// (4-q-alpha, alpha, 1, ..., 1) with all entries nonzero, q in {3,4,5},
/// every valid alpha over GF(3) and GF(5).
CheckResult check_truncated_system();

/// The schedule used by both the acceptance gate and the full selftest.
std::vector<TrialPlan> default_trial_plans();

/// Every check in order: palette table, zero patterns, degrees, kernel
/// equivalence, size bounds, extension suite, truncated system. The
/// randomized checks are skipped when their budgets are zero.
std::vector<CheckResult> run_selfchecks(const std::vector<TrialPlan>& plans,
                                        int extension_trials, std::uint64_t seed);

}  // namespace colkern

#endif
