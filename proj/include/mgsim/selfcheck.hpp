#ifndef MGSIM_SELFCHECK_HPP
#define MGSIM_SELFCHECK_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mgsim {

struct CheckResult {
    std::string name;
    bool pass = false;
    double max_err = 0.0;
    std::string note;
};

/// Identity library against truncated sums on the full parameter grid;
/// truncation depth follows the geometric tail bound.
std::vector<CheckResult> check_identities(double tail_bound, double tolerance = 1e-8);

/// Closed-form corner values of the adaptive schemes against their
/// term-by-term series on a parameter grid (tolerance 1e-6).
std::vector<CheckResult> check_series_vs_closed();

/// Random-draw sweep: every produced schedule passes the feasibility
/// conditions, tally bounds and phase-coverage checks.
std::vector<CheckResult> check_schedule_validity(int draws, std::uint64_t seed);

/// Inner bounds inside outer bounds on the parameter grid; adaptive bounds
/// contain non-adaptive ones.
std::vector<CheckResult> check_region_nesting();

/// Inner and outer bounds coincide at rho = 1 and as D grows without bound
/// (direct flag and a 1e6-round proxy).
std::vector<CheckResult> check_bound_coincidence();

/// Estimates are bit-identical across worker counts.
std::vector<CheckResult> check_determinism();

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace mgsim

#endif
