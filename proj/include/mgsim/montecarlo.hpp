#ifndef MGSIM_MONTECARLO_HPP
#define MGSIM_MONTECARLO_HPP

#include <cstdint>

#include <json.hpp>

#include "mgsim/analytic.hpp"
#include "mgsim/scheduler.hpp"

namespace mgsim {

struct MCEstimate {
    double su_mean = 0.0;
    double sum_mean = 0.0;
    double se_mean = 0.0;  // sum_mean - su_mean
    double su_stderr = 0.0;
    double sum_stderr = 0.0;
    long trials = 0;
    int network_size = 0;
    std::uint64_t seed = 0;

    nlohmann::json to_json() const;
};

enum class Which { Su, Sum, Se };

struct CompareReport {
    bool pass = false;
    double mean = 0.0;
    double target = 0.0;
    double stderr_value = 0.0;
    double k_sigma = 0.0;
    double bias_allowance = 0.0;
    double abs_error = 0.0;

    nlohmann::json to_json() const;
};

/// Runs the scheme selected by (topology kind, coop, model, scheme) on one
/// realization. Rejects combinations with no realization-level construction
/// (Rx-only non-adaptive bounds are time-sharing arguments).
ScheduleResult run_scheme(const ScenarioParams& params, Scheme scheme, const Topology& topo,
                          const ActivityRealization& real);

/// Per-user MG means over `trials` independent realizations. Each trial draws
/// from its own substream of `seed`, so the result is identical for any
/// worker count.
MCEstimate estimate(const ScenarioParams& params, Scheme scheme, const Topology& topo,
                    long trials, std::uint64_t seed, int workers = 1);

/// Pass iff |mean - target| <= k_sigma * stderr + 10/network_size.
CompareReport compare(const MCEstimate& est, double target, Which which, double k_sigma);

}  // namespace mgsim

#endif
