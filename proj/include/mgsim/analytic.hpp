#ifndef MGSIM_ANALYTIC_HPP
#define MGSIM_ANALYTIC_HPP

#include <vector>

#include "mgsim/netmodel.hpp"
#include "mgsim/traffic.hpp"

namespace mgsim {

enum class Scheme { Adaptive, NonAdaptive };

/// coeff_u * S_u + coeff_e * S_e <= rhs, with S_u the delay-sensitive and
/// S_e the delay-tolerant per-user multiplexing gain.
struct LinearConstraint {
    double coeff_u = 0.0;
    double coeff_e = 0.0;
    double rhs = 0.0;
};

/// Largest delay-tolerant per-user MG (at S_u = 0).
double se_max(const ScenarioParams& params);

/// Largest delay-sensitive per-user MG: rho*rho_f/2 on the line, /3 on hex.
double su_max(const ScenarioParams& params, TopologyKind kind);

/// Weight of S_u in the non-trivial inner-bound constraint
/// S_e + slope * S_u <= rhs. Undefined at rho_f = 0 (rejected).
double slope_coefficient(const ScenarioParams& params, Scheme scheme, TopologyKind kind);

/// Delay-tolerant per-user MG of the adaptive scheme at S_u = su_max.
double adaptive_corner_se(const ScenarioParams& params, TopologyKind kind);

/// Term-by-term partial sum of the same corner value (line schemes);
/// terms <= 0 picks the count from the geometric tail bound (< 1e-12).
double adaptive_corner_se_series(const ScenarioParams& params, long terms = 0);

std::vector<LinearConstraint> inner_region(const ScenarioParams& params, Scheme scheme,
                                           TopologyKind kind);
std::vector<LinearConstraint> outer_region(const ScenarioParams& params, TopologyKind kind);

}  // namespace mgsim

#endif
