#ifndef MGSIM_SCHEDULER_HPP
#define MGSIM_SCHEDULER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "mgsim/netmodel.hpp"
#include "mgsim/traffic.hpp"

namespace mgsim {

enum class Role : std::uint8_t { Silent, Urllc, Embb, ActsAsUrllc };

const char* role_name(Role r);

/// Per-phase role assignment for every user plus the time-share weights
/// (1/2,1/2 on the line, 1/3 each on the hex torus).
struct PhasedSchedule {
    std::vector<std::vector<Role>> phases;  // [phase][user]
    std::vector<double> phase_weights;

    nlohmann::json to_json() const;
};

/// Realized multiplexing-gain totals, phase-weighted.
/// urllc_total counts users with role Urllc; sum_total counts every
/// transmitting role (Urllc, ActsAsUrllc, Embb).
struct MGTally {
    double urllc_total = 0.0;
    double sum_total = 0.0;
};

MGTally tally_of(const PhasedSchedule& schedule);

struct ScheduleResult {
    PhasedSchedule schedule;
    MGTally tally;
};

// Per-subnet MG totals of the two line constructions.
long msum_full(long length, long coop_rounds);  // length - floor(length/(D+2))
long msum_red(long length, long coop_rounds);   // length - floor((length+1)/(D+2))

/// Positions whose delay-sensitive arrivals decide full vs reduced rule,
/// 0-based, intersected with the subnet [start0, start0+length). D >= 2.
std::vector<int> lset(int start0, int length, int coop_rounds);
long lset_size(long length, long coop_rounds);  // closed-form cardinality

ScheduleResult schedule_nonadaptive_wyner(const ScenarioParams& params,
                                          const ActivityRealization& real);
ScheduleResult schedule_adaptive_wyner_txrx(const ScenarioParams& params,
                                            const ActivityRealization& real);
ScheduleResult schedule_adaptive_wyner_rxonly(const ScenarioParams& params,
                                              const ActivityRealization& real);
ScheduleResult schedule_hex(const ScenarioParams& params, const ActivityRealization& real,
                            const Topology& topo, const HexPartition& partition);

struct Violation {
    int condition;  // 1, 2 or 3
    int phase;
    std::vector<int> users;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    nlohmann::json to_json() const;
};

/// Checks the schedule against the scheme feasibility conditions:
///  1: no two adjacent users both carry the delay-sensitive role
///     (Urllc and ActsAsUrllc count alike);
///  2: every maximal connected group of Embb users has a member within
///     D/2-1 hops (Tx+Rx cooperation) resp. D/2 hops (Rx-only) of all others;
///  3: Rx-only schedules may not place an Embb user next to a
///     delay-sensitive one.
ValidationReport validate_schedule(const Topology& topo, const PhasedSchedule& schedule,
                                   const ScenarioParams& params);

}  // namespace mgsim

#endif
