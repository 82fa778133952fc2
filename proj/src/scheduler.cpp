#include "mgsim/scheduler.hpp"

#include <algorithm>
#include <stdexcept>

namespace mgsim {

namespace {

bool in_phase(int user, int phase) { return (user % 2) == phase; }

bool scheduled_urllc(const ActivityRealization& real, int user, int phase) {
    return real.active[user] && real.urllc[user] && in_phase(user, phase);
}

void require_adaptive_params(const ScenarioParams& params) {
    params.validate();
    if (params.d_infinite)
        throw std::invalid_argument("adaptive wyner scheme: finite D required");
    if (params.coop_rounds < 2)
        throw std::invalid_argument("adaptive wyner scheme: D must be >= 2");
}

// Full-rule roles on the run [start0, start0+length): every (D+2)-th slot
// silent, both ends of each block act as delay-sensitive users.
void assign_full(std::vector<Role>& roles, const ActivityRealization& real, int phase,
                 int start0, int length, int coop_rounds) {
    const int period = coop_rounds + 2;
    for (int rel = 1; rel <= length; ++rel) {
        int pos = start0 + rel - 1;
        int m = rel % period;
        if (m == 0) {
            roles[pos] = Role::Silent;
            continue;
        }
        if (scheduled_urllc(real, pos, phase))
            roles[pos] = Role::Urllc;
        else if (m == 1 || m == coop_rounds + 1)
            roles[pos] = Role::ActsAsUrllc;
        else
            roles[pos] = Role::Embb;
    }
}

// Reduced-rule roles on [start0, start0+length), length <= D: nobody silent,
// the D-th slot (when present) acts as delay-sensitive.
void assign_red(std::vector<Role>& roles, const ActivityRealization& real, int phase,
                int start0, int length, int coop_rounds) {
    for (int rel = 1; rel <= length; ++rel) {
        int pos = start0 + rel - 1;
        if (scheduled_urllc(real, pos, phase))
            roles[pos] = Role::Urllc;
        else if (rel == coop_rounds)
            roles[pos] = Role::ActsAsUrllc;
        else
            roles[pos] = Role::Embb;
    }
}

void assign_adaptive_txrx_subnet(std::vector<Role>& roles, const ActivityRealization& real,
                                 int phase, const Subnet& net, int coop_rounds) {
    const int period = coop_rounds + 2;
    if (in_phase(net.start, phase)) {
        assign_full(roles, real, phase, net.start, net.length, coop_rounds);
        return;
    }
    // Off-phase start: the full rule is safe only when no scheduled
    // delay-sensitive user sits next to a block end or on a silent slot.
    bool clean = true;
    for (int pos : lset(net.start, net.length, coop_rounds))
        if (scheduled_urllc(real, pos, phase)) clean = false;
    for (int c = 1; c * period <= net.length; ++c)
        if (scheduled_urllc(real, net.start + c * period - 1, phase)) clean = false;
    if (clean) {
        assign_full(roles, real, phase, net.start, net.length, coop_rounds);
    } else if (net.length <= coop_rounds) {
        assign_red(roles, real, phase, net.start, net.length, coop_rounds);
    } else {
        assign_red(roles, real, phase, net.start, coop_rounds, coop_rounds);
        roles[net.start + coop_rounds] = Role::Silent;
        assign_full(roles, real, phase, net.start + coop_rounds + 1,
                    net.length - coop_rounds - 1, coop_rounds);
    }
}

}  // namespace

const char* role_name(Role r) {
    switch (r) {
        case Role::Silent: return "silent";
        case Role::Urllc: return "urllc";
        case Role::Embb: return "embb";
        case Role::ActsAsUrllc: return "acts_as_urllc";
    }
    return "?";
}

nlohmann::json PhasedSchedule::to_json() const {
    nlohmann::json j;
    j["phase_weights"] = phase_weights;
    nlohmann::json ph = nlohmann::json::array();
    for (const auto& roles : phases) {
        nlohmann::json assignment = nlohmann::json::array();
        for (std::size_t u = 0; u < roles.size(); ++u)
            assignment.push_back({{"user", u}, {"role", role_name(roles[u])}});
        ph.push_back(std::move(assignment));
    }
    j["phases"] = std::move(ph);
    return j;
}

MGTally tally_of(const PhasedSchedule& schedule) {
    MGTally t;
    for (std::size_t p = 0; p < schedule.phases.size(); ++p) {
        double w = schedule.phase_weights[p];
        long transmitting = 0, urllc = 0;
        for (Role r : schedule.phases[p]) {
            if (r != Role::Silent) ++transmitting;
            if (r == Role::Urllc) ++urllc;
        }
        t.sum_total += w * static_cast<double>(transmitting);
        t.urllc_total += w * static_cast<double>(urllc);
    }
    return t;
}

long msum_full(long length, long coop_rounds) {
    if (length < 1) throw std::invalid_argument("msum_full: length must be >= 1");
    if (coop_rounds < 0 || coop_rounds % 2 != 0)
        throw std::invalid_argument("msum_full: D must be even and >= 0");
    return length - length / (coop_rounds + 2);
}

long msum_red(long length, long coop_rounds) {
    if (length < 1) throw std::invalid_argument("msum_red: length must be >= 1");
    if (coop_rounds < 0 || coop_rounds % 2 != 0)
        throw std::invalid_argument("msum_red: D must be even and >= 0");
    return length - (length + 1) / (coop_rounds + 2);
}

std::vector<int> lset(int start0, int length, int coop_rounds) {
    if (length < 1) throw std::invalid_argument("lset: length must be >= 1");
    if (coop_rounds < 2 || coop_rounds % 2 != 0)
        throw std::invalid_argument("lset: D must be even and >= 2");
    const int period = coop_rounds + 2;
    std::vector<int> out;
    int blocks = (length + period - 1) / period;
    for (int c = 1; c <= blocks; ++c) {
        int first = start0 + (c - 1) * period + 1;
        int second = start0 + c * period - 3;
        if (first < start0 + length) out.push_back(first);
        if (second < start0 + length && second >= start0) out.push_back(second);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

long lset_size(long length, long coop_rounds) {
    if (length < 1) throw std::invalid_argument("lset_size: length must be >= 1");
    if (coop_rounds < 2 || coop_rounds % 2 != 0)
        throw std::invalid_argument("lset_size: D must be even and >= 2");
    const long period = coop_rounds + 2;
    // The two anchors of each block coincide when the period is 4.
    if (coop_rounds == 2) return (length + 2) / 4;
    long rem = length % period;
    if (rem == 0 || rem == coop_rounds || rem == coop_rounds + 1)
        return 2 * ((length + period - 1) / period);
    if (rem == 1) return 2 * (length / period);
    return 2 * (length / period) + 1;
}

ScheduleResult schedule_nonadaptive_wyner(const ScenarioParams& params,
                                          const ActivityRealization& real) {
    params.validate();
    if (params.coop != Cooperation::TxRx)
        throw std::invalid_argument("nonadaptive wyner scheme: Tx+Rx cooperation only");
    if (params.d_infinite)
        throw std::invalid_argument("nonadaptive wyner scheme: finite D required");
    const int K = real.user_count();
    const int period = params.coop_rounds + 2;

    PhasedSchedule s;
    s.phase_weights = {0.5, 0.5};
    s.phases.assign(2, std::vector<Role>(static_cast<std::size_t>(K), Role::Silent));
    for (int phase = 0; phase < 2; ++phase) {
        auto& roles = s.phases[phase];
        // Fixed silent slots, shifted by one in the second phase so that the
        // delay-sensitive slots of each phase are never silenced.
        auto fixed_silent = [&](int user) {
            return phase == 0 ? (user + 1) % period == 0 : user % period == 0;
        };
        for (int u = 0; u < K; ++u) {
            if (!real.active[u] || fixed_silent(u)) continue;
            if (in_phase(u, phase))
                roles[u] = real.urllc[u] ? Role::Urllc : Role::ActsAsUrllc;
            else if (params.model == ArrivalModel::Model2 && real.urllc[u])
                continue;  // single message already spent on the other phase
            else
                roles[u] = Role::Embb;
        }
    }
    return {s, tally_of(s)};
}

ScheduleResult schedule_adaptive_wyner_txrx(const ScenarioParams& params,
                                            const ActivityRealization& real) {
    require_adaptive_params(params);
    if (params.coop != Cooperation::TxRx)
        throw std::invalid_argument("adaptive txrx scheme: Tx+Rx cooperation only");
    const int K = real.user_count();

    PhasedSchedule s;
    s.phase_weights = {0.5, 0.5};
    s.phases.assign(2, std::vector<Role>(static_cast<std::size_t>(K), Role::Silent));
    for (int phase = 0; phase < 2; ++phase) {
        auto nets = params.model == ArrivalModel::Model1 ? active_subnets(real)
                                                         : embb_subnets(real, phase, params);
        for (const Subnet& net : nets)
            assign_adaptive_txrx_subnet(s.phases[phase], real, phase, net, params.coop_rounds);
    }
    return {s, tally_of(s)};
}

ScheduleResult schedule_adaptive_wyner_rxonly(const ScenarioParams& params,
                                              const ActivityRealization& real) {
    require_adaptive_params(params);
    if (params.coop != Cooperation::RxOnly)
        throw std::invalid_argument("adaptive rxonly scheme: Rx-only cooperation required");
    const int K = real.user_count();
    const int period = params.coop_rounds + 2;

    PhasedSchedule s;
    s.phase_weights = {0.5, 0.5};
    s.phases.assign(2, std::vector<Role>(static_cast<std::size_t>(K), Role::Silent));
    for (int phase = 0; phase < 2; ++phase) {
        auto& roles = s.phases[phase];
        for (int u = 0; u < K; ++u)
            if (scheduled_urllc(real, u, phase)) roles[u] = Role::Urllc;
        for (const Subnet& net : embb_subnets(real, phase, params))
            for (int rel = 1; rel <= net.length; ++rel)
                roles[net.start + rel - 1] = (rel % period == 0) ? Role::Silent : Role::Embb;
    }
    return {s, tally_of(s)};
}

ScheduleResult schedule_hex(const ScenarioParams& params, const ActivityRealization& real,
                            const Topology& topo, const HexPartition& partition) {
    params.validate();
    if (topo.kind() != TopologyKind::HexTorus)
        throw std::invalid_argument("hex scheme: hex torus required");
    if (!params.d_infinite)
        throw std::invalid_argument("hex scheme: cooperation rounds are unbounded (use D = inf)");
    const int N = topo.user_count();
    if (real.user_count() != N || static_cast<int>(partition.color.size()) != N)
        throw std::invalid_argument("hex scheme: size mismatch");

    PhasedSchedule s;
    s.phase_weights = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
    s.phases.assign(3, std::vector<Role>(static_cast<std::size_t>(N), Role::Silent));
    for (int phase = 0; phase < 3; ++phase) {
        auto& roles = s.phases[phase];
        if (params.coop == Cooperation::TxRx) {
            for (int u = 0; u < N; ++u) {
                if (!real.active[u]) continue;
                if (partition.color[u] == phase)
                    roles[u] = real.urllc[u] ? Role::Urllc : Role::ActsAsUrllc;
                else if (params.model == ArrivalModel::Model2 && real.urllc[u])
                    continue;
                else
                    roles[u] = Role::Embb;
            }
        } else {
            auto sched = [&](int u) {
                return real.active[u] && real.urllc[u] && partition.color[u] == phase;
            };
            for (int u = 0; u < N; ++u) {
                if (!real.active[u]) continue;
                if (sched(u)) {
                    roles[u] = Role::Urllc;
                    continue;
                }
                if (params.model == ArrivalModel::Model2 && real.urllc[u]) continue;
                bool blocked = false;
                for (int v : topo.neighbors(u))
                    if (sched(v)) blocked = true;
                if (!blocked) roles[u] = Role::Embb;
            }
        }
    }
    return {s, tally_of(s)};
}

nlohmann::json ValidationReport::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& v : violations)
        j.push_back({{"condition", v.condition}, {"phase", v.phase}, {"users", v.users}});
    return j;
}

ValidationReport validate_schedule(const Topology& topo, const PhasedSchedule& schedule,
                                   const ScenarioParams& params) {
    ValidationReport report;
    const int N = topo.user_count();
    auto sensitive = [](Role r) { return r == Role::Urllc || r == Role::ActsAsUrllc; };

    for (int p = 0; p < static_cast<int>(schedule.phases.size()); ++p) {
        const auto& roles = schedule.phases[p];
        if (static_cast<int>(roles.size()) != N)
            throw std::invalid_argument("validate_schedule: schedule/topology size mismatch");

        for (int u = 0; u < N; ++u) {
            for (int v : topo.neighbors(u)) {
                if (v < u) continue;
                if (sensitive(roles[u]) && sensitive(roles[v]))
                    report.violations.push_back({1, p, {u, v}});
                if (params.coop == Cooperation::RxOnly) {
                    bool mixed = (roles[u] == Role::Embb && sensitive(roles[v])) ||
                                 (roles[v] == Role::Embb && sensitive(roles[u]));
                    if (mixed) report.violations.push_back({3, p, {u, v}});
                }
            }
        }

        if (params.d_infinite) continue;
        const int radius =
            params.coop == Cooperation::TxRx ? params.coop_rounds / 2 - 1 : params.coop_rounds / 2;
        // Maximal connected Embb groups; each needs a master within `radius`.
        std::vector<char> seen(static_cast<std::size_t>(N), 0);
        for (int u = 0; u < N; ++u) {
            if (seen[u] || roles[u] != Role::Embb) continue;
            std::vector<int> group{u};
            seen[u] = 1;
            for (std::size_t i = 0; i < group.size(); ++i)
                for (int v : topo.neighbors(group[i]))
                    if (!seen[v] && roles[v] == Role::Embb) {
                        seen[v] = 1;
                        group.push_back(v);
                    }
            bool reachable = false;
            for (int master : group) {
                bool all = true;
                for (int member : group)
                    if (topo.hop_distance(master, member) > radius) {
                        all = false;
                        break;
                    }
                if (all) {
                    reachable = true;
                    break;
                }
            }
            if (!reachable) {
                std::sort(group.begin(), group.end());
                report.violations.push_back({2, p, std::move(group)});
            }
        }
    }
    return report;
}

}  // namespace mgsim
