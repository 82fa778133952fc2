#include "mgsim/traffic.hpp"

#include <cmath>
#include <stdexcept>

namespace mgsim {

namespace {

bool in_phase(int user, int phase) { return (user % 2) == phase; }

bool scheduled_urllc(const ActivityRealization& real, int user, int phase) {
    return real.active[user] && real.urllc[user] && in_phase(user, phase);
}

void check_run(int length, int start0, int user_count) {
    if (user_count < 1) throw std::invalid_argument("subnet law: user_count must be >= 1");
    if (length < 1) throw std::invalid_argument("subnet law: length must be >= 1");
    if (start0 < 0 || start0 + length > user_count)
        throw std::invalid_argument("subnet law: run must lie within 0..user_count-1");
}

void check_prob(double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument(std::string("subnet law: ") + name + " must be in [0,1]");
}

void check_phase(int phase) {
    if (phase != 0 && phase != 1) throw std::invalid_argument("subnet law: phase must be 0 or 1");
}

// Run of i.i.d. participants with per-user probability p, blocked on each
// existing side by an independent non-participant.
double iid_run_prob(double p, int length, int start0, int user_count) {
    double v = std::pow(p, length);
    if (start0 > 0) v *= 1.0 - p;
    if (start0 + length < user_count) v *= 1.0 - p;
    return v;
}

}  // namespace

void ScenarioParams::validate() const {
    if (!(rho >= 0.0 && rho <= 1.0)) throw std::invalid_argument("params: rho must be in [0,1]");
    if (!(rho_f >= 0.0 && rho_f <= 1.0))
        throw std::invalid_argument("params: rho_f must be in [0,1]");
    if (!d_infinite) {
        if (coop_rounds < 0) throw std::invalid_argument("params: D must be >= 0");
        if (coop_rounds % 2 != 0) throw std::invalid_argument("params: D must be even");
    }
}

RandomStream RandomStream::for_trial(std::uint64_t master_seed, std::uint64_t trial) {
    // One splitmix step decorrelates the per-trial keys.
    RandomStream mix(master_seed + 0x9E3779B97F4A7C15ULL * (trial + 1));
    return RandomStream(mix.next_u64());
}

std::uint64_t RandomStream::next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double RandomStream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

nlohmann::json ActivityRealization::to_json() const {
    nlohmann::json j;
    j["K"] = user_count();
    j["active"] = active;
    j["urllc"] = urllc;
    return j;
}

ActivityRealization ActivityRealization::from_json(const nlohmann::json& j) {
    ActivityRealization r;
    r.active = j.at("active").get<std::vector<std::uint8_t>>();
    r.urllc = j.at("urllc").get<std::vector<std::uint8_t>>();
    if (r.urllc.size() != r.active.size())
        throw std::invalid_argument("realization: active/urllc length mismatch");
    for (std::size_t k = 0; k < r.active.size(); ++k)
        if (r.urllc[k] && !r.active[k])
            throw std::invalid_argument("realization: urllc bit set on inactive user");
    return r;
}

ActivityRealization sample_activity(const ScenarioParams& params, int user_count,
                                    RandomStream& stream) {
    params.validate();
    if (user_count < 1) throw std::invalid_argument("sample_activity: user_count must be >= 1");
    ActivityRealization r;
    r.active.resize(static_cast<std::size_t>(user_count));
    r.urllc.assign(static_cast<std::size_t>(user_count), 0);
    for (int k = 0; k < user_count; ++k) {
        r.active[k] = stream.bernoulli(params.rho) ? 1 : 0;
        if (r.active[k]) r.urllc[k] = stream.bernoulli(params.rho_f) ? 1 : 0;
    }
    return r;
}

bool embb_participant(const ActivityRealization& real, int user, int phase,
                      const ScenarioParams& params) {
    if (!real.active[user]) return false;
    if (params.coop == Cooperation::TxRx) {
        if (params.model == ArrivalModel::Model1) return true;
        // Single-message arrivals: delay-sensitive holders only join their phase.
        return !real.urllc[user] || in_phase(user, phase);
    }
    // Rx-only: scheduled delay-sensitive users transmit outside the eMBB runs,
    // and their neighbors are deactivated.
    if (scheduled_urllc(real, user, phase)) return false;
    if (params.model == ArrivalModel::Model2 && real.urllc[user]) return false;
    if (user > 0 && scheduled_urllc(real, user - 1, phase)) return false;
    if (user + 1 < real.user_count() && scheduled_urllc(real, user + 1, phase)) return false;
    return true;
}

namespace {

template <typename Pred>
std::vector<Subnet> runs_of(int user_count, Pred participant) {
    std::vector<Subnet> out;
    int k = 0;
    while (k < user_count) {
        if (!participant(k)) {
            ++k;
            continue;
        }
        int start = k;
        while (k < user_count && participant(k)) ++k;
        out.push_back({start, k - start});
    }
    return out;
}

}  // namespace

std::vector<Subnet> active_subnets(const ActivityRealization& real) {
    return runs_of(real.user_count(), [&](int k) { return real.active[k] != 0; });
}

std::vector<Subnet> embb_subnets(const ActivityRealization& real, int phase,
                                 const ScenarioParams& params) {
    check_phase(phase);
    return runs_of(real.user_count(),
                   [&](int k) { return embb_participant(real, k, phase, params); });
}

double subnet_prob_m1(double rho, int length, int start0, int user_count) {
    check_prob(rho, "rho");
    check_run(length, start0, user_count);
    return iid_run_prob(rho, length, start0, user_count);
}

double subnet_prob_m2(double rho, double rho_f, int length, int start0, int user_count) {
    check_prob(rho, "rho");
    check_prob(rho_f, "rho_f");
    check_run(length, start0, user_count);
    return iid_run_prob(rho * (1.0 - rho_f), length, start0, user_count);
}

double subnet_prob_m2_phase(double rho, double rho_f, int length, int start0, int user_count,
                            int phase) {
    check_prob(rho, "rho");
    check_prob(rho_f, "rho_f");
    check_phase(phase);
    check_run(length, start0, user_count);
    // Participation is independent across users: in-phase users transmit when
    // active, off-phase users only when they hold a delay-tolerant message.
    auto p_of = [&](int user) { return in_phase(user, phase) ? rho : rho * (1.0 - rho_f); };
    double v = 1.0;
    for (int u = start0; u < start0 + length; ++u) v *= p_of(u);
    if (start0 > 0) v *= 1.0 - p_of(start0 - 1);
    if (start0 + length < user_count) v *= 1.0 - p_of(start0 + length);
    return v;
}

double embb_subnet_prob_rx(double rho, double rho_f, int length, int start0, int user_count,
                           int phase, ArrivalModel model) {
    check_prob(rho, "rho");
    check_prob(rho_f, "rho_f");
    check_phase(phase);
    check_run(length, start0, user_count);

    double v = 1.0;
    for (int u = start0; u < start0 + length; ++u) {
        if (model == ArrivalModel::Model2 || in_phase(u, phase))
            v *= rho * (1.0 - rho_f);  // must hold an eMBB message
        else
            v *= rho;  // off-phase user transmits regardless of its extra message
    }
    // Boundary user b fails to transmit eMBB in this phase. When b is
    // in-phase, the adjacent member also requires b not to be a scheduled
    // delay-sensitive user; the joint event collapses to "b inactive".
    auto boundary = [&](int b, int outer) {
        if (b < 0 || b >= user_count) return 1.0;
        if (in_phase(b, phase)) return 1.0 - rho;
        double p_embb = (model == ArrivalModel::Model1) ? rho : rho * (1.0 - rho_f);
        double p_block = (outer >= 0 && outer < user_count) ? rho * rho_f : 0.0;
        return 1.0 - p_embb * (1.0 - p_block);
    };
    v *= boundary(start0 - 1, start0 - 2);
    v *= boundary(start0 + length, start0 + length + 1);
    return v;
}

}  // namespace mgsim
