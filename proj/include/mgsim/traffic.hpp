#ifndef MGSIM_TRAFFIC_HPP
#define MGSIM_TRAFFIC_HPP

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "mgsim/netmodel.hpp"

namespace mgsim {

enum class ArrivalModel { Model1 = 1, Model2 = 2 };
enum class Cooperation { TxRx, RxOnly };

struct ScenarioParams {
    double rho = 0.5;    // activity probability
    double rho_f = 0.5;  // delay-sensitive arrival probability
    int coop_rounds = 10;  // D, even and >= 0; ignored when d_infinite
    bool d_infinite = false;
    ArrivalModel model = ArrivalModel::Model1;
    Cooperation coop = Cooperation::TxRx;

    void validate() const;  // throws std::invalid_argument naming the violated constraint
};

/// Deterministic substream: splitmix64 keyed by (master seed, trial index).
/// Identical seeds give identical draws on every platform.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : state_(seed) {}
    static RandomStream for_trial(std::uint64_t master_seed, std::uint64_t trial);

    std::uint64_t next_u64();
    double uniform();  // [0, 1)
    bool bernoulli(double p) { return uniform() < p; }

  private:
    std::uint64_t state_;
};

struct ActivityRealization {
    std::vector<std::uint8_t> active;  // A_k
    std::vector<std::uint8_t> urllc;   // B_k; zero wherever A_k = 0

    int user_count() const { return static_cast<int>(active.size()); }
    nlohmann::json to_json() const;
    static ActivityRealization from_json(const nlohmann::json& j);
};

ActivityRealization sample_activity(const ScenarioParams& params, int user_count,
                                    RandomStream& stream);

/// Maximal run of consecutive participating users on the line.
struct Subnet {
    int start;   // 0-based first user
    int length;  // >= 1
};

/// True when `user` transmits an eMBB message in the given phase (0 or 1)
/// under the scheme rules selected by params.coop/params.model.
bool embb_participant(const ActivityRealization& real, int user, int phase,
                      const ScenarioParams& params);

std::vector<Subnet> active_subnets(const ActivityRealization& real);
std::vector<Subnet> embb_subnets(const ActivityRealization& real, int phase,
                                 const ScenarioParams& params);

// Closed-form start/length laws for the line. `start0` is 0-based;
// the run occupies users [start0, start0+length).
double subnet_prob_m1(double rho, int length, int start0, int user_count);
double subnet_prob_m2(double rho, double rho_f, int length, int start0, int user_count);
double subnet_prob_m2_phase(double rho, double rho_f, int length, int start0, int user_count,
                            int phase);
double embb_subnet_prob_rx(double rho, double rho_f, int length, int start0, int user_count,
                           int phase, ArrivalModel model);

}  // namespace mgsim

#endif
