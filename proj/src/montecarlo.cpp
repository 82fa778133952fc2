#include "mgsim/montecarlo.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace mgsim {

nlohmann::json MCEstimate::to_json() const {
    return {{"su_mean", su_mean},     {"sum_mean", sum_mean},   {"se_mean", se_mean},
            {"su_stderr", su_stderr}, {"sum_stderr", sum_stderr}, {"trials", trials},
            {"network_size", network_size}, {"seed", seed}};
}

nlohmann::json CompareReport::to_json() const {
    return {{"pass", pass},
            {"mean", mean},
            {"target", target},
            {"stderr", stderr_value},
            {"k_sigma", k_sigma},
            {"bias_allowance", bias_allowance},
            {"abs_error", abs_error}};
}

ScheduleResult run_scheme(const ScenarioParams& params, Scheme scheme, const Topology& topo,
                          const ActivityRealization& real) {
    if (real.user_count() != topo.user_count())
        throw std::invalid_argument("run_scheme: realization/topology size mismatch");
    if (topo.kind() == TopologyKind::HexTorus) {
        if (params.coop == Cooperation::RxOnly && scheme == Scheme::NonAdaptive)
            throw std::invalid_argument(
                "run_scheme: the non-adaptive Rx-only hex bound has no realization-level "
                "schedule");
        return schedule_hex(params, real, topo, hex_color_partition(topo));
    }
    if (params.coop == Cooperation::TxRx)
        return scheme == Scheme::NonAdaptive ? schedule_nonadaptive_wyner(params, real)
                                             : schedule_adaptive_wyner_txrx(params, real);
    if (scheme == Scheme::NonAdaptive)
        throw std::invalid_argument(
            "run_scheme: the non-adaptive Rx-only line bound has no realization-level schedule");
    return schedule_adaptive_wyner_rxonly(params, real);
}

MCEstimate estimate(const ScenarioParams& params, Scheme scheme, const Topology& topo,
                    long trials, std::uint64_t seed, int workers) {
    params.validate();
    if (trials < 2) throw std::invalid_argument("estimate: trials must be >= 2");
    if (workers < 1) throw std::invalid_argument("estimate: workers must be >= 1");
    const int K = topo.user_count();

    std::vector<double> su(trials), sum(trials);
    auto run_range = [&](long lo, long hi) {
        for (long t = lo; t < hi; ++t) {
            RandomStream stream = RandomStream::for_trial(seed, static_cast<std::uint64_t>(t));
            ActivityRealization real = sample_activity(params, K, stream);
            MGTally tally = run_scheme(params, scheme, topo, real).tally;
            su[t] = tally.urllc_total / K;
            sum[t] = tally.sum_total / K;
        }
    };
    if (workers == 1 || trials < 2 * workers) {
        run_range(0, trials);
    } else {
        std::vector<std::thread> pool;
        long chunk = (trials + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            long lo = w * chunk, hi = std::min<long>(trials, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(run_range, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    // Reduce in trial order so the result does not depend on the worker count.
    MCEstimate est;
    est.trials = trials;
    est.network_size = K;
    est.seed = seed;
    double su_acc = 0.0, sum_acc = 0.0;
    for (long t = 0; t < trials; ++t) {
        su_acc += su[t];
        sum_acc += sum[t];
    }
    est.su_mean = su_acc / trials;
    est.sum_mean = sum_acc / trials;
    est.se_mean = est.sum_mean - est.su_mean;
    double su_var = 0.0, sum_var = 0.0;
    for (long t = 0; t < trials; ++t) {
        su_var += (su[t] - est.su_mean) * (su[t] - est.su_mean);
        sum_var += (sum[t] - est.sum_mean) * (sum[t] - est.sum_mean);
    }
    est.su_stderr = std::sqrt(su_var / (trials - 1)) / std::sqrt(static_cast<double>(trials));
    est.sum_stderr = std::sqrt(sum_var / (trials - 1)) / std::sqrt(static_cast<double>(trials));
    return est;
}

CompareReport compare(const MCEstimate& est, double target, Which which, double k_sigma) {
    if (!(k_sigma > 0.0)) throw std::invalid_argument("compare: k_sigma must be positive");
    CompareReport r;
    switch (which) {
        case Which::Su:
            r.mean = est.su_mean;
            r.stderr_value = est.su_stderr;
            break;
        case Which::Sum:
            r.mean = est.sum_mean;
            r.stderr_value = est.sum_stderr;
            break;
        case Which::Se:
            r.mean = est.se_mean;
            // conservative: the two means are positively correlated
            r.stderr_value = est.sum_stderr + est.su_stderr;
            break;
    }
    r.target = target;
    r.k_sigma = k_sigma;
    r.bias_allowance = 10.0 / est.network_size;
    r.abs_error = std::abs(r.mean - target);
    r.pass = r.abs_error <= k_sigma * r.stderr_value + r.bias_allowance;
    return r;
}

}  // namespace mgsim
