// Command-line front end: closed-form MG regions, Monte Carlo estimates,
// self-verification sweeps and topology/figure-data export.

#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mgsim/analytic.hpp"
#include "mgsim/io.hpp"
#include "mgsim/montecarlo.hpp"
#include "mgsim/region.hpp"
#include "mgsim/selfcheck.hpp"
#include "mgsim/series.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCheckFailed = 3;

struct CommonFlags {
    std::string topo = "wyner";
    std::string coop = "both";
    int model = 1;
    double rho = 0.8;
    double rho_f = 0.6;
    int D = 10;
    bool d_inf = false;
    int K = 1000;
    int W = 6, H = 6;
    std::string scheme = "adaptive";
    std::string format = "json";
    std::string out;
};

void add_scenario_flags(CLI::App* cmd, CommonFlags& f, bool with_size) {
    cmd->add_option("--topo", f.topo, "topology: wyner | hex")
        ->check(CLI::IsMember({"wyner", "hex"}));
    cmd->add_option("--coop", f.coop, "cooperation: both | rx")
        ->check(CLI::IsMember({"both", "rx"}));
    cmd->add_option("--model", f.model, "arrival model: 1 | 2")->check(CLI::IsMember({1, 2}));
    cmd->add_option("--rho", f.rho, "activity probability");
    cmd->add_option("--rhof", f.rho_f, "delay-sensitive arrival probability");
    cmd->add_option("--D", f.D, "cooperation rounds (even)");
    cmd->add_flag("--Dinf", f.d_inf, "unbounded cooperation rounds");
    if (with_size) {
        cmd->add_option("--K", f.K, "line length");
        cmd->add_option("--W", f.W, "hex torus width");
        cmd->add_option("--H", f.H, "hex torus height");
    }
    cmd->add_option("--format", f.format, "output format: json | csv | svg")
        ->check(CLI::IsMember({"json", "csv", "svg"}));
    cmd->add_option("--out", f.out, "output file (stdout when omitted)");
}

mgsim::ScenarioParams to_params(const CommonFlags& f) {
    mgsim::ScenarioParams p;
    p.rho = f.rho;
    p.rho_f = f.rho_f;
    p.coop_rounds = f.D;
    p.d_infinite = f.d_inf || f.topo == "hex";
    p.model = f.model == 1 ? mgsim::ArrivalModel::Model1 : mgsim::ArrivalModel::Model2;
    p.coop = f.coop == "both" ? mgsim::Cooperation::TxRx : mgsim::Cooperation::RxOnly;
    p.validate();
    return p;
}

mgsim::TopologyKind to_kind(const CommonFlags& f) {
    return f.topo == "wyner" ? mgsim::TopologyKind::WynerLine : mgsim::TopologyKind::HexTorus;
}

json config_json(const std::string& command, const CommonFlags& f, json extra = json::object()) {
    json c = {{"command", command},   {"topo", f.topo},       {"coop", f.coop},
              {"model", f.model},     {"rho", f.rho},         {"rhof", f.rho_f},
              {"D", f.d_inf || f.topo == "hex" ? json("inf") : json(f.D)},
              {"scheme", f.scheme},   {"format", f.format},   {"schema", mgsim::kCsvSchema}};
    c.update(extra);
    return c;
}

int cmd_region(const CommonFlags& f) {
    using namespace mgsim;
    ScenarioParams params = to_params(f);
    TopologyKind kind = to_kind(f);

    std::vector<std::pair<std::string, MGRegion>> curves;
    json coeffs;
    coeffs["su_max"] = su_max(params, kind);
    coeffs["se_max"] = se_max(params);
    for (Scheme scheme : {Scheme::Adaptive, Scheme::NonAdaptive}) {
        const char* name = scheme == Scheme::Adaptive ? "inner_adaptive" : "inner_nonadaptive";
        curves.emplace_back(name, polygon_from_constraints(inner_region(params, scheme, kind)));
        try {
            coeffs[std::string("slope_") + (scheme == Scheme::Adaptive ? "adaptive"
                                                                       : "nonadaptive")] =
                slope_coefficient(params, scheme, kind);
        } catch (const std::exception&) {
            // slope undefined (e.g. rho_f = 0); the region is still emitted
        }
    }
    if (kind == TopologyKind::WynerLine)
        curves.emplace_back("outer", polygon_from_constraints(outer_region(params, kind)));

    json config = config_json("region", f);
    if (f.format == "csv") {
        write_output(f.out, region_csv(config, curves));
    } else if (f.format == "svg") {
        write_output(f.out, region_svg(config, curves));
    } else {
        json j = {{"config", config}, {"coefficients", coeffs}};
        for (const auto& [name, region] : curves) j[name] = region.to_json();
        write_output(f.out, j.dump(2) + "\n");
    }
    return kExitOk;
}

int cmd_simulate(const CommonFlags& f, long trials, std::uint64_t seed, int workers,
                 const std::string& replay) {
    using namespace mgsim;
    ScenarioParams params = to_params(f);
    TopologyKind kind = to_kind(f);
    Scheme scheme = f.scheme == "adaptive" ? Scheme::Adaptive : Scheme::NonAdaptive;
    Topology topo = kind == TopologyKind::WynerLine ? Topology::wyner_line(f.K)
                                                    : Topology::hex_torus(f.W, f.H);
    json config = config_json("simulate", f, {{"trials", trials},
                                              {"seed", seed},
                                              {"workers", workers},
                                              {"K", topo.user_count()}});

    if (!replay.empty()) {
        std::ifstream in(replay);
        if (!in) throw std::runtime_error("cannot open replay file: " + replay);
        json jr;
        in >> jr;
        ActivityRealization real = ActivityRealization::from_json(jr);
        ScheduleResult res = run_scheme(params, scheme, topo, real);
        json j = {{"config", config},
                  {"realization", real.to_json()},
                  {"schedule", res.schedule.to_json()},
                  {"tally",
                   {{"urllc_total", res.tally.urllc_total}, {"sum_total", res.tally.sum_total}}},
                  {"validation", validate_schedule(topo, res.schedule, params).to_json()}};
        write_output(f.out, j.dump(2) + "\n");
        return kExitOk;
    }

    MCEstimate est = estimate(params, scheme, topo, trials, seed, workers);

    // reference point: the scheme's full-URLLC corner
    double target_su = su_max(params, kind);
    double target_sum;
    if (scheme == Scheme::Adaptive && !(kind == TopologyKind::WynerLine && params.rho >= 1.0)) {
        target_sum = target_su + adaptive_corner_se(params, kind);
    } else {
        auto cs = inner_region(params, scheme, kind);
        target_sum = target_su + cs.back().rhs - cs.back().coeff_u * target_su;
    }
    CompareReport su_cmp = compare(est, target_su, Which::Su, 4.0);
    CompareReport sum_cmp = compare(est, target_sum, Which::Sum, 4.0);

    json j = {{"config", config},
              {"estimate", est.to_json()},
              {"compare_su", su_cmp.to_json()},
              {"compare_sum", sum_cmp.to_json()}};
    if (f.format == "csv") {
        std::ostringstream os;
        os << config_comment(config);
        os << "schema,su_mean,sum_mean,se_mean,su_stderr,sum_stderr,trials,K,seed,"
              "target_su,target_sum,pass\n";
        os.precision(15);
        os << kCsvSchema << ',' << est.su_mean << ',' << est.sum_mean << ',' << est.se_mean
           << ',' << est.su_stderr << ',' << est.sum_stderr << ',' << est.trials << ','
           << est.network_size << ',' << est.seed << ',' << target_su << ',' << target_sum << ','
           << (su_cmp.pass && sum_cmp.pass ? 1 : 0) << '\n';
        write_output(f.out, os.str());
    } else {
        write_output(f.out, j.dump(2) + "\n");
    }
    return su_cmp.pass && sum_cmp.pass ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const std::string& only, double tail, int draws, const std::string& out) {
    using namespace mgsim;
    std::vector<CheckResult> results;
    auto want = [&](const char* name) { return only.empty() || only == name; };
    auto append = [&](std::vector<CheckResult> r) {
        results.insert(results.end(), r.begin(), r.end());
    };
    if (want("identities")) append(check_identities(tail));
    if (want("series")) append(check_series_vs_closed());
    if (want("schedules")) append(check_schedule_validity(draws, 20240));
    if (want("regions")) {
        append(check_region_nesting());
        append(check_bound_coincidence());
    }
    if (want("determinism")) append(check_determinism());

    std::ostringstream os;
    for (const auto& r : results) {
        os << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << "  max_err=" << r.max_err;
        if (!r.note.empty()) os << "  (" << r.note << ")";
        os << '\n';
    }
    write_output(out, os.str());
    return all_pass(results) ? kExitOk : kExitCheckFailed;
}

int cmd_sweep(const CommonFlags& f) {
    using namespace mgsim;
    std::vector<std::array<std::string, 5>> rows;
    auto fmt = [](double v) {
        std::ostringstream os;
        os.precision(15);
        os << v;
        return os.str();
    };
    for (double rho : {0.2, 0.4, 0.6, 0.8})
        for (double rho_f : {0.1, 0.3, 0.6, 0.9})
            for (int D : {2, 4, 10}) {
                for (const char* coop : {"both", "rx"})
                    for (int model : {1, 2})
                        for (const char* scheme : {"adaptive", "nonadaptive"}) {
                            CommonFlags g = f;
                            g.topo = "wyner";
                            g.coop = coop;
                            g.model = model;
                            g.rho = rho;
                            g.rho_f = rho_f;
                            g.D = D;
                            g.d_inf = false;
                            ScenarioParams p = to_params(g);
                            Scheme s = scheme == std::string("adaptive") ? Scheme::Adaptive
                                                                         : Scheme::NonAdaptive;
                            std::string name = std::string("wyner_") + coop + "_m" +
                                               std::to_string(model) + "_" + scheme;
                            rows.push_back({name, fmt(rho), fmt(rho_f), std::to_string(D),
                                            fmt(slope_coefficient(p, s, TopologyKind::WynerLine))});
                        }
            }
    json config = config_json("sweep", f);
    write_output(f.out, coefficient_csv(config, rows));
    return kExitOk;
}

int cmd_topology(const CommonFlags& f) {
    using namespace mgsim;
    Topology topo = f.topo == "wyner" ? Topology::wyner_line(f.K) : Topology::hex_torus(f.W, f.H);
    json j = {{"config", config_json("topology", f)}, {"topology", topo.to_json()}};
    write_output(f.out, j.dump(2) + "\n");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MG-region toolkit for randomly active interference networks"};
    app.require_subcommand(1);

    CommonFlags region_flags, sim_flags, sweep_flags, topo_flags;
    long trials = 200;
    std::uint64_t seed = 1;
    int workers = 1;
    std::string replay, verify_only, verify_out;
    double verify_tail = 1e-12;
    int verify_draws = 200;

    CLI::App* region = app.add_subcommand("region", "closed-form inner/outer MG regions");
    add_scenario_flags(region, region_flags, false);

    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo estimate vs analytic bound");
    add_scenario_flags(simulate, sim_flags, true);
    simulate->add_option("--trials", trials, "number of realizations");
    simulate->add_option("--seed", seed, "master seed");
    simulate->add_option("--workers", workers, "worker threads");
    simulate->add_option("--replay", replay, "re-run a logged realization (JSON)");
    simulate->add_option("--scheme", sim_flags.scheme, "adaptive | nonadaptive")
        ->check(CLI::IsMember({"adaptive", "nonadaptive"}));

    CLI::App* verify = app.add_subcommand("verify", "identity, series, schedule, region checks");
    verify->add_option("--only", verify_only,
                       "identities | series | schedules | regions | determinism");
    verify->add_option("--terms-tail", verify_tail, "geometric tail bound for truncation");
    verify->add_option("--draws", verify_draws, "draws per schedule-validity combination");
    verify->add_option("--out", verify_out, "output file (stdout when omitted)");

    CLI::App* sweep = app.add_subcommand("sweep", "coefficient table over the parameter grid");
    sweep->add_option("--format", sweep_flags.format)->check(CLI::IsMember({"csv"}));
    sweep->add_option("--out", sweep_flags.out, "output file");

    CLI::App* topology = app.add_subcommand("topology", "dump a topology as JSON");
    topology->add_option("--topo", topo_flags.topo)->check(CLI::IsMember({"wyner", "hex"}));
    topology->add_option("--K", topo_flags.K, "line length");
    topology->add_option("--W", topo_flags.W, "hex torus width");
    topology->add_option("--H", topo_flags.H, "hex torus height");
    topology->add_option("--out", topo_flags.out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (region->parsed()) return cmd_region(region_flags);
        if (simulate->parsed()) return cmd_simulate(sim_flags, trials, seed, workers, replay);
        if (verify->parsed()) return cmd_verify(verify_only, verify_tail, verify_draws, verify_out);
        if (sweep->parsed()) return cmd_sweep(sweep_flags);
        if (topology->parsed()) return cmd_topology(topo_flags);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCheckFailed;
    }
    return kExitOk;
}
