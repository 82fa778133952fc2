#include "mgsim/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mgsim/analytic.hpp"
#include "mgsim/montecarlo.hpp"
#include "mgsim/region.hpp"
#include "mgsim/scheduler.hpp"
#include "mgsim/series.hpp"

namespace mgsim {

namespace {

const double kGridRho[] = {0.2, 0.4, 0.6, 0.8};
const double kGridRhoF[] = {0.1, 0.3, 0.6, 0.9};
const int kGridD[] = {2, 4, 10};

std::string fmt(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

CheckResult combine(std::string name, double max_err, double tolerance, std::string note = {}) {
    CheckResult r;
    r.name = std::move(name);
    r.max_err = max_err;
    r.pass = max_err <= tolerance;
    r.note = std::move(note);
    return r;
}

ScenarioParams make_params(double rho, double rho_f, int D, ArrivalModel m, Cooperation c,
                           bool dinf = false) {
    ScenarioParams p;
    p.rho = rho;
    p.rho_f = rho_f;
    p.coop_rounds = D;
    p.d_infinite = dinf;
    p.model = m;
    p.coop = c;
    return p;
}

struct SchemeCombo {
    const char* name;
    Cooperation coop;
    ArrivalModel model;
    Scheme scheme;
};

const SchemeCombo kWynerCombos[] = {
    {"wyner txrx m1 nonadaptive", Cooperation::TxRx, ArrivalModel::Model1, Scheme::NonAdaptive},
    {"wyner txrx m2 nonadaptive", Cooperation::TxRx, ArrivalModel::Model2, Scheme::NonAdaptive},
    {"wyner txrx m1 adaptive", Cooperation::TxRx, ArrivalModel::Model1, Scheme::Adaptive},
    {"wyner txrx m2 adaptive", Cooperation::TxRx, ArrivalModel::Model2, Scheme::Adaptive},
    {"wyner rx m1 adaptive", Cooperation::RxOnly, ArrivalModel::Model1, Scheme::Adaptive},
    {"wyner rx m2 adaptive", Cooperation::RxOnly, ArrivalModel::Model2, Scheme::Adaptive},
};

const SchemeCombo kHexCombos[] = {
    {"hex txrx m1", Cooperation::TxRx, ArrivalModel::Model1, Scheme::Adaptive},
    {"hex txrx m2", Cooperation::TxRx, ArrivalModel::Model2, Scheme::Adaptive},
    {"hex rx m1", Cooperation::RxOnly, ArrivalModel::Model1, Scheme::Adaptive},
    {"hex rx m2", Cooperation::RxOnly, ArrivalModel::Model2, Scheme::Adaptive},
};

}  // namespace

bool all_pass(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

std::vector<CheckResult> check_identities(double tail_bound, double tolerance) {
    static const IdentityId kIds[] = {
        IdentityId::GeomFloor,     IdentityId::GeomFloorShiftDiff, IdentityId::FloorSimple,
        IdentityId::FloorSimpleDiff, IdentityId::CeilVariant,      IdentityId::CeilShiftDiff,
        IdentityId::EllFloor,      IdentityId::EvenFloor,          IdentityId::EvenEllFloor,
        IdentityId::EvenShiftDiff, IdentityId::CeilHalfFloor,      IdentityId::CeilHalfEll,
        IdentityId::CeilHalfShiftDiff, IdentityId::GeomBasic,      IdentityId::EllGeom,
        IdentityId::EllSqGeom,
    };
    std::vector<CheckResult> out;
    for (IdentityId id : kIds) {
        double max_err = 0.0;
        long points = 0;
        for (double c = 0.1; c < 0.95; c += 0.1) {
            long terms = terms_for_tail(c, tail_bound);
            for (double d : {0.0, 0.3, 0.7, 1.0}) {
                for (long A : {2L, 4L, 8L, 12L}) {
                    for (long B : {2L, A}) {
                        IdentityArgs args{c, d, A, B};
                        double closed;
                        try {
                            closed = identity_closed(id, args);
                        } catch (const std::domain_error&) {
                            continue;  // outside this identity's domain
                        }
                        double trunc = identity_truncated(id, args, terms);
                        max_err = std::max(max_err, std::abs(closed - trunc));
                        ++points;
                    }
                }
            }
        }
        out.push_back(combine(std::string("identity ") + identity_name(id), max_err, tolerance,
                              fmt(points) + " grid points"));
    }
    return out;
}

std::vector<CheckResult> check_series_vs_closed() {
    std::vector<CheckResult> out;
    struct Case {
        const char* name;
        Cooperation coop;
        ArrivalModel model;
    };
    const Case cases[] = {
        {"corner series txrx m1", Cooperation::TxRx, ArrivalModel::Model1},
        {"corner series txrx m2", Cooperation::TxRx, ArrivalModel::Model2},
        {"corner series rx m1", Cooperation::RxOnly, ArrivalModel::Model1},
        {"corner series rx m2", Cooperation::RxOnly, ArrivalModel::Model2},
    };
    for (const Case& c : cases) {
        double max_err = 0.0;
        for (double rho : {0.2, 0.5, 0.8})
            for (double rho_f : kGridRhoF)
                for (int D : kGridD) {
                    ScenarioParams p = make_params(rho, rho_f, D, c.model, c.coop);
                    double closed = adaptive_corner_se(p, TopologyKind::WynerLine);
                    double series = adaptive_corner_se_series(p);
                    max_err = std::max(max_err, std::abs(closed - series));
                }
        out.push_back(combine(c.name, max_err, 1e-6));
    }
    return out;
}

std::vector<CheckResult> check_schedule_validity(int draws, std::uint64_t seed) {
    std::vector<CheckResult> out;
    long violations = 0, coverage_errors = 0, bound_errors = 0;
    std::uint64_t trial = 0;

    auto run = [&](const SchemeCombo& combo, const ScenarioParams& params, const Topology& topo) {
        for (int i = 0; i < draws; ++i) {
            RandomStream stream = RandomStream::for_trial(seed, trial++);
            ActivityRealization real = sample_activity(params, topo.user_count(), stream);
            ScheduleResult res = run_scheme(params, combo.scheme, topo, real);
            if (!validate_schedule(topo, res.schedule, params).ok()) ++violations;

            long n_urllc = 0, n_active = 0;
            for (int u = 0; u < real.user_count(); ++u) {
                n_urllc += real.urllc[u];
                n_active += real.active[u];
            }
            if (res.tally.urllc_total < -1e-12 ||
                res.tally.urllc_total > n_urllc + 1e-12 ||
                res.tally.sum_total > n_active + 1e-12 ||
                res.tally.urllc_total > res.tally.sum_total + 1e-12)
                ++bound_errors;

            // every delay-sensitive arrival is served in exactly one phase
            for (int u = 0; u < real.user_count(); ++u) {
                if (!real.urllc[u]) continue;
                int served = 0;
                for (const auto& roles : res.schedule.phases)
                    if (roles[u] == Role::Urllc) ++served;
                if (served != 1) ++coverage_errors;
            }
        }
    };

    for (const SchemeCombo& combo : kWynerCombos) {
        Topology line = Topology::wyner_line(48);
        for (double rho : {0.3, 0.8})
            for (double rho_f : {0.5, 0.9})
                for (int D : {2, 10})
                    run(combo, make_params(rho, rho_f, D, combo.model, combo.coop), line);
    }
    Topology hex = Topology::hex_torus(6, 6);
    for (const SchemeCombo& combo : kHexCombos)
        for (double rho : {0.3, 0.8})
            for (double rho_f : {0.5, 0.9})
                run(combo, make_params(rho, rho_f, 0, combo.model, combo.coop, true), hex);

    out.push_back(combine("schedule validity sweep", static_cast<double>(violations), 0.0,
                          fmt(draws) + " draws per combination"));
    out.push_back(combine("tally bounds", static_cast<double>(bound_errors), 0.0));
    out.push_back(combine("phase coverage", static_cast<double>(coverage_errors), 0.0));
    return out;
}

std::vector<CheckResult> check_region_nesting() {
    double max_violation = 0.0;
    double max_dominance = 0.0;
    for (Cooperation coop : {Cooperation::TxRx, Cooperation::RxOnly})
        for (ArrivalModel model : {ArrivalModel::Model1, ArrivalModel::Model2})
            for (double rho : kGridRho)
                for (double rho_f : kGridRhoF)
                    for (int D : kGridD) {
                        ScenarioParams p = make_params(rho, rho_f, D, model, coop);
                        MGRegion outer =
                            polygon_from_constraints(outer_region(p, TopologyKind::WynerLine));
                        MGRegion na = polygon_from_constraints(
                            inner_region(p, Scheme::NonAdaptive, TopologyKind::WynerLine));
                        MGRegion ad = polygon_from_constraints(
                            inner_region(p, Scheme::Adaptive, TopologyKind::WynerLine));
                        max_violation =
                            std::max(max_violation, is_subset(na, outer, 256).max_violation);
                        max_violation =
                            std::max(max_violation, is_subset(ad, outer, 256).max_violation);
                        max_dominance =
                            std::max(max_dominance, is_subset(na, ad, 256).max_violation);
                    }
    // hex: the adaptive Rx-only bound dominates the non-adaptive one
    for (ArrivalModel model : {ArrivalModel::Model1, ArrivalModel::Model2})
        for (double rho : kGridRho)
            for (double rho_f : kGridRhoF) {
                ScenarioParams p = make_params(rho, rho_f, 0, model, Cooperation::RxOnly, true);
                MGRegion na = polygon_from_constraints(
                    inner_region(p, Scheme::NonAdaptive, TopologyKind::HexTorus));
                MGRegion ad = polygon_from_constraints(
                    inner_region(p, Scheme::Adaptive, TopologyKind::HexTorus));
                max_dominance = std::max(max_dominance, is_subset(na, ad, 256).max_violation);
            }
    return {combine("inner regions inside outer regions", max_violation, 1e-9),
            combine("adaptive bounds dominate non-adaptive", max_dominance, 1e-9)};
}

std::vector<CheckResult> check_bound_coincidence() {
    double max_err = 0.0;
    auto coincide = [&](const ScenarioParams& p, Scheme scheme) {
        MGRegion inner =
            polygon_from_constraints(inner_region(p, scheme, TopologyKind::WynerLine));
        MGRegion outer = polygon_from_constraints(outer_region(p, TopologyKind::WynerLine));
        max_err = std::max(max_err, is_subset(inner, outer, 256).max_violation);
        max_err = std::max(max_err, is_subset(outer, inner, 256).max_violation);
    };
    for (double rho_f : {0.3, 0.6}) {
        coincide(make_params(1.0, rho_f, 10, ArrivalModel::Model1, Cooperation::TxRx),
                 Scheme::Adaptive);
        // unbounded cooperation: flag form and a large-D proxy
        for (ArrivalModel model : {ArrivalModel::Model1, ArrivalModel::Model2}) {
            coincide(make_params(0.8, rho_f, 0, model, Cooperation::TxRx, true),
                     Scheme::Adaptive);
            coincide(make_params(0.8, rho_f, 1000000, model, Cooperation::TxRx),
                     Scheme::Adaptive);
        }
    }
    return {combine("bounds coincide in the exact regimes", max_err, 1e-6)};
}

std::vector<CheckResult> check_determinism() {
    ScenarioParams p = make_params(0.8, 0.6, 10, ArrivalModel::Model1, Cooperation::TxRx);
    Topology line = Topology::wyner_line(400);
    MCEstimate one = estimate(p, Scheme::Adaptive, line, 96, 12345, 1);
    MCEstimate many = estimate(p, Scheme::Adaptive, line, 96, 12345, 8);
    bool same = one.to_json().dump() == many.to_json().dump();
    CheckResult r;
    r.name = "estimates identical across worker counts";
    r.pass = same;
    r.max_err = same ? 0.0 : 1.0;
    return {r};
}

}  // namespace mgsim
