#include <doctest.h>

#include <cmath>

#include "mgsim/montecarlo.hpp"

using namespace mgsim;

namespace {

ScenarioParams params_of(double rho, double rho_f, Cooperation coop, ArrivalModel model, int D,
                         bool dinf = false) {
    ScenarioParams p;
    p.rho = rho;
    p.rho_f = rho_f;
    p.coop = coop;
    p.model = model;
    p.coop_rounds = D;
    p.d_infinite = dinf;
    return p;
}

}  // namespace

TEST_CASE("empty network estimates are exactly zero") {
    Topology line = Topology::wyner_line(100);
    auto p = params_of(0.0, 0.5, Cooperation::TxRx, ArrivalModel::Model1, 10);
    for (Scheme s : {Scheme::Adaptive, Scheme::NonAdaptive}) {
        MCEstimate est = estimate(p, s, line, 16, 3);
        CHECK(est.su_mean == 0.0);
        CHECK(est.sum_mean == 0.0);
    }
}

TEST_CASE("estimates are identical for any worker count") {
    Topology line = Topology::wyner_line(300);
    auto p = params_of(0.8, 0.6, Cooperation::RxOnly, ArrivalModel::Model2, 10);
    MCEstimate a = estimate(p, Scheme::Adaptive, line, 64, 99, 1);
    MCEstimate b = estimate(p, Scheme::Adaptive, line, 64, 99, 5);
    CHECK(a.to_json().dump() == b.to_json().dump());
}

TEST_CASE("delay-sensitive axis is unbiased") {
    Topology line = Topology::wyner_line(2000);
    auto p = params_of(0.8, 0.6, Cooperation::TxRx, ArrivalModel::Model1, 10);
    MCEstimate est = estimate(p, Scheme::Adaptive, line, 300, 17, 4);
    CHECK(std::abs(est.su_mean - 0.24) <= 4.0 * est.su_stderr);
    CHECK(est.se_mean == est.sum_mean - est.su_mean);
}

TEST_CASE("standard error shrinks like the square root of the trial count") {
    Topology line = Topology::wyner_line(500);
    auto p = params_of(0.6, 0.5, Cooperation::TxRx, ArrivalModel::Model1, 10);
    MCEstimate small = estimate(p, Scheme::Adaptive, line, 2000, 21, 4);
    MCEstimate big = estimate(p, Scheme::Adaptive, line, 4000, 21, 4);
    double ratio = big.sum_stderr / small.sum_stderr;
    CHECK(ratio == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(0.2));
}

TEST_CASE("fixed-slot finite-size effect fades as the line grows") {
    // exact expectation of the fixed-slot scheme vs its limit value
    auto p = params_of(0.8, 0.0, Cooperation::TxRx, ArrivalModel::Model1, 10);
    auto exact_mean = [&](int K) {
        int silent0 = K / 12;            // phase with slots at multiples of 12
        int silent1 = (K - 1) / 12 + 1;  // shifted slots, one-based slot 1 included
        return 0.8 * 0.5 * ((K - silent0) + (K - silent1)) / K;
    };
    const double limit = 0.8 * 11.0 / 12.0;
    double prev = 1.0;
    for (int K : {500, 1000, 2000, 4000}) {
        double gap = std::abs(exact_mean(K) - limit);
        CHECK(gap < prev);
        prev = gap;
    }
    // and the sampler agrees with the exact finite-size mean
    Topology line = Topology::wyner_line(500);
    MCEstimate est = estimate(p, Scheme::NonAdaptive, line, 600, 4, 4);
    CHECK(std::abs(est.sum_mean - exact_mean(500)) <= 4.0 * est.sum_stderr);
}

TEST_CASE("comparison gate") {
    MCEstimate est;
    est.network_size = 1000;
    est.sum_mean = 0.785;
    est.sum_stderr = 0.001;
    CHECK(compare(est, 0.7852, Which::Sum, 4.0).pass);
    est.sum_mean = 0.70;
    CHECK(!compare(est, 0.7852, Which::Sum, 4.0).pass);
    CHECK_THROWS_AS(compare(est, 0.7852, Which::Sum, 0.0), std::invalid_argument);
}

TEST_CASE("delay-sensitive mean passes the gate on the whole scheme grid") {
    Topology line = Topology::wyner_line(1000);
    struct Combo {
        Cooperation coop;
        ArrivalModel model;
        Scheme scheme;
    };
    const Combo combos[] = {
        {Cooperation::TxRx, ArrivalModel::Model1, Scheme::NonAdaptive},
        {Cooperation::TxRx, ArrivalModel::Model2, Scheme::NonAdaptive},
        {Cooperation::TxRx, ArrivalModel::Model1, Scheme::Adaptive},
        {Cooperation::TxRx, ArrivalModel::Model2, Scheme::Adaptive},
        {Cooperation::RxOnly, ArrivalModel::Model1, Scheme::Adaptive},
        {Cooperation::RxOnly, ArrivalModel::Model2, Scheme::Adaptive},
    };
    for (const Combo& c : combos) {
        auto p = params_of(0.7, 0.5, c.coop, c.model, 10);
        MCEstimate est = estimate(p, c.scheme, line, 120, 55, 4);
        CHECK(compare(est, 0.7 * 0.5 / 2.0, Which::Su, 4.0).pass);
    }
}

TEST_CASE("undefined scheme combinations are rejected") {
    Topology line = Topology::wyner_line(50);
    auto p = params_of(0.8, 0.6, Cooperation::RxOnly, ArrivalModel::Model1, 10);
    CHECK_THROWS_AS(estimate(p, Scheme::NonAdaptive, line, 8, 1), std::invalid_argument);

    Topology hex = Topology::hex_torus(6, 6);
    auto ph = params_of(0.8, 0.6, Cooperation::RxOnly, ArrivalModel::Model1, 0, true);
    CHECK_THROWS_AS(estimate(ph, Scheme::NonAdaptive, hex, 8, 1), std::invalid_argument);
    CHECK_NOTHROW(estimate(ph, Scheme::Adaptive, hex, 8, 1));
}
