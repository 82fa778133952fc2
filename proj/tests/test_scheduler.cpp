#include <doctest.h>

#include <cmath>
#include <numeric>
#include <set>
#include <vector>

#include "exact_oracle.hpp"
#include "mgsim/scheduler.hpp"

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

ActivityRealization make_real(std::vector<int> a, std::vector<int> b) {
    ActivityRealization r;
    for (int v : a) r.active.push_back(static_cast<std::uint8_t>(v));
    for (int v : b) r.urllc.push_back(static_cast<std::uint8_t>(v));
    return r;
}

ActivityRealization all_active(int K) {
    return {std::vector<std::uint8_t>(K, 1), std::vector<std::uint8_t>(K, 0)};
}

}  // namespace

TEST_CASE("per-run MG totals") {
    CHECK(msum_full(20, 6) == 18);
    CHECK(msum_full(12, 10) == 11);
    for (long l = 1; l <= 11; ++l) CHECK(msum_full(l, 10) == l);

    CHECK(msum_red(11, 10) == 10);
    CHECK(msum_red(10, 10) == 10);
    for (long D : {2L, 4L, 6L, 10L})
        for (long l = 1; l <= 10000; ++l) {
            long diff = msum_full(l, D) - msum_red(l, D);
            CHECK(diff >= 0);
            CHECK(diff <= 1);
        }
}

TEST_CASE("rule-deciding positions") {
    auto set = lset(0, 20, 6);
    CHECK(set == std::vector<int>{1, 5, 9, 13, 17});
    CHECK(lset_size(20, 6) == 5);

    for (long D : {2L, 4L, 6L, 10L})
        for (int l = 1; l <= 500; ++l) {
            CHECK(lset_size(l, D) == static_cast<long>(lset(0, l, static_cast<int>(D)).size()));
            // the two per-block anchors are distinct only for D >= 4
            if (D >= 4 && l % (D + 2) == 1) CHECK(lset_size(l, D) == 2 * (l / (D + 2)));
        }
    CHECK_THROWS_AS(lset(0, 5, 0), std::invalid_argument);
}

TEST_CASE("fixed-slot schedule") {
    auto p = params_of(0.8, 0.6, Cooperation::TxRx, ArrivalModel::Model1, 10);
    auto res = schedule_nonadaptive_wyner(p, all_active(24));
    CHECK(res.tally.sum_total == doctest::Approx(22.0));  // two users silenced per phase
    CHECK(res.tally.urllc_total == 0.0);

    // each phase silences a fixed slot set of the opposite parity
    auto withB = make_real(std::vector<int>(24, 1), [] {
        std::vector<int> b(24, 0);
        b[0] = b[5] = b[11] = 1;
        return b;
    }());
    auto res2 = schedule_nonadaptive_wyner(p, withB);
    CHECK(res2.tally.urllc_total == doctest::Approx(1.5));  // three arrivals, half weight
    // user 11 sits on a phase-0 silent slot but is served in phase 1
    CHECK(res2.schedule.phases[1][11] == Role::Urllc);
    CHECK(res2.schedule.phases[0][11] == Role::Silent);
}

TEST_CASE("adaptive tx+rx reduces to the plain rule without arrivals") {
    auto p = params_of(0.8, 0.0, Cooperation::TxRx, ArrivalModel::Model1, 10);
    auto real = make_real({1, 1, 1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1},
                          std::vector<int>(17, 0));
    auto res = schedule_adaptive_wyner_txrx(p, real);
    long expect = 0;
    for (const auto& net : active_subnets(real)) expect += msum_full(net.length, 10);
    CHECK(res.tally.sum_total == doctest::Approx(static_cast<double>(expect)));
}

TEST_CASE("adaptive tx+rx short run keeps every user on air") {
    // run of length D starting off-phase with a scheduled arrival on a
    // rule-deciding slot: still carries its full length
    const int D = 4;
    auto p = params_of(0.8, 0.6, Cooperation::TxRx, ArrivalModel::Model1, D);
    std::vector<int> a(8, 0), b(8, 0);
    for (int u = 1; u <= 4; ++u) a[u] = 1;  // run starts at user 1 (off phase 0)
    b[2] = 1;                               // in-phase arrival inside the deciding set
    auto res = schedule_adaptive_wyner_txrx(p, make_real(a, b));
    const auto& roles = res.schedule.phases[0];
    int transmitting = 0;
    for (int u = 1; u <= 4; ++u) transmitting += roles[u] != Role::Silent;
    CHECK(transmitting == 4);
    CHECK(roles[2] == Role::Urllc);
    CHECK(roles[4] == Role::ActsAsUrllc);  // slot D of the reduced arrangement
}

TEST_CASE("adaptive tx+rx long run loses one slot") {
    const int D = 4;
    auto p = params_of(0.8, 0.6, Cooperation::TxRx, ArrivalModel::Model1, D);
    std::vector<int> a(14, 0), b(14, 0);
    for (int u = 1; u <= 12; ++u) a[u] = 1;  // length 12 > D, starts off phase 0
    b[2] = 1;
    auto res = schedule_adaptive_wyner_txrx(p, make_real(a, b));
    const auto& roles = res.schedule.phases[0];
    CHECK(roles[1 + D] == Role::Silent);  // user start+D deactivated
    long on_air = 0;
    for (int u = 1; u <= 12; ++u) on_air += roles[u] != Role::Silent;
    CHECK(on_air == msum_red(12, D));
}

TEST_CASE("rx-only schedule by hand") {
    auto p = params_of(0.8, 0.6, Cooperation::RxOnly, ArrivalModel::Model1, 10);
    auto res = schedule_adaptive_wyner_rxonly(p, make_real({1, 1, 1}, {0, 1, 0}));
    const auto& phase1 = res.schedule.phases[1];  // serves even-labeled users
    CHECK(phase1[1] == Role::Urllc);
    CHECK(phase1[0] == Role::Silent);
    CHECK(phase1[2] == Role::Silent);
    double phase_sum = 0;
    for (Role r : phase1) phase_sum += r != Role::Silent;
    CHECK(phase_sum == 1.0);

    // without arrivals the tally matches the plain decomposition
    auto p0 = params_of(0.8, 0.0, Cooperation::RxOnly, ArrivalModel::Model1, 10);
    auto real = make_real({1, 1, 1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, std::vector<int>(15, 0));
    auto res0 = schedule_adaptive_wyner_rxonly(p0, real);
    long expect = 0;
    for (const auto& net : active_subnets(real)) expect += msum_full(net.length, 10);
    CHECK(res0.tally.sum_total == doctest::Approx(static_cast<double>(expect)));
}

TEST_CASE("hex schedules") {
    Topology topo = Topology::hex_torus(6, 6);
    HexPartition part = hex_color_partition(topo);

    auto p = params_of(1.0, 0.0, Cooperation::TxRx, ArrivalModel::Model1, 0, true);
    auto res = schedule_hex(p, all_active(36), topo, part);
    CHECK(res.tally.sum_total == doctest::Approx(36.0));  // every user on air in every phase

    // delay-sensitive users transmit in their class phase only
    RandomStream s(5);
    auto p2 = params_of(0.8, 0.6, Cooperation::RxOnly, ArrivalModel::Model2, 0, true);
    auto real = sample_activity(p2, 36, s);
    auto res2 = schedule_hex(p2, real, topo, part);
    for (int u = 0; u < 36; ++u) {
        if (!real.urllc[u]) continue;
        for (int ph = 0; ph < 3; ++ph)
            CHECK((res2.schedule.phases[ph][u] == Role::Urllc) == (part.color[u] == ph));
    }
    CHECK(validate_schedule(topo, res2.schedule, p2).ok());
}

TEST_CASE("schedule validation flags violations") {
    Topology line = Topology::wyner_line(6);
    auto p = params_of(0.8, 0.6, Cooperation::TxRx, ArrivalModel::Model1, 10);

    PhasedSchedule bad;
    bad.phase_weights = {1.0};
    bad.phases = {{Role::Embb, Role::Embb, Role::Urllc, Role::Urllc, Role::Embb, Role::Embb}};
    auto report = validate_schedule(line, bad, p);
    REQUIRE(!report.ok());
    CHECK(report.violations[0].condition == 1);
    CHECK(report.violations[0].users == std::vector<int>{2, 3});

    auto prx = params_of(0.8, 0.6, Cooperation::RxOnly, ArrivalModel::Model1, 10);
    PhasedSchedule mixed;
    mixed.phase_weights = {1.0};
    mixed.phases = {{Role::Silent, Role::Embb, Role::Urllc, Role::Silent, Role::Silent,
                     Role::Silent}};
    auto report3 = validate_schedule(line, mixed, prx);
    bool has_c3 = false;
    for (const auto& v : report3.violations) has_c3 |= v.condition == 3;
    CHECK(has_c3);

    // a run of eMBB users too long for the cooperation budget
    PhasedSchedule wide;
    wide.phase_weights = {1.0};
    wide.phases = {std::vector<Role>(6, Role::Embb)};
    auto p4 = params_of(0.8, 0.6, Cooperation::TxRx, ArrivalModel::Model1, 4);
    auto report4 = validate_schedule(line, wide, p4);
    bool has_c2 = false;
    for (const auto& v : report4.violations) has_c2 |= v.condition == 2;
    CHECK(has_c2);
    // the same run is fine with one more hop of reach
    auto p5 = params_of(0.8, 0.6, Cooperation::RxOnly, ArrivalModel::Model1, 4);
    PhasedSchedule narrower;
    narrower.phase_weights = {1.0};
    narrower.phases = {{Role::Embb, Role::Embb, Role::Embb, Role::Embb, Role::Embb,
                        Role::Silent}};
    CHECK(validate_schedule(line, narrower, p5).ok());
}

TEST_CASE("schemes produced are valid") {
    Topology line = Topology::wyner_line(40);
    for (auto coop : {Cooperation::TxRx, Cooperation::RxOnly})
        for (auto model : {ArrivalModel::Model1, ArrivalModel::Model2})
            for (int D : {2, 10})
                for (int i = 0; i < 50; ++i) {
                    auto p = params_of(0.7, 0.6, coop, model, D);
                    RandomStream s = RandomStream::for_trial(31, i);
                    auto real = sample_activity(p, 40, s);
                    ScheduleResult res = coop == Cooperation::TxRx
                                             ? schedule_adaptive_wyner_txrx(p, real)
                                             : schedule_adaptive_wyner_rxonly(p, real);
                    auto report = validate_schedule(line, res.schedule, p);
                    INFO("coop=", static_cast<int>(coop), " model=", static_cast<int>(model),
                         " D=", D, " draw=", i);
                    CHECK(report.ok());
                }
}

TEST_CASE("adding an active user never hurts short-run totals") {
    // every run below the cooperation budget carries its full length
    const int K = 8, D = 10;
    for (auto model : {ArrivalModel::Model1, ArrivalModel::Model2}) {
        auto p = params_of(0.5, 0.5, Cooperation::TxRx, model, D);
        oracle::for_each_pattern(K, 0.5, 0.5, [&](const ActivityRealization& real, double) {
            double base = schedule_adaptive_wyner_txrx(p, real).tally.sum_total;
            for (int u = 0; u < K; ++u) {
                if (real.active[u]) continue;
                ActivityRealization grown = real;
                grown.active[u] = 1;
                for (int b : {0, 1}) {
                    grown.urllc[u] = static_cast<std::uint8_t>(b);
                    CHECK(schedule_adaptive_wyner_txrx(p, grown).tally.sum_total >=
                          base - 1e-12);
                }
            }
        });
    }
}

TEST_CASE("schedule json dump") {
    auto p = params_of(0.8, 0.6, Cooperation::TxRx, ArrivalModel::Model1, 10);
    auto res = schedule_nonadaptive_wyner(p, all_active(4));
    auto j = res.schedule.to_json();
    CHECK(j["phases"].size() == 2);
    CHECK(j["phases"][0].size() == 4);
    CHECK(j["phases"][0][0].contains("role"));
}
