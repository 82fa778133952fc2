#include <doctest.h>

#include <cmath>
#include <random>

#include "mgsim/region.hpp"

using namespace mgsim;

namespace {

bool has_vertex(const MGRegion& r, double x, double y, double tol = 1e-9) {
    for (const auto& v : r.vertices)
        if (std::abs(v.x - x) < tol && std::abs(v.y - y) < tol) return true;
    return false;
}

ScenarioParams params_of(double rho, double rho_f, Cooperation coop, ArrivalModel model, int D) {
    ScenarioParams p;
    p.rho = rho;
    p.rho_f = rho_f;
    p.coop = coop;
    p.model = model;
    p.coop_rounds = D;
    return p;
}

}  // namespace

TEST_CASE("trapezoid from two constraints") {
    MGRegion r = polygon_from_constraints({{1, 0, 0.24}, {1, 1, 0.7852}});
    REQUIRE(r.vertices.size() == 4);
    CHECK(has_vertex(r, 0, 0));
    CHECK(has_vertex(r, 0.24, 0));
    CHECK(has_vertex(r, 0.24, 0.5452));
    CHECK(has_vertex(r, 0, 0.7852));
    CHECK(!r.degenerate);
}

TEST_CASE("rectangle from two single-axis constraints") {
    MGRegion r = polygon_from_constraints({{1, 0, 0.3}, {0, 1, 0.5}});
    REQUIRE(r.vertices.size() == 4);
    CHECK(has_vertex(r, 0.3, 0.5));
}

TEST_CASE("vertices satisfy every constraint") {
    std::mt19937 gen(11);
    std::uniform_real_distribution<double> uni(0.05, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<LinearConstraint> cs{{1, 0, uni(gen)}, {0, 1, uni(gen)}};
        int extra = trial % 4;
        for (int i = 0; i < extra; ++i) cs.push_back({uni(gen), 1.0, uni(gen)});
        MGRegion r = polygon_from_constraints(cs);
        for (const auto& v : r.vertices) {
            CHECK(v.x >= -1e-9);
            CHECK(v.y >= -1e-9);
            for (const auto& c : cs) CHECK(c.coeff_u * v.x + c.coeff_e * v.y <= c.rhs + 1e-9);
        }
    }
}

TEST_CASE("degenerate and unbounded systems") {
    MGRegion flat = polygon_from_constraints({{1, 0, 0.0}, {0, 1, 0.5}});
    CHECK(flat.degenerate);  // a segment on the S_e axis
    CHECK(flat.vertices.size() == 2);

    MGRegion point = polygon_from_constraints({{1, 0, 0.0}, {0, 1, 0.0}});
    CHECK(point.degenerate);

    CHECK_THROWS_AS(polygon_from_constraints({{1, 0, 0.3}}), std::domain_error);
    CHECK_THROWS_AS(polygon_from_constraints({{0, 1, 0.3}}), std::domain_error);
    CHECK_THROWS_AS(polygon_from_constraints({{1, 0, 0.3}, {0, -1, 0.5}}), std::domain_error);
}

TEST_CASE("time-sharing hull") {
    MGRegion r = timeshare_hull({{0.0, 0.32}, {0.24, 0.2432}});
    REQUIRE(r.vertices.size() == 4);
    CHECK(has_vertex(r, 0, 0));
    CHECK(has_vertex(r, 0.24, 0));
    CHECK(has_vertex(r, 0.24, 0.2432));
    CHECK(has_vertex(r, 0, 0.32));

    MGRegion rect = timeshare_hull({{0.2, 0.4}});
    REQUIRE(rect.vertices.size() == 4);
    CHECK(has_vertex(rect, 0.2, 0.4));
    CHECK(has_vertex(rect, 0, 0.4));
}

TEST_CASE("hull of the corner points equals the constraint polygon") {
    auto p = params_of(0.8, 0.6, Cooperation::TxRx, ArrivalModel::Model1, 10);
    MGRegion direct =
        polygon_from_constraints(inner_region(p, Scheme::Adaptive, TopologyKind::WynerLine));
    std::vector<Vec2> corners;
    for (const auto& v : direct.vertices)
        if (v.x > 1e-12 || v.y > 1e-12) corners.push_back(v);
    MGRegion hull = timeshare_hull(corners);
    CHECK(is_subset(direct, hull, 500).contained);
    CHECK(is_subset(hull, direct, 500).contained);
}

TEST_CASE("region containment") {
    auto p = params_of(0.8, 0.6, Cooperation::TxRx, ArrivalModel::Model1, 10);
    MGRegion inner =
        polygon_from_constraints(inner_region(p, Scheme::Adaptive, TopologyKind::WynerLine));
    MGRegion outer = polygon_from_constraints(outer_region(p, TopologyKind::WynerLine));
    CHECK(is_subset(inner, outer, 500).contained);
    CHECK(!is_subset(outer, inner, 500).contained);

    auto prx = params_of(0.8, 0.6, Cooperation::RxOnly, ArrivalModel::Model1, 10);
    MGRegion inner_rx =
        polygon_from_constraints(inner_region(prx, Scheme::Adaptive, TopologyKind::WynerLine));
    MGRegion outer_rx = polygon_from_constraints(outer_region(prx, TopologyKind::WynerLine));
    CHECK(is_subset(inner_rx, outer_rx, 500).contained);

    CHECK_THROWS_AS(is_subset(inner, outer, 50), std::invalid_argument);
}
