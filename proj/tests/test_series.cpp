#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "mgsim/series.hpp"

using namespace mgsim;

namespace {

IdentityArgs args(double c, double d, long A, long B) { return {c, d, A, B}; }

}  // namespace

TEST_CASE("floor sum point values") {
    CHECK(identity_closed(IdentityId::FloorSimple, args(0.5, 1, 2, 2)) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(identity_truncated(IdentityId::FloorSimple, args(0.5, 1, 2, 2), 3) ==
          doctest::Approx(0.375).epsilon(1e-15));

    // specializing d = 1 removes the second weight
    for (double c : {0.2, 0.7})
        for (long A : {2L, 6L}) {
            CHECK(identity_closed(IdentityId::GeomFloor, args(c, 1.0, A, A)) ==
                  doctest::Approx(identity_closed(IdentityId::FloorSimple, args(c, 1, A, 2)))
                      .epsilon(1e-13));
            CHECK(identity_closed(IdentityId::GeomFloorShiftDiff, args(c, 1.0, A, A)) ==
                  doctest::Approx(identity_closed(IdentityId::FloorSimpleDiff, args(c, 1, A, 2)))
                      .epsilon(1e-13));
        }

    // empty-sum limit
    for (IdentityId id : {IdentityId::GeomFloor, IdentityId::FloorSimple, IdentityId::EllFloor,
                          IdentityId::CeilHalfFloor, IdentityId::EllGeom})
        CHECK(identity_closed(id, args(0.0, 0.5, 4, 2)) == 0.0);
}

TEST_CASE("truncated sums are monotone for nonnegative summands") {
    IdentityArgs a = args(0.6, 0.5, 4, 2);
    double prev = 0.0;
    for (long n = 1; n <= 64; n *= 2) {
        double v = identity_truncated(IdentityId::GeomFloor, a, n);
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("closed forms match truncated sums") {
    static const IdentityId ids[] = {
        IdentityId::GeomFloor,     IdentityId::GeomFloorShiftDiff, IdentityId::FloorSimple,
        IdentityId::FloorSimpleDiff, IdentityId::CeilVariant,      IdentityId::CeilShiftDiff,
        IdentityId::EllFloor,      IdentityId::EvenFloor,          IdentityId::EvenEllFloor,
        IdentityId::EvenShiftDiff, IdentityId::CeilHalfFloor,      IdentityId::CeilHalfEll,
        IdentityId::CeilHalfShiftDiff, IdentityId::GeomBasic,      IdentityId::EllGeom,
        IdentityId::EllSqGeom,
    };
    for (IdentityId id : ids) {
        for (double c : {0.1, 0.5, 0.9}) {
            long terms = terms_for_tail(c, 1e-13);
            for (double d : {0.0, 0.3, 1.0})
                for (long A : {2L, 8L, 12L})
                    for (long B : {2L, A}) {
                        IdentityArgs a = args(c, d, A, B);
                        double closed;
                        try {
                            closed = identity_closed(id, a);
                        } catch (const std::domain_error&) {
                            continue;
                        }
                        double approx = identity_truncated(id, a, terms);
                        INFO(identity_name(id), " c=", c, " d=", d, " A=", A, " B=", B);
                        CHECK(std::abs(closed - approx) < 1e-9);
                    }
        }
    }
}

TEST_CASE("even-index weighted sum with larger periods") {
    // the naive halving of the all-index formula is wrong here; make sure the
    // exported closed form tracks the series away from B = 2 as well
    IdentityArgs a = args(0.5, 0.5, 4, 4);
    double closed = identity_closed(IdentityId::EvenEllFloor, a);
    double series = identity_truncated(IdentityId::EvenEllFloor, a, 400);
    CHECK(closed == doctest::Approx(series).epsilon(1e-12));
    CHECK(closed == doctest::Approx(0.682622).epsilon(1e-5));
}

TEST_CASE("the truncated oracle can discriminate") {
    // a corrupted closed form (flipped sign) must disagree with the series
    IdentityArgs a = args(0.5, 1.0, 2, 2);
    double corrupted = -identity_closed(IdentityId::FloorSimple, a);
    long terms = terms_for_tail(a.c, 1e-12);
    CHECK(std::abs(corrupted - identity_truncated(IdentityId::FloorSimple, a, terms)) > 1e-8);
}

TEST_CASE("domain checks name the violated precondition") {
    CHECK_THROWS_WITH_AS(identity_closed(IdentityId::GeomFloor, args(1.0, 0.5, 4, 2)),
                         "GeomFloor: c must lie in [0,1)", std::domain_error);
    CHECK_THROWS_WITH_AS(identity_closed(IdentityId::GeomFloor, args(0.5, 0.5, 4, 3)),
                         "GeomFloor: B must divide A", std::domain_error);
    CHECK_THROWS_WITH_AS(identity_closed(IdentityId::CeilHalfFloor, args(0.5, 0.5, 3, 2)),
                         "CeilHalfFloor: A must be even", std::domain_error);
    CHECK_THROWS_AS(identity_closed(IdentityId::EllFloor, args(0.5, 1.5, 4, 2)),
                    std::domain_error);
}

TEST_CASE("tail-driven truncation lengths") {
    for (double c : {0.1, 0.5, 0.9}) {
        long n = terms_for_tail(c, 1e-12);
        // the bound dominates the worst summand family
        double tail = 0.0;
        for (long l = n + 1; l <= n + 4000; ++l)
            tail += std::pow(c, static_cast<double>(l)) * static_cast<double>(l) *
                    static_cast<double>(l);
        CHECK(tail < 1e-12);
        CHECK(terms_for_tail(c, 1e-6) <= n);
    }
}

TEST_CASE("ceil-weight linear series has no exported closed form") {
    // against the B = 2 closed form that does exist
    double via_closed = identity_closed(IdentityId::CeilHalfEll, args(0.6, 0.4, 2, 2));
    CHECK(ell_ceil_series(0.6, 0.4, 2, 2000) == doctest::Approx(via_closed).epsilon(1e-12));
    // other periods are evaluated term by term only
    double b3 = ell_ceil_series(0.6, 0.4, 3, 2000);
    CHECK(b3 > via_closed);  // milder discount on the arrival weight
    CHECK_THROWS_AS(ell_ceil_series(0.6, 0.4, 1, 10), std::domain_error);
}
