#include "mgsim/series.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mgsim {

namespace {

[[noreturn]] void reject(IdentityId id, const char* what) {
    throw std::domain_error(std::string(identity_name(id)) + ": " + what);
}

struct Checked {
    IdentityId id;
    const IdentityArgs& a;

    void c_unit() const {
        if (!(a.c >= 0.0 && a.c < 1.0)) reject(id, "c must lie in [0,1)");
    }
    void d_unit() const {
        if (!(a.d >= 0.0 && a.d <= 1.0)) reject(id, "d must lie in [0,1]");
    }
    void a_pos() const {
        if (a.A < 1) reject(id, "A must be a positive integer");
    }
    void b_pos() const {
        if (a.B < 1) reject(id, "B must be a positive integer");
    }
    void b_divides_a() const {
        if (a.A % a.B != 0) reject(id, "B must divide A");
    }
    void a_even() const {
        if (a.A % 2 != 0) reject(id, "A must be even");
    }
    void b_even() const {
        if (a.B % 2 != 0) reject(id, "B must be even");
    }
    void b_ge2() const {
        if (a.B < 2) reject(id, "B must be >= 2");
    }
    void a_ge2() const {
        if (a.A < 2) reject(id, "A must be >= 2");
    }
};

double pw(double x, double n) { return std::pow(x, n); }

double summand(IdentityId id, const IdentityArgs& a, long l) {
    auto fl = [](long n, long m) { return static_cast<double>(n / m); };
    auto cl = [](long n, long m) { return static_cast<double>((n + m - 1) / m); };
    const double cl1 = pw(a.c, static_cast<double>(l));
    switch (id) {
        case IdentityId::GeomFloor:
            return cl1 * fl(l, a.A) * pw(a.d, fl(l, a.B));
        case IdentityId::GeomFloorShiftDiff:
            return cl1 * (fl(l + 1, a.A) - fl(l, a.A)) * pw(a.d, fl(l, a.B));
        case IdentityId::FloorSimple:
            return cl1 * fl(l, a.A);
        case IdentityId::FloorSimpleDiff:
            return cl1 * (fl(l + 1, a.A) - fl(l, a.A));
        case IdentityId::CeilVariant:
            return cl1 * fl(l, a.A) * pw(a.d, cl(l, a.B));
        case IdentityId::CeilShiftDiff:
            return cl1 * (fl(l + 1, a.A) - fl(l, a.A)) * pw(a.d, cl(l, a.B));
        case IdentityId::EllFloor:
            return cl1 * static_cast<double>(l) * pw(a.d, fl(l, a.B));
        case IdentityId::EvenFloor:
            return l % 2 == 0 ? cl1 * fl(l, a.A) * pw(a.d, fl(l, a.B)) : 0.0;
        case IdentityId::EvenEllFloor:
            return l % 2 == 0 ? cl1 * static_cast<double>(l) * pw(a.d, fl(l, a.B)) : 0.0;
        case IdentityId::EvenShiftDiff:
            return l % 2 == 0 ? cl1 * (fl(l + 1, a.A) - fl(l, a.A)) * pw(a.d, fl(l, a.B)) : 0.0;
        case IdentityId::CeilHalfFloor:
            return cl1 * fl(l, a.A) * pw(a.d, cl(l, 2));
        case IdentityId::CeilHalfEll:
            return cl1 * static_cast<double>(l) * pw(a.d, cl(l, 2));
        case IdentityId::CeilHalfShiftDiff:
            return cl1 * (fl(l + 1, a.A) - fl(l, a.A)) * pw(a.d, cl(l, 2));
        case IdentityId::GeomBasic:
            return l <= a.A ? pw(a.d, static_cast<double>(l)) : 0.0;
        case IdentityId::EllGeom:
            return cl1 * static_cast<double>(l);
        case IdentityId::EllSqGeom:
            return cl1 * static_cast<double>(l) * static_cast<double>(l);
    }
    return 0.0;
}

}  // namespace

const char* identity_name(IdentityId id) {
    switch (id) {
        case IdentityId::GeomFloor: return "GeomFloor";
        case IdentityId::GeomFloorShiftDiff: return "GeomFloorShiftDiff";
        case IdentityId::FloorSimple: return "FloorSimple";
        case IdentityId::FloorSimpleDiff: return "FloorSimpleDiff";
        case IdentityId::CeilVariant: return "CeilVariant";
        case IdentityId::CeilShiftDiff: return "CeilShiftDiff";
        case IdentityId::EllFloor: return "EllFloor";
        case IdentityId::EvenFloor: return "EvenFloor";
        case IdentityId::EvenEllFloor: return "EvenEllFloor";
        case IdentityId::EvenShiftDiff: return "EvenShiftDiff";
        case IdentityId::CeilHalfFloor: return "CeilHalfFloor";
        case IdentityId::CeilHalfEll: return "CeilHalfEll";
        case IdentityId::CeilHalfShiftDiff: return "CeilHalfShiftDiff";
        case IdentityId::GeomBasic: return "GeomBasic";
        case IdentityId::EllGeom: return "EllGeom";
        case IdentityId::EllSqGeom: return "EllSqGeom";
    }
    return "?";
}

double one_minus_pow(double x, double n) {
    if (n == 0.0) return 0.0;
    if (x <= 0.0) return 1.0;
    if (x >= 1.0) return 0.0;
    return -std::expm1(n * std::log(x));
}

double one_minus_pow2(double x, double nx, double y, double ny) {
    if (nx == 0.0) return one_minus_pow(y, ny);
    if (ny == 0.0) return one_minus_pow(x, nx);
    if (x <= 0.0 || y <= 0.0) return 1.0;
    if (x >= 1.0) return one_minus_pow(y, ny);
    if (y >= 1.0) return one_minus_pow(x, nx);
    return -std::expm1(nx * std::log(x) + ny * std::log(y));
}

double identity_closed(IdentityId id, const IdentityArgs& a) {
    Checked chk{id, a};
    const double c = a.c, d = a.d;
    const double A = static_cast<double>(a.A), B = static_cast<double>(a.B);
    switch (id) {
        case IdentityId::GeomFloor: {
            chk.c_unit();
            chk.d_unit();
            chk.a_pos();
            chk.b_pos();
            chk.b_divides_a();
            double top = pw(c, A) * pw(d, A / B);
            return top / (one_minus_pow2(c, A, d, A / B) * one_minus_pow2(c, B, d, 1)) *
                   one_minus_pow(c, B) / one_minus_pow(c, 1);
        }
        case IdentityId::GeomFloorShiftDiff: {
            chk.c_unit();
            chk.d_unit();
            chk.a_pos();
            chk.b_pos();
            chk.b_divides_a();
            return pw(c, A - 1) * pw(d, A / B - 1) / one_minus_pow2(c, A, d, A / B);
        }
        case IdentityId::FloorSimple:
            chk.c_unit();
            chk.a_pos();
            return pw(c, A) / (one_minus_pow(c, A) * one_minus_pow(c, 1));
        case IdentityId::FloorSimpleDiff:
            chk.c_unit();
            chk.a_pos();
            return pw(c, A - 1) / one_minus_pow(c, A);
        case IdentityId::CeilVariant: {
            chk.c_unit();
            chk.d_unit();
            chk.a_ge2();
            chk.b_ge2();
            chk.b_divides_a();
            double top = pw(c, A) * pw(d, A / B);
            return top / one_minus_pow2(c, A, d, A / B) *
                   (1.0 + c * d * one_minus_pow(c, B) /
                              (one_minus_pow2(c, B, d, 1) * one_minus_pow(c, 1)));
        }
        case IdentityId::CeilShiftDiff:
            chk.c_unit();
            chk.d_unit();
            chk.a_ge2();
            chk.b_ge2();
            chk.b_divides_a();
            return pw(c, A - 1) * pw(d, A / B) / one_minus_pow2(c, A, d, A / B);
        case IdentityId::EllFloor: {
            chk.c_unit();
            chk.d_unit();
            chk.b_pos();
            double den = one_minus_pow2(c, B, d, 1);
            return B * pw(c, B) * d * one_minus_pow(c, B) / (den * den * one_minus_pow(c, 1)) +
                   ((B - 1.0) * pw(c, B + 1) - B * pw(c, B) + c) /
                       (den * one_minus_pow(c, 1) * one_minus_pow(c, 1));
        }
        case IdentityId::EvenFloor: {
            chk.c_unit();
            chk.d_unit();
            chk.a_even();
            chk.b_even();
            chk.b_divides_a();
            double top = pw(c, A) * pw(d, A / B);
            return top / (one_minus_pow2(c, A, d, A / B) * one_minus_pow2(c, B, d, 1)) *
                   one_minus_pow(c, B) / one_minus_pow(c, 2);
        }
        case IdentityId::EvenEllFloor: {
            chk.c_unit();
            chk.d_unit();
            chk.b_even();
            double den = one_minus_pow2(c, B, d, 1);
            double omc2 = one_minus_pow(c, 2);
            return B * pw(c, B) * d * one_minus_pow(c, B) / (den * den * omc2) +
                   ((B - 2.0) * pw(c, B + 2) - B * pw(c, B) + 2.0 * c * c) / (den * omc2 * omc2);
        }
        case IdentityId::EvenShiftDiff:
            chk.c_unit();
            chk.d_unit();
            chk.a_even();
            chk.b_pos();
            chk.b_divides_a();
            return 0.0;
        case IdentityId::CeilHalfFloor: {
            chk.c_unit();
            chk.d_unit();
            chk.a_even();
            return pw(c, A) * pw(d, A / 2) * (1.0 + c * d) /
                   (one_minus_pow2(c, A, d, A / 2) * one_minus_pow2(c, 2, d, 1));
        }
        case IdentityId::CeilHalfEll: {
            chk.c_unit();
            chk.d_unit();
            double den = one_minus_pow2(c, 2, d, 1);
            return c * d * (2.0 * c + c * c * d + 1.0) / (den * den);
        }
        case IdentityId::CeilHalfShiftDiff:
            chk.c_unit();
            chk.d_unit();
            chk.a_even();
            return pw(c, A - 1) * pw(d, A / 2) / one_minus_pow2(c, A, d, A / 2);
        case IdentityId::GeomBasic:
            chk.d_unit();
            chk.a_pos();
            if (d >= 1.0) return A + 1.0;
            return one_minus_pow(d, A + 1) / one_minus_pow(d, 1);
        case IdentityId::EllGeom: {
            chk.c_unit();
            double om = one_minus_pow(c, 1);
            return c / (om * om);
        }
        case IdentityId::EllSqGeom: {
            chk.c_unit();
            double om = one_minus_pow(c, 1);
            return c * (1.0 + c) / (om * om * om);
        }
    }
    return 0.0;
}

double identity_truncated(IdentityId id, const IdentityArgs& a, long terms) {
    identity_closed(id, a);  // reuse the precondition checks
    if (terms < 1) throw std::domain_error("identity_truncated: terms must be >= 1");
    double acc = id == IdentityId::GeomBasic ? 1.0 : 0.0;  // l = 0 term of the finite sum
    for (long l = 1; l <= terms; ++l) acc += summand(id, a, l);
    return acc;
}

long terms_for_tail(double c, double tail_bound) {
    if (!(c >= 0.0 && c < 1.0)) throw std::domain_error("terms_for_tail: c must lie in [0,1)");
    if (!(tail_bound > 0.0)) throw std::domain_error("terms_for_tail: bound must be positive");
    if (c == 0.0) return 1;
    // tail(N) = sum_{l>N} l^2 c^l, an upper bound for every summand family.
    auto tail = [&](double n) {
        double om = 1.0 - c;
        return pw(c, n + 1.0) *
               ((n + 1.0) * (n + 1.0) / om + 2.0 * (n + 1.0) * c / (om * om) +
                c * (1.0 + c) / (om * om * om));
    };
    long lo = 1, hi = 2;
    while (tail(static_cast<double>(hi)) >= tail_bound) {
        lo = hi;
        hi *= 2;
        if (hi > (1L << 40)) throw std::domain_error("terms_for_tail: bound unreachable");
    }
    while (lo < hi) {
        long mid = lo + (hi - lo) / 2;
        if (tail(static_cast<double>(mid)) < tail_bound)
            hi = mid;
        else
            lo = mid + 1;
    }
    return hi;
}

double ell_ceil_series(double c, double d, long B, long terms) {
    if (!(c >= 0.0 && c < 1.0)) throw std::domain_error("ell_ceil_series: c must lie in [0,1)");
    if (!(d >= 0.0 && d <= 1.0)) throw std::domain_error("ell_ceil_series: d must lie in [0,1]");
    if (B < 2) throw std::domain_error("ell_ceil_series: B must be >= 2");
    if (terms < 1) throw std::domain_error("ell_ceil_series: terms must be >= 1");
    double acc = 0.0;
    for (long l = 1; l <= terms; ++l)
        acc += pw(c, static_cast<double>(l)) * static_cast<double>(l) *
               pw(d, static_cast<double>((l + B - 1) / B));
    return acc;
}

}  // namespace mgsim
