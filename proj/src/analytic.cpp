#include "mgsim/analytic.hpp"

#include <cmath>
#include <stdexcept>

#include "mgsim/scheduler.hpp"
#include "mgsim/series.hpp"

namespace mgsim {

namespace {

double pw(double x, double n) { return std::pow(x, n); }
double sq(double x) { return x * x; }

struct P {
    double r, f, q;  // activity, delay-sensitive arrival, q = 1 - f
    long A;          // D + 2
    bool dinf;
};

P unpack(const ScenarioParams& params) {
    params.validate();
    return {params.rho, params.rho_f, 1.0 - params.rho_f,
            params.d_infinite ? 0 : static_cast<long>(params.coop_rounds) + 2, params.d_infinite};
}

void require_adaptive_domain(const ScenarioParams& params) {
    if (!params.d_infinite && params.coop_rounds < 2)
        throw std::invalid_argument("adaptive bound: D must be >= 2 (or unbounded)");
    if (params.rho >= 1.0)
        throw std::invalid_argument("adaptive bound: requires rho < 1");
}

double ident(IdentityId id, double c, double d, long A, long B) {
    IdentityArgs a;
    a.c = c;
    a.d = d;
    a.A = A;
    a.B = B;
    return identity_closed(id, a);
}

// Base sums over run length l with geometric weight c^l and arrival weight d.
double sum_ell_floor_half(double c, double d) {  // sum c^l l d^floor(l/2)
    return ident(IdentityId::EllFloor, c, d, 2, 2);
}
double sum_block_floor_half(double c, double d, long A) {  // sum c^l floor(l/A) d^floor(l/2)
    return ident(IdentityId::GeomFloor, c, d, A, 2);
}
double sum_ell_ceil_half(double c, double d) {  // sum c^l l d^ceil(l/2)
    return ident(IdentityId::CeilHalfEll, c, d, 2, 2);
}
double sum_block_ceil_half(double c, double d, long A) {  // sum c^l floor(l/A) d^ceil(l/2)
    return ident(IdentityId::CeilHalfFloor, c, d, A, 2);
}
double sum_blockshift_ceil_half(double c, double d, long A) {  // with floor((l+1)/A)
    return sum_block_ceil_half(c, d, A) + ident(IdentityId::CeilHalfShiftDiff, c, d, A, 2);
}
double sum_even_ell_half(double c, double d) {  // even l only, c^l l d^(l/2)
    return ident(IdentityId::EvenEllFloor, c, d, 2, 2);
}
double sum_even_block_half(double c, double d, long A) {  // even l, c^l floor(l/A) d^(l/2)
    return ident(IdentityId::EvenFloor, c, d, A, 2);
}
double sum_ell(double g) { return ident(IdentityId::EllGeom, g, 1.0, 2, 2); }
double sum_block(double g, long A) { return ident(IdentityId::FloorSimple, g, 1.0, A, 2); }
double sum_even_ell(double g) { return ident(IdentityId::EvenEllFloor, g, 1.0, 2, 2); }
double sum_even_block(double g, long A) { return ident(IdentityId::EvenFloor, g, 1.0, A, 2); }

// Corner totals (S_u + S_e) of the Tx+Rx line schemes and corner S_e of the
// Rx-only line schemes, all per user in the large-network limit.

// Guarded-slot count on the runs where the reduced rule can fire: with
// period 4 the block anchors merge with every in-phase slot.
struct GuardExp {
    double base, step;  // q-exponent base + step per extra period
};
GuardExp guard_exp(long A) { return A == 4 ? GuardExp{1.0, 2.0} : GuardExp{2.0, 3.0}; }

double corner_sum_txrx_m1(const P& p) {
    if (p.dinf) return p.r;
    const double r = p.r;
    const double A = static_cast<double>(p.A);
    const GuardExp g = guard_exp(p.A);
    double s = r - (1.0 - r * r) * pw(r, A - 1.0) / (2.0 * one_minus_pow(r, A));
    s += sq(1.0 - r) * pw(r, A - 1.0) * pw(p.q, g.base) /
         (2.0 * one_minus_pow2(r, A, p.q, g.step));
    return s;
}

double corner_sum_txrx_m2(const P& p) {
    const double r = p.r, q = p.q, f = p.f;
    const double u = 1.0 - r * q;
    if (p.dinf) {
        double s = 0.5 * u * u * sum_ell_floor_half(r, q);
        s += 0.5 * sq(1.0 - r) * sum_ell_ceil_half(r, q);
        s -= 0.5 * sq(r * f) * sum_even_ell_half(r, q);
        return s;
    }
    const long A = p.A;
    const GuardExp g = guard_exp(A);
    double s = -0.5 * sq(r * f) * (sum_even_ell_half(r, q) - sum_even_block_half(r, q, A));
    s += 0.5 * u * u * (sum_ell_floor_half(r, q) - sum_block_floor_half(r, q, A));
    s += 0.5 * sq(1.0 - r) * (sum_ell_ceil_half(r, q) - sum_blockshift_ceil_half(r, q, A));
    s += 0.5 * sq(1.0 - r) * pw(r, static_cast<double>(A - 1)) *
         pw(q, static_cast<double>(A) / 2.0 + g.base) /
         one_minus_pow2(r, static_cast<double>(A), q, static_cast<double>(A) / 2.0 + g.step);
    return s;
}

double corner_se_rx_m1(const P& p) {
    const double r = p.r, q = p.q, f = p.f;
    const double beta = 1.0 - r * (1.0 - r * f);  // blocked neighbor probability
    double s = 0.5 * beta * beta * sum_ell_ceil_half(r, q);
    s += 0.5 * sq(1.0 - r) * sum_ell_floor_half(r, q);
    s -= 0.5 * sq(r * r * f) * sum_even_ell_half(r, q);
    if (!p.dinf) {
        s -= 0.5 * beta * beta * sum_block_ceil_half(r, q, p.A);
        s -= 0.5 * sq(1.0 - r) * sum_block_floor_half(r, q, p.A);
        s += 0.5 * sq(r * r * f) * sum_even_block_half(r, q, p.A);
    }
    return s;
}

double corner_se_rx_m2(const P& p) {
    const double r = p.r, q = p.q, f = p.f;
    const double g = r * q;
    const double beta = 1.0 - g * (1.0 - r * f);
    double s = 0.5 * (beta * beta + sq(1.0 - r)) * sum_ell(g);
    s -= 0.5 * sq(r * f * (1.0 + g)) * sum_even_ell(g);
    if (!p.dinf) {
        s -= 0.5 * (beta * beta + sq(1.0 - r)) * sum_block(g, p.A);
        s += 0.5 * sq(r * f * (1.0 + g)) * sum_even_block(g, p.A);
    }
    return s;
}

double slope_adaptive_txrx_m1(const P& p) {
    if (p.dinf) return 1.0;
    const double r = p.r, f = p.f, q = p.q;
    const double A = static_cast<double>(p.A);
    return 1.0 + sq(1.0 - r) * pw(r, A - 2.0) / (f * one_minus_pow(r, A)) -
           sq(1.0 - r) * pw(r, A - 2.0) * q * q / (f * one_minus_pow2(r, A, q, 2.0));
}

}  // namespace

double se_max(const ScenarioParams& params) {
    const P p = unpack(params);
    const double dens = params.model == ArrivalModel::Model1 ? p.r : p.r * p.q;
    if (p.dinf) return dens;
    if (dens >= 1.0)
        return static_cast<double>(params.coop_rounds + 1) / (params.coop_rounds + 2);
    if (dens <= 0.0) return 0.0;
    const double A = static_cast<double>(p.A);
    return dens - (1.0 - dens) * pw(dens, A) / one_minus_pow(dens, A);
}

double su_max(const ScenarioParams& params, TopologyKind kind) {
    const P p = unpack(params);
    return kind == TopologyKind::WynerLine ? p.r * p.f / 2.0 : p.r * p.f / 3.0;
}

double adaptive_corner_se(const ScenarioParams& params, TopologyKind kind) {
    const P p = unpack(params);
    const double r = p.r, f = p.f, q = p.q;
    if (kind == TopologyKind::HexTorus) {
        if (!p.dinf) throw std::invalid_argument("hex bounds: D must be unbounded");
        const double off = pw(1.0 - r * f, 3.0);
        switch (params.coop) {
            case Cooperation::TxRx:
                return params.model == ArrivalModel::Model1 ? r - r * f / 3.0 : r * q;
            case Cooperation::RxOnly:
                return params.model == ArrivalModel::Model1
                           ? r * q / 3.0 + 2.0 * r * off / 3.0
                           : r * q / 3.0 + 2.0 * r * q * off / 3.0;
        }
    }
    require_adaptive_domain(params);
    if (params.coop == Cooperation::TxRx)
        return (params.model == ArrivalModel::Model1 ? corner_sum_txrx_m1(p)
                                                     : corner_sum_txrx_m2(p)) -
               r * f / 2.0;
    return params.model == ArrivalModel::Model1 ? corner_se_rx_m1(p) : corner_se_rx_m2(p);
}

double adaptive_corner_se_series(const ScenarioParams& params, long terms) {
    const P p = unpack(params);
    require_adaptive_domain(params);
    const double r = p.r, f = p.f, q = p.q;
    if (terms <= 0) {
        double c = params.coop == Cooperation::RxOnly && params.model == ArrivalModel::Model2
                       ? r * q
                       : r;
        terms = c > 0.0 ? terms_for_tail(c, 1e-12) : 1;
    }
    const long D = params.d_infinite ? 0 : params.coop_rounds;
    auto mfull = [&](long l) {
        return params.d_infinite ? static_cast<double>(l)
                                 : static_cast<double>(msum_full(l, D));
    };
    auto mred = [&](long l) {
        return params.d_infinite ? static_cast<double>(l) : static_cast<double>(msum_red(l, D));
    };
    // q^(guarded slots): arrivals on the rule-deciding positions plus the
    // silent slots of the full arrangement.
    auto guard = [&](long l) {
        if (params.d_infinite) return 1.0;
        return pw(q, static_cast<double>(lset_size(l, D) + l / (D + 2)));
    };
    const double u = 1.0 - r * q;
    const double beta = 1.0 - r * (1.0 - r * f);
    const double g = r * q;
    const double beta2 = 1.0 - g * (1.0 - r * f);

    double acc = 0.0;
    for (long l = 1; l <= terms; ++l) {
        const bool odd = l % 2 != 0;
        const double hf = static_cast<double>(l / 2);        // floor(l/2)
        const double hc = static_cast<double>((l + 1) / 2);  // ceil(l/2)
        double t = 0.0;
        if (params.coop == Cooperation::TxRx && params.model == ArrivalModel::Model1) {
            double mixed = mfull(l) * guard(l) + mred(l) * (1.0 - guard(l));
            t = sq(1.0 - r) * pw(r, static_cast<double>(l)) * 0.5 * (mfull(l) + mixed);
        } else if (params.coop == Cooperation::TxRx) {
            double a_int = odd ? u * u : u * (1.0 - r);
            double b_int = odd ? sq(1.0 - r) : u * (1.0 - r);
            double mixed = mfull(l) * guard(l) + mred(l) * (1.0 - guard(l));
            t = 0.5 * pw(r, static_cast<double>(l)) *
                (pw(q, hf) * a_int * mfull(l) + pw(q, hc) * b_int * mixed);
        } else if (params.model == ArrivalModel::Model1) {
            double a_int = odd ? beta * beta : beta * (1.0 - r);
            double b_int = odd ? sq(1.0 - r) : (1.0 - r) * beta;
            t = 0.5 * pw(r, static_cast<double>(l)) * mfull(l) *
                (pw(q, hc) * a_int + pw(q, hf) * b_int);
        } else {
            double a_int = odd ? beta2 * beta2 : beta2 * (1.0 - r);
            double b_int = odd ? sq(1.0 - r) : (1.0 - r) * beta2;
            t = 0.5 * pw(g, static_cast<double>(l)) * mfull(l) * (a_int + b_int);
        }
        acc += t;
    }
    if (params.coop == Cooperation::TxRx) acc -= r * f / 2.0;
    return acc;
}

double slope_coefficient(const ScenarioParams& params, Scheme scheme, TopologyKind kind) {
    const P p = unpack(params);
    const double r = p.r, f = p.f, q = p.q;
    if (f <= 0.0) throw std::invalid_argument("slope: undefined at rho_f = 0");

    if (kind == TopologyKind::HexTorus) {
        if (!p.dinf) throw std::invalid_argument("hex bounds: D must be unbounded");
        if (params.coop == Cooperation::TxRx)
            return params.model == ArrivalModel::Model1 ? 1.0 : 0.0;
        const double off = pw(1.0 - r * f, 3.0);
        if (params.model == ArrivalModel::Model1)
            return scheme == Scheme::NonAdaptive ? (2.0 + f) / f : (2.0 + f - 2.0 * off) / f;
        return scheme == Scheme::NonAdaptive ? 2.0 * q / f : 2.0 * q * (1.0 - off) / f;
    }

    const double head = p.dinf ? 1.0
                               : static_cast<double>(params.coop_rounds + 1) /
                                     (params.coop_rounds + 2);
    if (scheme == Scheme::NonAdaptive) {
        if (params.coop == Cooperation::TxRx)
            return params.model == ArrivalModel::Model1 ? 1.0 : 0.0;
        return params.model == ArrivalModel::Model1 ? 2.0 * head / f - q / f
                                                    : 2.0 * head * q / f;
    }
    require_adaptive_domain(params);
    if (params.coop == Cooperation::TxRx && params.model == ArrivalModel::Model1)
        return slope_adaptive_txrx_m1(p);
    return (se_max(params) - adaptive_corner_se(params, kind)) / su_max(params, kind);
}

std::vector<LinearConstraint> inner_region(const ScenarioParams& params, Scheme scheme,
                                           TopologyKind kind) {
    const P p = unpack(params);
    if (kind == TopologyKind::HexTorus && !p.dinf)
        throw std::invalid_argument("hex bounds: D must be unbounded");
    if (kind == TopologyKind::WynerLine && scheme == Scheme::Adaptive && !p.dinf &&
        params.coop_rounds < 2)
        throw std::invalid_argument("adaptive bound: D must be >= 2 (or unbounded)");

    // The adaptive line bounds require rho < 1; the non-adaptive region is
    // the valid (and there exact) fallback.
    Scheme eff = scheme;
    if (kind == TopologyKind::WynerLine && scheme == Scheme::Adaptive && p.r >= 1.0)
        eff = Scheme::NonAdaptive;
    if (kind == TopologyKind::HexTorus && params.coop == Cooperation::TxRx)
        eff = Scheme::NonAdaptive;  // identical with unbounded cooperation

    const double su = su_max(params, kind);
    const double head = p.dinf ? 1.0
                               : static_cast<double>(params.coop_rounds + 1) /
                                     (params.coop_rounds + 2);
    double rhs;
    if (kind == TopologyKind::HexTorus) {
        rhs = params.model == ArrivalModel::Model1 ? p.r : p.r * p.q;
    } else if (eff == Scheme::NonAdaptive) {
        rhs = params.model == ArrivalModel::Model1 ? p.r * head : p.r * p.q * head;
    } else {
        rhs = se_max(params);
    }

    if (params.rho_f <= 0.0)  // single constraint on S_e
        return {{1.0, 0.0, 0.0}, {0.0, 1.0, rhs}};

    return {{1.0, 0.0, su}, {slope_coefficient(params, eff, kind), 1.0, rhs}};
}

std::vector<LinearConstraint> outer_region(const ScenarioParams& params, TopologyKind kind) {
    const P p = unpack(params);
    if (kind != TopologyKind::WynerLine)
        throw std::invalid_argument("outer bound: defined for the line model only");
    std::vector<LinearConstraint> cs;
    cs.push_back({1.0, 0.0, p.r * p.f / 2.0});
    if (params.model == ArrivalModel::Model1) {
        cs.push_back({1.0, 1.0, se_max(params)});
        if (params.coop == Cooperation::RxOnly) cs.push_back({1.0 + p.r, 1.0, p.r});
    } else {
        cs.push_back({0.0, 1.0, se_max(params)});
        if (params.coop == Cooperation::RxOnly)
            cs.push_back({p.r * p.q, 1.0, p.r * p.q});
    }
    return cs;
}

}  // namespace mgsim
