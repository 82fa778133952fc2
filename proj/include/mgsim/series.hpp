#ifndef MGSIM_SERIES_HPP
#define MGSIM_SERIES_HPP

#include <string>

namespace mgsim {

/// Infinite-sum identities with geometric weights and floor/ceil index terms.
/// Each id pairs one literal summand with one closed form; the truncated
/// evaluator sums the literal summand and serves as the numeric oracle.
enum class IdentityId {
    GeomFloor,           // sum c^l floor(l/A) d^floor(l/B)
    GeomFloorShiftDiff,  // sum c^l (floor((l+1)/A) - floor(l/A)) d^floor(l/B)
    FloorSimple,         // sum c^l floor(l/A)
    FloorSimpleDiff,     // sum c^l (floor((l+1)/A) - floor(l/A))
    CeilVariant,         // sum c^l floor(l/A) d^ceil(l/B)
    CeilShiftDiff,       // sum c^l (floor((l+1)/A) - floor(l/A)) d^ceil(l/B)
    EllFloor,            // sum c^l l d^floor(l/B)
    EvenFloor,           // sum over even l of c^l floor(l/A) d^floor(l/B)
    EvenEllFloor,        // sum over even l of c^l l d^floor(l/B)
    EvenShiftDiff,       // even-l shift difference (identically zero for even A)
    CeilHalfFloor,       // sum c^l floor(l/A) d^ceil(l/2)
    CeilHalfEll,         // sum c^l l d^ceil(l/2)
    CeilHalfShiftDiff,   // sum c^l (floor((l+1)/A) - floor(l/A)) d^ceil(l/2)
    GeomBasic,           // sum_{l=0}^{A} d^l
    EllGeom,             // sum c^l l
    EllSqGeom,           // sum c^l l^2
};

const char* identity_name(IdentityId id);

struct IdentityArgs {
    double c = 0.0;  // in [0,1) where used
    double d = 1.0;  // in [0,1] where used
    long A = 2;
    long B = 2;
};

/// Closed-form value. Throws std::domain_error naming the violated
/// precondition (divisibility, parity, probability ranges).
double identity_closed(IdentityId id, const IdentityArgs& args);

/// Literal partial sum over l = 1..terms (GeomBasic includes its l=0 term).
double identity_truncated(IdentityId id, const IdentityArgs& args, long terms);

/// Smallest term count whose geometric tail sum_{l>N} l^2 c^l drops below
/// `tail_bound`; dominates every summand in the library.
long terms_for_tail(double c, double tail_bound);

/// Truncated evaluation of sum c^l l d^ceil(l/B); no closed form is exported
/// for this sum.
double ell_ceil_series(double c, double d, long B, long terms);

// 1 - x^n and 1 - x^n y^m, computed to full relative precision near 0.
double one_minus_pow(double x, double n);
double one_minus_pow2(double x, double nx, double y, double ny);

}  // namespace mgsim

#endif
