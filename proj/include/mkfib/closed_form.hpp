#pragma once

#include "mkfib/ring.hpp"
#include "mkfib/sequences.hpp"
#include "mkfib/transforms.hpp"

namespace mkfib {

/// Monic characteristic polynomial x^2 - P x + Q of a recurrence
/// x_{n+1} = a x_n + b x_{n-1} (P = a, Q = -b), with discriminant D.
struct QuadChar {
    RingElem P;
    RingElem Q;
    RingElem D;
};

QuadChar characteristic(const Order2Rec& rec);

/// Lucas sequence of the first kind: U_0 = 0, U_1 = 1,
/// U_{n+1} = P U_n - Q U_{n-1}. Equals (r1^n - r2^n)/(r1 - r2) over the
/// roots of x^2 - P x + Q.
RingElem lucas_u(const RingElem& P, const RingElem& Q, Index n);

/// Exact closed form x_n = x1 U_n - Q x0 U_{n-1} (x0 at n = 0).
RingElem binet_closed(const Order2Rec& rec, Index n);

/// C1 r1^n + C2 r2^n in double precision, r1 > r2 the real roots.
/// Numeric mode only; throws std::domain_error unless D > 0.
double binet_float(const Order2Rec& rec, Index n);

/// The Binet form as stated for each transform, with coefficient pairs
/// (4, -2k) for Binomial and KBinomial and (2k+2, -2) for RisingK and
/// FallingK applied to that kind's own Lucas sequence:
///   c1 U_n + c2 U_{n-1},  n >= 1.
/// Returned for comparison only; the KBinomial and FallingK versions do not
/// meet their own initial conditions.
RingElem claimed_binet(TransformKind kind, const RingElem& k, Index n);

}  // namespace mkfib
