#include "mkfib/closed_form.hpp"

#include <cmath>
#include <stdexcept>

namespace mkfib {

QuadChar characteristic(const Order2Rec& rec) {
    RingElem P = rec.a;
    RingElem Q = -rec.b;
    RingElem D = P * P - Q * ExactInt(4);
    return {std::move(P), std::move(Q), std::move(D)};
}

namespace {

// (U_{n-1}, U_n) for n >= 1.
std::pair<RingElem, RingElem> lucas_pair(const RingElem& P, const RingElem& Q, Index n) {
    RingElem prev = RingElem::constant(ExactInt(0), P.mode());
    RingElem cur = RingElem::constant(ExactInt(1), P.mode());
    for (Index i = 1; i < n; ++i) {
        RingElem next = P * cur - Q * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {std::move(prev), std::move(cur)};
}

}  // namespace

RingElem lucas_u(const RingElem& P, const RingElem& Q, Index n) {
    if (P.mode() != Q.mode()) throw ModeMismatchError("lucas_u: P and Q differ in mode");
    if (n == 0) return RingElem::constant(ExactInt(0), P.mode());
    return lucas_pair(P, Q, n).second;
}

RingElem binet_closed(const Order2Rec& rec, Index n) {
    if (n == 0) return rec.x0;
    auto ch = characteristic(rec);
    auto [u_prev, u] = lucas_pair(ch.P, ch.Q, n);
    return rec.x1 * u - ch.Q * rec.x0 * u_prev;
}

double binet_float(const Order2Rec& rec, Index n) {
    if (rec.mode() != Mode::Numeric) throw std::invalid_argument("binet_float needs numeric k");
    auto ch = characteristic(rec);
    if (ch.D.as_int().sign() <= 0)
        throw std::domain_error("characteristic discriminant " + ch.D.to_string() + " is not positive");
    const double p = ch.P.as_int().to_double();
    const double sq = std::sqrt(ch.D.as_int().to_double());
    const double r1 = (p + sq) / 2.0;
    const double r2 = (p - sq) / 2.0;
    const double x0 = rec.x0.as_int().to_double();
    const double x1 = rec.x1.as_int().to_double();
    const double c1 = (x1 - x0 * r2) / (r1 - r2);
    const double c2 = (x0 * r1 - x1) / (r1 - r2);
    const double e = static_cast<double>(n);
    return c1 * std::pow(r1, e) + c2 * std::pow(r2, e);
}

RingElem claimed_binet(TransformKind kind, const RingElem& k, Index n) {
    if (n == 0) throw std::invalid_argument("stated Binet forms are evaluated for n >= 1 only");
    auto ch = characteristic(transform_rec_spec(kind, k));
    RingElem c1, c2;
    const RingElem two = RingElem::constant(ExactInt(2), k.mode());
    switch (kind) {
        case TransformKind::Binomial:
        case TransformKind::KBinomial:
            c1 = RingElem::constant(ExactInt(4), k.mode());
            c2 = -(k * ExactInt(2));
            break;
        case TransformKind::RisingK:
        case TransformKind::FallingK:
            c1 = k * ExactInt(2) + two;
            c2 = -two;
            break;
    }
    auto [u_prev, u] = lucas_pair(ch.P, ch.Q, n);
    return c1 * u + c2 * u_prev;
}

}  // namespace mkfib
