#include "mkfib/genfunc.hpp"

#include <stdexcept>

namespace mkfib {

XPoly::XPoly(Mode mode, std::vector<RingElem> ascending) : mode_(mode), coeffs_(std::move(ascending)) {
    for (const auto& c : coeffs_)
        if (c.mode() != mode_) throw ModeMismatchError("series coefficient has the wrong mode");
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RingElem XPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : RingElem::constant(ExactInt(0), mode_);
}

XPoly operator*(const XPoly& a, const XPoly& b) {
    if (a.mode_ != b.mode_) throw ModeMismatchError("series product mixes modes");
    if (a.coeffs_.empty() || b.coeffs_.empty()) return XPoly(a.mode_);
    std::vector<RingElem> out(a.coeffs_.size() + b.coeffs_.size() - 1, RingElem::constant(ExactInt(0), a.mode_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return XPoly(a.mode_, std::move(out));
}

namespace {

bool is_monomial(const RingElem& c) {
    if (c.is_numeric()) return true;
    int nonzero = 0;
    for (const auto& x : c.as_poly().coeffs()) nonzero += x.is_zero() ? 0 : 1;
    return nonzero <= 1;
}

bool leads_negative(const RingElem& c) {
    return c.is_numeric() ? c.as_int().sign() < 0 : c.as_poly().leading().sign() < 0;
}

}  // namespace

std::string XPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
        const RingElem& c = coeffs_[d];
        if (c.is_zero()) continue;
        bool negative = leads_negative(c);
        RingElem mag = negative ? -c : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        std::string body;
        if (d == 0)
            body = mag.to_string();
        else if (!mag.is_one())
            body = is_monomial(mag) ? mag.to_string() : "(" + mag.to_string() + ")";
        out += body;
        if (d >= 1) out += 'x';
        if (d >= 2) out += '^' + std::to_string(d);
    }
    return out;
}

std::string RationalGF::to_string() const { return "(" + num.to_string() + ") / (" + den.to_string() + ")"; }

RationalGF gf_from_rec(const Order2Rec& rec) {
    const Mode m = rec.mode();
    XPoly num(m, {rec.x0, rec.x1 - rec.a * rec.x0});
    XPoly den(m, {RingElem::constant(ExactInt(1), m), -rec.a, -rec.b});
    return {std::move(num), std::move(den)};
}

std::vector<RingElem> gf_expand(const RationalGF& gf, std::size_t count) {
    if (!gf.den.coeff(0).is_one()) throw std::domain_error("denominator constant term must be 1");
    const auto& den = gf.den.coeffs();
    std::vector<RingElem> c;
    c.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        RingElem v = gf.num.coeff(n);
        for (std::size_t j = 1; j < den.size() && j <= n; ++j) v -= den[j] * c[n - j];
        c.push_back(std::move(v));
    }
    return c;
}

RationalGF claimed_gf(TransformKind kind, const RingElem& k) {
    const Mode m = k.mode();
    auto c = [m](std::int64_t v) { return RingElem::constant(ExactInt(v), m); };
    const RingElem one = c(1), two = c(2);
    switch (kind) {
        case TransformKind::Binomial:
            return {XPoly(m, {two, -(k * ExactInt(4))}), XPoly(m, {one, -(k + two), k})};
        case TransformKind::KBinomial:
            return {XPoly(m, {two, -(k * k * ExactInt(2))}), XPoly(m, {one, -(k * (k + two)), k.pow(3)})};
        case TransformKind::RisingK:
            return {XPoly(m, {two, -(k * k * ExactInt(2) - k * ExactInt(2) + two)}),
                    XPoly(m, {one, -(k * k + two), one})};
        case TransformKind::FallingK:
            return {XPoly(m, {two, two - k * ExactInt(4)}),
                    XPoly(m, {one, -(k * ExactInt(3)), k * k * ExactInt(2) - one})};
    }
    throw std::logic_error("unknown transform kind");
}

bool gf_equivalent(const RationalGF& a, const RationalGF& b) { return a.num * b.den == b.num * a.den; }

}  // namespace mkfib
