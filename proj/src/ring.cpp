#include "mkfib/ring.hpp"

#include <ostream>

namespace mkfib {

std::string to_string(Mode m) { return m == Mode::Numeric ? "numeric" : "symbolic"; }

RingElem RingElem::constant(const ExactInt& c, Mode mode) {
    return mode == Mode::Numeric ? RingElem(c) : RingElem(KPoly(c));
}

bool RingElem::is_zero() const {
    return std::visit([](const auto& v) { return v.is_zero(); }, value_);
}

bool RingElem::is_one() const {
    if (const auto* i = std::get_if<ExactInt>(&value_)) return i->is_one();
    const auto& p = std::get<KPoly>(value_);
    return p.degree() == 0 && p.leading().is_one();
}

const ExactInt& RingElem::as_int() const {
    if (const auto* i = std::get_if<ExactInt>(&value_)) return *i;
    throw std::logic_error("value is symbolic, an integer was required");
}

const KPoly& RingElem::as_poly() const {
    if (const auto* p = std::get_if<KPoly>(&value_)) return *p;
    throw std::logic_error("value is numeric, a polynomial was required");
}

void RingElem::require_same_mode(const RingElem& o, const char* op) const {
    if (value_.index() != o.value_.index())
        throw ModeMismatchError(std::string("mode mismatch in ") + op + ": " + mkfib::to_string(mode()) + " vs " +
                                mkfib::to_string(o.mode()));
}

RingElem& RingElem::operator+=(const RingElem& o) {
    require_same_mode(o, "addition");
    std::visit([&](auto& v) { v += std::get<std::decay_t<decltype(v)>>(o.value_); }, value_);
    return *this;
}

RingElem& RingElem::operator-=(const RingElem& o) {
    require_same_mode(o, "subtraction");
    std::visit([&](auto& v) { v -= std::get<std::decay_t<decltype(v)>>(o.value_); }, value_);
    return *this;
}

RingElem& RingElem::operator*=(const RingElem& o) {
    require_same_mode(o, "multiplication");
    std::visit([&](auto& v) { v *= std::get<std::decay_t<decltype(v)>>(o.value_); }, value_);
    return *this;
}

RingElem& RingElem::operator*=(const ExactInt& c) {
    std::visit([&](auto& v) { v *= c; }, value_);
    return *this;
}

RingElem RingElem::operator-() const {
    return std::visit([](const auto& v) { return RingElem(-v); }, value_);
}

RingElem RingElem::pow(std::uint64_t e) const {
    return std::visit([e](const auto& v) { return RingElem(v.pow(e)); }, value_);
}

RingElem RingElem::exact_div_int(const ExactInt& d) const {
    if (const auto* i = std::get_if<ExactInt>(&value_)) return RingElem(i->exact_div(d));
    return RingElem(std::get<KPoly>(value_).exact_div_int(d));
}

ExactInt RingElem::eval(const ExactInt& k) const {
    if (const auto* i = std::get_if<ExactInt>(&value_)) return *i;
    return std::get<KPoly>(value_).eval(k);
}

std::string RingElem::to_string() const {
    return std::visit([](const auto& v) { return v.to_string(); }, value_);
}

RingElem add(const RingElem& x, const RingElem& y) { return x + y; }
RingElem mul(const RingElem& x, const RingElem& y) { return x * y; }
RingElem exact_div_int(const RingElem& x, const ExactInt& d) { return x.exact_div_int(d); }
ExactInt poly_eval(const KPoly& p, const ExactInt& k) { return p.eval(k); }

std::ostream& operator<<(std::ostream& os, const RingElem& v) { return os << v.to_string(); }

}  // namespace mkfib
