#include "mkfib/kpoly.hpp"

#include <algorithm>

#include "mkfib/errors.hpp"

namespace mkfib {

KPoly::KPoly(ExactInt constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

KPoly::KPoly(std::vector<ExactInt> ascending) : coeffs_(std::move(ascending)) { normalize(); }

KPoly::KPoly(std::initializer_list<std::int64_t> ascending) {
    coeffs_.reserve(ascending.size());
    for (auto c : ascending) coeffs_.emplace_back(c);
    normalize();
}

KPoly KPoly::indeterminate() { return monomial(ExactInt(1), 1); }

KPoly KPoly::monomial(ExactInt c, std::size_t degree) {
    if (c.is_zero()) return {};
    KPoly p;
    p.coeffs_.assign(degree + 1, ExactInt(0));
    p.coeffs_.back() = std::move(c);
    return p;
}

void KPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ExactInt KPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : ExactInt(0); }

KPoly& KPoly::operator+=(const KPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), ExactInt(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

KPoly& KPoly::operator-=(const KPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), ExactInt(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

KPoly operator*(const KPoly& a, const KPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<ExactInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, ExactInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return KPoly(std::move(out));
}

KPoly& KPoly::operator*=(const KPoly& o) {
    *this = *this * o;
    return *this;
}

KPoly& KPoly::operator*=(const ExactInt& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

KPoly KPoly::operator-() const {
    KPoly r = *this;
    for (auto& x : r.coeffs_) x = -x;
    return r;
}

KPoly KPoly::shifted(std::size_t shift) const {
    if (is_zero() || shift == 0) return *this;
    KPoly r;
    r.coeffs_.reserve(coeffs_.size() + shift);
    r.coeffs_.assign(shift, ExactInt(0));
    r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return r;
}

KPoly KPoly::pow(std::uint64_t e) const {
    KPoly result(ExactInt(1));
    KPoly base = *this;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return result;
}

KPoly KPoly::exact_div_int(const ExactInt& d) const {
    if (d.is_zero()) throw std::invalid_argument("division by zero");
    KPoly r;
    r.coeffs_.reserve(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].divisible_by(d)) {
            throw DivisibilityError("coefficient of k^" + std::to_string(i) + " (" + coeffs_[i].to_string() +
                                        ") is not divisible by " + d.to_string(),
                                    i);
        }
        r.coeffs_.push_back(coeffs_[i].exact_div(d));
    }
    return r;
}

ExactInt KPoly::eval(const ExactInt& at) const {
    ExactInt acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= at;
        acc += *it;
    }
    return acc;
}

std::string KPoly::to_string(char var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t d = coeffs_.size(); d-- > 0;) {
        const ExactInt& c = coeffs_[d];
        if (c.is_zero()) continue;
        bool negative = c.sign() < 0;
        if (negative)
            out += '-';
        else if (!out.empty())
            out += '+';
        ExactInt mag = negative ? -c : c;
        if (d == 0 || !mag.is_one()) out += mag.to_string();
        if (d >= 1) out += var;
        if (d >= 2) out += '^' + std::to_string(d);
    }
    return out;
}

}  // namespace mkfib
