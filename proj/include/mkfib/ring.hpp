#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "mkfib/errors.hpp"
#include "mkfib/exact_int.hpp"
#include "mkfib/kpoly.hpp"

namespace mkfib {

enum class Mode { Numeric, Symbolic };

std::string to_string(Mode m);

/// An exact value carried either by an integer (numeric mode, k fixed) or a
/// polynomial in k (symbolic mode). Arithmetic between the two modes is
/// rejected with ModeMismatchError before anything is computed.
class RingElem {
public:
    RingElem() : value_(ExactInt(0)) {}
    RingElem(ExactInt v) : value_(std::move(v)) {}  // NOLINT(implicit)
    RingElem(KPoly p) : value_(std::move(p)) {}     // NOLINT(implicit)

    static RingElem numeric(std::int64_t v) { return RingElem(ExactInt(v)); }
    /// The symbolic indeterminate k.
    static RingElem symbol() { return RingElem(KPoly::indeterminate()); }
    /// An integer constant carried in the given mode.
    static RingElem constant(const ExactInt& c, Mode mode);

    Mode mode() const { return std::holds_alternative<ExactInt>(value_) ? Mode::Numeric : Mode::Symbolic; }
    bool is_numeric() const { return mode() == Mode::Numeric; }
    bool is_zero() const;
    bool is_one() const;

    /// Throws std::logic_error when the mode does not match.
    const ExactInt& as_int() const;
    const KPoly& as_poly() const;

    RingElem& operator+=(const RingElem& o);
    RingElem& operator-=(const RingElem& o);
    RingElem& operator*=(const RingElem& o);
    /// Scalar product with an integer; valid in both modes.
    RingElem& operator*=(const ExactInt& c);

    friend RingElem operator+(RingElem a, const RingElem& b) { a += b; return a; }
    friend RingElem operator-(RingElem a, const RingElem& b) { a -= b; return a; }
    friend RingElem operator*(RingElem a, const RingElem& b) { a *= b; return a; }
    friend RingElem operator*(RingElem a, const ExactInt& c) { a *= c; return a; }
    RingElem operator-() const;

    RingElem pow(std::uint64_t e) const;

    /// Exact division by an integer; DivisibilityError otherwise.
    RingElem exact_div_int(const ExactInt& d) const;

    /// Value at a concrete k. Numeric values are returned unchanged.
    ExactInt eval(const ExactInt& k) const;

    std::string to_string() const;

    /// Values of different modes compare unequal.
    friend bool operator==(const RingElem& a, const RingElem& b) { return a.value_ == b.value_; }

private:
    void require_same_mode(const RingElem& o, const char* op) const;

    std::variant<ExactInt, KPoly> value_;
};

RingElem add(const RingElem& x, const RingElem& y);
RingElem mul(const RingElem& x, const RingElem& y);
RingElem exact_div_int(const RingElem& x, const ExactInt& d);
ExactInt poly_eval(const KPoly& p, const ExactInt& k);

std::ostream& operator<<(std::ostream& os, const RingElem& v);

}  // namespace mkfib
