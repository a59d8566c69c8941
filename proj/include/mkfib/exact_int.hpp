#pragma once

#include <compare>
#include <cstdint>
#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mkfib {

/// Arbitrary-precision signed integer.
///
/// Only ring operations are exposed; division exists solely as exact
/// division, which throws DivisibilityError when the divisor does not
/// divide evenly.
class ExactInt {
public:
    ExactInt() = default;
    ExactInt(std::int64_t v) : value_(static_cast<long>(v)) {}  // NOLINT(implicit)
    explicit ExactInt(mpz_class v) : value_(std::move(v)) {}

    /// Parses a base-10 integer with optional leading '-'.
    static ExactInt from_string(std::string_view text);

    ExactInt& operator+=(const ExactInt& o) { value_ += o.value_; return *this; }
    ExactInt& operator-=(const ExactInt& o) { value_ -= o.value_; return *this; }
    ExactInt& operator*=(const ExactInt& o) { value_ *= o.value_; return *this; }

    friend ExactInt operator+(ExactInt a, const ExactInt& b) { a += b; return a; }
    friend ExactInt operator-(ExactInt a, const ExactInt& b) { a -= b; return a; }
    friend ExactInt operator*(ExactInt a, const ExactInt& b) { a *= b; return a; }
    ExactInt operator-() const { return ExactInt(mpz_class(-value_)); }

    /// this *= m / d, where d must divide this * m.
    void mul_div_exact(std::uint64_t m, std::uint64_t d);

    bool divisible_by(const ExactInt& d) const;
    ExactInt exact_div(const ExactInt& d) const;
    ExactInt pow(std::uint64_t e) const;

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_one() const { return value_ == 1; }

    bool fits_int64() const;
    std::int64_t to_int64() const;
    double to_double() const;
    std::string to_string() const { return value_.get_str(10); }
    std::size_t decimal_digits() const;

    const mpz_class& raw() const { return value_; }

    friend bool operator==(const ExactInt& a, const ExactInt& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const ExactInt& a, const ExactInt& b) {
        return cmp(a.value_, b.value_) <=> 0;
    }

private:
    mpz_class value_;
};

std::ostream& operator<<(std::ostream& os, const ExactInt& v);

}  // namespace mkfib
