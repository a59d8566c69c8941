#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "mkfib/exact_int.hpp"

namespace mkfib {

/// Dense polynomial in the indeterminate k with integer coefficients.
///
/// Coefficients are stored in ascending degree. The representation is kept
/// canonical: the leading coefficient is nonzero and the zero polynomial
/// has no coefficients at all.
class KPoly {
public:
    KPoly() = default;
    KPoly(ExactInt constant);  // NOLINT(implicit)
    explicit KPoly(std::vector<ExactInt> ascending);
    KPoly(std::initializer_list<std::int64_t> ascending);

    /// The polynomial k.
    static KPoly indeterminate();
    /// c * k^degree.
    static KPoly monomial(ExactInt c, std::size_t degree);

    /// -1 for the zero polynomial.
    std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    std::span<const ExactInt> coeffs() const { return coeffs_; }
    /// Coefficient of k^i (zero beyond the degree).
    ExactInt coeff(std::size_t i) const;
    const ExactInt& leading() const { return coeffs_.back(); }

    KPoly& operator+=(const KPoly& o);
    KPoly& operator-=(const KPoly& o);
    KPoly& operator*=(const KPoly& o);
    KPoly& operator*=(const ExactInt& c);

    friend KPoly operator+(KPoly a, const KPoly& b) { a += b; return a; }
    friend KPoly operator-(KPoly a, const KPoly& b) { a -= b; return a; }
    friend KPoly operator*(const KPoly& a, const KPoly& b);
    KPoly operator-() const;

    /// Multiplies by k^shift.
    KPoly shifted(std::size_t shift) const;
    KPoly pow(std::uint64_t e) const;

    /// Divides every coefficient by d; throws DivisibilityError naming the
    /// first coefficient that does not divide.
    KPoly exact_div_int(const ExactInt& d) const;

    /// Horner evaluation at k = at.
    ExactInt eval(const ExactInt& at) const;

    /// Descending-degree text with carets, e.g. "2k^4+2k^3+6k^2+4k+2".
    std::string to_string(char var = 'k') const;

    friend bool operator==(const KPoly&, const KPoly&) = default;

private:
    void normalize();

    std::vector<ExactInt> coeffs_;
};

}  // namespace mkfib
