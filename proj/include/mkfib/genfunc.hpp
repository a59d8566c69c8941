#pragma once

#include <string>
#include <vector>

#include "mkfib/ring.hpp"
#include "mkfib/sequences.hpp"
#include "mkfib/transforms.hpp"

namespace mkfib {

/// Polynomial in the formal series variable x with RingElem coefficients,
/// ascending powers, no trailing zeros.
class XPoly {
public:
    explicit XPoly(Mode mode) : mode_(mode) {}
    XPoly(Mode mode, std::vector<RingElem> ascending);

    Mode mode() const { return mode_; }
    std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
    RingElem coeff(std::size_t i) const;
    const std::vector<RingElem>& coeffs() const { return coeffs_; }

    friend XPoly operator*(const XPoly& a, const XPoly& b);
    friend bool operator==(const XPoly& a, const XPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// e.g. "1 - (k+2)x + kx^2"
    std::string to_string() const;

private:
    Mode mode_;
    std::vector<RingElem> coeffs_;
};

/// num / den; den(0) = 1 is required for expansion.
struct RationalGF {
    XPoly num;
    XPoly den;

    /// "(num) / (den)"
    std::string to_string() const;
};

/// den = 1 - a x - b x^2, num = x0 + (x1 - a x0) x.
RationalGF gf_from_rec(const Order2Rec& rec);

/// First `count` series coefficients, c_n = num_n - sum_{j>=1} den_j c_{n-j}.
/// Throws std::domain_error when den(0) != 1.
std::vector<RingElem> gf_expand(const RationalGF& gf, std::size_t count);

/// Generating functions as stated for each transform:
///   Binomial  2(1 - 2kx) / (1 - (k+2)x + kx^2)
///   KBinomial 2(1 - k^2 x) / (1 - k(k+2)x + k^3 x^2)
///   RisingK   (2 - (2k^2 - 2k + 2)x) / (1 - (k^2+2)x + x^2)
///   FallingK  (2 + (2 - 4k)x) / (1 - 3kx + (2k^2 - 1)x^2)
RationalGF claimed_gf(TransformKind kind, const RingElem& k);

/// Equality as rational functions: num1 den2 == num2 den1.
bool gf_equivalent(const RationalGF& a, const RationalGF& b);

}  // namespace mkfib
