#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace mkfib {

/// Operands from numeric and symbolic mode met in one expression.
class ModeMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exact division that would leave a remainder.
class DivisibilityError : public std::domain_error {
public:
    DivisibilityError(const std::string& what, std::optional<std::size_t> coefficient = std::nullopt)
        : std::domain_error(what), coefficient_(coefficient) {}

    /// Degree of the offending coefficient when the dividend was a polynomial.
    std::optional<std::size_t> coefficient() const { return coefficient_; }

private:
    std::optional<std::size_t> coefficient_;
};

}  // namespace mkfib
