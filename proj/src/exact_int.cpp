#include "mkfib/exact_int.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include "mkfib/errors.hpp"

namespace mkfib {

ExactInt ExactInt::from_string(std::string_view text) {
    std::string s(text);
    mpz_class v;
    if (s.empty() || v.set_str(s, 10) != 0)
        throw std::invalid_argument("not a base-10 integer: '" + s + "'");
    return ExactInt(std::move(v));
}

void ExactInt::mul_div_exact(std::uint64_t m, std::uint64_t d) {
    if (d == 0) throw std::invalid_argument("division by zero");
    mpz_mul_ui(value_.get_mpz_t(), value_.get_mpz_t(), m);
    if (!mpz_divisible_ui_p(value_.get_mpz_t(), d))
        throw DivisibilityError(to_string() + " is not divisible by " + std::to_string(d));
    mpz_divexact_ui(value_.get_mpz_t(), value_.get_mpz_t(), d);
}

bool ExactInt::divisible_by(const ExactInt& d) const {
    if (d.is_zero()) return is_zero();
    return mpz_divisible_p(value_.get_mpz_t(), d.value_.get_mpz_t()) != 0;
}

ExactInt ExactInt::exact_div(const ExactInt& d) const {
    if (d.is_zero()) throw std::invalid_argument("division by zero");
    if (!divisible_by(d))
        throw DivisibilityError(to_string() + " is not divisible by " + d.to_string());
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), value_.get_mpz_t(), d.value_.get_mpz_t());
    return ExactInt(std::move(q));
}

ExactInt ExactInt::pow(std::uint64_t e) const {
    if (e > std::numeric_limits<unsigned long>::max()) throw std::overflow_error("exponent too large");
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), value_.get_mpz_t(), static_cast<unsigned long>(e));
    return ExactInt(std::move(r));
}

bool ExactInt::fits_int64() const { return value_.fits_slong_p(); }

std::int64_t ExactInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error(to_string() + " does not fit in 64 bits");
    return value_.get_si();
}

double ExactInt::to_double() const {
    // mpz_get_d truncates; go through mpz_get_d_2exp to keep the leading bits.
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, value_.get_mpz_t());
    return std::ldexp(mant, static_cast<int>(exp));
}

std::size_t ExactInt::decimal_digits() const {
    if (is_zero()) return 1;
    // mpz_sizeinbase may overshoot by one for base 10.
    std::size_t d = mpz_sizeinbase(value_.get_mpz_t(), 10);
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, d - 1);
    return mpz_cmpabs(value_.get_mpz_t(), p.get_mpz_t()) >= 0 ? d : d - 1;
}

std::ostream& operator<<(std::ostream& os, const ExactInt& v) { return os << v.to_string(); }

}  // namespace mkfib
