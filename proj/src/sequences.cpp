#include "mkfib/sequences.hpp"

#include <stdexcept>

#include "mat2.hpp"

namespace mkfib {

Order2Rec::Order2Rec(RingElem a_, RingElem b_, RingElem x0_, RingElem x1_, std::string label_)
    : a(std::move(a_)), b(std::move(b_)), x0(std::move(x0_)), x1(std::move(x1_)), label(std::move(label_)) {
    Mode m = a.mode();
    if (b.mode() != m || x0.mode() != m || x1.mode() != m)
        throw ModeMismatchError("recurrence '" + label + "' mixes numeric and symbolic values");
}

void require_valid_k(const RingElem& k) {
    if (k.is_numeric() && k.as_int() < ExactInt(1))
        throw std::invalid_argument("k must be >= 1, got " + k.to_string());
}

namespace {

RingElem lift(std::int64_t c, const RingElem& like) { return RingElem::constant(ExactInt(c), like.mode()); }

}  // namespace

Order2Rec modified_k_fib_spec(const RingElem& k) {
    require_valid_k(k);
    return {k, lift(1, k), lift(2, k), lift(2, k), "M"};
}

Order2Rec k_fib_spec(const RingElem& k) {
    require_valid_k(k);
    return {k, lift(1, k), lift(0, k), lift(1, k), "F"};
}

std::vector<RingElem> terms(const Order2Rec& rec, std::size_t count) {
    std::vector<RingElem> out;
    out.reserve(count);
    if (count > 0) out.push_back(rec.x0);
    if (count > 1) out.push_back(rec.x1);
    for (std::size_t n = 2; n < count; ++n) out.push_back(rec.a * out[n - 1] + rec.b * out[n - 2]);
    return out;
}

void for_each_term(const Order2Rec& rec, Index count, const std::function<void(Index, const RingElem&)>& sink) {
    if (count == 0) return;
    RingElem prev = rec.x0;
    sink(0, prev);
    if (count == 1) return;
    RingElem cur = rec.x1;
    sink(1, cur);
    for (Index n = 2; n < count; ++n) {
        RingElem next = rec.a * cur;
        next += rec.b * prev;
        prev = std::move(cur);
        cur = std::move(next);
        sink(n, cur);
    }
}

RingElem term_fast(const Order2Rec& rec, Index n) {
    if (n == 0) return rec.x0;
    using detail::mat_mul;
    // [x_{n}, x_{n-1}]^T = C^{n-1} [x_1, x_0]^T
    detail::Mat2 base{rec.a, rec.b, lift(1, rec.a), lift(0, rec.a)};
    detail::Mat2 acc = detail::mat_identity(rec.mode());
    for (Index e = n - 1; e > 0; e >>= 1U) {
        if (e & 1U) acc = mat_mul(acc, base);
        if (e > 1) base = mat_mul(base, base);
    }
    return acc[0] * rec.x1 + acc[1] * rec.x0;
}

RingElem m_from_f(const RingElem& k, Index n) {
    if (n == 0) throw std::invalid_argument("M = 2(F_n + F_{n-1}) needs n >= 1");
    auto f = terms(k_fib_spec(k), n + 1);
    return (f[n] + f[n - 1]) * ExactInt(2);
}

RingElem f_from_m(const RingElem& k, Index n) {
    if (n == 0) throw std::invalid_argument("alternating-sum inverse needs n >= 1");
    auto m = terms(modified_k_fib_spec(k), n + 1);
    RingElem sum = lift(0, k);
    for (Index i = 0; i < n; ++i) {
        if (i % 2 == 0)
            sum += m[n - i];
        else
            sum -= m[n - i];
    }
    return sum.exact_div_int(ExactInt(2));
}

}  // namespace mkfib
