#pragma once

#include <array>

#include "mkfib/ring.hpp"

namespace mkfib::detail {

// Row-major 2x2 over RingElem.
using Mat2 = std::array<RingElem, 4>;

inline Mat2 mat_mul(const Mat2& x, const Mat2& y) {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
            x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

inline Mat2 mat_add(const Mat2& x, const Mat2& y) { return {x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]}; }

inline Mat2 mat_scale(const Mat2& x, const RingElem& s) { return {x[0] * s, x[1] * s, x[2] * s, x[3] * s}; }

inline Mat2 mat_identity(Mode mode) {
    const RingElem one = RingElem::constant(ExactInt(1), mode);
    const RingElem zero = RingElem::constant(ExactInt(0), mode);
    return {one, zero, zero, one};
}

}  // namespace mkfib::detail
