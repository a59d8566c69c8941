#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mkfib/ring.hpp"

namespace mkfib {

using Index = std::uint64_t;

/// x_{n+1} = a*x_n + b*x_{n-1} with initial values x0, x1.
///
/// All four values share one mode; the constructor enforces it.
struct Order2Rec {
    Order2Rec(RingElem a, RingElem b, RingElem x0, RingElem x1, std::string label = {});

    RingElem a;
    RingElem b;
    RingElem x0;
    RingElem x1;
    std::string label;

    Mode mode() const { return a.mode(); }
};

/// Validates a k parameter: numeric k must be >= 1, symbolic k is any polynomial.
void require_valid_k(const RingElem& k);

/// M_{k,n+1} = k M_{k,n} + M_{k,n-1}, M_0 = M_1 = 2.
Order2Rec modified_k_fib_spec(const RingElem& k);
/// F_{k,n+1} = k F_{k,n} + F_{k,n-1}, F_0 = 0, F_1 = 1.
Order2Rec k_fib_spec(const RingElem& k);

/// First `count` terms by direct iteration. This is the ground truth every
/// other evaluation route is compared against.
std::vector<RingElem> terms(const Order2Rec& rec, std::size_t count);

/// Streams terms x_0 .. x_{count-1} to `sink` without buffering them.
void for_each_term(const Order2Rec& rec, Index count, const std::function<void(Index, const RingElem&)>& sink);

/// x_n via square-and-multiply on the companion matrix [[a, b], [1, 0]].
RingElem term_fast(const Order2Rec& rec, Index n);

/// 2(F_{k,n} + F_{k,n-1}); n >= 1.
RingElem m_from_f(const RingElem& k, Index n);
/// (1/2) * sum_{i=0}^{n-1} (-1)^i M_{k,n-i}; n >= 1.
RingElem f_from_m(const RingElem& k, Index n);

}  // namespace mkfib
