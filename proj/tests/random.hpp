#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mkfib/kpoly.hpp"

namespace testgen {

/// Fixed-seed generator so property failures reproduce.
inline std::mt19937_64& rng() {
    static std::mt19937_64 g(0x6b666962ULL);
    return g;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

/// Random integer with up to `limbs` 60-bit chunks.
inline mkfib::ExactInt big_int(int limbs = 3) {
    mkfib::ExactInt v(0);
    int count = static_cast<int>(uniform(1, limbs));
    for (int i = 0; i < count; ++i) v = v * mkfib::ExactInt(std::int64_t{1} << 60) + mkfib::ExactInt(uniform(0, (std::int64_t{1} << 60) - 1));
    return uniform(0, 1) ? -v : v;
}

inline mkfib::KPoly poly(int max_degree = 6) {
    std::vector<mkfib::ExactInt> c;
    int deg = static_cast<int>(uniform(-1, max_degree));
    for (int i = 0; i <= deg; ++i) c.push_back(uniform(0, 3) == 0 ? mkfib::ExactInt(0) : big_int(2));
    return mkfib::KPoly(std::move(c));
}

}  // namespace testgen
