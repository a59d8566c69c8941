#pragma once

#include <string>
#include <vector>

#include "mkfib/ring.hpp"
#include "mkfib/transforms.hpp"

namespace mkfib {

struct BenchTiming {
    std::string strategy;
    double millis = 0;
    RingElem value;
};

struct BenchRow {
    Index n = 0;
    std::vector<BenchTiming> timings;  // iterative, matrix-power, direct-sum
    bool values_equal = false;
};

/// Times three evaluations of the kind's n-th term at integer k:
/// iterating the closed recurrence, companion-matrix powering, and the
/// direct binomial sum (binary-split evaluation).
BenchRow bench_transform(TransformKind kind, std::int64_t k, Index n);

}  // namespace mkfib
