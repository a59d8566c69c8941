#include "mkfib/bench.hpp"

#include <chrono>

#include "mkfib/sequences.hpp"

namespace mkfib {

namespace {

template <class F>
BenchTiming timed(std::string strategy, F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    RingElem v = f();
    auto t1 = std::chrono::steady_clock::now();
    return {std::move(strategy), std::chrono::duration<double, std::milli>(t1 - t0).count(), std::move(v)};
}

}  // namespace

BenchRow bench_transform(TransformKind kind, std::int64_t k_value, Index n) {
    const RingElem k = RingElem::numeric(k_value);
    const Order2Rec rec = transform_rec_spec(kind, k);
    BenchRow row;
    row.n = n;
    row.timings.push_back(timed("iterative", [&] {
        RingElem last;
        for_each_term(rec, n + 1, [&](Index i, const RingElem& v) {
            if (i == n) last = v;
        });
        return last;
    }));
    row.timings.push_back(timed("matrix-power", [&] { return term_fast(rec, n); }));
    row.timings.push_back(
        timed("direct-sum", [&] { return transform_direct(kind, k, n, DirectSumMethod::BinarySplit); }));
    row.values_equal = true;
    for (const auto& t : row.timings) row.values_equal = row.values_equal && t.value == row.timings.front().value;
    return row;
}

}  // namespace mkfib
