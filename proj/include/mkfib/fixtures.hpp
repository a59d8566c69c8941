#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mkfib/kpoly.hpp"
#include "mkfib/transforms.hpp"

namespace mkfib {

/// A sequence prefix transcribed exactly as published, errors included.
struct TableFixture {
    std::string label;  // e.g. "B2"
    TransformKind kind;
    std::int64_t k;
    std::vector<ExactInt> values;
    std::string citation;
    std::string oeis_note;  // free text, never looked up
};

/// B1-B5, W1-W5, R1-R5, F1-F5 in that order.
const std::vector<TableFixture>& table_fixtures();

/// A polynomial M_{k,n} as printed in the list of first terms.
struct PolyFixture {
    std::string label;
    Index n;
    KPoly value;
};

/// M_{k,2} .. M_{k,5}.
const std::vector<PolyFixture>& m_poly_fixtures();

}  // namespace mkfib
