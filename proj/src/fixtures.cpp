#include "mkfib/fixtures.hpp"

namespace mkfib {

namespace {

TableFixture make(std::string label, TransformKind kind, std::int64_t k, std::initializer_list<std::int64_t> values,
                  std::string citation, std::string oeis = {}) {
    std::vector<ExactInt> v(values.begin(), values.end());
    return {std::move(label), kind, k, std::move(v), std::move(citation), std::move(oeis)};
}

}  // namespace

const std::vector<TableFixture>& table_fixtures() {
    using K = TransformKind;
    static const std::vector<TableFixture> fixtures = [] {
        const std::string b = "list of binomial transforms B_k";
        const std::string w = "list of k-binomial transforms W_k";
        const std::string r = "list of rising k-binomial transforms R_k";
        const std::string f = "list of falling k-binomial transforms F_k";
        const std::string b1_oeis = "A052995 without leading 0, or A055819 without leading 1";
        return std::vector<TableFixture>{
            make("B1", K::Binomial, 1, {2, 4, 10, 26, 68, 178}, b, b1_oeis),
            make("B2", K::Binomial, 2, {2, 4, 12, 40, 136, 464}, b, "A056236"),
            make("B3", K::Binomial, 3, {2, 4, 14, 58, 248, 1066}, b),
            make("B4", K::Binomial, 4, {2, 4, 16, 80, 416, 2176}, b),
            make("B5", K::Binomial, 5, {2, 4, 18, 106, 652, 4034}, b),
            make("W1", K::KBinomial, 1, {2, 4, 10, 26, 68, 178}, w, b1_oeis),
            make("W2", K::KBinomial, 2, {2, 8, 96, 320, 1088, 3712}, w),
            make("W3", K::KBinomial, 3, {2, 12, 378, 1566, 6696, 28782}, w),
            make("W4", K::KBinomial, 4, {2, 16, 1024, 5120, 26624}, w),
            make("W5", K::KBinomial, 5, {2, 20, 2250, 13250, 81500}, w),
            make("R1", K::RisingK, 1, {2, 4, 10, 26, 68, 178}, r, b1_oeis),
            make("R2", K::RisingK, 2, {2, 6, 34, 198, 1154, 6726}, r),
            make("R3", K::RisingK, 3, {2, 8, 86, 938, 10232}, r),
            make("R4", K::RisingK, 4, {2, 10, 178, 3194, 57314}, r),
            make("R5", K::RisingK, 5, {2, 12, 322, 8682, 234092}, r),
            make("F1", K::FallingK, 1, {2, 4, 10, 26, 68, 178}, f, b1_oeis),
            make("F2", K::FallingK, 2, {2, 6, 22, 90, 386, 1686}, f),
            make("F3", K::FallingK, 3, {2, 8, 38, 206, 1208, 7370}, f),
            make("F4", K::FallingK, 4, {2, 10, 58, 386, 2834, 22042}, f),
            make("F5", K::FallingK, 5, {2, 12, 82, 642, 5612, 52722}, f),
        };
    }();
    return fixtures;
}

const std::vector<PolyFixture>& m_poly_fixtures() {
    static const std::vector<PolyFixture> fixtures{
        {"M_{k,2}", 2, KPoly{2, 2}},
        {"M_{k,3}", 3, KPoly{2, 2, 2}},
        {"M_{k,4}", 4, KPoly{2, 4, 2, 2}},
        {"M_{k,5}", 5, KPoly{2, 4, 6, 2, 2}},
    };
    return fixtures;
}

}  // namespace mkfib
