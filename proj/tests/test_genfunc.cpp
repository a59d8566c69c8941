#include "doctest.h"

#include "mkfib/genfunc.hpp"

using namespace mkfib;

namespace {

RingElem num(std::int64_t v) { return RingElem::numeric(v); }

std::vector<std::string> as_text(const std::vector<RingElem>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.to_string());
    return out;
}

using strs = std::vector<std::string>;

}  // namespace

TEST_SUITE("genfunc") {

TEST_CASE("gf_from_rec") {
    RingElem k = RingElem::symbol();
    auto b = gf_from_rec(transform_rec_spec(TransformKind::Binomial, k));
    CHECK(b.num.to_string() == "2 - 2kx");
    CHECK(b.den.to_string() == "1 - (k+2)x + kx^2");
    auto r = gf_from_rec(transform_rec_spec(TransformKind::RisingK, k));
    CHECK(r.num.to_string() == "2 - (2k^2-2k+2)x");
    CHECK(r.den.to_string() == "1 - (k^2+2)x + x^2");
    auto f = gf_from_rec(transform_rec_spec(TransformKind::FallingK, k));
    CHECK(f.num.to_string() == "2 - (4k-2)x");
    CHECK(f.num.coeff(1).to_string() == "-4k+2");
    CHECK(f.den.coeff(2).to_string() == "2k^2-1");
}

TEST_CASE("gf_expand") {
    CHECK(as_text(gf_expand(gf_from_rec(transform_rec_spec(TransformKind::Binomial, num(2))), 6)) ==
          strs{"2", "4", "12", "40", "136", "464"});
    RationalGF geometric{XPoly(Mode::Numeric, {num(1)}), XPoly(Mode::Numeric, {num(1), num(-1)})};
    CHECK(as_text(gf_expand(geometric, 4)) == strs{"1", "1", "1", "1"});
    CHECK(as_text(gf_expand(gf_from_rec(transform_rec_spec(TransformKind::KBinomial, num(3))), 4)) ==
          strs{"2", "12", "126", "1566"});
    CHECK(gf_expand(geometric, 0).empty());
}

TEST_CASE("gf_expand rejects a non-unit constant term") {
    RationalGF bad{XPoly(Mode::Numeric, {num(1)}), XPoly(Mode::Numeric, {num(2), num(-1)})};
    CHECK_THROWS_AS(gf_expand(bad, 3), std::domain_error);
    RationalGF zero_den{XPoly(Mode::Numeric, {num(1)}), XPoly(Mode::Numeric)};
    CHECK_THROWS_AS(gf_expand(zero_den, 3), std::domain_error);
}

TEST_CASE("XPoly is canonical") {
    XPoly p(Mode::Numeric, {num(1), num(0), num(0)});
    CHECK(p.degree() == 0);
    CHECK(p == XPoly(Mode::Numeric, {num(1)}));
    CHECK(XPoly(Mode::Numeric, {num(0)}).degree() == -1);
    CHECK(XPoly(Mode::Numeric).to_string() == "0");
    CHECK(p.coeff(5) == num(0));
}

TEST_CASE("XPoly product") {
    XPoly a(Mode::Numeric, {num(1), num(1)});
    XPoly b(Mode::Numeric, {num(1), num(-1)});
    CHECK(a * b == XPoly(Mode::Numeric, {num(1), num(0), num(-1)}));
    CHECK((a * b).to_string() == "1 - x^2");
}

TEST_CASE("claimed_gf") {
    auto b1 = gf_expand(claimed_gf(TransformKind::Binomial, num(1)), 3);
    CHECK(as_text(b1) == strs{"2", "2", "4"});
    CHECK(transform_direct(TransformKind::Binomial, num(1), 1) == num(4));

    RingElem k = RingElem::symbol();
    auto w = claimed_gf(TransformKind::KBinomial, k);
    CHECK(w.num == gf_from_rec(transform_rec_spec(TransformKind::KBinomial, k)).num);
    CHECK(w.num.to_string() == "2 - 2k^2x");

    CHECK(as_text(gf_expand(claimed_gf(TransformKind::RisingK, num(2)), 4)) == strs{"2", "6", "34", "198"});
}

TEST_CASE("round trip: gf_expand(gf_from_rec) = terms, n <= 32") {
    auto recs = [](const RingElem& k) {
        std::vector<Order2Rec> out{modified_k_fib_spec(k), k_fib_spec(k)};
        for (auto kind : kAllKinds) out.push_back(transform_rec_spec(kind, k));
        return out;
    };
    for (std::int64_t k = 1; k <= 10; ++k)
        for (const auto& rec : recs(num(k))) CHECK(gf_expand(gf_from_rec(rec), 33) == terms(rec, 33));
    for (const auto& rec : recs(RingElem::symbol())) CHECK(gf_expand(gf_from_rec(rec), 33) == terms(rec, 33));
}

TEST_CASE("claimed GFs versus derived GFs") {
    RingElem k = RingElem::symbol();
    for (auto kind : {TransformKind::KBinomial, TransformKind::RisingK, TransformKind::FallingK}) {
        auto derived = gf_from_rec(transform_rec_spec(kind, k));
        auto claimed = claimed_gf(kind, k);
        CHECK(claimed.num == derived.num);
        CHECK(claimed.den == derived.den);
        CHECK(gf_equivalent(claimed, derived));
    }
    auto derived = gf_from_rec(transform_rec_spec(TransformKind::Binomial, k));
    auto claimed = claimed_gf(TransformKind::Binomial, k);
    CHECK(claimed.den == derived.den);
    CHECK_FALSE(gf_equivalent(claimed, derived));
    CHECK(claimed.num.to_string() == "2 - 4kx");
    for (std::int64_t kv = 1; kv <= 10; ++kv) {
        auto c = gf_expand(claimed_gf(TransformKind::Binomial, num(kv)), 2);
        auto t = gf_expand(gf_from_rec(transform_rec_spec(TransformKind::Binomial, num(kv))), 2);
        CHECK(c[0] == t[0]);
        CHECK(c[1] != t[1]);
    }
}

TEST_CASE("gf_equivalent accepts unreduced forms") {
    auto g = gf_from_rec(transform_rec_spec(TransformKind::Binomial, num(3)));
    XPoly factor(Mode::Numeric, {num(1), num(5)});
    RationalGF scaled{g.num * factor, g.den * factor};
    CHECK(gf_equivalent(g, scaled));
    CHECK(gf_expand(scaled, 20) == gf_expand(g, 20));
}

TEST_CASE("RationalGF text") {
    CHECK(gf_from_rec(transform_rec_spec(TransformKind::Binomial, num(2))).to_string() ==
          "(2 - 4x) / (1 - 4x + 2x^2)");
}

}  // TEST_SUITE
