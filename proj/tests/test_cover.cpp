#include "doctest.h"

#include "bicover/classify.hpp"

using namespace bicover;

namespace {

// Intersection form on Fn written out by hand: (a C + b F).(c C + d F) = -n a c + a d + b c.
Int fn_dot(int n, Int a, Int b, Int c, Int d) { return -n * a * c + a * d + b * c; }

// K^2 of the cover from the closed form (2K + D)^2, with K = -2C - (n+2)F.
Int fn_k2(int n, const std::array<Vec, 3>& t) {
    Int a = -4 + t[0][0] + t[1][0] + t[2][0];
    Int b = -2 * (n + 2) + t[0][1] + t[1][1] + t[2][1];
    return fn_dot(n, a, b, a, b);
}

// chi = 4 + sum over half classes L of L.(L + K) / 2.
Int fn_chi(int n, const std::array<Vec, 3>& t) {
    Int twice = 0;
    for (int i = 0; i < 3; ++i) {
        const auto& x = t[(i + 1) % 3];
        const auto& y = t[(i + 2) % 3];
        Int a = (x[0] + y[0]) / 2, b = (x[1] + y[1]) / 2;
        twice += fn_dot(n, a, b, a - 2, b - (n + 2));
    }
    return 4 + twice / 2;
}

BidoubleData p2(Int a, Int b, Int c) {
    return BidoubleData::from_totals(BaseSurface::plane(), {Vec{a}, Vec{b}, Vec{c}});
}

}  // namespace

TEST_CASE("plane invariants match the first table") {
    struct Row {
        Int d1, d2, d3, pg, k2;
    };
    for (auto r : {Row{3, 3, 1, 1, 1}, Row{3, 3, 3, 3, 9}, Row{4, 2, 0, 1, 0}, Row{4, 2, 2, 2, 4}, Row{5, 1, 1, 2, 1}}) {
        auto inv = compute_invariants(p2(r.d1, r.d2, r.d3));
        CAPTURE(r.d1);
        CAPTURE(r.d2);
        CAPTURE(r.d3);
        CHECK(inv.p_g == r.pg);
        CHECK(inv.q == 0);
        CHECK(inv.k2 == r.k2);
        CHECK(inv.chi == 1 + r.pg);
    }
}

TEST_CASE("quotient classification on the plane") {
    auto b = p2(3, 3, 3);
    for (int i = 1; i <= 3; ++i) CHECK(classify_quotient(b, i).short_name() == "K3");
    auto d = p2(4, 2, 2);
    CHECK(classify_quotient(d, 1).short_name() == "rat");
    CHECK(classify_quotient(d, 2).short_name() == "K3");
    CHECK(chi_Yi(d, 1) == 1);
    CHECK(chi_Yi(d, 2) == 2);
    CHECK(plurigenus_Yi(d, 1, 2) == 0);
    CHECK(plurigenus_Yi(d, 2, 2) == 1);
}

TEST_CASE("Kodaira dimension and minimality") {
    auto [kod_b, min_b] = kodaira_and_minimality(p2(3, 3, 3));
    CHECK(kod_b == Kodaira::Two);
    CHECK(min_b);
    CHECK(compute_invariants(p2(4, 2, 0)).kodaira == Kodaira::K3Special);
    auto Q = BaseSurface::quadric();
    auto l = BidoubleData::from_totals(Q, {Vec{4, 0}, Vec{0, 4}, Vec{4, 0}});
    CHECK(compute_invariants(l).kodaira == Kodaira::One);
    CHECK(compute_invariants(l).q == 3);
    auto p = BidoubleData::from_totals(Q, {Vec{4, 0}, Vec{0, 4}, Vec{0, 0}});
    CHECK(compute_invariants(p).kodaira == Kodaira::Zero);
}

TEST_CASE("closed forms for chi and K^2 on Hirzebruch surfaces") {
    for (int n = 2; n <= 4; ++n) {
        auto base = BaseSurface::hirzebruch(n);
        for (const auto& row : enumerate(base, 10)) {
            auto t = row.data.totals();
            CAPTURE(base.name());
            CAPTURE(row.label);
            CHECK(k2_X(row.data) == fn_k2(n, t));
            CHECK(chi_X(row.data) == fn_chi(n, t));
        }
    }
}

TEST_CASE("validation rejects bad data") {
    CHECK(validate(p2(3, 3, 3)).empty());
    auto parity = validate(p2(3, 2, 2));
    REQUIRE_FALSE(parity.empty());
    CHECK(parity.front().find("parity") != std::string::npos);
    CHECK_THROWS_AS(require_valid(p2(3, 2, 2)), Error);
    CHECK_FALSE(validate(p2(-1, 1, 1)).empty());
}

TEST_CASE("singular specializations lower K^2 by one per triple point") {
    auto cubics = p2(3, 3, 3);
    for (int k = 0; k <= 7; ++k) CHECK(singular_k2(cubics, k) == 9 - k);
    CHECK_THROWS_AS(singular_k2(cubics, 8), Error);
    auto quad = BidoubleData::from_totals(BaseSurface::quadric(), {Vec{3, 1}, Vec{1, 3}, Vec{1, 3}});
    CHECK(singular_k2(quad, 1) == 5);
    CHECK(compute_invariants(quad).p_g == 2);
}

TEST_CASE("half classes") {
    auto h = half_classes(p2(4, 2, 2));
    CHECK(h[0] == DivisorClass(BaseSurface::plane(), {2}));
    CHECK(h[1] == DivisorClass(BaseSurface::plane(), {3}));
    CHECK(h[2] == DivisorClass(BaseSurface::plane(), {3}));
}
