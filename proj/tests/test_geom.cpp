#include "doctest.h"

#include "bicover/geom.hpp"

using namespace bicover;

namespace {
const auto P2 = BaseSurface::plane();
const auto Q = BaseSurface::quadric();
const auto F2 = BaseSurface::hirzebruch(2);
const auto F3 = BaseSurface::hirzebruch(3);
}  // namespace

TEST_CASE("base surfaces: intersection forms, canonical classes, automorphisms") {
    CHECK(dot({P2, {1}}, {P2, {1}}) == 1);
    CHECK(dot({Q, {1, 0}}, {Q, {0, 1}}) == 1);
    CHECK(dot({Q, {1, 0}}, {Q, {1, 0}}) == 0);
    CHECK(dot(negative_section(F3), negative_section(F3)) == -3);
    CHECK(dot(negative_section(F3), fiber(F3)) == 1);

    CHECK(canonical(P2) == DivisorClass(P2, {-3}));
    CHECK(canonical(Q) == DivisorClass(Q, {-2, -2}));
    CHECK(canonical(F3) == DivisorClass(F3, {-2, -5}));
    // K^2 = 8 on every minimal rational surface other than the plane.
    CHECK(dot(canonical(P2), canonical(P2)) == 9);
    for (int n = 2; n <= 7; ++n) {
        auto b = BaseSurface::hirzebruch(n);
        CHECK(dot(canonical(b), canonical(b)) == 8);
        CHECK(b.aut_dim() == n + 5);
    }
    CHECK(P2.aut_dim() == 8);
    CHECK(Q.aut_dim() == 6);
}

TEST_CASE("base parsing accepts table and command-line spellings") {
    CHECK(BaseSurface::parse("P2") == P2);
    CHECK(BaseSurface::parse("p1xp1") == Q);
    CHECK(BaseSurface::parse("fn:4") == BaseSurface::hirzebruch(4));
    CHECK(BaseSurface::parse("F2") == F2);
    CHECK_THROWS_AS(BaseSurface::parse("p3"), Error);
    CHECK_THROWS_AS(BaseSurface::parse("fn:"), Error);
    CHECK_THROWS_AS(BaseSurface::hirzebruch(1), Error);
}

TEST_CASE("h0 on the plane and the quadric") {
    for (Int d = 0; d <= 12; ++d) CHECK(h0({P2, {d}}) == (d + 1) * (d + 2) / 2);
    CHECK(h0({P2, {-1}}) == 0);
    for (Int a = 0; a <= 6; ++a)
        for (Int b = 0; b <= 6; ++b) CHECK(h0({Q, {a, b}}) == (a + 1) * (b + 1));
    CHECK(h0({Q, {3, -1}}) == 0);
}

TEST_CASE("h0 on Hirzebruch surfaces below the Riemann-Roch range") {
    // |C + F| on F2 is C plus a moving fiber.
    CHECK(h0({F2, {1, 1}}) == 2);
    // On F3 the section C has h1 = 2, so Riemann-Roch undercounts: chi = -1, h0 = 1.
    CHECK(h0_riemann_roch(3, 1, 0) == -1);
    CHECK(h0(negative_section(F3)) == 1);
    CHECK(h0({F3, {2, 0}}) == 1);
    CHECK(h0({F3, {-1, 5}}) == 0);
    CHECK(h0({F3, {1, -1}}) == 0);
    CHECK(is_effective(negative_section(F3)));
    CHECK_FALSE(is_effective({F3, {0, -1}}));
}

TEST_CASE("nef and ample cones") {
    CHECK(is_nef(fiber(F3)));
    CHECK_FALSE(is_ample(fiber(F3)));
    CHECK_FALSE(is_nef(negative_section(F3)));
    CHECK(is_nef({F3, {1, 3}}));
    CHECK_FALSE(is_ample({F3, {1, 3}}));
    CHECK(is_ample({F3, {1, 4}}));
    CHECK(is_ample({Q, {1, 1}}));
    CHECK_FALSE(is_ample({Q, {1, 0}}));
    CHECK(is_ample({P2, {1}}));
}

TEST_CASE("adjunction genus") {
    CHECK(genus({P2, {1}}) == 0);
    CHECK(genus({P2, {3}}) == 1);
    CHECK(genus({P2, {4}}) == 3);
    for (Int a = 1; a <= 5; ++a)
        for (Int b = 1; b <= 5; ++b) CHECK(genus({Q, {a, b}}) == (a - 1) * (b - 1));
    CHECK(genus(negative_section(F2)) == 0);
    // Trisection 3C + 6F on F2: D^2 = 18, D.K = -12.
    CHECK(genus({F2, {3, 6}}) == 4);
    CHECK_THROWS_AS(genus({P2, {-1}}), Error);
}

TEST_CASE("irreducible and rigid classes") {
    CHECK(is_irreducible_class(negative_section(F3)));
    CHECK(is_irreducible_class(fiber(F3)));
    CHECK_FALSE(is_irreducible_class({F3, {1, 1}}));
    CHECK(is_irreducible_class({F3, {1, 3}}));
    CHECK_FALSE(is_irreducible_class({F3, {0, 2}}));
    CHECK(is_irreducible_class({Q, {2, 1}}));
    CHECK_FALSE(is_irreducible_class({Q, {2, 0}}));
    CHECK(is_rigid(negative_section(F2)));
    CHECK_FALSE(is_rigid(fiber(F2)));
    CHECK_FALSE(is_rigid({Q, {1, 0}}));
}

TEST_CASE("generic members") {
    auto fibers = generic_components({F2, {0, 3}});
    REQUIRE(fibers);
    CHECK(fibers->size() == 3);

    // C + F: C meets the fiber, so a smooth member does not exist.
    CHECK_FALSE(generic_components({F2, {1, 1}}).has_value());
    auto crossing = generic_components({F2, {1, 1}}, true);
    REQUIRE(crossing);
    CHECK(crossing->size() == 2);
    CHECK(crossing->front() == negative_section(F2));

    // 2C + 2F on F2 is C plus a section disjoint from it.
    auto split = generic_components({F2, {2, 2}});
    REQUIRE(split);
    REQUIRE(split->size() == 2);
    CHECK(dot((*split)[0], (*split)[1]) == 0);

    CHECK(generic_components({Q, {2, 0}})->size() == 2);
    CHECK(generic_components({Q, {0, 0}})->empty());
    CHECK_FALSE(generic_components({Q, {-1, 2}}).has_value());
}

TEST_CASE("divisor arithmetic") {
    DivisorClass a{Q, {1, 2}}, b{Q, {3, -1}};
    CHECK((a + b) == DivisorClass(Q, {4, 1}));
    CHECK((a - b) == DivisorClass(Q, {-2, 3}));
    CHECK((a * 3) == DivisorClass(Q, {3, 6}));
    CHECK((-a) == DivisorClass(Q, {-1, -2}));
    CHECK(zero_class(Q).is_zero());
    CHECK(a.nonnegative());
    CHECK_FALSE(b.nonnegative());
}
