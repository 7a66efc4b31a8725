#include "doctest.h"

#include "properties.hpp"

TEST_CASE("dot is symmetric and bilinear") {
    auto v = props::dot_bilinear_symmetric(20240611u);
    CHECK_MESSAGE(v.ok, v.detail);
    CHECK(v.cases == 1000);
}

TEST_CASE("Hirzebruch h0 agrees with Riemann-Roch and the Cox ring count") {
    auto v = props::fn_h0_matches_riemann_roch();
    CHECK_MESSAGE(v.ok, v.detail);
    CHECK(props::cox_monomials(2, 1, 1) == 2);
    CHECK(props::cox_monomials(3, 2, 0) == 1);
}

TEST_CASE("chi is additive over the quotients") {
    auto v = props::chi_additive_on_all_rows(10);
    CHECK_MESSAGE(v.ok, v.detail);
    CHECK(v.cases > 40);
}

TEST_CASE("determinants match invariant factors") {
    auto v = props::det_equals_invariant_factors(7u);
    CHECK_MESSAGE(v.ok, v.detail);
    CHECK(props::laplace_det({{2, 1}, {1, 2}}) == 3);
    CHECK(props::laplace_det({{0, 1, 0}, {1, 0, 0}, {0, 0, -2}}) == 2);
}

TEST_CASE("search bounds are stable") {
    auto v = props::search_bounds_stable();
    CHECK_MESSAGE(v.ok, v.detail);
}
