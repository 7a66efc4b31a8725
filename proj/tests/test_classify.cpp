#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>

#include "bicover/classify.hpp"

using namespace bicover;

namespace {

std::map<std::string, int> count_by_table(const BaseSurface& base, int cap) {
    std::map<std::string, int> out;
    for (const auto& r : enumerate(base, cap)) ++out[r.table];
    return out;
}

}  // namespace

TEST_CASE("row counts per table") {
    CHECK(count_by_table(BaseSurface::plane(), 10) == std::map<std::string, int>{{"table1", 5}});
    CHECK(count_by_table(BaseSurface::quadric(), 10) ==
          std::map<std::string, int>{{"tableP1xP1-general", 8}, {"tableP1xP1-elliptic", 15}});
    CHECK(count_by_table(BaseSurface::hirzebruch(2), 10) ==
          std::map<std::string, int>{{"tableF2-irr", 5}, {"tableF2-red", 6}});
    CHECK(count_by_table(BaseSurface::hirzebruch(3), 10) == std::map<std::string, int>{{"tableF3", 3}});
    CHECK(count_by_table(BaseSurface::hirzebruch(4), 10) == std::map<std::string, int>{{"tableF4", 3}});
    for (int n = 5; n <= 8; ++n) CHECK(enumerate(BaseSurface::hirzebruch(n), 10).empty());
}

TEST_CASE("parametric families on the quadric") {
    std::vector<std::pair<int, Int>> families;
    for (const auto& r : enumerate(BaseSurface::quadric(), 10))
        if (r.parametric) families.emplace_back(r.parametric->coord, r.parametric->min);
    std::sort(families.begin(), families.end());
    // Free coordinate is the first one of D3; minima 3, 4, 4.
    CHECK(families == std::vector<std::pair<int, Int>>{{0, 3}, {0, 4}, {0, 4}});
}

TEST_CASE("a larger cap changes no row") {
    auto a = enumerate(BaseSurface::quadric(), 10);
    auto b = enumerate(BaseSurface::quadric(), 12);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].data.totals() == b[i].data.totals());
}

TEST_CASE("canonical form is invariant under the symmetry group") {
    const auto Q = BaseSurface::quadric();
    std::mt19937 rng(99);
    for (const auto& row : enumerate(Q, 10)) {
        auto t = row.data.totals();
        auto want = canonical_form(Q, t).totals;
        for (int trial = 0; trial < 6; ++trial) {
            auto u = t;
            std::shuffle(u.begin(), u.end(), rng);
            if (trial % 2)
                for (auto& v : u) std::swap(v[0], v[1]);
            auto cf = canonical_form(Q, u);
            CHECK(cf.totals == want);
            // The recorded permutation and swap reproduce the canonical totals.
            for (int j = 0; j < 3; ++j) {
                auto v = u[cf.perm[j]];
                if (cf.swapped) std::swap(v[0], v[1]);
                CHECK(v == cf.totals[j]);
            }
        }
    }
}

TEST_CASE("canonical form on Hirzebruch surfaces only permutes") {
    const auto F2 = BaseSurface::hirzebruch(2);
    std::array<Vec, 3> t{Vec{1, 2}, Vec{3, 6}, Vec{1, 2}};
    auto cf = canonical_form(F2, t);
    CHECK_FALSE(cf.swapped);
    CHECK(cf.totals[0] == Vec{3, 6});
}

TEST_CASE("table membership") {
    const auto Q = BaseSurface::quadric();
    CHECK(table_id(BaseSurface::plane(), {Vec{3}, Vec{3}, Vec{3}}, 9) == "table1");
    CHECK(table_id(Q, {Vec{2, 2}, Vec{2, 2}, Vec{2, 2}}, 8) == "tableP1xP1-general");
    CHECK(table_id(Q, {Vec{4, 0}, Vec{0, 4}, Vec{0, 0}}, 0) == "tableP1xP1-elliptic");
    CHECK(quadric_case_tag({Vec{3, 1}, Vec{1, 3}, Vec{1, 3}}).size() == 3);
}

TEST_CASE("matching against listed rows") {
    const auto P2 = BaseSurface::plane();
    auto rows = enumerate(P2, 10);
    std::vector<ExpectedRow> listed = {
        {"a", {Vec{3}, Vec{3}, Vec{1}}, {"rat", "rat", "K3"}, 1, 0, 1, std::nullopt},
        {"b", {Vec{3}, Vec{3}, Vec{3}}, {"K3", "K3", "K3"}, 3, 0, 9, std::nullopt},
        {"c", {Vec{4}, Vec{2}, Vec{0}}, {"rat", "rat", "K3"}, 1, 0, 0, std::nullopt},
        {"d", {Vec{4}, Vec{2}, Vec{2}}, {"rat", "K3", "K3"}, 2, 0, 4, std::nullopt},
        {"e", {Vec{5}, Vec{1}, Vec{1}}, {"rat", "K3", "K3"}, 2, 0, 1, std::nullopt},
    };
    auto clean = match_expected(P2, rows, listed, 10);
    CHECK(clean.diffs.empty());
    CHECK(std::count(clean.matched.begin(), clean.matched.end(), -1) == 0);

    // Listed in a different index order: still matched through the symmetry group.
    auto reordered = listed;
    reordered[3].totals = {Vec{2}, Vec{4}, Vec{2}};
    reordered[3].tags = {"K3", "rat", "K3"};
    CHECK(match_expected(P2, rows, reordered, 10).diffs.empty());

    auto wrong = listed;
    wrong[1].k2 = 8;
    auto rep = match_expected(P2, rows, wrong, 10);
    REQUIRE(rep.diffs.size() == 1);
    CHECK(rep.diffs[0] == Diff{"b", "K2", "8", "9"});
    CHECK(rep.diffs[0].str() == "row b: K2 listed 8, computed 9");

    auto short_list = listed;
    short_list.pop_back();
    auto extra = match_expected(P2, rows, short_list, 10);
    REQUIRE(extra.diffs.size() == 1);
    CHECK(extra.diffs[0].column == "presence");
    CHECK(extra.diffs[0].computed == "produced");
}
