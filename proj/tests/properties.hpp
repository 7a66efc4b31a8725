#pragma once

// Property suites shared by the unit tests and the acceptance binary. Each returns a
// verdict with a short description of the first counterexample.

#include <random>
#include <string>

#include "bicover/classify.hpp"
#include "bicover/iterated.hpp"
#include "bicover/lattice.hpp"

namespace props {

using namespace bicover;

struct Verdict {
    bool ok = true;
    int cases = 0;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

inline BaseSurface random_base(std::mt19937& rng) {
    int pick = std::uniform_int_distribution<int>(0, 5)(rng);
    if (pick == 0) return BaseSurface::plane();
    if (pick == 1) return BaseSurface::quadric();
    return BaseSurface::hirzebruch(pick);
}

inline DivisorClass random_class(std::mt19937& rng, const BaseSurface& b) {
    std::uniform_int_distribution<Int> coeff(-12, 12);
    Vec v(b.picard_rank());
    for (auto& x : v) x = coeff(rng);
    return {b, v};
}

inline Verdict dot_bilinear_symmetric(unsigned seed, int n = 1000) {
    Verdict v;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<Int> scal(-7, 7);
    for (int i = 0; i < n; ++i, ++v.cases) {
        auto b = random_base(rng);
        auto x = random_class(rng, b), y = random_class(rng, b), z = random_class(rng, b);
        Int s = scal(rng), t = scal(rng);
        if (dot(x, y) != dot(y, x)) v.fail("asymmetric at " + x.str() + "," + y.str() + " on " + b.name());
        if (dot(x * s + y * t, z) != s * dot(x, z) + t * dot(y, z))
            v.fail("not linear at " + x.str() + "," + y.str() + "," + z.str() + " on " + b.name());
    }
    return v;
}

// Sections of aC + bF counted as monomials of the Cox ring: x0, x1 of class F, y0 of
// class C and y1 of class C + nF.
inline Int cox_monomials(int n, Int a, Int b) {
    if (a < 0) return 0;
    Int count = 0;
    for (Int s = 0; s <= a; ++s)          // exponent of y1; y0 takes a - s
        for (Int p = 0; p <= b; ++p)      // exponent of x0
            count += (b - n * s - p >= 0);  // x1 takes the rest
    return count;
}

// h0 by push-forward agrees with Riemann-Roch wherever b >= a n (no higher cohomology),
// and with the Cox ring count everywhere. F0 is the quadric; F1 is not a minimal base and
// has no representation here.
inline Verdict fn_h0_matches_riemann_roch() {
    Verdict v;
    for (int n : {0, 2, 3, 4, 5, 6}) {
        auto base = n == 0 ? BaseSurface::quadric() : BaseSurface::hirzebruch(n);
        for (Int a = 0; a <= 8; ++a)
            for (Int b = 0; b <= 40; ++b, ++v.cases) {
                Int got = h0(DivisorClass(base, {a, b}));
                if (got != cox_monomials(n, a, b))
                    v.fail("F" + std::to_string(n) + " (" + std::to_string(a) + "," + std::to_string(b) +
                           "): h0 " + std::to_string(got) + " vs monomials " + std::to_string(cox_monomials(n, a, b)));
                if (b >= a * n && got != h0_riemann_roch(n, a, b))
                    v.fail("F" + std::to_string(n) + " (" + std::to_string(a) + "," + std::to_string(b) +
                           "): h0 " + std::to_string(got) + " vs RR " + std::to_string(h0_riemann_roch(n, a, b)));
            }
    }
    return v;
}

inline Verdict chi_additive_on_all_rows(int cap) {
    Verdict v;
    std::vector<BaseSurface> bases = {BaseSurface::plane(), BaseSurface::quadric()};
    for (int n = 2; n <= 4; ++n) bases.push_back(BaseSurface::hirzebruch(n));
    for (const auto& base : bases)
        for (const auto& row : enumerate(base, cap)) {
            ++v.cases;
            Int sum = chi_Yi(row.data, 1) + chi_Yi(row.data, 2) + chi_Yi(row.data, 3);
            if (chi_X(row.data) != sum - 2)
                v.fail(base.name() + " row " + row.label + ": chi(X) " + std::to_string(chi_X(row.data)) +
                       " vs sum chi(Yi) - 2 = " + std::to_string(sum - 2));
        }
    return v;
}

// Exact determinant by cofactor expansion, for matrices of size <= 7.
inline Int laplace_det(const IntMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Int total = 0;
    for (std::size_t col = 0; col < n; ++col) {
        if (m[0][col] == 0) continue;
        IntMatrix minor;
        for (std::size_t r = 1; r < n; ++r) {
            Vec row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != col) row.push_back(m[r][c]);
            minor.push_back(row);
        }
        Int sign = (col % 2 == 0) ? 1 : -1;
        total += sign * m[0][col] * laplace_det(minor);
    }
    return total;
}

inline Lattice random_lattice(std::mt19937& rng) {
    std::uniform_int_distribution<int> size(1, 6);
    std::uniform_int_distribution<Int> entry(-4, 4);
    for (;;) {
        int n = size(rng);
        IntMatrix g(n, Vec(n));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) g[i][j] = g[j][i] = entry(rng);
        if (laplace_det(g) != 0) return Lattice{g};
    }
}

// |det| equals the product of the invariant factors of the Gram matrix.
inline Verdict det_equals_invariant_factors(unsigned seed, int n = 200) {
    Verdict v;
    std::mt19937 rng(seed);
    for (int i = 0; i < n; ++i, ++v.cases) {
        auto l = random_lattice(rng);
        Int want = laplace_det(l.gram);
        if (det(l) != want) v.fail("det " + std::to_string(det(l)) + " vs cofactor " + std::to_string(want));
        Int prod = discriminant_group(l).order();
        if (prod != (want < 0 ? -want : want))
            v.fail("invariant factors multiply to " + std::to_string(prod) + ", |det| = " + std::to_string(want));
    }
    return v;
}

struct IteratedCase {
    const char* name;
    BaseSurface base;
    std::array<Vec, 3> totals;
};

inline std::vector<IteratedCase> iterated_cases() {
    auto P2 = BaseSurface::plane(), Q = BaseSurface::quadric();
    return {
        {"GS2b", P2, {Vec{4}, Vec{2}, Vec{2}}},
        {"SHS1", P2, {Vec{5}, Vec{1}, Vec{1}}},
        {"quadric d", Q, {Vec{3, 1}, Vec{1, 3}, Vec{1, 3}}},
        {"quadric e", Q, {Vec{3, 2}, Vec{1, 2}, Vec{1, 2}}},
        {"quadric f", Q, {Vec{3, 3}, Vec{1, 1}, Vec{1, 1}}},
        {"quadric g", Q, {Vec{3, 0}, Vec{1, 4}, Vec{1, 4}}},
        {"F2 a", BaseSurface::hirzebruch(2), {Vec{3, 6}, Vec{1, 2}, Vec{1, 2}}},
        {"F2 i", BaseSurface::hirzebruch(2), {Vec{3, 4}, Vec{1, 4}, Vec{1, 4}}},
        {"F3 m", BaseSurface::hirzebruch(3), {Vec{3, 6}, Vec{1, 4}, Vec{1, 4}}},
        {"F4 o", BaseSurface::hirzebruch(4), {Vec{3, 8}, Vec{1, 4}, Vec{1, 4}}},
    };
}

// Widening the search box by 2 in every coordinate adds no solution.
inline Verdict search_bounds_stable() {
    Verdict v;
    for (const auto& c : iterated_cases()) {
        auto cover = build(BidoubleData::from_totals(c.base, c.totals));
        for (auto con : {Construction::One, Construction::Two}) {
            ++v.cases;
            auto tight = enumerate_iterated(cover, con, 0);
            auto wide = enumerate_iterated(cover, con, 2);
            if (tight.size() != wide.size())
                v.fail(std::string(c.name) + " construction " + std::to_string(static_cast<int>(con)) + ": " +
                       std::to_string(tight.size()) + " solutions, " + std::to_string(wide.size()) + " after widening");
        }
    }
    return v;
}

}  // namespace props
