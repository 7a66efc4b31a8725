#include "bicover/iterated.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "bicover/hodge.hpp"

namespace bicover {

namespace {

Vec vadd(const Vec& a, const Vec& b) {
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}
Vec vsub(const Vec& a, const Vec& b) {
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}
Vec vscale(const Vec& a, Int k) {
    Vec r(a);
    for (auto& x : r) x *= k;
    return r;
}
bool nonneg(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](Int x) { return x >= 0; });
}
bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

Vec exceptional_part(const BlowupCover& c, const Vec& v) { return Vec(v.begin() + c.r, v.end()); }

Vec with_exceptional(const Vec& pure, int k, Int coeff) {
    Vec v(pure);
    v.insert(v.end(), k, coeff);
    return v;
}

// Components of a generic member of the image class, allowing the negative section
// to cross the rest; falls back to the class itself.
std::vector<DivisorClass> image_components(const DivisorClass& d) {
    if (d.is_zero()) return {};
    if (auto comps = generic_components(d, true)) return *comps;
    return {d};
}

bool contains_negative_section(const DivisorClass& d) {
    if (d.base.kind != SurfaceKind::Hirzebruch) return false;
    return d.c[0] >= 1 && d.c[1] < d.c[0] * d.base.n;
}

// On F_n the image of every Delta is irreducible, a union of fibers, or the negative
// section plus a curve; the negative section is used at most once overall.
bool images_admissible(const BlowupCover& c, const std::array<Vec, 3>& delta) {
    if (c.first.base.kind != SurfaceKind::Hirzebruch) return true;
    const Int n = c.first.base.n;
    int with_section = 0;
    for (const auto& d : delta) {
        auto img = c.image(d);
        Int a = img.c[0], b = img.c[1];
        if (a != 0 && b < n * (a - 1)) return false;
        if (contains_negative_section(img)) ++with_section;
    }
    return with_section <= 1;
}

// Base automorphisms preserving the first cover act on solutions; keep one per orbit.
std::array<Vec, 3> orbit_representative(const BlowupCover& c, const std::array<Vec, 3>& delta) {
    if (c.first.base.kind != SurfaceKind::Quadric) return delta;
    auto t = c.first.totals();
    for (auto& v : t) std::reverse(v.begin(), v.end());
    if (t != c.first.totals()) return delta;
    auto swapped = delta;
    for (auto& v : swapped) std::swap(v[0], v[1]);
    return std::max(delta, swapped);
}

Int halve_checked(Int x, const char* what) {
    if (x % 2 != 0) throw Error(std::string("internal: non-integral ") + what);
    return x / 2;
}

}  // namespace

Int BlowupCover::dot(const Vec& a, const Vec& b) const {
    Int s = 0;
    for (int i = 0; i < r + k; ++i)
        for (int j = 0; j < r + k; ++j) s += a[i] * gram[i][j] * b[j];
    return s;
}

DivisorClass BlowupCover::image(const Vec& v) const { return DivisorClass(first.base, Vec(v.begin(), v.begin() + r)); }

std::string BlowupCover::format(const Vec& v) const {
    std::string out;
    auto term = [&](Int coeff, const std::string& name) {
        if (coeff == 0) return;
        if (!out.empty()) out += coeff > 0 ? " + " : " - ";
        else if (coeff < 0) out += "-";
        Int a = coeff < 0 ? -coeff : coeff;
        if (a != 1) out += std::to_string(a);
        out += name;
    };
    for (int i = 0; i < r; ++i) term(v[i], basis_names[i]);
    auto e = exceptional_part(*this, v);
    if (!e.empty() && std::all_of(e.begin(), e.end(), [&](Int x) { return x == e[0]; })) {
        term(e[0], "E");
    } else {
        for (int j = 0; j < k; ++j) term(e[j], "E" + std::to_string(j + 1));
    }
    return out.empty() ? "0" : out;
}

BlowupCover build(const BidoubleData& first) {
    auto inv = compute_invariants(first);
    if (inv.quotients[0].tag != QuotientTag::RationalPg0)
        throw Error("the iterated construction needs a rational Y1; here Y1 is " + inv.quotients[0].short_name());
    BlowupCover c;
    c.first = first;
    const auto& base = first.base;
    c.r = base.picard_rank();
    c.k = static_cast<int>(dot(first.d[1].total, first.d[2].total));
    c.half_class = half_classes(first)[0];
    c.canonical = with_exceptional((canonical(base) + c.half_class).c, c.k, 0);
    c.branch = with_exceptional(first.d[0].total.c, c.k, 1);
    const int n = c.r + c.k;
    c.gram.assign(n, Vec(n, 0));
    for (int i = 0; i < c.r; ++i)
        for (int j = 0; j < c.r; ++j) c.gram[i][j] = 2 * base.gram(i, j);
    for (int j = c.r; j < n; ++j) c.gram[j][j] = -2;
    switch (base.kind) {
        case SurfaceKind::ProjectivePlane: c.basis_names = {"A"}; break;
        case SurfaceKind::Quadric: c.basis_names = {"A1", "A2"}; break;
        case SurfaceKind::Hirzebruch: c.basis_names = {"Gamma", "Phi"}; break;
    }
    return c;
}

std::string to_string(ZType z) {
    switch (z) {
        case ZType::K3: return "K3";
        case ZType::EnriquesLike: return "Enriques";
        case ZType::Rational: return "rational";
        case ZType::RuledIrregular: return "ruled";
        case ZType::SameAsX: return "X";
        case ZType::Other: return "other";
    }
    return "?";
}

Int h0_blowup(const BlowupCover& cover, const DivisorClass& pure, const Vec& e) {
    // Sections of the pullback to Y1, then the conditions imposed by negative E-coefficients.
    auto on_blowup = [](const DivisorClass& m, const Vec& ex) -> Int {
        Int base = h0(m);
        if (base == 0) return 0;
        Int cond = 0;
        for (Int x : ex)
            if (x < 0) cond += (-x) * (-x + 1) / 2;
        return std::max<Int>(0, base - cond);
    };
    Vec shifted(e);
    for (auto& x : shifted) x += 1;
    return on_blowup(pure, e) + on_blowup(pure - cover.half_class, shifted);
}

std::vector<IteratedSolution> enumerate_iterated(const BlowupCover& c, Construction con, int slack) {
    const Vec minus_2k = vscale(c.canonical, -2);
    Vec hi(c.branch.begin(), c.branch.begin() + c.r);
    for (auto& x : hi) x += slack;

    std::set<std::array<Vec, 3>> seen;
    std::vector<IteratedSolution> out;
    std::function<void(Vec&, int)> walk = [&](Vec& a, int pos) {
        if (pos < c.r) {
            for (Int x = 0; x <= hi[pos]; ++x) {
                a[pos] = x;
                walk(a, pos + 1);
            }
            return;
        }
        Vec d1 = with_exceptional(a, c.k, 0);
        Vec d2 = con == Construction::One ? vsub(minus_2k, d1) : d1;
        Vec d3 = vsub(c.branch, d1);
        if (!nonneg(d2) || !nonneg(d3)) return;
        if (is_zero(d1) + is_zero(d2) > 1) return;
        // Z3 (construction 1) or the branch of Z1 (construction 2) must have p_g <= 1.
        Vec m = con == Construction::One ? vadd(vadd(vscale(c.canonical, 2), d2), d3)
                                         : vadd(vscale(c.canonical, 2), vscale(d1, 2));
        if (h0_blowup(c, c.image(m), exceptional_part(c, m)) > 1) return;
        std::array<Vec, 3> delta{d1, d2, d3};
        if (!images_admissible(c, delta)) return;
        auto rep = orbit_representative(c, delta);
        if (!seen.insert(rep).second) return;
        IteratedSolution s;
        s.construction = con;
        s.delta = rep;
        fill_invariants(c, s);
        out.push_back(std::move(s));
    };
    Vec a(c.r, 0);
    walk(a, 0);
    std::sort(out.begin(), out.end(),
              [](const IteratedSolution& x, const IteratedSolution& y) { return x.delta > y.delta; });
    return out;
}

namespace {

// Twice the half-sum class defining the double cover of the blow-up by the fourth quotient.
Vec twice_lambda(const IteratedSolution& s) {
    return s.construction == Construction::One ? vadd(s.delta[1], s.delta[2]) : vadd(s.delta[0], s.delta[1]);
}

Int chi_fourth(const BlowupCover& c, const Vec& lam2) {
    Int chi_y1 = chi_Yi(c.first, 1);
    // chi = 2 chi(Y1) + Lambda.(Lambda + K)/2 with Lambda = lam2/2.
    Int v = c.dot(lam2, vadd(lam2, vscale(c.canonical, 2)));
    if (v % 8 != 0) throw Error("internal: non-integral chi of the fourth quotient");
    return 2 * chi_y1 + v / 8;
}

bool plurigenera_vanish(const BlowupCover& c, const Vec& lam2) {
    for (Int k = 1; k <= 4; ++k) {
        Vec first = vscale(vadd(vscale(c.canonical, 2), lam2), k);
        Vec second = vadd(vscale(c.canonical, 2 * k), vscale(lam2, k - 1));
        for (const auto& twice : {first, second}) {
            if (!std::all_of(twice.begin(), twice.end(), [](Int x) { return x % 2 == 0; })) continue;
            Vec cls = twice;
            for (auto& x : cls) x = halve_checked(x, "plurigenus class");
            if (h0_blowup(c, c.image(cls), exceptional_part(c, cls)) != 0) return false;
        }
    }
    return true;
}

}  // namespace

ZType classify_Z(const BlowupCover& c, const IteratedSolution& s, int which) {
    if (which != 1 && which != 3) throw Error("Z index must be 1 or 3");
    if (s.construction == Construction::One && which == 3) return ZType::K3;
    if (s.construction == Construction::Two && which == 1) return ZType::SameAsX;
    Vec lam2 = twice_lambda(s);
    if (lam2 == vscale(c.canonical, -2)) return ZType::K3;
    Int chi = chi_fourth(c, lam2);
    Vec kl = vadd(vscale(c.canonical, 2), lam2);
    if (chi == 1 && std::all_of(kl.begin(), kl.begin() + c.r, [](Int x) { return x == 0; })) return ZType::EnriquesLike;
    if (plurigenera_vanish(c, lam2)) {
        if (chi == 1) return ZType::Rational;
        if (chi <= 0) return ZType::RuledIrregular;
    }
    return ZType::Other;
}

void fill_invariants(const BlowupCover& c, IteratedSolution& s) {
    const auto& first = c.first;
    s.z1 = classify_Z(c, s, 1);
    s.z3 = classify_Z(c, s, 3);
    s.chi_fourth = chi_fourth(c, twice_lambda(s));
    auto inv = compute_invariants(first);

    auto pg_of = [&](ZType z) -> Int {
        switch (z) {
            case ZType::K3: return 1;
            case ZType::SameAsX: return inv.p_g;
            default: return 0;
        }
    };
    s.pg_W = inv.p_g + pg_of(s.z1) + pg_of(s.z3);

    // D1 specializes to the union of the images of Delta1 and Delta3.
    auto split_d1 = image_components(c.image(s.delta[0]));
    auto rest = image_components(c.image(s.delta[2]));
    split_d1.insert(split_d1.end(), rest.begin(), rest.end());

    auto y_rank = [&](int i, std::optional<Int>& moduli) -> Int {
        if (inv.quotients[i - 1].tag != QuotientTag::K3) return 0;
        auto comps = split_d1;
        const auto& other = first.d[i == 2 ? 2 : 1].components;
        comps.insert(comps.end(), other.begin(), other.end());
        moduli = moduli_count(first.base, comps);
        return 2 + *moduli;
    };
    s.rank_Y2 = y_rank(2, s.moduli_Y2);
    s.rank_Y3 = y_rank(3, s.moduli_Y3);

    auto z_rank = [&](ZType z, int a, int b) -> Int {
        if (z != ZType::K3) return 0;
        std::vector<DivisorClass> comps;
        for (int idx : {a, b}) {
            auto part = image_components(c.image(s.delta[idx]));
            comps.insert(comps.end(), part.begin(), part.end());
        }
        for (int j : {1, 2}) comps.insert(comps.end(), first.d[j].components.begin(), first.d[j].components.end());
        s.moduli_Z = moduli_count(first.base, comps);
        return 2 + *s.moduli_Z;
    };
    s.rank_Z1 = z_rank(s.z1, 1, 2);
    s.rank_Z3 = z_rank(s.z3, 0, 1);

    s.rank_TW = s.construction == Construction::One ? s.rank_Y2 + s.rank_Y3 + s.rank_Z1 + s.rank_Z3
                                                    : 2 * (s.rank_Y2 + s.rank_Y3) + s.rank_Z3;
}

}  // namespace bicover
