#include "bicover/geom.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bicover {

BaseSurface BaseSurface::plane() { return {SurfaceKind::ProjectivePlane, 0}; }
BaseSurface BaseSurface::quadric() { return {SurfaceKind::Quadric, 0}; }

BaseSurface BaseSurface::hirzebruch(int n) {
    if (n < 2) throw Error("Hirzebruch surface needs n >= 2, got " + std::to_string(n));
    return {SurfaceKind::Hirzebruch, n};
}

BaseSurface BaseSurface::parse(const std::string& text) {
    std::string t;
    for (char ch : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    if (t == "p2") return plane();
    if (t == "p1xp1" || t == "q") return quadric();
    std::string digits;
    if (t.rfind("fn:", 0) == 0) digits = t.substr(3);
    else if (t.size() > 1 && t[0] == 'f') digits = t.substr(1);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit) && digits.size() < 6)
        return hirzebruch(std::stoi(digits));
    throw Error("unknown base surface '" + text + "'");
}

int BaseSurface::picard_rank() const { return kind == SurfaceKind::ProjectivePlane ? 1 : 2; }

Int BaseSurface::gram(int i, int j) const {
    switch (kind) {
        case SurfaceKind::ProjectivePlane: return 1;
        case SurfaceKind::Quadric: return i == j ? 0 : 1;
        case SurfaceKind::Hirzebruch:
            if (i != j) return 1;
            return i == 0 ? -n : 0;
    }
    return 0;
}

int BaseSurface::aut_dim() const {
    switch (kind) {
        case SurfaceKind::ProjectivePlane: return 8;
        case SurfaceKind::Quadric: return 6;
        case SurfaceKind::Hirzebruch: return n + 5;
    }
    return 0;
}

std::string BaseSurface::name() const {
    switch (kind) {
        case SurfaceKind::ProjectivePlane: return "P2";
        case SurfaceKind::Quadric: return "P1xP1";
        case SurfaceKind::Hirzebruch: return "F" + std::to_string(n);
    }
    return "?";
}

DivisorClass::DivisorClass(const BaseSurface& b, Vec coeffs) : base(b), c(std::move(coeffs)) {
    if (static_cast<int>(c.size()) != base.picard_rank())
        throw Error("class on " + base.name() + " needs " + std::to_string(base.picard_rank()) + " coefficients");
}

bool DivisorClass::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](Int x) { return x == 0; });
}

bool DivisorClass::nonnegative() const {
    return std::all_of(c.begin(), c.end(), [](Int x) { return x >= 0; });
}

static void same_base(const DivisorClass& a, const DivisorClass& b) {
    if (a.base != b.base) throw Error("classes live on different surfaces: " + a.base.name() + " vs " + b.base.name());
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
    same_base(*this, o);
    Vec r(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) r[i] = c[i] + o.c[i];
    return {base, r};
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const { return *this + (-o); }

DivisorClass DivisorClass::operator-() const { return *this * -1; }

DivisorClass DivisorClass::operator*(Int k) const {
    Vec r(c);
    for (auto& x : r) x *= k;
    return {base, r};
}

std::string DivisorClass::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ")";
    return os.str();
}

DivisorClass canonical(const BaseSurface& b) {
    switch (b.kind) {
        case SurfaceKind::ProjectivePlane: return {b, {-3}};
        case SurfaceKind::Quadric: return {b, {-2, -2}};
        case SurfaceKind::Hirzebruch: return {b, {-2, -(b.n + 2)}};
    }
    return {};
}

DivisorClass negative_section(const BaseSurface& b) {
    if (b.kind != SurfaceKind::Hirzebruch) throw Error(b.name() + " has no negative section");
    return {b, {1, 0}};
}

DivisorClass fiber(const BaseSurface& b) {
    if (!b.is_ruled()) throw Error("P2 has no ruling");
    return {b, {0, 1}};
}

DivisorClass zero_class(const BaseSurface& b) { return {b, Vec(b.picard_rank(), 0)}; }

Int dot(const DivisorClass& a, const DivisorClass& b) {
    same_base(a, b);
    const int r = a.base.picard_rank();
    Int s = 0;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) s += a.c[i] * a.base.gram(i, j) * b.c[j];
    return s;
}

Int h0(const DivisorClass& d) {
    const auto& b = d.base;
    switch (b.kind) {
        case SurfaceKind::ProjectivePlane: {
            Int x = d.c[0];
            return x >= 0 ? (x + 1) * (x + 2) / 2 : 0;
        }
        case SurfaceKind::Quadric: {
            Int x = d.c[0], y = d.c[1];
            return (x >= 0 && y >= 0) ? (x + 1) * (y + 1) : 0;
        }
        case SurfaceKind::Hirzebruch: {
            // Push forward to P1: sum of h0(O(b - i n)) over i = 0..a.
            Int a = d.c[0], bb = d.c[1], s = 0;
            if (a < 0) return 0;
            for (Int i = 0; i <= a; ++i) s += std::max<Int>(0, bb - i * b.n + 1);
            return s;
        }
    }
    return 0;
}

Int h0_riemann_roch(int n, Int a, Int b) {
    return 1 + (-n * a * (a + 1) + 2 * a * b + 2 * a + 2 * b) / 2;
}

bool is_effective(const DivisorClass& d) { return h0(d) > 0; }

bool is_nef(const DivisorClass& d) {
    if (d.base.kind == SurfaceKind::Hirzebruch)
        return dot(d, fiber(d.base)) >= 0 && dot(d, negative_section(d.base)) >= 0;
    return d.nonnegative();
}

bool is_ample(const DivisorClass& d) {
    if (d.base.kind == SurfaceKind::Hirzebruch)
        return dot(d, fiber(d.base)) > 0 && dot(d, negative_section(d.base)) > 0;
    return std::all_of(d.c.begin(), d.c.end(), [](Int x) { return x > 0; });
}

Int genus(const DivisorClass& d) {
    Int twice = dot(d, d) + dot(d, canonical(d.base));
    Int g = 1 + twice / 2;
    if (twice % 2 != 0 || g < 0 || !is_effective(d)) throw Error("class " + d.str() + " on " + d.base.name() + " has no irreducible member");
    return g;
}

Int log_h1(const DivisorClass& d) { return d.base.picard_rank() + genus(d) - 1; }

bool is_irreducible_class(const DivisorClass& d) {
    const auto& b = d.base;
    switch (b.kind) {
        case SurfaceKind::ProjectivePlane: return d.c[0] >= 1;
        case SurfaceKind::Quadric: {
            Int x = d.c[0], y = d.c[1];
            return (x == 1 && y == 0) || (x == 0 && y == 1) || (x >= 1 && y >= 1);
        }
        case SurfaceKind::Hirzebruch: {
            Int a = d.c[0], bb = d.c[1];
            return (a == 0 && bb == 1) || (a == 1 && bb == 0) || (a >= 1 && bb >= a * b.n);
        }
    }
    return false;
}

bool is_rigid(const DivisorClass& d) {
    return d.base.kind == SurfaceKind::Hirzebruch && d.c[0] == 1 && d.c[1] == 0;
}

std::optional<std::vector<DivisorClass>> generic_components(const DivisorClass& d, bool crossings) {
    const auto& b = d.base;
    std::vector<DivisorClass> out;
    if (d.is_zero()) return out;
    if (!d.nonnegative()) return std::nullopt;
    auto repeat = [&](const DivisorClass& c, Int times) {
        for (Int i = 0; i < times; ++i) out.push_back(c);
    };
    switch (b.kind) {
        case SurfaceKind::ProjectivePlane: out.push_back(d); return out;
        case SurfaceKind::Quadric:
            if (d.c[0] > 0 && d.c[1] > 0) out.push_back(d);
            else if (d.c[1] == 0) repeat({b, {1, 0}}, d.c[0]);
            else repeat({b, {0, 1}}, d.c[1]);
            return out;
        case SurfaceKind::Hirzebruch: {
            Int a = d.c[0], bb = d.c[1];
            if (a == 0) {
                repeat(fiber(b), bb);
                return out;
            }
            if (is_irreducible_class(d)) {
                out.push_back(d);
                return out;
            }
            // Otherwise C splits off; the residual must itself avoid C.
            if (bb < b.n * (a - 1)) return std::nullopt;
            DivisorClass rest{b, {a - 1, bb}};
            if (!crossings && dot(rest, negative_section(b)) != 0) return std::nullopt;
            out.push_back(negative_section(b));
            if (a - 1 == 0) repeat(fiber(b), bb);
            else out.push_back(rest);
            return out;
        }
    }
    return std::nullopt;
}

}  // namespace bicover
