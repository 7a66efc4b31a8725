#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bicover {

using Int = long long;
using Vec = std::vector<Int>;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class SurfaceKind { ProjectivePlane, Quadric, Hirzebruch };

// One of the minimal rational surfaces. Picard bases:
//   plane:      h
//   quadric:    h1, h2 (the two rulings)
//   Hirzebruch: C (negative section), F (fiber)
struct BaseSurface {
    SurfaceKind kind = SurfaceKind::ProjectivePlane;
    int n = 0;

    static BaseSurface plane();
    static BaseSurface quadric();
    static BaseSurface hirzebruch(int n);
    // Accepts "P2", "P1xP1", "Fn:<n>" and the lowercase CLI spellings "p2", "p1xp1", "fn:<n>".
    static BaseSurface parse(const std::string& text);

    int picard_rank() const;
    Int gram(int i, int j) const;
    int aut_dim() const;
    std::string name() const;
    bool is_ruled() const { return kind != SurfaceKind::ProjectivePlane; }

    bool operator==(const BaseSurface& o) const { return kind == o.kind && n == o.n; }
    bool operator!=(const BaseSurface& o) const { return !(*this == o); }
};

struct DivisorClass {
    BaseSurface base;
    Vec c;

    DivisorClass() = default;
    DivisorClass(const BaseSurface& b, Vec coeffs);

    bool is_zero() const;
    bool nonnegative() const;
    Int operator[](std::size_t i) const { return c[i]; }

    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    DivisorClass operator-() const;
    DivisorClass operator*(Int k) const;
    bool operator==(const DivisorClass& o) const { return base == o.base && c == o.c; }
    bool operator!=(const DivisorClass& o) const { return !(*this == o); }
    bool operator<(const DivisorClass& o) const { return c < o.c; }

    std::string str() const;
};

DivisorClass canonical(const BaseSurface& b);
// Generator of the rigid negative curve on a Hirzebruch surface, the fiber class on a ruled base.
DivisorClass negative_section(const BaseSurface& b);
DivisorClass fiber(const BaseSurface& b);
DivisorClass zero_class(const BaseSurface& b);

Int dot(const DivisorClass& a, const DivisorClass& b);
Int h0(const DivisorClass& d);
// Riemann-Roch closed form on a Hirzebruch surface, valid for b >= a n >= 0.
Int h0_riemann_roch(int n, Int a, Int b);

bool is_effective(const DivisorClass& d);
bool is_nef(const DivisorClass& d);
bool is_ample(const DivisorClass& d);

// Adjunction genus; throws when the class has no irreducible member.
Int genus(const DivisorClass& d);
Int log_h1(const DivisorClass& d);

bool is_irreducible_class(const DivisorClass& d);
bool is_rigid(const DivisorClass& d);

// Components of a generic reduced member of |d|. With crossings=false the
// components must be pairwise disjoint (a smooth member); with crossings=true
// the negative section may meet the rest transversally. nullopt when no such
// member exists.
std::optional<std::vector<DivisorClass>> generic_components(const DivisorClass& d, bool crossings = false);

}  // namespace bicover
