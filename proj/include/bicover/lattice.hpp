#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bicover/geom.hpp"

namespace bicover {

using IntMatrix = std::vector<Vec>;

struct Lattice {
    IntMatrix gram;

    int rank() const { return static_cast<int>(gram.size()); }
    bool is_even() const;
};

struct DiscriminantGroup {
    // Invariant factors > 1, ascending.
    std::vector<Int> cyclic_orders;
    // q(g_i) for the Smith generators, as "num/den"; reduced mod 2 for even lattices, mod 1 otherwise.
    std::vector<std::string> form_values;

    Int order() const;
};

// Lattice expressions: atoms U, U(k), E8(s), D4(s), D6(s), A1(s), N, <k>; sums with "⊕" or "+";
// powers "^m" or "^{⊕m}". Unsigned E8/D4/D6/A1 are negative definite, as in K3 lattice notation.
Lattice named(const std::string& expr);
// Canonical spelling of an expression, e.g. "U^{⊕2}⊕E_8(-2)" -> "U^2 ⊕ E8(-2)".
std::string normalize(const std::string& expr);

Lattice direct_sum(const Lattice& a, const Lattice& b);
Lattice twist(const Lattice& l, Int k);

// Exact integer determinant (throws if it does not fit in 64 bits).
Int det(const Lattice& l);
std::pair<int, int> signature(const Lattice& l);
DiscriminantGroup discriminant_group(const Lattice& l);
// Nikulin parity of a 2-elementary discriminant form: 0 if every q value is integral, 1 otherwise.
int delta_invariant(const Lattice& l);

struct LatticeEntry {
    std::string expr;
    // Alternative spelling used elsewhere in the tables for the same configuration.
    std::string alias;
};

// Transcendental lattice of the very general K3 double cover of the base branched
// on the given reduced curve configuration. Throws "unassigned" when the configuration
// is not tabulated. Checks rank = 2 + moduli count and signature (2, rank-2).
LatticeEntry transcendental_of(const BaseSurface& base, const std::vector<DivisorClass>& branch_components);
std::vector<std::pair<std::string, std::vector<DivisorClass>>> tabulated_configurations();

}  // namespace bicover
