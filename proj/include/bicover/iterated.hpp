#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bicover/cover.hpp"
#include "bicover/lattice.hpp"

namespace bicover {

// Blow-up of the rational quotient Y1 at the k = D2.D3 nodes over D2 ∩ D3.
// Classes are integer vectors: r pullback coordinates, then k exceptional ones.
struct BlowupCover {
    BidoubleData first;
    int r = 0;
    int k = 0;
    DivisorClass half_class;  // (D2 + D3)/2 on the base
    Vec canonical;
    Vec branch;  // strict transform of D1 plus all exceptional curves
    IntMatrix gram;
    std::vector<std::string> basis_names;

    Int dot(const Vec& a, const Vec& b) const;
    DivisorClass image(const Vec& v) const;  // pullback part as a class on the base
    std::string format(const Vec& v) const;
};

BlowupCover build(const BidoubleData& first);

enum class Construction { One = 1, Two = 2 };

enum class ZType { K3, EnriquesLike, Rational, RuledIrregular, SameAsX, Other };
std::string to_string(ZType z);

struct IteratedSolution {
    Construction construction = Construction::One;
    std::array<Vec, 3> delta;
    ZType z1 = ZType::Other;
    ZType z3 = ZType::Other;
    Int chi_fourth = 0;  // chi of the quotient that is neither K3 by construction nor X
    Int pg_W = 0;
    Int rank_TW = 0;
    Int rank_Y2 = 0, rank_Y3 = 0, rank_Z1 = 0, rank_Z3 = 0;
    std::optional<Int> moduli_Y2, moduli_Y3, moduli_Z;
};

// Emptiness-checked h0 on the blow-up of the pullback class `pure` + sum e_j E_j.
Int h0_blowup(const BlowupCover& cover, const DivisorClass& pure, const Vec& e);

// All admissible data (Delta1, Delta2, Delta3) for the construction, deduplicated under
// base automorphisms preserving the first cover. `slack` widens the Delta1 search box.
std::vector<IteratedSolution> enumerate_iterated(const BlowupCover& cover, Construction c, int slack = 0);

ZType classify_Z(const BlowupCover& cover, const IteratedSolution& s, int which);
void fill_invariants(const BlowupCover& cover, IteratedSolution& s);

}  // namespace bicover
