#pragma once

#include <array>
#include <string>
#include <vector>

#include "bicover/geom.hpp"

namespace bicover {

struct BranchDivisor {
    DivisorClass total;
    std::vector<DivisorClass> components;

    // Generic smooth member when one exists, else the class itself as a single component.
    static BranchDivisor generic(const DivisorClass& total);
    bool contains_rigid() const;
};

struct BidoubleData {
    BaseSurface base;
    std::array<BranchDivisor, 3> d;

    static BidoubleData from_totals(const BaseSurface& base, const std::array<Vec, 3>& totals);
    std::array<Vec, 3> totals() const;
    DivisorClass total_branch() const;
};

enum class QuotientTag { K3, RationalPg0, RuledIrregular, Other };

struct QuotientClass {
    QuotientTag tag = QuotientTag::Other;
    Int q = 0;
    Int p_g = 0;

    // Table spelling: "K3", "rat", "rul", or "other".
    std::string short_name() const;
    bool operator==(const QuotientClass& o) const { return tag == o.tag && q == o.q && p_g == o.p_g; }
};

enum class Kodaira { Zero, One, Two, K3Special, Undetermined };
std::string to_string(Kodaira k);

struct CoverInvariants {
    Int chi = 0;
    Int k2 = 0;
    Int p_g = 0;
    Int q = 0;
    std::array<QuotientClass, 3> quotients;
    Kodaira kodaira = Kodaira::Undetermined;
    bool minimal = false;
};

// Returns the list of violated conditions; empty means the data defines a smooth cover.
std::vector<std::string> validate(const BidoubleData& data);
void require_valid(const BidoubleData& data);

std::array<DivisorClass, 3> half_classes(const BidoubleData& data);
Int chi_X(const BidoubleData& data);
Int k2_X(const BidoubleData& data);
// i is 1-based throughout, matching the quotient labels Y1, Y2, Y3.
Int chi_Yi(const BidoubleData& data, int i);
Int plurigenus_Yi(const BidoubleData& data, int i, int k);
QuotientClass classify_quotient(const BidoubleData& data, int i);
std::pair<Int, Int> pg_q_X(const BidoubleData& data);
std::pair<Kodaira, bool> kodaira_and_minimality(const BidoubleData& data);
Int singular_k2(const BidoubleData& data, int k);

CoverInvariants compute_invariants(const BidoubleData& data);

}  // namespace bicover
