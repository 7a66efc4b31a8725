#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bicover/cover.hpp"

namespace bicover {

// Parameters of the branch configuration up to automorphisms of the base.
Int moduli_count(const BaseSurface& base, const std::vector<DivisorClass>& components);
// Nodes of the branch curve: sum of pairwise intersections of distinct components.
Int node_count(const std::vector<DivisorClass>& components);
// Components of the branch curve of Y_i -> base, i.e. D_j and D_k for {i,j,k} = {1,2,3}.
std::vector<DivisorClass> branch_components(const BidoubleData& data, int i);

struct QuotientHodge {
    QuotientTag tag = QuotientTag::Other;
    Int moduli = 0;          // K3 quotients only
    Int nodes = 0;
    Int rho_resolution = 0;
    Int rho_singular = 0;
    Int rank_T = 0;
};

QuotientHodge quotient_hodge(const BidoubleData& data, int i);

struct HodgeReport {
    Int e = 0;
    Int b2 = 0;
    Int h11 = 0;
    Int p_g = 0;
    Int rank_TX = 0;
    Int rho_X = 0;
    Int m_X = 0;
    std::array<QuotientHodge, 3> quotients;
    // Set when rho(Y2) = rho(Y3) = rho(base) but rho(X) differs from rho(Y1).
    std::optional<std::string> inconsistency;
};

HodgeReport hodge_report(const BidoubleData& data);

enum class CheckStatus { Pass, HypothesisFail };

struct CheckResult {
    CheckStatus status = CheckStatus::HypothesisFail;
    std::string reason;
    std::vector<std::string> witnesses;
};

std::string to_string(CheckStatus s);

CheckResult mtc_check(const BidoubleData& data);
CheckResult itp_check(const BidoubleData& data);

// Known failures of infinitesimal Torelli proved in the literature. Kept apart from
// itp_check, which only ever certifies the property.
struct ItpAnnotation {
    BaseSurface base;
    std::array<Vec, 3> totals;
    std::string label;
    std::string source;
};
const std::vector<ItpAnnotation>& itp_annotations();
std::optional<ItpAnnotation> itp_known_failure(const BidoubleData& data);

// Table cell spellings: "✓" for Pass, "×" for an annotated failure, "" otherwise.
std::string mtc_cell(const BidoubleData& data);
std::string itp_cell(const BidoubleData& data);

}  // namespace bicover
