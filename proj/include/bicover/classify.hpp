#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bicover/cover.hpp"

namespace bicover {

// Free coordinate of an infinite family: coefficient `coord` of D3 may take
// every parity-admissible value >= min.
struct Parametric {
    int coord = 0;
    Int min = 0;
};

struct ClassificationRow {
    BidoubleData data;
    CoverInvariants inv;
    std::optional<Parametric> parametric;
    // Sub-case of the quadric analysis, "(1)".."(4)"; for families every tag seen among instances.
    std::vector<std::string> case_tags;
    std::string table;
    std::string label;
};

struct CanonicalForm {
    std::array<Vec, 3> totals;
    // totals[j] is the input divisor perm[j], ruling-swapped when `swapped`.
    std::array<int, 3> perm{0, 1, 2};
    bool swapped = false;
};

CanonicalForm canonical_form(const BaseSurface& base, const std::array<Vec, 3>& totals);

// Which listed table a row belongs to ("table1", "tableP1xP1-general", "tableF2-irr", ...).
std::string table_id(const BaseSurface& base, const std::array<Vec, 3>& totals, Int k2);

// Sub-case tag "(1)".."(4)" on the quadric for a presentation with D1 + D2 = -2K.
std::string quadric_case_tag(const std::array<Vec, 3>& totals);

std::vector<ClassificationRow> enumerate(const BaseSurface& base, int cap);

struct ExpectedRow {
    std::string label;
    std::array<Vec, 3> totals;
    std::array<std::string, 3> tags;
    Int p_g = 0;
    Int q = 0;
    Int k2 = 0;
    std::optional<Int> free_min;
};

// One disagreement between a listed table cell and the computed value.
struct Diff {
    std::string row;  // row label, or the computed totals of an unlisted row
    std::string column;
    std::string listed;
    std::string computed;

    std::string str() const;
    bool operator==(const Diff& o) const = default;
};

struct MatchReport {
    std::vector<Diff> diffs;
    std::vector<std::string> notes;
    // For every expected row, the index of the matched computed row (or -1).
    std::vector<int> matched;
};

// Compares the rows of one table against expected rows, modulo the symmetry group.
MatchReport match_expected(const BaseSurface& base, const std::vector<ClassificationRow>& rows,
                           const std::vector<ExpectedRow>& expected, int cap);

}  // namespace bicover
