#include "bicover/hodge.hpp"

#include <algorithm>

#include "bicover/classify.hpp"

namespace bicover {

Int moduli_count(const BaseSurface& base, const std::vector<DivisorClass>& components) {
    Int m = 0;
    for (const auto& c : components) {
        if (c.base != base) throw Error("component " + c.str() + " is not on " + base.name());
        if (!is_rigid(c)) m += h0(c) - 1;
    }
    return m - base.aut_dim();
}

Int node_count(const std::vector<DivisorClass>& components) {
    Int nodes = 0;
    for (std::size_t a = 0; a < components.size(); ++a)
        for (std::size_t b = a + 1; b < components.size(); ++b) nodes += dot(components[a], components[b]);
    return nodes;
}

std::vector<DivisorClass> branch_components(const BidoubleData& data, int i) {
    if (i < 1 || i > 3) throw Error("quotient index must be 1, 2 or 3");
    std::vector<DivisorClass> out;
    for (int j = 0; j < 3; ++j) {
        if (j == i - 1) continue;
        const auto& comps = data.d[j].components;
        out.insert(out.end(), comps.begin(), comps.end());
    }
    return out;
}

QuotientHodge quotient_hodge(const BidoubleData& data, int i) {
    QuotientHodge qh;
    auto qc = classify_quotient(data, i);
    qh.tag = qc.tag;
    auto comps = branch_components(data, i);
    qh.nodes = node_count(comps);
    switch (qc.tag) {
        case QuotientTag::K3:
            qh.moduli = moduli_count(data.base, comps);
            qh.rho_resolution = 20 - qh.moduli;
            qh.rho_singular = qh.rho_resolution - qh.nodes;
            qh.rank_T = 2 + qh.moduli;
            break;
        case QuotientTag::RationalPg0:
        case QuotientTag::RuledIrregular: {
            // Topological Euler number of a double cover branched on a nodal curve.
            Int e_branch = -qh.nodes;
            for (const auto& c : comps) e_branch += 2 - 2 * genus(c);
            Int e_base = data.base.picard_rank() + 2;
            Int e = 2 * e_base - e_branch;
            qh.rho_singular = e - 2 + 4 * qc.q;
            qh.rho_resolution = qh.rho_singular + qh.nodes;
            qh.rank_T = 0;
            break;
        }
        case QuotientTag::Other:
            throw Error("Y" + std::to_string(i) + " is neither K3 nor of p_g = 0; no Hodge bookkeeping available");
    }
    return qh;
}

HodgeReport hodge_report(const BidoubleData& data) {
    auto inv = compute_invariants(data);
    HodgeReport r;
    r.p_g = inv.p_g;
    r.e = 12 * inv.chi - inv.k2;
    r.b2 = r.e - 2 + 4 * inv.q;
    r.h11 = r.b2 - 2 * inv.p_g;
    for (int i = 1; i <= 3; ++i) {
        r.quotients[i - 1] = quotient_hodge(data, i);
        r.rank_TX += r.quotients[i - 1].rank_T;
    }
    r.rho_X = 2 * inv.p_g + r.h11 - r.rank_TX;
    std::vector<DivisorClass> all;
    for (const auto& b : data.d) all.insert(all.end(), b.components.begin(), b.components.end());
    r.m_X = moduli_count(data.base, all);

    const Int rho_base = data.base.picard_rank();
    if (r.quotients[1].rho_singular == rho_base && r.quotients[2].rho_singular == rho_base &&
        r.rho_X != r.quotients[0].rho_singular)
        r.inconsistency = "rho(X) = " + std::to_string(r.rho_X) + " but rho(Y1) = " +
                          std::to_string(r.quotients[0].rho_singular);
    return r;
}

std::string to_string(CheckStatus s) { return s == CheckStatus::Pass ? "pass" : "hypothesis-fail"; }

namespace {

bool x_is_k3_or_abelian(const CoverInvariants& inv) {
    return inv.kodaira == Kodaira::K3Special || inv.kodaira == Kodaira::Zero;
}

std::string x_kind(const CoverInvariants& inv) {
    return inv.kodaira == Kodaira::K3Special ? "X is a K3 surface" : "X is an abelian surface";
}

CheckResult pass(std::string reason, std::vector<std::string> w = {}) {
    return {CheckStatus::Pass, std::move(reason), std::move(w)};
}
CheckResult silent(std::string reason, std::vector<std::string> w = {}) {
    return {CheckStatus::HypothesisFail, std::move(reason), std::move(w)};
}

bool proportional(const DivisorClass& a, const DivisorClass& b) {
    if (a.c.size() == 1) return true;
    return a.c[0] * b.c[1] == a.c[1] * b.c[0];
}

}  // namespace

CheckResult mtc_check(const BidoubleData& data) {
    auto inv = compute_invariants(data);
    if (x_is_k3_or_abelian(inv)) return pass(x_kind(inv));

    if (data.base.kind == SurfaceKind::Hirzebruch) {
        const auto C = negative_section(data.base);
        for (int i = 1; i <= 3; ++i) {
            if (inv.quotients[i - 1].tag != QuotientTag::K3) continue;
            auto comps = branch_components(data, i);
            bool contains = std::any_of(comps.begin(), comps.end(), [](const DivisorClass& c) { return is_rigid(c); });
            Int meets = 0;
            for (const auto& c : comps) meets += dot(c, C);
            if (!contains && meets == 0)
                return silent("the negative section splits in Y" + std::to_string(i) + ", so rho(Y" +
                                  std::to_string(i) + ") > rho(base)",
                              {"Y" + std::to_string(i) + " branch . C = 0"});
        }
    }
    if (inv.p_g == 1) return pass("p_g(X) = 1 with a K3 quotient");
    if (inv.p_g == 2 || inv.p_g == 3) {
        std::vector<std::string> w;
        for (int i = 1; i <= 3; ++i) {
            auto tag = inv.quotients[i - 1].tag;
            if (tag != QuotientTag::K3 && tag != QuotientTag::RationalPg0)
                return silent("Y" + std::to_string(i) + " is " + inv.quotients[i - 1].short_name() +
                              ", neither K3 nor rational");
            if (tag != QuotientTag::K3) continue;
            auto qh = quotient_hodge(data, i);
            w.push_back("rho(Y" + std::to_string(i) + ") = " + std::to_string(qh.rho_singular));
            if (qh.rho_singular != data.base.picard_rank())
                return silent("rho(Y" + std::to_string(i) + ") = " + std::to_string(qh.rho_singular) +
                                  " exceeds rho(base) = " + std::to_string(data.base.picard_rank()),
                              w);
        }
        return pass("every K3 quotient has rho = rho(base) and the others are rational", w);
    }
    return silent("p_g(X) = " + std::to_string(inv.p_g) + " is outside the range covered");
}

CheckResult itp_check(const BidoubleData& data) {
    auto inv = compute_invariants(data);
    if (x_is_k3_or_abelian(inv)) return pass(x_kind(inv));

    std::vector<int> k3;
    for (int i = 1; i <= 3; ++i)
        if (inv.quotients[i - 1].tag == QuotientTag::K3) k3.push_back(i);
    if (k3.size() < 2) return silent("fewer than two K3 quotients");
    for (int i = 0; i < 3; ++i) {
        const auto& b = data.d[i];
        if (b.total.is_zero() || b.components.size() != 1 || !is_irreducible_class(b.total))
            return silent("D" + std::to_string(i + 1) + " = " + b.total.str() + " is not irreducible");
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!proportional(data.d[i].total, data.d[j].total))
                return silent("D" + std::to_string(i + 1) + " and D" + std::to_string(j + 1) + " are not proportional");
    std::vector<std::string> w;
    for (int i : k3) {
        Int g = genus(data.d[i - 1].total);
        w.push_back("g(D" + std::to_string(i) + ") = " + std::to_string(g));
        if (g != 0) return silent("D" + std::to_string(i) + " has genus " + std::to_string(g), w);
    }
    const auto K = canonical(data.base);
    const auto L = half_classes(data);
    for (int i = 0; i < 3; ++i) {
        auto cls = -(K + data.d[i].total + L[i]);
        if (h0(cls) != 0)
            return silent("-(K + D" + std::to_string(i + 1) + " + L" + std::to_string(i + 1) + ") = " + cls.str() +
                              " is effective",
                          w);
    }
    return pass("classes proportional, rational branch curves, vanishing obstruction groups", w);
}

const std::vector<ItpAnnotation>& itp_annotations() {
    static const std::vector<ItpAnnotation> list = {
        {BaseSurface::plane(), {Vec{3}, Vec{3}, Vec{1}}, "table1 a", "Kynev surfaces, Kynev 1977"},
        {BaseSurface::quadric(), {Vec{4, 1}, Vec{0, 3}, Vec{2, 1}}, "tableP1xP1-general a", "Todorov 1981"},
        {BaseSurface::quadric(), {Vec{4, 0}, Vec{0, 4}, Vec{2, 2}}, "tableP1xP1-general b", "Todorov 1981"},
        {BaseSurface::quadric(), {Vec{3, 1}, Vec{1, 3}, Vec{1, 1}}, "tableP1xP1-general c", "Todorov 1981"},
    };
    return list;
}

std::optional<ItpAnnotation> itp_known_failure(const BidoubleData& data) {
    auto key = canonical_form(data.base, data.totals()).totals;
    for (const auto& a : itp_annotations())
        if (a.base == data.base && canonical_form(a.base, a.totals).totals == key) return a;
    return std::nullopt;
}

std::string mtc_cell(const BidoubleData& data) {
    return mtc_check(data).status == CheckStatus::Pass ? "\xE2\x9C\x93" : "";
}

std::string itp_cell(const BidoubleData& data) {
    if (itp_check(data).status == CheckStatus::Pass) return "\xE2\x9C\x93";
    if (itp_known_failure(data)) return "\xC3\x97";
    return "";
}

}  // namespace bicover
