#include "bicover/cover.hpp"

#include <algorithm>

namespace bicover {

namespace {

const char* kDivisorNames[3] = {"D1", "D2", "D3"};

bool all_even(const DivisorClass& d) {
    return std::all_of(d.c.begin(), d.c.end(), [](Int x) { return x % 2 == 0; });
}

DivisorClass halve(const DivisorClass& d) {
    Vec r(d.c);
    for (auto& x : r) x /= 2;
    return {d.base, r};
}

}  // namespace

BranchDivisor BranchDivisor::generic(const DivisorClass& total) {
    BranchDivisor b{total, {}};
    if (auto comps = generic_components(total)) b.components = *comps;
    else if (!total.is_zero()) b.components = {total};
    return b;
}

bool BranchDivisor::contains_rigid() const {
    return std::any_of(components.begin(), components.end(), [](const DivisorClass& c) { return is_rigid(c); });
}

BidoubleData BidoubleData::from_totals(const BaseSurface& base, const std::array<Vec, 3>& totals) {
    BidoubleData data{base, {}};
    for (int i = 0; i < 3; ++i) data.d[i] = BranchDivisor::generic(DivisorClass(base, totals[i]));
    return data;
}

std::array<Vec, 3> BidoubleData::totals() const { return {d[0].total.c, d[1].total.c, d[2].total.c}; }

DivisorClass BidoubleData::total_branch() const { return d[0].total + d[1].total + d[2].total; }

std::string QuotientClass::short_name() const {
    switch (tag) {
        case QuotientTag::K3: return "K3";
        case QuotientTag::RationalPg0: return "rat";
        case QuotientTag::RuledIrregular: return "rul";
        case QuotientTag::Other: return "other";
    }
    return "?";
}

std::string to_string(Kodaira k) {
    switch (k) {
        case Kodaira::Zero: return "zero";
        case Kodaira::One: return "one";
        case Kodaira::Two: return "two";
        case Kodaira::K3Special: return "k3";
        case Kodaira::Undetermined: return "undetermined";
    }
    return "?";
}

std::vector<std::string> validate(const BidoubleData& data) {
    std::vector<std::string> errors;
    const auto& base = data.base;
    for (int i = 0; i < 3; ++i) {
        if (data.d[i].total.base != base) {
            errors.push_back(std::string(kDivisorNames[i]) + " lives on " + data.d[i].total.base.name());
            return errors;
        }
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            auto s = data.d[i].total + data.d[j].total;
            if (!all_even(s))
                errors.push_back("parity: " + std::string(kDivisorNames[i]) + "+" + kDivisorNames[j] + " = " + s.str() +
                                 " is not divisible by 2");
        }
    int trivial = 0;
    for (const auto& b : data.d) trivial += b.total.is_zero() ? 1 : 0;
    if (trivial > 1) errors.push_back("two trivial divisors: at most one Di may be 0");

    int rigid_count = 0;
    for (int i = 0; i < 3; ++i) {
        const auto& b = data.d[i];
        std::string nm = kDivisorNames[i];
        if (!is_effective(b.total)) {
            errors.push_back(nm + " = " + b.total.str() + " is not effective");
            continue;
        }
        DivisorClass sum = zero_class(base);
        for (const auto& c : b.components) {
            if (c.base != base) {
                errors.push_back(nm + " has a component on another surface");
                continue;
            }
            sum = sum + c;
            if (!is_irreducible_class(c)) errors.push_back(nm + " component " + c.str() + " has no irreducible member");
            if (is_rigid(c)) ++rigid_count;
        }
        if (sum != b.total) errors.push_back(nm + " components do not add up to " + b.total.str());
        for (std::size_t x = 0; x < b.components.size(); ++x)
            for (std::size_t y = x + 1; y < b.components.size(); ++y) {
                const auto& p = b.components[x];
                const auto& q = b.components[y];
                if (p.base == base && q.base == base && dot(p, q) != 0)
                    errors.push_back(nm + " is not smooth: components " + p.str() + " and " + q.str() + " meet");
            }
    }
    if (rigid_count > 1) errors.push_back("the negative section appears " + std::to_string(rigid_count) + " times in the branch locus");
    return errors;
}

void require_valid(const BidoubleData& data) {
    auto errs = validate(data);
    if (errs.empty()) return;
    std::string msg = "invalid bidouble data:";
    for (const auto& e : errs) msg += " " + e + ";";
    throw Error(msg);
}

std::array<DivisorClass, 3> half_classes(const BidoubleData& data) {
    const auto& D = data.d;
    return {halve(D[1].total + D[2].total), halve(D[0].total + D[2].total), halve(D[0].total + D[1].total)};
}

Int chi_X(const BidoubleData& data) {
    auto K = canonical(data.base);
    Int twice = 0;
    for (const auto& L : half_classes(data)) twice += dot(L, L + K);
    if (twice % 2 != 0) throw Error("internal: non-integral chi(X)");
    return 4 + twice / 2;
}

Int k2_X(const BidoubleData& data) {
    auto t = canonical(data.base) * 2 + data.total_branch();
    return dot(t, t);
}

Int chi_Yi(const BidoubleData& data, int i) {
    if (i < 1 || i > 3) throw Error("quotient index must be 1, 2 or 3");
    auto K = canonical(data.base);
    auto L = half_classes(data)[i - 1];
    Int twice = dot(L, L) + dot(L, K);
    if (twice % 2 != 0) throw Error("internal: non-integral chi(Y" + std::to_string(i) + ")");
    return 2 + twice / 2;
}

Int plurigenus_Yi(const BidoubleData& data, int i, int k) {
    if (k < 1) throw Error("plurigenus index must be >= 1");
    auto K = canonical(data.base);
    auto L = half_classes(data)[i - 1];
    return h0((K + L) * k) + h0(K * k + L * (k - 1));
}

QuotientClass classify_quotient(const BidoubleData& data, int i) {
    auto K = canonical(data.base);
    auto L = half_classes(data)[i - 1];
    if (L == -K) return {QuotientTag::K3, 0, 1};
    Int chi = chi_Yi(data, i);
    bool vanish = true;
    for (int k = 1; k <= 4; ++k) vanish = vanish && plurigenus_Yi(data, i, k) == 0;
    if (vanish) {
        Int q = 1 - chi;
        return {q == 0 ? QuotientTag::RationalPg0 : QuotientTag::RuledIrregular, q, 0};
    }
    Int pg = plurigenus_Yi(data, i, 1);
    return {QuotientTag::Other, 1 + pg - chi, pg};
}

std::pair<Int, Int> pg_q_X(const BidoubleData& data) {
    auto K = canonical(data.base);
    Int pg = h0(K);
    for (const auto& L : half_classes(data)) pg += h0(K + L);
    Int q = 1 + pg - chi_X(data);
    if (q < 0) throw Error("internal: negative irregularity");
    return {pg, q};
}

std::pair<Kodaira, bool> kodaira_and_minimality(const BidoubleData& data) {
    if (classify_quotient(data, 3).tag != QuotientTag::K3) return {Kodaira::Undetermined, false};
    auto t = canonical(data.base) * 2 + data.total_branch();
    if (t.is_zero()) {
        auto [pg, q] = pg_q_X(data);
        return {q == 0 ? Kodaira::K3Special : Kodaira::Zero, true};
    }
    if (is_nef(t) && dot(t, t) > 0) return {Kodaira::Two, true};
    const auto& d3 = data.d[2];
    if (data.base.is_ruled() && !d3.total.is_zero()) {
        // A union of fibers of one ruling pulls back to fibers of the genus 1 fibration on Y3.
        bool fibers = data.base.kind == SurfaceKind::Hirzebruch ? d3.total.c[0] == 0
                                                                  : (d3.total.c[0] == 0 || d3.total.c[1] == 0);
        if (fibers) return {Kodaira::One, true};
    }
    return {Kodaira::Undetermined, false};
}

Int singular_k2(const BidoubleData& data, int k) {
    if (k < 0) throw Error("number of (1,1,1) points must be >= 0");
    Int bound = dot(data.d[0].total, data.d[1].total);
    if (k > bound)
        throw Error("k = " + std::to_string(k) + " exceeds D1.D2 = " + std::to_string(bound) + " available intersection points");
    bool cubics = data.base.kind == SurfaceKind::ProjectivePlane &&
                  std::all_of(data.d.begin(), data.d.end(), [](const BranchDivisor& b) { return b.total.c[0] == 3; });
    if (cubics && k == 8) throw Error("k = 8 is not realisable on three cubics");
    return k2_X(data) - k;
}

CoverInvariants compute_invariants(const BidoubleData& data) {
    require_valid(data);
    CoverInvariants inv;
    inv.chi = chi_X(data);
    inv.k2 = k2_X(data);
    std::tie(inv.p_g, inv.q) = pg_q_X(data);
    Int sum = 0;
    for (int i = 1; i <= 3; ++i) {
        inv.quotients[i - 1] = classify_quotient(data, i);
        sum += chi_Yi(data, i);
    }
    if (inv.chi != sum - 2) throw Error("internal: chi(X) differs from sum of chi(Yi) - 2");
    std::tie(inv.kodaira, inv.minimal) = kodaira_and_minimality(data);
    return inv;
}

}  // namespace bicover
