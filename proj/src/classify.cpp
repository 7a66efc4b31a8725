#include "bicover/classify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>

namespace bicover {

namespace {

Vec flatten(const std::array<Vec, 3>& t) {
    Vec out;
    for (const auto& v : t) out.insert(out.end(), v.begin(), v.end());
    return out;
}

bool has_rigid(const BaseSurface& base, const Vec& total) {
    if (base.kind != SurfaceKind::Hirzebruch) return false;
    auto comps = generic_components(DivisorClass(base, total));
    return comps && std::any_of(comps->begin(), comps->end(), [](const DivisorClass& c) { return is_rigid(c); });
}

Vec minus_two_k(const BaseSurface& base) { return (canonical(base) * -2).c; }

Vec add(const Vec& a, const Vec& b) {
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

int free_coord(const BaseSurface& base) { return base.kind == SurfaceKind::Hirzebruch ? 1 : 0; }

// Boxes [0, hi_0] x ... x [0, hi_r].
void for_each_box(const Vec& hi, const std::function<void(const Vec&)>& f) {
    Vec cur(hi.size(), 0);
    while (true) {
        f(cur);
        std::size_t i = 0;
        while (i < cur.size() && cur[i] == hi[i]) cur[i++] = 0;
        if (i == cur.size()) return;
        ++cur[i];
    }
}

bool rows_accept(const BidoubleData& data) {
    const auto& base = data.base;
    int trivial = 0, rigid = 0;
    for (const auto& b : data.d) {
        if (b.total.is_zero()) ++trivial;
        if (!generic_components(b.total)) return false;
        if (b.contains_rigid()) ++rigid;
    }
    if (trivial > 1 || rigid > 1) return false;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            for (Int x : (data.d[i].total + data.d[j].total).c)
                if (x % 2 != 0) return false;
    // Y1 and Y2 must have p_g <= 1.
    auto K = canonical(base);
    auto L = half_classes(data);
    for (int i = 0; i < 2; ++i)
        if (h0(K + L[i]) > 1) return false;
    // Non-minimal X (K^2 < 0) is excluded from the classification.
    return k2_X(data) >= 0;
}

}  // namespace

CanonicalForm canonical_form(const BaseSurface& base, const std::array<Vec, 3>& totals) {
    const Vec target = minus_two_k(base);
    std::array<int, 3> p{0, 1, 2};
    std::optional<CanonicalForm> best;
    std::pair<int, Vec> best_key;
    do {
        if (add(totals[p[0]], totals[p[1]]) != target) continue;
        for (int s = 0; s < (base.kind == SurfaceKind::Quadric ? 2 : 1); ++s) {
            CanonicalForm cf;
            cf.perm = p;
            cf.swapped = s == 1;
            for (int j = 0; j < 3; ++j) {
                cf.totals[j] = totals[p[j]];
                if (cf.swapped) std::reverse(cf.totals[j].begin(), cf.totals[j].end());
            }
            std::pair<int, Vec> key{has_rigid(base, cf.totals[0]) ? 1 : 0, flatten(cf.totals)};
            if (!best || key > best_key) {
                best = cf;
                best_key = key;
            }
        }
    } while (std::next_permutation(p.begin(), p.end()));
    if (!best) {
        CanonicalForm cf;
        cf.totals = totals;
        return cf;
    }
    return *best;
}

std::string table_id(const BaseSurface& base, const std::array<Vec, 3>& totals, Int k2) {
    switch (base.kind) {
        case SurfaceKind::ProjectivePlane: return "table1";
        case SurfaceKind::Quadric: return k2 > 0 ? "tableP1xP1-general" : "tableP1xP1-elliptic";
        case SurfaceKind::Hirzebruch:
            if (base.n == 2)
                return (has_rigid(base, totals[0]) || has_rigid(base, totals[1])) ? "tableF2-red" : "tableF2-irr";
            return "tableF" + std::to_string(base.n);
    }
    return "";
}

std::string quadric_case_tag(const std::array<Vec, 3>& t) {
    Int n1 = t[0][0], n3 = t[2][0];
    if (n1 + n3 > 4) {
        if (n3 > n1) return "(1)";
        if (n3 == n1) return "(2)";
        return "(3)";
    }
    return "(4)";
}

std::vector<ClassificationRow> enumerate(const BaseSurface& base, int cap) {
    if (cap < 10) throw Error("enumeration cap must be >= 10");
    const Vec target = minus_two_k(base);
    const int r = base.picard_rank();
    std::set<Vec> seen;
    std::vector<ClassificationRow> instances;

    for_each_box(target, [&](const Vec& d1) {
        Vec d2(r);
        for (int i = 0; i < r; ++i) d2[i] = target[i] - d1[i];
        for_each_box(Vec(r, cap), [&](const Vec& d3) {
            auto data = BidoubleData::from_totals(base, {d1, d2, d3});
            if (!rows_accept(data)) return;
            auto cf = canonical_form(base, data.totals());
            if (!seen.insert(flatten(cf.totals)).second) return;
            ClassificationRow row;
            row.data = BidoubleData::from_totals(base, cf.totals);
            row.inv = compute_invariants(row.data);
            row.table = table_id(base, cf.totals, row.inv.k2);
            if (base.kind == SurfaceKind::Quadric) row.case_tags = {quadric_case_tag(cf.totals)};
            instances.push_back(std::move(row));
        });
    });

    std::vector<ClassificationRow> out;
    if (!base.is_ruled()) {
        out = std::move(instances);
    } else {
        // Group instances that differ only in the free coordinate of D3.
        const int fc = free_coord(base);
        using Key = std::tuple<Vec, Int, Int, Int, Int, std::string, std::string, std::string>;
        std::map<Key, std::vector<std::size_t>> groups;
        for (std::size_t idx = 0; idx < instances.size(); ++idx) {
            const auto& row = instances[idx];
            auto t = row.data.totals();
            Int v = t[2][fc];
            t[2][fc] = v % 2;
            std::string tags;
            for (const auto& qc : row.inv.quotients) tags += qc.short_name() + std::to_string(qc.q) + "/";
            std::string sub;
            if (!row.case_tags.empty()) {
                sub = row.case_tags[0];
                if (sub == "(1)" || sub == "(2)") sub = "(1)(2)";
            }
            Key key{flatten(t), row.inv.p_g, row.inv.q, row.inv.k2, row.inv.chi, tags, to_string(row.inv.kodaira), sub};
            groups[key].push_back(idx);
        }
        for (auto& [key, members] : groups) {
            auto value = [&](std::size_t i) { return instances[i].data.d[2].total.c[fc]; };
            std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) { return value(a) < value(b); });
            if (value(members.back()) >= cap - 1) {
                ClassificationRow fam = instances[members.front()];
                fam.parametric = Parametric{fc, value(members.front())};
                std::set<std::string> tags;
                for (auto i : members)
                    for (const auto& t : instances[i].case_tags) tags.insert(t);
                fam.case_tags.assign(tags.begin(), tags.end());
                out.push_back(std::move(fam));
            } else {
                for (auto i : members) out.push_back(instances[i]);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const ClassificationRow& a, const ClassificationRow& b) {
        return std::make_pair(a.table, flatten(a.data.totals())) < std::make_pair(b.table, flatten(b.data.totals()));
    });
    return out;
}

std::string Diff::str() const {
    return "row " + row + ": " + column + " listed " + (listed.empty() ? "(blank)" : listed) + ", computed " +
           (computed.empty() ? "(blank)" : computed);
}

MatchReport match_expected(const BaseSurface& base, const std::vector<ClassificationRow>& rows,
                           const std::vector<ExpectedRow>& expected, int cap) {
    MatchReport rep;
    rep.matched.assign(expected.size(), -1);
    std::vector<bool> used(rows.size(), false);
    const int fc = free_coord(base);

    auto canon_key = [&](const std::array<Vec, 3>& t) { return canonical_form(base, t).totals; };
    auto find_fixed = [&](const std::array<Vec, 3>& canon) -> int {
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (!rows[i].parametric && rows[i].data.totals() == canon) return static_cast<int>(i);
        return -1;
    };
    auto find_family = [&](const std::array<Vec, 3>& canon) -> int {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!rows[i].parametric) continue;
            auto t = rows[i].data.totals();
            for (Int v = rows[i].parametric->min; v <= cap; v += 2) {
                t[2][fc] = v;
                if (canon_key(t) == canon) return static_cast<int>(i);
            }
        }
        return -1;
    };
    std::set<std::array<Vec, 3>> listed_fixed;
    for (const auto& e : expected)
        if (!e.free_min) listed_fixed.insert(canon_key(e.totals));

    for (std::size_t k = 0; k < expected.size(); ++k) {
        const auto& e = expected[k];
        std::array<Vec, 3> probe = e.totals;
        int hit = -1;
        if (!e.free_min) {
            hit = find_fixed(canon_key(probe));
            if (hit < 0) {
                rep.diffs.push_back({e.label, "presence", "listed", "missing"});
                continue;
            }
        } else {
            for (Int v = *e.free_min; v <= cap && hit < 0; ++v) {
                probe[2][fc] = v;
                auto data = BidoubleData::from_totals(base, probe);
                if (!validate(data).empty()) continue;
                auto canon = canon_key(probe);
                hit = find_family(canon);
                if (hit >= 0) break;
                // An instance below the computed bound must be another listed row.
                if (find_fixed(canon) >= 0 && listed_fixed.count(canon)) {
                    rep.notes.push_back("row " + e.label + ": instance at " + std::to_string(v) +
                                        " coincides with another listed row");
                    continue;
                }
                rep.diffs.push_back({e.label, "instance " + std::to_string(v), "listed", "missing"});
                break;
            }
            if (hit < 0) {
                if (rep.diffs.empty() || rep.diffs.back().row != e.label)
                    rep.diffs.push_back({e.label, "presence", "listed", "missing"});
                continue;
            }
            if (rows[hit].parametric->min != *e.free_min)
                rep.notes.push_back("row " + e.label + ": listed bound " + std::to_string(*e.free_min) +
                                    ", computed bound " + std::to_string(rows[hit].parametric->min));
        }
        used[hit] = true;
        rep.matched[k] = hit;
        const auto& row = rows[hit];
        auto cf = canonical_form(base, probe);
        for (int j = 0; j < 3; ++j) {
            const auto& want = e.tags[cf.perm[j]];
            auto got = row.inv.quotients[j].short_name();
            if (want != got)
                rep.diffs.push_back({e.label, "Y" + std::to_string(cf.perm[j] + 1), want, got});
        }
        auto cmp = [&](const char* col, Int want, Int got) {
            if (want != got)
                rep.diffs.push_back({e.label, col, std::to_string(want), std::to_string(got)});
        };
        cmp("p_g", e.p_g, row.inv.p_g);
        cmp("q", e.q, row.inv.q);
        cmp("K2", e.k2, row.inv.k2);
    }
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!used[i]) {
            std::string what;
            for (const auto& t : rows[i].data.totals()) what += (what.empty() ? "" : " ") + DivisorClass(base, t).str();
            rep.diffs.push_back({what, "presence", "absent", "produced"});
        }
    return rep;
}

}  // namespace bicover
