#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "bicover/fixtures.hpp"
#include "bicover/hodge.hpp"
#include "bicover/iterated.hpp"
#include "bicover/lattice.hpp"

namespace bicover {

const Json& embedded_fixtures() {
    static const Json parsed = Json::parse(kFixtureJson);
    return parsed;
}

const std::vector<std::string>& required_fixture_ids() {
    static const std::vector<std::string> ids = {
        "table1",         "tableP1xP1-general", "tableP1xP1-elliptic", "tableF2-irr",    "tableF2-red",
        "tableF3",        "tableF4",            "tableF5",             "table2",         "tableP1xP1-tra",
        "tableP1xP1-kummer", "hodge-P2",        "hodge-P1xP1",         "hodge-Fn",       "table4-iterated",
        "iterated-P1xP1", "iterated-Fn",        "singular",
    };
    return ids;
}

std::vector<Erratum> parse_errata(const Json& fixtures) {
    std::vector<Erratum> out;
    if (!fixtures.contains("errata")) return out;
    for (const auto& e : fixtures.at("errata"))
        out.push_back({e.at("table").get<std::string>(),
                       {e.at("row").get<std::string>(), e.at("column").get<std::string>(),
                        e.at("listed").get<std::string>(), e.at("computed").get<std::string>()},
                       e.value("reason", "")});
    return out;
}

std::size_t VerifyResult::diff_count() const {
    std::size_t n = global.size();
    for (const auto& t : tables) n += t.diffs.size() + (strict ? t.known.size() : 0);
    return n;
}

namespace {

std::array<Vec, 3> read_totals(const Json& d) {
    if (!d.is_array() || d.size() != 3) throw Error("\"D\" must list three classes");
    std::array<Vec, 3> t;
    for (int i = 0; i < 3; ++i) t[i] = d[i].get<Vec>();
    return t;
}

BaseSurface row_base(const Json& fixture, const Json& row) {
    if (row.contains("base")) return BaseSurface::parse(row.at("base").get<std::string>());
    return BaseSurface::parse(fixture.at("base").get<std::string>());
}

std::string kodaira_word(Kodaira k) {
    switch (k) {
        case Kodaira::K3Special: return "K3";
        case Kodaira::Zero: return "abelian";
        case Kodaira::One: return "elliptic";
        case Kodaira::Two: return "general";
        case Kodaira::Undetermined: break;
    }
    return "undetermined";
}

class Verifier {
public:
    explicit Verifier(const VerifyOptions& o) : opts_(o) {}

    TableReport run(const Json& fixture) {
        TableReport rep;
        rep.id = fixture.at("id").get<std::string>();
        rep.kind = fixture.at("kind").get<std::string>();
        if (rep.kind == "classification") classification(fixture, rep);
        else if (rep.kind == "hodge") hodge(fixture, rep);
        else if (rep.kind == "lattice") lattice(fixture, rep);
        else if (rep.kind == "iterated") iterated(fixture, rep);
        else if (rep.kind == "singular") singular(fixture, rep);
        else rep.diffs.push_back({rep.id, "kind", "known kind", rep.kind});
        return rep;
    }

private:
    const VerifyOptions& opts_;
    std::map<std::string, std::vector<ClassificationRow>> enumerated_;

    const std::vector<ClassificationRow>& rows_for(const BaseSurface& base) {
        auto it = enumerated_.find(base.name());
        if (it == enumerated_.end()) it = enumerated_.emplace(base.name(), enumerate(base, opts_.cap)).first;
        return it->second;
    }

    template <class T>
    static void check(TableReport& rep, const std::string& row, const std::string& column, const T& listed,
                      const T& computed) {
        ++rep.checks;
        if (listed == computed) return;
        if constexpr (std::is_same_v<T, std::string>)
            rep.diffs.push_back({row, column, listed, computed});
        else
            rep.diffs.push_back({row, column, std::to_string(listed), std::to_string(computed)});
    }

    void classification(const Json& fx, TableReport& rep) {
        const auto base = BaseSurface::parse(fx.at("base").get<std::string>());
        std::vector<ClassificationRow> rows;
        for (const auto& r : rows_for(base))
            if (r.table == rep.id) rows.push_back(r);

        std::vector<ExpectedRow> expected;
        for (const auto& r : fx.at("rows")) {
            ExpectedRow e;
            e.label = r.at("label").get<std::string>();
            e.totals = read_totals(r.at("D"));
            auto tags = r.at("Y").get<std::vector<std::string>>();
            std::copy(tags.begin(), tags.end(), e.tags.begin());
            e.p_g = r.at("pg").get<Int>();
            e.q = r.at("q").get<Int>();
            e.k2 = r.at("K2").get<Int>();
            if (r.contains("free_min")) e.free_min = r.at("free_min").get<Int>();
            expected.push_back(std::move(e));
        }
        auto match = match_expected(base, rows, expected, opts_.cap);
        // Row presence plus three tags and three numbers per listed row.
        rep.checks += static_cast<int>(expected.size() * 6 + rows.size());
        rep.diffs.insert(rep.diffs.end(), match.diffs.begin(), match.diffs.end());
        for (const auto& n : match.notes) rep.notes.push_back(n);

        for (std::size_t k = 0; k < expected.size(); ++k) {
            const auto& r = fx.at("rows")[k];
            auto totals = expected[k].totals;
            auto data = BidoubleData::from_totals(base, totals);
            if (!validate(data).empty()) {
                rep.diffs.push_back({expected[k].label, "validity", "valid", "invalid"});
                continue;
            }
            check<std::string>(rep, expected[k].label, "MTC", r.at("mtc"), mtc_cell(data));
            check<std::string>(rep, expected[k].label, "ITP", r.at("itp"), itp_cell(data));
            if (r.contains("kodaira")) {
                auto kod = compute_invariants(data).kodaira;
                if (kod == Kodaira::Undetermined)
                    rep.notes.push_back("row " + expected[k].label + ": Kodaira dimension listed as " +
                                        r.at("kodaira").get<std::string>() + ", not determined here");
                else
                    check<std::string>(rep, expected[k].label, "kodaira", r.at("kodaira"), kodaira_word(kod));
            }
        }
    }

    void hodge(const Json& fx, TableReport& rep) {
        for (const auto& r : fx.at("rows")) {
            const auto label = r.at("label").get<std::string>();
            auto data = BidoubleData::from_totals(row_base(fx, r), read_totals(r.at("D")));
            auto h = hodge_report(data);
            check<Int>(rep, label, "h11", r.at("h11"), h.h11);
            auto rho = r.at("rho").get<Vec>();
            for (int i = 0; i < 3; ++i)
                check<Int>(rep, label, "rho(Y" + std::to_string(i + 1) + ")", rho[i], h.quotients[i].rho_singular);
            auto tra = r.at("tra").get<Vec>();
            auto listed_for = r.at("for").get<std::vector<int>>();
            std::vector<int> k3;
            for (int i = 0; i < 3; ++i)
                if (h.quotients[i].tag == QuotientTag::K3) k3.push_back(i + 1);
            auto join = [](const std::vector<int>& v) {
                std::string s;
                for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
                return s;
            };
            check<std::string>(rep, label, "K3 quotients", join(listed_for), join(k3));
            for (int i : k3)
                check<Int>(rep, label, "h11_tra(Y" + std::to_string(i) + ")", tra[1],
                           h.quotients[i - 1].rank_T - 2);
            check<Int>(rep, label, "2p_g + h11 - rank_T - rho", 0, 2 * h.p_g + h.h11 - h.rank_TX - h.rho_X);
            if (h.inconsistency) rep.diffs.push_back({label, "rho(X) vs rho(Y1)", "equal", *h.inconsistency});
        }
    }

    void lattice(const Json& fx, TableReport& rep) {
        for (const auto& r : fx.at("rows")) {
            const auto label = r.at("label").get<std::string>();
            const auto base = row_base(fx, r);
            auto data = BidoubleData::from_totals(base, read_totals(r.at("D")));
            auto h = hodge_report(data);
            for (int i = 0; i < 3; ++i) {
                const auto col = "T_Y" + std::to_string(i + 1);
                const auto& want = r.at("T")[i];
                const bool is_k3 = h.quotients[i].tag == QuotientTag::K3;
                if (want.is_null()) {
                    check<std::string>(rep, label, col, "-", is_k3 ? "K3 quotient" : "-");
                    continue;
                }
                if (!is_k3) {
                    check<std::string>(rep, label, col, normalize(want.get<std::string>()), "not a K3 quotient");
                    continue;
                }
                std::string got;
                try {
                    auto entry = transcendental_of(base, branch_components(data, i + 1));
                    got = normalize(entry.expr);
                    const auto listed = normalize(want.get<std::string>());
                    if (!entry.alias.empty() && normalize(entry.alias) == listed) got = listed;
                    check<std::string>(rep, label, col, listed, got);
                    ++rep.checks;
                    if (named(entry.expr).rank() != h.quotients[i].rank_T)
                        rep.diffs.push_back({label, col + " rank", std::to_string(h.quotients[i].rank_T),
                                             std::to_string(named(entry.expr).rank())});
                } catch (const Error& e) {
                    rep.diffs.push_back({label, col, want.get<std::string>(), e.what()});
                }
            }
            if (r.contains("m")) {
                for (int i = 0; i < 3; ++i) {
                    const auto& want = r.at("m")[i];
                    if (want.is_null()) continue;
                    check<Int>(rep, label, "m" + std::to_string(i + 1), want.get<Int>(), h.quotients[i].moduli);
                }
            }
            if (r.contains("r_X")) check<Int>(rep, label, "r_X", r.at("r_X"), h.rank_TX);
            if (r.contains("m_X")) check<Int>(rep, label, "m_X", r.at("m_X"), h.m_X);
        }
    }

    void iterated(const Json& fx, TableReport& rep) {
        for (const auto& r : fx.at("rows")) {
            const auto base = row_base(fx, r);
            const int cn = r.at("construction").get<int>();
            const auto label = r.at("label").get<std::string>() + " C" + std::to_string(cn);
            auto cover = build(BidoubleData::from_totals(base, read_totals(r.at("D"))));
            auto sols = enumerate_iterated(cover, static_cast<Construction>(cn));

            auto pad = [&](Vec a) {
                a.resize(static_cast<std::size_t>(cover.r + cover.k), 0);
                return a;
            };
            std::vector<Vec> listed, computed;
            for (const auto& s : r.at("solutions")) listed.push_back(pad(s.at("delta1").get<Vec>()));
            for (const auto& s : sols) computed.push_back(s.delta[0]);
            auto set_str = [&](std::vector<Vec> v) {
                std::sort(v.begin(), v.end(), std::greater<>());
                std::string out = "{";
                for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + cover.format(v[i]);
                return out + "}";
            };
            check<std::string>(rep, label, "solutions", set_str(listed), set_str(computed));

            for (const auto& want : r.at("solutions")) {
                const auto d1 = pad(want.at("delta1").get<Vec>());
                auto it = std::find_if(sols.begin(), sols.end(), [&](const IteratedSolution& s) { return s.delta[0] == d1; });
                if (it == sols.end()) continue;
                const auto row = label + " " + cover.format(d1);
                if (want.contains("pg_W")) check<Int>(rep, row, "p_g(W)", want.at("pg_W"), it->pg_W);
                if (want.contains("r_W")) check<Int>(rep, row, "r_W", want.at("r_W"), it->rank_TW);
                if (want.contains("Z1")) check<std::string>(rep, row, "Z1", want.at("Z1"), to_string(it->z1));
                if (want.contains("Z3")) check<std::string>(rep, row, "Z3", want.at("Z3"), to_string(it->z3));
                if (want.contains("m")) {
                    const auto& m = want.at("m");
                    auto opt = [](const std::optional<Int>& v) { return v ? std::to_string(*v) : std::string("-"); };
                    auto js = [](const Json& v) { return v.is_null() ? std::string("-") : std::to_string(v.get<Int>()); };
                    check<std::string>(rep, row, "m_Y2", js(m[0]), opt(it->moduli_Y2));
                    check<std::string>(rep, row, "m_Y3", js(m[1]), opt(it->moduli_Y3));
                    check<std::string>(rep, row, "m_Z3",
                                       js(m[2]), it->z3 == ZType::K3 ? opt(it->moduli_Z) : std::string("-"));
                }
            }
        }
    }

    void singular(const Json& fx, TableReport& rep) {
        for (const auto& r : fx.at("rows")) {
            const auto label = r.at("label").get<std::string>();
            auto data = BidoubleData::from_totals(row_base(fx, r), read_totals(r.at("D")));
            const int k = r.at("points").get<int>();
            if (r.value("error", false)) {
                std::string got = "accepted";
                try {
                    singular_k2(data, k);
                } catch (const Error&) {
                    got = "error";
                }
                check<std::string>(rep, label, "K2", "error", got);
                continue;
            }
            check<Int>(rep, label, "K2", r.at("K2"), singular_k2(data, k));
            check<Int>(rep, label, "p_g", r.at("pg"), compute_invariants(data).p_g);
        }
    }
};

bool selected(const VerifyOptions& o, const Json& fx) {
    if (o.only.empty()) return true;
    const auto id = fx.at("id").get<std::string>();
    const auto kind = fx.at("kind").get<std::string>();
    return std::any_of(o.only.begin(), o.only.end(), [&](const std::string& s) { return s == id || s == kind; });
}

}  // namespace

VerifyResult verify(const Json& fixtures, const VerifyOptions& opts) {
    VerifyResult res;
    res.strict = opts.strict;
    const auto& list = fixtures.at("fixtures");

    std::set<std::string> present;
    for (const auto& fx : list) present.insert(fx.at("id").get<std::string>());
    for (const auto& id : required_fixture_ids())
        if (!present.count(id)) res.global.push_back({id, "fixture", "present", "missing"});

    auto errata = parse_errata(fixtures);
    std::vector<bool> used(errata.size(), false);
    Verifier v(opts);
    for (const auto& fx : list) {
        if (!selected(opts, fx)) continue;
        TableReport rep;
        try {
            rep = v.run(fx);
        } catch (const std::exception& e) {
            rep.id = fx.value("id", "?");
            rep.kind = fx.value("kind", "?");
            rep.diffs.push_back({rep.id, "evaluation", "completes", e.what()});
        }
        std::vector<Diff> open;
        for (const auto& d : rep.diffs) {
            bool hit = false;
            for (std::size_t i = 0; i < errata.size() && !hit; ++i) {
                if (errata[i].table == rep.id && errata[i].diff == d) {
                    rep.known.push_back(errata[i]);
                    used[i] = hit = true;
                }
            }
            if (!hit) open.push_back(d);
        }
        rep.diffs = std::move(open);
        res.tables.push_back(std::move(rep));
    }
    // An erratum that no longer matches anything is itself a mismatch.
    for (std::size_t i = 0; i < errata.size(); ++i) {
        if (used[i]) continue;
        bool ran = std::any_of(res.tables.begin(), res.tables.end(),
                               [&](const TableReport& t) { return t.id == errata[i].table; });
        if (ran) res.global.push_back({errata[i].table + " " + errata[i].diff.row, "erratum " + errata[i].diff.column,
                                       "matches a diff", "stale"});
    }
    return res;
}

Json to_json(const VerifyResult& r) {
    auto diff_json = [](const Diff& d) {
        return Json{{"row", d.row}, {"column", d.column}, {"listed", d.listed}, {"computed", d.computed}};
    };
    Json out;
    out["ok"] = r.ok();
    out["strict"] = r.strict;
    out["diff_count"] = r.diff_count();
    out["global"] = Json::array();
    for (const auto& d : r.global) out["global"].push_back(diff_json(d));
    out["tables"] = Json::array();
    for (const auto& t : r.tables) {
        Json tj{{"id", t.id}, {"kind", t.kind}, {"checks", t.checks}, {"notes", t.notes}};
        tj["diffs"] = Json::array();
        for (const auto& d : t.diffs) tj["diffs"].push_back(diff_json(d));
        tj["known"] = Json::array();
        for (const auto& e : t.known) {
            auto kj = diff_json(e.diff);
            kj["reason"] = e.reason;
            tj["known"].push_back(kj);
        }
        out["tables"].push_back(tj);
    }
    return out;
}

std::string render_text(const VerifyResult& r) {
    std::ostringstream os;
    for (const auto& t : r.tables) {
        const bool clean = t.diffs.empty() && (!r.strict || t.known.empty());
        os << (clean ? "PASS " : "FAIL ") << t.id << " (" << t.kind << ", " << t.checks << " checks";
        if (!t.known.empty()) os << ", " << t.known.size() << " known";
        os << ")\n";
        for (const auto& d : t.diffs) os << "  diff  " << d.str() << "\n";
        for (const auto& e : t.known) os << "  known " << e.diff.str() << "  [" << e.reason << "]\n";
        for (const auto& n : t.notes) os << "  note  " << n << "\n";
    }
    for (const auto& d : r.global) os << "FAIL " << d.str() << "\n";
    os << (r.ok() ? "verify: ok" : "verify: " + std::to_string(r.diff_count()) + " unexplained diff(s)") << "\n";
    return os.str();
}

}  // namespace bicover
