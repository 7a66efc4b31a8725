#include "bicover/io.hpp"

namespace bicover {

namespace {

Vec read_vec(const Json& j, const std::string& path, int rank) {
    if (!j.is_array()) throw SchemaError(path, "expected an array of integers");
    Vec v;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer()) throw SchemaError(path + "[" + std::to_string(i) + "]", "expected an integer");
        v.push_back(j[i].get<Int>());
    }
    if (static_cast<int>(v.size()) != rank)
        throw SchemaError(path, "expected " + std::to_string(rank) + " coordinates, got " + std::to_string(v.size()));
    return v;
}

BaseSurface read_base(const Json& j) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "P2") return BaseSurface::plane();
        if (s == "P1xP1") return BaseSurface::quadric();
        throw SchemaError("/base", "unknown base \"" + s + "\"");
    }
    if (j.is_object() && j.size() == 1 && j.contains("Fn")) {
        const auto& n = j.at("Fn");
        if (!n.is_number_integer() || n.get<Int>() < 0) throw SchemaError("/base/Fn", "expected a nonnegative integer");
        return BaseSurface::hirzebruch(n.get<int>());
    }
    throw SchemaError("/base", "expected \"P2\", \"P1xP1\" or {\"Fn\": n}");
}

}  // namespace

BidoubleData bidouble_from_json(const Json& j) {
    if (!j.is_object()) throw SchemaError("", "expected an object");
    if (!j.contains("base")) throw SchemaError("/base", "missing");
    if (!j.contains("divisors")) throw SchemaError("/divisors", "missing");
    BidoubleData d{read_base(j.at("base")), {}};
    const int rank = d.base.picard_rank();
    const auto& divs = j.at("divisors");
    if (!divs.is_array() || divs.size() != 3) throw SchemaError("/divisors", "expected three entries");
    for (int i = 0; i < 3; ++i) {
        const std::string path = "/divisors/" + std::to_string(i);
        const auto& e = divs[i];
        if (!e.is_object() || !e.contains("total")) throw SchemaError(path + "/total", "missing");
        DivisorClass total(d.base, read_vec(e.at("total"), path + "/total", rank));
        if (!e.contains("components")) {
            d.d[i] = BranchDivisor::generic(total);
            continue;
        }
        const auto& comps = e.at("components");
        if (!comps.is_array()) throw SchemaError(path + "/components", "expected an array");
        d.d[i].total = total;
        for (std::size_t c = 0; c < comps.size(); ++c)
            d.d[i].components.emplace_back(d.base,
                                           read_vec(comps[c], path + "/components/" + std::to_string(c), rank));
    }
    return d;
}

Json base_to_json(const BaseSurface& b) {
    switch (b.kind) {
        case SurfaceKind::ProjectivePlane: return "P2";
        case SurfaceKind::Quadric: return "P1xP1";
        case SurfaceKind::Hirzebruch: return Json{{"Fn", b.n}};
    }
    return nullptr;
}

Json to_json(const BidoubleData& d) {
    Json divs = Json::array();
    for (const auto& b : d.d) {
        Json comps = Json::array();
        for (const auto& c : b.components) comps.push_back(c.c);
        divs.push_back({{"total", b.total.c}, {"components", comps}});
    }
    return {{"base", base_to_json(d.base)}, {"divisors", divs}};
}

Json to_json(const CoverInvariants& inv) {
    Json q = Json::array();
    for (const auto& qc : inv.quotients) q.push_back({{"tag", qc.short_name()}, {"p_g", qc.p_g}, {"q", qc.q}});
    return {{"chi", inv.chi},       {"K2", inv.k2},
            {"p_g", inv.p_g},       {"q", inv.q},
            {"quotients", q},       {"kodaira", to_string(inv.kodaira)},
            {"minimal", inv.minimal}};
}

Json to_json(const HodgeReport& h) {
    Json q = Json::array();
    for (const auto& qh : h.quotients)
        q.push_back({{"moduli", qh.moduli},
                     {"nodes", qh.nodes},
                     {"rho_resolution", qh.rho_resolution},
                     {"rho_singular", qh.rho_singular},
                     {"rank_T", qh.rank_T}});
    Json out{{"e", h.e},         {"b2", h.b2},         {"h11", h.h11}, {"p_g", h.p_g},
             {"rank_TX", h.rank_TX}, {"rho_X", h.rho_X}, {"m_X", h.m_X}, {"quotients", q}};
    out["m_X_caveat"] = "counts deformations that remain bidouble covers";
    out["inconsistency"] = h.inconsistency ? Json(*h.inconsistency) : Json(nullptr);
    return out;
}

Json to_json(const CheckResult& c) {
    return {{"status", to_string(c.status)}, {"reason", c.reason}, {"witnesses", c.witnesses}};
}

Json to_json(const ClassificationRow& row) {
    Json out{{"table", row.table}, {"label", row.label}, {"data", to_json(row.data)},
             {"invariants", to_json(row.inv)}, {"case_tags", row.case_tags}};
    if (row.parametric)
        out["family"] = {{"divisor", 3}, {"coordinate", row.parametric->coord}, {"min", row.parametric->min}};
    else
        out["family"] = nullptr;
    return out;
}

Json to_json(const BlowupCover& cover, const IteratedSolution& s) {
    Json deltas = Json::array();
    for (const auto& d : s.delta) deltas.push_back({{"class", d}, {"text", cover.format(d)}});
    auto opt = [](const std::optional<Int>& v) { return v ? Json(*v) : Json(nullptr); };
    return {{"construction", static_cast<int>(s.construction)},
            {"deltas", deltas},
            {"Z1", to_string(s.z1)},
            {"Z3", to_string(s.z3)},
            {"chi_fourth_quotient", s.chi_fourth},
            {"pg_W", s.pg_W},
            {"rank_TW", s.rank_TW},
            {"ranks", {{"Y2", s.rank_Y2}, {"Y3", s.rank_Y3}, {"Z1", s.rank_Z1}, {"Z3", s.rank_Z3}}},
            {"moduli", {{"Y2", opt(s.moduli_Y2)}, {"Y3", opt(s.moduli_Y3)}, {"Z", opt(s.moduli_Z)}}},
            {"divisibility_verified", false}};
}

}  // namespace bicover
