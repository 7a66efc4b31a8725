#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "bicover/fixtures.hpp"
#include "bicover/io.hpp"
#include "bicover/lattice.hpp"

using namespace bicover;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kInvalid = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int default_cap() {
    if (const char* env = std::getenv("BICOVER_CAP")) {
        try {
            int v = std::stoi(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
        }
        throw UsageError(std::string("BICOVER_CAP must be a positive integer, got '") + env + "'");
    }
    return 10;
}

BaseSurface parse_base(const std::string& s) {
    try {
        return BaseSurface::parse(s);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw SchemaError("", std::string("not valid JSON: ") + e.what());
    }
}

BidoubleData load_input(const std::string& path) {
    auto data = bidouble_from_json(read_json_file(path));
    return data;
}

// Totals of a listed case, looked up by base and row label in the classification tables.
std::array<Vec, 3> case_totals(const BaseSurface& base, const std::string& label) {
    for (const auto& fx : embedded_fixtures().at("fixtures")) {
        if (fx.at("kind") != "classification" || BaseSurface::parse(fx.at("base").get<std::string>()) != base) continue;
        for (const auto& r : fx.at("rows"))
            if (r.at("label") == label) {
                std::array<Vec, 3> t;
                for (int i = 0; i < 3; ++i) t[i] = r.at("D")[i].get<Vec>();
                return t;
            }
    }
    throw UsageError("no case '" + label + "' listed for " + base.name());
}

BidoubleData data_from(const std::string& input, const std::string& base, const std::string& label) {
    if (!input.empty()) return load_input(input);
    if (base.empty() || label.empty()) throw UsageError("give --input, or --base with --case");
    auto b = parse_base(base);
    return BidoubleData::from_totals(b, case_totals(b, label));
}

void require_valid_or_throw(const BidoubleData& d) {
    auto errs = validate(d);
    if (errs.empty()) return;
    std::string msg;
    for (const auto& e : errs) msg += "  " + e + "\n";
    throw Error("invalid bidouble data:\n" + msg);
}

std::string cell(const std::string& s) { return s.empty() ? "." : s; }

std::string classes_text(const BidoubleData& d) {
    std::string out;
    for (const auto& b : d.d) out += (out.empty() ? "" : " ") + b.total.str();
    return out;
}

int cmd_classify(const std::string& base_s, int cap, const std::string& format) {
    auto base = parse_base(base_s);
    auto rows = enumerate(base, cap);
    if (format == "json") {
        Json out = Json::array();
        for (const auto& r : rows) {
            auto j = to_json(r);
            j["mtc"] = mtc_cell(r.data);
            j["itp"] = itp_cell(r.data);
            out.push_back(j);
        }
        std::cout << out.dump(2) << "\n";
        return kOk;
    }
    const char* sep = format == "tsv" ? "\t" : "  ";
    if (format == "tsv")
        std::cout << "table\tD1\tD2\tD3\tY1\tY2\tY3\tp_g\tq\tK2\tkodaira\tfamily\tMTC\tITP\n";
    for (const auto& r : rows) {
        std::string fam = r.parametric ? "D3[" + std::to_string(r.parametric->coord) + "]>=" +
                                             std::to_string(r.parametric->min)
                                       : "-";
        std::cout << r.table;
        for (const auto& b : r.data.d) std::cout << sep << b.total.str();
        for (const auto& q : r.inv.quotients) std::cout << sep << q.short_name();
        std::cout << sep << r.inv.p_g << sep << r.inv.q << sep << r.inv.k2 << sep << to_string(r.inv.kodaira) << sep
                  << fam << sep << cell(mtc_cell(r.data)) << sep << cell(itp_cell(r.data)) << "\n";
    }
    if (format == "table") std::cout << rows.size() << " row(s)\n";
    return kOk;
}

int cmd_invariants(const BidoubleData& data, const std::string& format) {
    require_valid_or_throw(data);
    auto inv = compute_invariants(data);
    Json out{{"data", to_json(data)}, {"invariants", to_json(inv)}};
    try {
        out["hodge"] = to_json(hodge_report(data));
    } catch (const Error& e) {
        out["hodge"] = nullptr;
        out["hodge_unavailable"] = e.what();
    }
    out["mtc"] = to_json(mtc_check(data));
    out["itp"] = to_json(itp_check(data));
    if (format == "json") {
        std::cout << out.dump(2) << "\n";
        return kOk;
    }
    std::cout << "D: " << classes_text(data) << "\n"
              << "chi " << inv.chi << ", K2 " << inv.k2 << ", p_g " << inv.p_g << ", q " << inv.q << ", kodaira "
              << to_string(inv.kodaira) << (inv.minimal ? ", minimal" : "") << "\n";
    for (int i = 0; i < 3; ++i) std::cout << "Y" << i + 1 << ": " << inv.quotients[i].short_name() << "\n";
    if (!out["hodge"].is_null()) {
        const auto& h = out["hodge"];
        std::cout << "h11 " << h["h11"] << ", rank T_X " << h["rank_TX"] << ", rho(X) " << h["rho_X"] << ", m_X "
                  << h["m_X"] << "\n";
    }
    std::cout << "MTC: " << out["mtc"]["status"].get<std::string>() << " (" << out["mtc"]["reason"].get<std::string>()
              << ")\nITP: " << out["itp"]["status"].get<std::string>() << " ("
              << out["itp"]["reason"].get<std::string>() << ")\n";
    return kOk;
}

int cmd_iterated(const BidoubleData& data, int construction, const std::string& format) {
    require_valid_or_throw(data);
    if (construction != 1 && construction != 2) throw UsageError("--construction must be 1 or 2");
    auto cover = build(data);
    auto sols = enumerate_iterated(cover, static_cast<Construction>(construction));
    if (format == "json") {
        Json out{{"K", cover.format(cover.canonical)}, {"branch", cover.format(cover.branch)}, {"k", cover.k}};
        out["solutions"] = Json::array();
        for (const auto& s : sols) out["solutions"].push_back(to_json(cover, s));
        std::cout << out.dump(2) << "\n";
        return kOk;
    }
    std::cout << "K = " << cover.format(cover.canonical) << ", branch = " << cover.format(cover.branch) << "\n";
    for (const auto& s : sols)
        std::cout << cover.format(s.delta[0]) << " | " << cover.format(s.delta[1]) << " | " << cover.format(s.delta[2])
                  << "  Z1 " << to_string(s.z1) << ", Z3 " << to_string(s.z3) << ", p_g(W) " << s.pg_W << ", r_W "
                  << s.rank_TW << "\n";
    std::cout << sols.size() << " solution(s)\n";
    return kOk;
}

int cmd_lattice(const std::string& expr, const std::string& format) {
    Lattice l;
    try {
        l = named(expr);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    auto g = discriminant_group(l);
    auto sig = signature(l);
    Json out{{"expr", normalize(expr)},
             {"rank", l.rank()},
             {"det", det(l)},
             {"signature", {sig.first, sig.second}},
             {"even", l.is_even()},
             {"discriminant", {{"cyclic_orders", g.cyclic_orders}, {"form_values", g.form_values}}}};
    if (format == "json") {
        std::cout << out.dump(2) << "\n";
        return kOk;
    }
    std::cout << out["expr"].get<std::string>() << ": rank " << l.rank() << ", det " << det(l) << ", signature ("
              << sig.first << "," << sig.second << "), " << (l.is_even() ? "even" : "odd") << ", discriminant";
    if (g.cyclic_orders.empty()) std::cout << " trivial";
    for (std::size_t i = 0; i < g.cyclic_orders.size(); ++i)
        std::cout << " Z/" << g.cyclic_orders[i] << "(" << g.form_values[i] << ")";
    std::cout << "\n";
    return kOk;
}

int cmd_check(const BidoubleData& data, bool mtc, bool itp) {
    if (mtc == itp) throw UsageError("pass exactly one of --mtc, --itp");
    require_valid_or_throw(data);
    auto res = mtc ? mtc_check(data) : itp_check(data);
    std::cout << to_json(res).dump(2) << "\n";
    return kOk;
}

int cmd_verify(const std::string& fixtures_path, const std::vector<std::string>& only, bool strict, int cap,
               const std::string& format) {
    Json fx = fixtures_path.empty() ? embedded_fixtures() : read_json_file(fixtures_path);
    VerifyOptions opts;
    opts.cap = cap;
    opts.strict = strict;
    opts.only = only;
    auto res = verify(fx, opts);
    if (format == "json") std::cout << to_json(res).dump(2) << "\n";
    else std::cout << render_text(res);
    return res.ok() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bidouble covers of minimal rational surfaces with K3 quotients"};
    app.require_subcommand(1);

    std::string base, input, case_label, expr, format = "table", fixtures_path;
    int cap = 0, construction = 1;
    bool mtc = false, itp = false, strict = false;
    std::vector<std::string> only;
    const std::vector<std::string> formats = {"table", "json", "tsv"};

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
    };

    auto* classify = app.add_subcommand("classify", "Enumerate admissible branch data on a base");
    classify->add_option("--base", base, "p2, p1xp1 or fn:<n>")->required();
    classify->add_option("--cap", cap, "Bound for the free coordinate of families");
    add_format(classify);

    auto* invariants = app.add_subcommand("invariants", "Invariants and Hodge data of one cover");
    invariants->add_option("--input", input, "BidoubleData JSON file");
    invariants->add_option("--base", base);
    invariants->add_option("--case", case_label, "Listed case label");
    add_format(invariants);

    auto* iterated = app.add_subcommand("iterated", "Iterated covers over the blown-up rational quotient");
    iterated->add_option("--input", input);
    iterated->add_option("--base", base);
    iterated->add_option("--case", case_label);
    iterated->add_option("--construction", construction, "1 or 2");
    add_format(iterated);

    auto* lattice = app.add_subcommand("lattice", "Invariants of a lattice expression");
    lattice->add_option("--expr", expr, "e.g. \"U^2 + E8(-2)\"")->required();
    add_format(lattice);

    auto* check = app.add_subcommand("check", "Mumford-Tate or infinitesimal Torelli criterion");
    check->add_option("--input", input);
    check->add_option("--base", base);
    check->add_option("--case", case_label);
    check->add_flag("--mtc", mtc);
    check->add_flag("--itp", itp);

    auto* verify_cmd = app.add_subcommand("verify", "Compare every pipeline with the listed tables");
    verify_cmd->add_option("--only", only, "Fixture ids or kinds")->delimiter(',');
    verify_cmd->add_flag("--strict", strict, "Count known errata as failures");
    verify_cmd->add_option("--fixtures", fixtures_path, "Fixture JSON file instead of the embedded tables");
    verify_cmd->add_option("--cap", cap);
    add_format(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (cap <= 0) cap = default_cap();
        if (*classify) return cmd_classify(base, cap, format);
        if (*invariants) return cmd_invariants(data_from(input, base, case_label), format);
        if (*iterated) return cmd_iterated(data_from(input, base, case_label), construction, format);
        if (*lattice) return cmd_lattice(expr, format);
        if (*check) return cmd_check(data_from(input, base, case_label), mtc, itp);
        if (*verify_cmd) return cmd_verify(fixtures_path, only, strict, cap, format);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const SchemaError& e) {
        std::cerr << "schema error at " << (e.path().empty() ? "/" : e.path()) << ": " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kInvalid;
    }
    return kUsage;
}
