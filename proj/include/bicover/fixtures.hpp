#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "bicover/classify.hpp"

namespace bicover {

using Json = nlohmann::json;

extern const char* const kFixtureJson;

// Parsed copy of the embedded tables: {"fixtures": [...], "errata": [...]}.
const Json& embedded_fixtures();
// Every table the verify run must see; a fixture file lacking one of these fails.
const std::vector<std::string>& required_fixture_ids();

// A listed cell known to disagree with the computation, with the reason the computed
// value stands. Matched exactly against the diff it explains.
struct Erratum {
    std::string table;
    Diff diff;
    std::string reason;
};
std::vector<Erratum> parse_errata(const Json& fixtures);

struct TableReport {
    std::string id;
    std::string kind;
    int checks = 0;
    std::vector<Diff> diffs;             // unexplained
    std::vector<Erratum> known;          // explained by an erratum
    std::vector<std::string> notes;
};

struct VerifyOptions {
    int cap = 10;
    bool strict = false;
    std::vector<std::string> only;  // fixture ids or kinds; empty means all
};

struct VerifyResult {
    std::vector<TableReport> tables;
    std::vector<Diff> global;  // missing fixtures, stale errata
    bool strict = false;

    std::size_t diff_count() const;
    bool ok() const { return diff_count() == 0; }
};

VerifyResult verify(const Json& fixtures, const VerifyOptions& opts);

Json to_json(const VerifyResult& r);
std::string render_text(const VerifyResult& r);

}  // namespace bicover
