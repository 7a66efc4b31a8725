#pragma once

#include <string>

#include "json.hpp"

#include "bicover/classify.hpp"
#include "bicover/hodge.hpp"
#include "bicover/iterated.hpp"

namespace bicover {

using Json = nlohmann::json;

// Raised for input that does not match the data schema; `path` points at the offending field.
class SchemaError : public Error {
public:
    SchemaError(std::string path, const std::string& what) : Error(path + ": " + what), path_(std::move(path)) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

// {"base": "P2" | "P1xP1" | {"Fn": n},
//  "divisors": [{"total": [...], "components": [[...], ...]}, x3]}
// "components" is optional; when absent the generic decomposition of the total is used.
BidoubleData bidouble_from_json(const Json& j);
Json to_json(const BidoubleData& d);
Json base_to_json(const BaseSurface& b);

Json to_json(const CoverInvariants& inv);
Json to_json(const HodgeReport& h);
Json to_json(const CheckResult& c);
Json to_json(const ClassificationRow& row);
Json to_json(const BlowupCover& cover, const IteratedSolution& s);

}  // namespace bicover
