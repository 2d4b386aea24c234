#pragma once

#include "galrep/cohom/cohomology.hpp"
#include "galrep/ecq/hypotheses.hpp"
#include "galrep/localmodel/bound.hpp"

#include "json.hpp"

#include <string>

namespace galrep::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* schema_id = "galrep-report/1";

inline constexpr int exit_ok = 0;
inline constexpr int exit_violated = 1;
inline constexpr int exit_undetermined = 2;
inline constexpr int exit_usage = 64;

struct Report {
    std::string command;
    std::string timestamp;
    Json inputs = Json::object();
    Json result = Json::object();
    Json trace = Json::array();  // [{"key": ..., "detail": ...}]
    int exit_status = exit_ok;
};

Json to_json(const Report& r);
/// Throws InvalidParams on a missing field or a schema mismatch.
Report report_from_json(const Json& j);

std::string render_json(const Report& r);
/// Headline lines for the command, then every JSON leaf as "path: value".
std::string render_text(const Report& r);

/// ISO 8601 UTC, seconds resolution.
std::string utc_timestamp();

Json to_json(const zring::AbelianPGroupType& t, std::uint64_t p);
Json to_json(const localmodel::LocalH0Report& r);
Json to_json(const localmodel::BoundReport& b);
Json to_json(const cohom::CohomologyReport& r);
Json to_json(const ecq::HypothesisReport& r);
Json to_json(const std::vector<localmodel::TraceEntry>& trace);

}  // namespace galrep::cli
