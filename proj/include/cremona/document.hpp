#pragma once

// JSON documents exchanged by the command-line tool.

#include "cremona/constructions.hpp"
#include "cremona/curves.hpp"
#include "cremona/meridians.hpp"
#include "cremona/zariski.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace cremona {

inline constexpr const char* kSchemaVersion = "1";

using Json = nlohmann::json;

struct MeridianReport {
  std::string spec;
  MeridianState state;
  bool operator==(const MeridianReport&) const = default;
};

MeridianReport meridian_report(const ConstructionSpec& spec);

struct CurveDocument {
  std::string schema_version = kSchemaVersion;
  CurveDatum curve;
  std::optional<AuditReport> audit;
  std::optional<MeridianReport> meridians;
  bool operator==(const CurveDocument&) const = default;
};

/// Integers within +-(2^53 - 1) are JSON numbers, larger ones decimal strings.
Json integer_to_json(const Integer& x);
/// Accepts an integral JSON number or a decimal string.
Integer integer_from_json(const Json& j);

Json to_json(const PropertyFlags& p);
PropertyFlags properties_from_json(const Json& j);

Json to_json(const CurveDatum& c);
CurveDatum curve_from_json(const Json& j);

Json to_json(const AuditReport& r);
AuditReport audit_from_json(const Json& j);

Json to_json(const MeridianReport& r);
MeridianReport meridians_from_json(const Json& j);

Json to_json(const ZariskiPairRecord& r);
ZariskiPairRecord pair_from_json(const Json& j);

Json to_json(const CurveDocument& d);
CurveDocument document_from_json(const Json& j);

/// Standalone documents: `{"schema_version", "audit"}` and `{"schema_version", "pairs"}`.
Json audit_document(const AuditReport& r);
Json pairs_document(const std::vector<ZariskiPairRecord>& records);
std::vector<ZariskiPairRecord> pairs_from_document(const Json& j);

/// Parses text and checks the schema version. Throws Error on malformed input.
Json parse_json(const std::string& text);
CurveDocument parse_document(const std::string& text);
std::string dump(const Json& j);

}  // namespace cremona
