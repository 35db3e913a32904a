#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hyperspace/hypermetrics.hpp"

namespace hyperspace {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

/// Finite values as numbers, infinity as the string "inf".
Json to_json(const ExtReal& v);
ExtReal ext_real_from_json(const Json& j);
/// {lo, hi, method[, resolution][, witness]}.
Json to_json(const CertifiedValue& v);
CertifiedValue certified_from_json(const Json& j);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;  // each row has one cell per column
};

Json to_json(const Table& t);

/// Report schema v1:
/// {command, config_echo, results: [{name, value, verdict?}], seed, version}.
class Report {
 public:
  Report(std::string command, Json config_echo, std::uint64_t seed);

  void add(std::string name, const CertifiedValue& v, std::optional<std::string> verdict = std::nullopt);
  void add(std::string name, const Table& t, std::optional<std::string> verdict = std::nullopt);
  void add(std::string name, Json value, std::optional<std::string> verdict = std::nullopt);

  /// True when some result carries a failing verdict ("fail" or
  /// "violation").
  bool failed() const;

  Json to_json() const;
  /// Scalar results as one block (name,lo,hi,method,value,verdict), then one
  /// block per table headed by "# name".
  std::string to_csv() const;

 private:
  std::string command_;
  Json config_;
  std::uint64_t seed_;
  Json results_ = Json::array();
};

/// Inverse of Report::to_json; throws ValidationError on a schema mismatch
/// or unknown field.
Json validate_report(const Json& j);

}  // namespace hyperspace
