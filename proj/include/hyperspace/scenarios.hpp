#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hyperspace/report.hpp"

namespace hyperspace {

struct ScenarioParam {
  std::string name;
  std::string default_value;  // empty means "not set"
  std::string help;
};

struct ScenarioInfo {
  std::string name;
  std::string summary;
  std::vector<ScenarioParam> params;
};

/// One quantitative check. `basis` says what the expected value rests on:
/// "closed-form" (a derived formula), "certified-bound" (an inequality
/// checked on the conservative end of certified values) or "corpus" (a
/// property checked over a seeded random corpus).
struct ScenarioAssertion {
  std::string name;
  std::string basis;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;
};

struct ScenarioReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;  // effective values
  /// The finite stand-in for the example's infinite objects.
  std::string surrogate;
  std::vector<std::pair<std::string, Table>> tables;
  std::vector<ScenarioAssertion> assertions;

  bool pass() const;
};

const std::vector<ScenarioInfo>& scenario_catalog();

/// Runs a built-in scenario. ValidationError for an unknown name, an unknown
/// parameter or a malformed value.
ScenarioReport run_scenario(const std::string& name, const std::map<std::string, std::string>& overrides = {});

/// Report schema v1 view of a scenario run.
Report to_report(const ScenarioReport& r, std::uint64_t seed);

}  // namespace hyperspace
