#include "hyperspace/report.hpp"

#include <cstdio>
#include <set>
#include <sstream>

namespace hyperspace {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_cell(const Json& j) {
  if (j.is_null()) return "";
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  if (j.is_number_float()) return num(j.get<double>());
  if (j.is_number()) return j.dump();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  if (j.is_object()) {
    std::string flat;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!flat.empty()) flat += "; ";
      flat += it.key() + "=" + (it.value().is_string() ? it.value().get<std::string>() : it.value().dump());
    }
    return csv_cell(Json(flat));
  }
  return csv_cell(Json(j.dump()));
}

Method method_from_string(const std::string& s) {
  for (Method m : {Method::exact_1d, Method::finite_max, Method::grid, Method::ray_closed_form, Method::tail_bound})
    if (to_string(m) == s) return m;
  throw ValidationError("unknown method '" + s + "'");
}

void only_keys(const Json& j, std::initializer_list<const char*> keys, const std::string& where) {
  if (!j.is_object()) throw ValidationError(where + ": object expected");
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key())) throw ValidationError(where + ": unknown field '" + it.key() + "'");
}

}  // namespace

Json to_json(const ExtReal& v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

ExtReal ext_real_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return ExtReal::infinity();
  if (!j.is_number()) throw ValidationError("number or \"inf\" expected");
  return ExtReal(j.get<double>());
}

Json to_json(const CertifiedValue& v) {
  Json j;
  j["lo"] = to_json(v.lo);
  j["hi"] = to_json(v.hi);
  j["method"] = to_string(v.method);
  if (v.resolution != 0.0) j["resolution"] = v.resolution;
  if (v.witness) {
    Json w = Json::array();
    for (Eigen::Index i = 0; i < v.witness->size(); ++i) w.push_back((*v.witness)[i]);
    j["witness"] = w;
  }
  return j;
}

CertifiedValue certified_from_json(const Json& j) {
  only_keys(j, {"lo", "hi", "method", "resolution", "witness"}, "certified value");
  CertifiedValue v;
  v.lo = ext_real_from_json(j.at("lo"));
  v.hi = ext_real_from_json(j.at("hi"));
  v.method = method_from_string(j.at("method").get<std::string>());
  if (j.contains("resolution")) v.resolution = j["resolution"].get<double>();
  if (j.contains("witness")) v.witness = point_of(j["witness"].get<std::vector<double>>());
  return v;
}

Json to_json(const Table& t) {
  Json j;
  j["columns"] = t.columns;
  Json rows = Json::array();
  for (const auto& r : t.rows) rows.push_back(Json(r));
  j["rows"] = rows;
  return j;
}

Report::Report(std::string command, Json config_echo, std::uint64_t seed)
    : command_(std::move(command)), config_(std::move(config_echo)), seed_(seed) {}

void Report::add(std::string name, const CertifiedValue& v, std::optional<std::string> verdict) {
  add(std::move(name), hyperspace::to_json(v), std::move(verdict));
}

void Report::add(std::string name, const Table& t, std::optional<std::string> verdict) {
  add(std::move(name), hyperspace::to_json(t), std::move(verdict));
}

void Report::add(std::string name, Json value, std::optional<std::string> verdict) {
  Json r;
  r["name"] = std::move(name);
  r["value"] = std::move(value);
  if (verdict) r["verdict"] = *verdict;
  results_.push_back(std::move(r));
}

bool Report::failed() const {
  for (const auto& r : results_) {
    if (!r.contains("verdict")) continue;
    const auto v = r["verdict"].get<std::string>();
    if (v == "fail" || v == "violation") return true;
  }
  return false;
}

Json Report::to_json() const {
  Json j;
  j["command"] = command_;
  j["config_echo"] = config_;
  j["results"] = results_;
  j["seed"] = seed_;
  j["version"] = kReportSchemaVersion;
  return j;
}

std::string Report::to_csv() const {
  std::ostringstream os;
  bool header = false;
  for (const auto& r : results_) {
    const Json& v = r["value"];
    if (v.is_object() && v.contains("columns")) continue;
    if (!header) {
      os << "name,lo,hi,method,value,verdict\n";
      header = true;
    }
    os << csv_cell(r["name"]) << ',';
    if (v.is_object() && v.contains("method")) {
      os << csv_cell(v["lo"]) << ',' << csv_cell(v["hi"]) << ',' << csv_cell(v["method"]) << ',';
    } else {
      os << ",,," << csv_cell(v);
    }
    os << ',' << (r.contains("verdict") ? csv_cell(r["verdict"]) : "") << '\n';
  }
  for (const auto& r : results_) {
    const Json& v = r["value"];
    if (!(v.is_object() && v.contains("columns"))) continue;
    os << "# " << r["name"].get<std::string>();
    if (r.contains("verdict")) os << " (" << r["verdict"].get<std::string>() << ")";
    os << '\n';
    const auto& cols = v["columns"];
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_cell(cols[i]);
    os << '\n';
    for (const auto& row : v["rows"]) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
      os << '\n';
    }
  }
  return os.str();
}

Json validate_report(const Json& j) {
  only_keys(j, {"command", "config_echo", "results", "seed", "version"}, "report");
  if (j.at("version").get<int>() != kReportSchemaVersion) throw ValidationError("report: unsupported schema version");
  j.at("command").get<std::string>();
  j.at("seed").get<std::uint64_t>();
  for (const auto& r : j.at("results")) {
    only_keys(r, {"name", "value", "verdict"}, "result");
    r.at("name").get<std::string>();
    const Json& v = r.at("value");
    if (v.is_object() && v.contains("method")) certified_from_json(v);
    if (v.is_object() && v.contains("columns")) only_keys(v, {"columns", "rows"}, "table");
  }
  return j;
}

}  // namespace hyperspace
