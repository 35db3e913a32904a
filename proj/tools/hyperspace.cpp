// hyperspace: command-line front end. Exit codes: 0 success or pass,
// 1 failed assertion or violation verdict, 2 usage or configuration error.
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hyperspace/actions.hpp"
#include "hyperspace/hitmiss.hpp"
#include "hyperspace/induced.hpp"
#include "hyperspace/literals.hpp"
#include "hyperspace/report.hpp"
#include "hyperspace/scenarios.hpp"

using namespace hyperspace;

namespace {

struct Globals {
  std::string format = "json";
  std::string out;
  std::string seed = "0x5EED";
  std::string config;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  const auto e = s.find_last_not_of(" \t\r\n");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

SpacePtr space_arg(const std::string& text) {
  if (std::filesystem::is_regular_file(text)) return parse_space(trim(read_file(text)));
  return parse_space(text);
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::uint64_t parse_seed(const std::string& s) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used, 0);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("--seed: integer expected, got '" + s + "'");
}

std::vector<double> number_list(const std::string& s) {
  std::vector<double> out;
  std::string cur;
  int depth = 0;
  for (char c : s + ",") {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(parse_number(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

int emit(const Report& report, const Globals& g) {
  std::string text;
  if (g.format == "json") {
    text = report.to_json().dump(2) + "\n";
  } else {
    text = report.to_csv();
  }
  if (g.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(g.out);
    if (!os) throw UsageError("cannot write " + g.out);
    os << text;
  }
  return report.failed() ? 1 : 0;
}

/// Options given in a JSON config file are appended to argv unless the
/// command line already sets them. The file is {"version": 1, "command":
/// name, "options": {long-option: value, ...}}.
std::vector<std::string> merge_config(std::vector<std::string> args) {
  auto it = std::find(args.begin(), args.end(), "--config");
  if (it == args.end() || it + 1 == args.end()) return args;
  const std::string path = *(it + 1);
  args.erase(it, it + 2);
  Json cfg;
  try {
    cfg = Json::parse(read_file(path));
  } catch (const Json::exception& e) {
    throw UsageError("config " + path + ": " + e.what());
  }
  for (auto kv = cfg.begin(); kv != cfg.end(); ++kv)
    if (kv.key() != "version" && kv.key() != "command" && kv.key() != "options")
      throw UsageError("config " + path + ": unknown field '" + kv.key() + "'");
  if (!cfg.contains("version") || cfg["version"] != 1) throw UsageError("config " + path + ": version 1 expected");
  if (cfg.contains("command")) {
    const std::string cmd = cfg["command"].get<std::string>();
    if (std::find(args.begin(), args.end(), cmd) == args.end()) args.insert(args.begin() + 1, cmd);
  }
  if (cfg.contains("options")) {
    for (auto kv = cfg["options"].begin(); kv != cfg["options"].end(); ++kv) {
      const std::string flag = "--" + kv.key();
      if (std::find(args.begin(), args.end(), flag) != args.end()) continue;
      const Json& v = kv.value();
      if (v.is_array()) {
        for (const auto& item : v) {
          args.push_back(flag);
          args.push_back(item.is_string() ? item.get<std::string>() : item.dump());
        }
      } else {
        args.push_back(flag);
        args.push_back(v.is_string() ? v.get<std::string>() : v.dump());
      }
    }
  }
  return args;
}

Json echo(const std::vector<std::pair<std::string, std::string>>& items) {
  Json j = Json::object();
  for (const auto& [k, v] : items) j[k] = v;
  return j;
}

Table probe_table(const std::vector<ProbeRow>& rows) {
  Table t{{"k", "d_in_lo", "d_in_hi", "d_in_method", "d_out_lo", "d_out_hi", "d_out_method"}, {}};
  for (const auto& r : rows)
    t.rows.push_back({r.index, to_json(r.d_in.lo), to_json(r.d_in.hi), to_string(r.d_in.method), to_json(r.d_out.lo),
                      to_json(r.d_out.hi), to_string(r.d_out.method)});
  return t;
}

Table action_table(const std::vector<ActionProbeRow>& rows) {
  Table t{{"k", "d_group_lo", "d_group_hi", "d_set_lo", "d_set_hi", "d_out_lo", "d_out_hi", "d_out_method"}, {}};
  for (const auto& r : rows)
    t.rows.push_back({r.index, to_json(r.d_group.lo), to_json(r.d_group.hi), to_json(r.d_set.lo), to_json(r.d_set.hi),
                      to_json(r.d_out.lo), to_json(r.d_out.hi), to_string(r.d_out.method)});
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperspace metrics, hit-and-miss predicates, induced maps and group actions"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", g.out, "Write the report to this path instead of stdout");
  app.add_option("--seed", g.seed, "Seed echoed in the report and used by randomized commands");
  app.add_option("--config", g.config, "JSON config file {version: 1, command, options}");

  std::string space_text = "line:x0=0", a_text, b_text, metric = "hausdorff", map_text, set_text, g_text;
  double tol = 1e-3, eps = 0.1;

  auto* dist = app.add_subcommand("dist", "Excess, Hausdorff or Attouch-Wets distance between two sets");
  dist->add_option("--metric", metric, "excess|hausdorff|hlower|hupper|aw")->capture_default_str();
  dist->add_option("--space", space_text, "Space literal or file")->capture_default_str();
  dist->add_option("--a", a_text, "Set A")->required();
  dist->add_option("--b", b_text, "Set B")->required();
  dist->add_option("--tol", tol, "Attouch-Wets tolerance")->capture_default_str();

  auto* awlt = app.add_subcommand("aw-lt", "Is d_AW(A,B) < eps, decided on the ball of radius j with 1/(j+1) < eps <= 1/j");
  awlt->add_option("--eps", eps, "Threshold in (0,1)")->required();
  awlt->add_option("--space", space_text, "Space literal or file")->capture_default_str();
  awlt->add_option("--a", a_text, "Set A")->required();
  awlt->add_option("--b", b_text, "Set B")->required();

  std::string seq_text, nbhds_text, target_text, fell_miss_text;
  std::size_t horizon = 1000;
  auto* conv = app.add_subcommand("converge", "Check a set sequence against a finite neighbourhood family");
  conv->add_option("--seq", seq_text, "Set literal template in k, e.g. \"{1/k}\"")->required();
  conv->add_option("--nbhds", nbhds_text, "Constraints, or auto:topology,r,m")->required();
  conv->add_option("--target", target_text, "Target set for auto neighbourhoods");
  conv->add_option("--fell-miss", fell_miss_text, "Compact set missed by the target (fell)");
  conv->add_option("--horizon", horizon, "Number of members checked")->capture_default_str();
  conv->add_option("--space", space_text, "Space literal or file")->capture_default_str();

  std::string preimage_text;
  auto* induce = app.add_subcommand("induce", "Induced image closure(f(A)) and map metadata");
  induce->add_option("--map", map_text, "Map literal")->required();
  induce->add_option("--set", set_text, "Set A in the domain")->required();
  induce->add_option("--preimage", preimage_text, "Bounded set B of the codomain: is f^-1(B) bounded?");
  induce->add_option("--space", space_text, "Domain space literal or file")->capture_default_str();

  std::string perturb_text, schedule_text = "0.1,0.01,0.001", group_perturb_text, reference_text;
  std::size_t count = 20;
  auto* pind = app.add_subcommand("probe-induced", "Probe continuity of the induced map at A");
  pind->add_option("--metric", metric, "hausdorff|hlower|hupper|aw")->capture_default_str();
  pind->add_option("--map", map_text, "Map literal")->required();
  pind->add_option("--set", set_text, "Set A")->required();
  pind->add_option("--perturb", perturb_text, "Set literal template in k")->required();
  pind->add_option("--count", count, "Number of perturbations")->capture_default_str();
  pind->add_option("--schedule", schedule_text, "Comma-separated delta schedule")->capture_default_str();
  pind->add_option("--eps", eps, "Output threshold")->capture_default_str();
  pind->add_option("--tol", tol, "Attouch-Wets tolerance")->capture_default_str();
  pind->add_option("--space", space_text, "Domain space literal or file")->capture_default_str();

  std::string into_text, ucb_text;
  auto* action = app.add_subcommand("action", "Apply a group element to a set");
  action->add_option("--g", g_text, "Group element literal")->required();
  action->add_option("--set", set_text, "Set A")->required();
  action->add_option("--into", into_text, "Set B: is gA a subset of B?");
  action->add_option("--ucb", ucb_text, "Element f: is g in (A, f, eps)?");
  action->add_option("--eps", eps, "Threshold for --ucb")->capture_default_str();
  action->add_option("--space", space_text, "Space literal or file")->capture_default_str();

  auto* pact = app.add_subcommand("probe-action", "Probe continuity of the action at (g, A)");
  pact->add_option("--metric", metric, "hausdorff|hlower|hupper|aw")->capture_default_str();
  pact->add_option("--g", g_text, "Group element literal")->required();
  pact->add_option("--set", set_text, "Set A")->required();
  pact->add_option("--group-perturb", group_perturb_text, "Group element template in k")->required();
  pact->add_option("--set-perturb", perturb_text, "Set literal template in k")->required();
  pact->add_option("--reference", reference_text, "Bounded reference set for d_group (default ball(x0,10))");
  pact->add_option("--count", count, "Number of perturbations")->capture_default_str();
  pact->add_option("--schedule", schedule_text, "Comma-separated delta schedule")->capture_default_str();
  pact->add_option("--eps", eps, "Output threshold")->capture_default_str();
  pact->add_option("--tol", tol, "Attouch-Wets tolerance")->capture_default_str();
  pact->add_option("--space", space_text, "Space literal or file")->capture_default_str();

  auto* scen = app.add_subcommand("scenario", "Built-in reproductions of the worked examples");
  scen->require_subcommand(1);
  scen->fallthrough();
  std::string scen_name;
  std::vector<std::string> scen_params;
  auto* srun = scen->add_subcommand("run", "Run one scenario");
  srun->add_option("name", scen_name, "Scenario name")->required();
  srun->add_option("--param", scen_params, "Parameter override k=v (repeatable)");
  auto* slist = scen->add_subcommand("list", "List scenarios and their parameters");

  std::vector<std::string> args(argv, argv + argc);
  try {
    args = merge_config(std::move(args));
    std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const std::uint64_t seed = parse_seed(g.seed);
    const SpacePtr space = space_arg(space_text);
    std::vector<std::pair<std::string, std::string>> cfg{{"space", format_space(*space)}};

    if (*dist) {
      const MetricKind m = parse_metric(metric);
      const ClosedSet a = parse_set(a_text, space), b = parse_set(b_text, space);
      cfg.insert(cfg.end(), {{"metric", to_string(m)}, {"a", a_text}, {"b", b_text}, {"tol", num(tol)}});
      Report r("dist", echo(cfg), seed);
      r.add(to_string(m), measure(m, a, b, tol));
      return emit(r, g);
    }
    if (*awlt) {
      const ClosedSet a = parse_set(a_text, space), b = parse_set(b_text, space);
      cfg.insert(cfg.end(), {{"eps", num(eps)}, {"a", a_text}, {"b", b_text}});
      Report r("aw-lt", echo(cfg), seed);
      const std::size_t j = aw_index(eps);
      r.add("j", Json(j));
      r.add("sup_gap", sup_gap_on_ball(a, b, static_cast<double>(j)));
      r.add("aw_less_than", Json(to_string(aw_less_than(a, b, eps))));
      return emit(r, g);
    }
    if (*conv) {
      cfg.insert(cfg.end(), {{"seq", seq_text}, {"nbhds", nbhds_text}, {"horizon", std::to_string(horizon)}});
      NeighborhoodSpec spec;
      if (nbhds_text.rfind("auto:", 0) == 0) {
        if (target_text.empty()) throw UsageError("--nbhds auto:... needs --target");
        const auto parts = CLI::detail::split(nbhds_text.substr(5), ',');
        if (parts.size() != 3) throw UsageError("--nbhds auto:topology,r,m");
        std::optional<CompactSet> k;
        if (!fell_miss_text.empty()) k = CompactSet::of({parse_set(fell_miss_text, space)});
        spec = canonical_neighborhoods(parse_set(target_text, space), parse_topology(parts[0]), parse_number(parts[1]),
                                       static_cast<std::size_t>(parse_number(parts[2])), k);
        cfg.emplace_back("target", target_text);
      } else {
        spec = parse_neighborhoods(nbhds_text, space);
      }
      const SetSequence seq = [&](std::size_t k) { return parse_set(instantiate(seq_text, k), space); };
      const ConvergenceReport rep = converges(seq, spec, horizon);
      Report r("converge", echo(cfg), seed);
      Table t{{"constraint", "entry", "witness"}, {}};
      for (std::size_t i = 0; i < spec.constraints.size(); ++i) {
        const auto& o = rep.outcomes[i];
        t.rows.push_back({spec.constraints[i].describe(), o.entry ? Json(*o.entry) : Json(nullptr),
                          o.witness ? Json(*o.witness) : Json(nullptr)});
      }
      r.add("constraints", t);
      r.add("basis", Json(rep.basis()));
      r.add("convergence", Json(rep.pass), rep.pass ? "pass" : "fail");
      return emit(r, g);
    }
    if (*induce) {
      const MapSpec f = parse_map(map_text, space);
      const ClosedSet a = parse_set(set_text, f.domain());
      cfg.insert(cfg.end(), {{"map", f.describe()}, {"set", set_text}});
      Report r("induce", echo(cfg), seed);
      const ClosedSet img = induced_image(f, a);
      r.add("image", Json(format_set(img)));
      r.add("codomain", Json(format_space(img.ambient())));
      const auto lip = f.lipschitz();
      r.add("lipschitz", lip ? Json(*lip) : Json(nullptr));
      r.add("boundedness_preserving", Json(to_string(f.boundedness_preserving())));
      r.add("uniformly_continuous_on_bounded", Json(to_string(f.uniformly_continuous_on_bounded())));
      const auto c = aw_continuity_conditions(f);
      Json cj;
      cj["cond1"] = to_string(c.cond1);
      cj["cond2"] = to_string(c.cond2);
      cj["overall"] = c.overall;
      cj["trials"] = c.trials;
      r.add("aw_conditions", cj);
      if (!preimage_text.empty()) {
        const auto pre = check_preimage_boundedness(f, parse_set(preimage_text, f.codomain()));
        Json pj;
        pj["verdict"] = to_string(pre.verdict);
        pj["certified"] = pre.certified;
        pj["radius"] = pre.radius;
        pj["note"] = pre.note;
        r.add("preimage", pj);
      }
      return emit(r, g);
    }
    if (*pind) {
      const MetricKind m = parse_metric(metric);
      const MapSpec f = parse_map(map_text, space);
      const ClosedSet a = parse_set(set_text, f.domain());
      cfg.insert(cfg.end(), {{"metric", to_string(m)}, {"map", f.describe()}, {"set", set_text}, {"perturb", perturb_text},
                             {"count", std::to_string(count)}, {"schedule", schedule_text}, {"eps", num(eps)}});
      const SetSequence seq = [&](std::size_t k) { return parse_set(instantiate(perturb_text, k), f.domain()); };
      const auto rep = probe_induced_continuity(f, a, m, seq, count, number_list(schedule_text), eps, tol);
      Report r("probe-induced", echo(cfg), seed);
      r.add("rows", probe_table(rep.rows));
      if (rep.witness_row) r.add("witness_row", Json(rep.rows[*rep.witness_row].index));
      r.add("verdict", Json(rep.verdict()), rep.violation ? "violation" : "no-violation-found");
      return emit(r, g);
    }
    if (*action) {
      const GroupElement elem = parse_group(g_text, space);
      const ClosedSet a = parse_set(set_text, space);
      cfg.insert(cfg.end(), {{"g", elem.describe()}, {"set", set_text}});
      Report r("action", echo(cfg), seed);
      r.add("image", Json(format_set(act(elem, a))));
      r.add("is_isometry", Json(elem.is_isometry()));
      r.add("lipschitz", Json(elem.lipschitz()));
      if (!into_text.empty()) r.add("maps_into", Json(maps_into(elem, a, parse_set(into_text, space))));
      if (!ucb_text.empty()) {
        const GroupElement f = parse_group(ucb_text, space);
        r.add("displacement", displacement_sup(f, elem, a));
        r.add("ucb_nbhd_contains", Json(to_string(ucb_nbhd_contains(elem, a, f, eps))));
      }
      return emit(r, g);
    }
    if (*pact) {
      const MetricKind m = parse_metric(metric);
      const GroupElement elem = parse_group(g_text, space);
      const ClosedSet a = parse_set(set_text, space);
      cfg.insert(cfg.end(), {{"metric", to_string(m)}, {"g", elem.describe()}, {"set", set_text},
                             {"group_perturb", group_perturb_text}, {"set_perturb", perturb_text},
                             {"count", std::to_string(count)}, {"schedule", schedule_text}, {"eps", num(eps)}});
      const ElementSequence hs = [&](std::size_t k) { return parse_group(instantiate(group_perturb_text, k), space); };
      const SetSequence bs = [&](std::size_t k) { return parse_set(instantiate(perturb_text, k), space); };
      std::optional<ClosedSet> ref;
      if (!reference_text.empty()) ref = parse_set(reference_text, space);
      const auto rep = probe_action_continuity(elem, a, m, hs, bs, count, number_list(schedule_text), eps, ref, tol);
      Report r("probe-action", echo(cfg), seed);
      r.add("rows", action_table(rep.rows));
      if (rep.witness_row) r.add("witness_row", Json(rep.rows[*rep.witness_row].index));
      r.add("verdict", Json(rep.verdict()), rep.violation ? "violation" : "no-violation-found");
      return emit(r, g);
    }
    if (*slist) {
      Report r("scenario list", Json::object(), seed);
      for (const auto& info : scenario_catalog()) {
        Json j;
        j["summary"] = info.summary;
        Json params = Json::object();
        for (const auto& p : info.params) params[p.name] = p.default_value;
        j["params"] = params;
        r.add(info.name, j);
      }
      return emit(r, g);
    }
    if (*srun) {
      std::map<std::string, std::string> overrides;
      for (const auto& kv : scen_params) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw UsageError("--param expects k=v, got '" + kv + "'");
        overrides[kv.substr(0, eq)] = kv.substr(eq + 1);
      }
      const ScenarioReport rep = run_scenario(scen_name, overrides);
      return emit(to_report(rep, seed), g);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
