// Acceptance runner: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>

#include "corpus.hpp"
#include "hyperspace/scenarios.hpp"

using namespace hyperspace;
using hstest::Tally;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kSeed = 0x5EED;

Tally scenario_passes(const std::string& name, const std::map<std::string, std::string>& params = {}) {
  Tally t;
  const auto r = run_scenario(name, params);
  for (const auto& a : r.assertions) t.check(a.pass, name + ": " + a.name + " " + a.detail);
  return t;
}

Tally sin_reciprocal() {
  Tally t = scenario_passes("sin-reciprocal-hausdorff");
  const auto x = share(AmbientSpace::open_interval(0, 1, 0.5));
  std::vector<Interval> base;
  for (int n = 1; n <= 50; ++n) base.push_back({1 / (2 * kPi * n), 1 / (2 * kPi * n)});
  const auto a = ClosedSet::intervals(x, base);
  const auto f = MapSpec::sin_reciprocal(x);
  const auto fa = induced_image(f, a);
  for (int k = 1; k <= 20; ++k) {
    auto ivs = base;
    ivs.push_back({1 / (2 * kPi * (k + 1)), 1 / (2 * kPi * k)});
    const auto ak = ClosedSet::intervals(x, ivs);
    const double want = 1 / (4 * kPi * k * (k + 1));
    const auto din = hausdorff(ak, a);
    t.check(std::abs(din.lo.value() - want) <= 1e-9 && std::abs(din.hi.value() - want) <= 1e-9,
            "d_H(A_k,A) at k=" + std::to_string(k));
    const auto dout = hausdorff(induced_image(f, ak), fa);
    t.check(std::abs(dout.lo.value() - 1) <= 1e-9 && std::abs(dout.hi.value() - 1) <= 1e-9,
            "d_H(fA_k,fA) at k=" + std::to_string(k));
  }
  return t;
}

Tally arctan_aw() {
  Tally t = scenario_passes("arctan-aw");
  const auto line = share(AmbientSpace::line(0));
  const auto f = MapSpec::arctan_of_distance(line);
  for (double n : {15.0, 100.0, 1000.0}) {
    const auto a = ClosedSet::points(line, {point1(0)});
    const auto b = ClosedSet::points(line, {point1(0), point1(n)});
    t.check(aw_distance(a, b).hi <= ExtReal(2 / n), "d_AW({0},{0,n}) > 2/n at n=" + std::to_string(n));
    const auto out = aw_distance(induced_image(f, a), induced_image(f, b));
    t.check(std::abs(out.lo.value() - 0.5) <= 1e-9 && std::abs(out.hi.value() - 0.5) <= 1e-9,
            "output distance != 1/2 at n=" + std::to_string(n));
  }
  return t;
}

Tally circle_ray() {
  Tally t = scenario_passes("circle-ray");
  const auto plane = share(AmbientSpace::euclidean(2));
  const auto ray = ClosedSet::ray(plane, point2(0, 0), point2(1, 0));
  for (double th : {0.01, 0.1, 1.0}) {
    const auto rot = GroupElement::rotation(th, plane);
    const auto e = excess(ray, act(rot, ray));
    t.check(e.lo.is_infinite() && e.hi.is_infinite(), "finite excess at theta=" + std::to_string(th));
    for (double r : {10.0, 100.0, 1000.0}) {
      const auto seg = ClosedSet::segments(plane, {{point2(0, 0), point2(r, 0)}});
      const auto d = hausdorff(seg, act(rot, seg));
      const double want = r * std::sin(th);
      t.check(std::abs(d.lo.value() - want) <= 1e-6 * r && std::abs(d.hi.value() - want) <= 1e-6 * r,
              "truncation theta=" + std::to_string(th) + " R=" + std::to_string(r));
    }
  }
  return t;
}

Tally localization() {
  Tally t = hstest::localization_line(kSeed + 4);
  t.merge(hstest::localization_plane(kSeed + 40));
  return t;
}

Tally metric_axioms() {
  Tally t = hstest::metric_axioms(share(AmbientSpace::line(0)), kSeed + 6, 1000);
  t.merge(hstest::metric_axioms(share(AmbientSpace::line(1.5)), kSeed + 60, 200));
  t.merge(hstest::metric_axioms(share(AmbientSpace::euclidean(2)), kSeed + 600, 60));
  return t;
}

Tally induced_positive() {
  Tally t = hstest::lipschitz_transfer(kSeed + 7);
  t.merge(hstest::positive_probe(kSeed + 70));
  return t;
}

Tally uniform_witness() {
  Tally t = scenario_passes("uniform-witness");
  std::vector<std::pair<Point, Point>> pairs;
  for (int n = 1; n <= 50; ++n) pairs.emplace_back(point1(1 / (2 * kPi * n)), point1(1 / (2 * kPi * n + kPi / 2)));
  const auto f = MapSpec::sin_reciprocal();
  for (std::size_t m = 1; m <= 50; ++m) {
    const auto w = uniform_continuity_witness(f, pairs, m);
    t.check(w.aw_in.hi <= ExtReal(w.pair_distance), "d_AW(B,C_m) > d(a_m,x_m) at m=" + std::to_string(m));
    t.check(std::abs(w.aw_out.lo.value() - 1) <= 1e-9 && std::abs(w.aw_out.hi.value() - 1) <= 1e-9,
            "output distance != 1 at m=" + std::to_string(m));
  }
  return t;
}

Tally actions() {
  Tally t = hstest::isometry_invariance(kSeed + 9);
  t.merge(scenario_passes("aw-positive-action"));
  t.merge(scenario_passes("bch-positive-action"));
  t.merge(hstest::action_lower_vietoris(kSeed + 90));
  return t;
}

Tally hitmiss() {
  const auto h = hstest::hitmiss_properties(kSeed + 10);
  Tally t = h.a;
  t.merge(h.b);
  t.merge(h.c);
  t.merge(h.consistency);
  return t;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Tally()>> criteria[] = {
      {"sin-reciprocal scenario", sin_reciprocal},
      {"arctan-AW scenario", arctan_aw},
      {"circle-ray scenario", circle_ray},
      {"localization", localization},
      {"aw predicate oracle equivalence", [] { return hstest::aw_lemma(kSeed + 5); }},
      {"metric axiom suite", metric_axioms},
      {"positive induced-map theorem", induced_positive},
      {"uniform-witness scenario", uniform_witness},
      {"action suites", actions},
      {"convergence cross-checks", hitmiss},
  };
  int failed = 0, index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    try {
      t = run();
    } catch (const std::exception& e) {
      t.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = t.ok();
    failed += ok ? 0 : 1;
    std::printf("[%s] %2d %s: %s (%.1fs)\n", ok ? "PASS" : "FAIL", index, name, t.summary().c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
