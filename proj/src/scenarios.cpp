#include "hyperspace/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>

#include "hyperspace/actions.hpp"
#include "hyperspace/hitmiss.hpp"
#include "hyperspace/induced.hpp"
#include "hyperspace/literals.hpp"

namespace hyperspace {
namespace {

constexpr double kPi = std::numbers::pi;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class Params {
 public:
  Params(const ScenarioInfo& info, const std::map<std::string, std::string>& overrides) {
    for (const auto& p : info.params) values_[p.name] = p.default_value;
    for (const auto& [k, v] : overrides) {
      if (!values_.count(k)) throw ValidationError("scenario " + info.name + ": unknown parameter '" + k + "'");
      values_[k] = v;
    }
    for (const auto& p : info.params) effective_.emplace_back(p.name, values_[p.name]);
  }

  bool has(const std::string& k) const { return !values_.at(k).empty(); }

  double real(const std::string& k) const {
    try {
      return parse_number(values_.at(k));
    } catch (const ValidationError& e) {
      throw ValidationError("parameter " + k + ": " + e.what());
    }
  }

  std::size_t count(const std::string& k) const {
    const double v = real(k);
    if (!(v >= 1.0) || v != std::floor(v) || v > 1e7) throw ValidationError("parameter " + k + ": positive integer expected");
    return static_cast<std::size_t>(v);
  }

  std::vector<double> list(const std::string& k) const {
    std::vector<double> out;
    std::string cur;
    const std::string& s = values_.at(k);
    int depth = 0;
    for (char c : s + ",") {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        try {
          out.push_back(parse_number(cur));
        } catch (const ValidationError& e) {
          throw ValidationError("parameter " + k + ": " + e.what());
        }
        cur.clear();
      } else {
        cur += c;
      }
    }
    return out;
  }

  std::uint64_t seed(const std::string& k) const {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(values_.at(k), &used, 0);
      if (used != values_.at(k).size()) throw std::invalid_argument("trailing text");
      return v;
    } catch (const std::exception&) {
      throw ValidationError("parameter " + k + ": integer seed expected");
    }
  }

  const std::vector<std::pair<std::string, std::string>>& effective() const { return effective_; }

 private:
  std::map<std::string, std::string> values_;
  std::vector<std::pair<std::string, std::string>> effective_;
};

Json lo(const CertifiedValue& v) { return to_json(v.lo); }
Json hi(const CertifiedValue& v) { return to_json(v.hi); }
Json method(const CertifiedValue& v) { return to_string(v.method); }

/// |v - target| <= tol at both ends of the bracket.
bool near(const CertifiedValue& v, double target, double tol) {
  if (v.hi.is_infinite()) return false;
  return std::abs(v.lo.value() - target) <= tol && std::abs(v.hi.value() - target) <= tol;
}

struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  double worst = 0.0;
  std::string first_failure;

  void record(bool ok, double err, const std::string& where) {
    ++checked;
    worst = std::max(worst, err);
    if (!ok && failed++ == 0) first_failure = where;
  }
  bool pass() const { return failed == 0 && checked > 0; }
  std::string detail(const std::string& what) const {
    std::string s = std::to_string(checked - failed) + "/" + std::to_string(checked) + " " + what;
    if (worst > 0.0) s += ", worst deviation " + num(worst);
    if (failed) s += ", first failure at " + first_failure;
    return s;
  }
};

Point random_point(std::mt19937_64& rng, std::size_t dim, double half) {
  std::uniform_real_distribution<double> u(-half, half);
  Point p(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < p.size(); ++i) p[i] = u(rng);
  return p;
}

Point random_unit(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
  const double t = u(rng);
  return point2(std::cos(t), std::sin(t));
}

// ---------------------------------------------------------------------------

ScenarioReport sin_reciprocal_hausdorff(const Params& p) {
  const std::size_t n_max = p.count("N");
  std::vector<std::size_t> ks;
  if (p.has("k")) {
    ks.push_back(p.count("k"));
  } else {
    for (std::size_t k = 1; k <= p.count("K"); ++k) ks.push_back(k);
  }
  auto x = share(AmbientSpace::open_interval(0.0, 1.0, 0.5));
  const MapSpec f = MapSpec::sin_reciprocal(x);

  std::vector<Point> pts;
  std::vector<Interval> ivs;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const double a = 1.0 / (2.0 * kPi * static_cast<double>(n));
    pts.push_back(point1(a));
    ivs.push_back({a, a});
  }
  const ClosedSet a = ClosedSet::points(x, pts);
  const ClosedSet fa = induced_image(f, a);

  ScenarioReport r;
  r.surrogate = "A = {1/(2 pi n) : n <= " + std::to_string(n_max) + "} (finite prefix of the infinite set)";
  Table t{{"k", "d_in_lo", "d_in_hi", "d_in_method", "expected", "d_out_lo", "d_out_hi", "d_out_method", "image"}, {}};
  Tally in, out, img;
  for (std::size_t k : ks) {
    if (k + 1 > n_max) throw ValidationError("sin-reciprocal-hausdorff: k must be below N");
    const double kd = static_cast<double>(k);
    auto pieces = ivs;
    pieces.push_back({1.0 / (2.0 * kPi * (kd + 1.0)), 1.0 / (2.0 * kPi * kd)});
    const ClosedSet ak = ClosedSet::intervals(x, pieces);
    const CertifiedValue din = hausdorff(ak, a);
    const double expected = 1.0 / (4.0 * kPi * kd * (kd + 1.0));
    const ClosedSet fak = induced_image(f, ak);
    const CertifiedValue dout = hausdorff(fak, fa);
    const std::string at = "k=" + std::to_string(k);
    in.record(near(din, expected, 1e-9), std::abs(din.hi.value_or(INFINITY) - expected), at);
    out.record(near(dout, 1.0, 1e-9), std::abs(dout.hi.value_or(INFINITY) - 1.0), at);
    const auto* iu = fak.as<IntervalUnion>();
    img.record(iu && iu->intervals.size() == 1 && iu->intervals[0].lo == -1.0 && iu->intervals[0].hi == 1.0, 0.0, at);
    t.rows.push_back({k, lo(din), hi(din), method(din), expected, lo(dout), hi(dout), method(dout), format_set(fak)});
  }
  r.tables.emplace_back("distances", std::move(t));
  r.assertions.push_back({"d_H(A_k, A) = 1/(4 pi k (k+1))", "closed-form", 1e-9, in.pass(), in.detail("k values")});
  r.assertions.push_back({"f~A_k = [-1, 1]", "closed-form", 0.0, img.pass(), img.detail("k values")});
  r.assertions.push_back({"d_H(f~A_k, f~A) = 1", "closed-form", 1e-9, out.pass(), out.detail("k values")});
  return r;
}

ScenarioReport arctan_aw(const Params& p) {
  auto line = share(AmbientSpace::line(0.0));
  const MapSpec f = MapSpec::arctan_of_distance(line);
  const double tol = p.real("tol");
  const ClosedSet zero = ClosedSet::points(line, {point1(0.0)});
  const ClosedSet fzero = induced_image(f, zero);

  ScenarioReport r;
  r.surrogate = "none: {0} and {0, n} are finite";
  Table t{{"n", "d_in_lo", "d_in_hi", "d_in_method", "bound_2_over_n", "d_out_lo", "d_out_hi", "d_out_method"}, {}};
  Tally in, out;
  for (double n : p.list("n")) {
    const ClosedSet b = ClosedSet::points(line, {point1(0.0), point1(n)});
    const CertifiedValue din = aw_distance(zero, b, tol);
    const CertifiedValue dout = aw_distance(fzero, induced_image(f, b), tol);
    const std::string at = "n=" + num(n);
    in.record(din.hi <= ExtReal(2.0 / n), 0.0, at);
    out.record(near(dout, 0.5, 1e-9), std::abs(dout.hi.value_or(INFINITY) - 0.5), at);
    t.rows.push_back({n, lo(din), hi(din), method(din), 2.0 / n, lo(dout), hi(dout), method(dout)});
  }
  r.tables.emplace_back("distances", std::move(t));
  r.assertions.push_back({"d_AW({0}, {0,n}) <= 2/n", "certified-bound", 0.0, in.pass(), in.detail("n values")});
  r.assertions.push_back({"d'_AW(f~{0}, f~{0,n}) = 1/2", "closed-form", 1e-9, out.pass(), out.detail("n values")});

  const auto pre = check_preimage_boundedness(f, ClosedSet::intervals(line, {{0.0, 1.6}}));
  r.assertions.push_back({"f^-1([0, 1.6]) is unbounded", "closed-form", 0.0,
                          pre.verdict == PreimageReport::Verdict::escape_evidence && pre.certified,
                          to_string(pre.verdict) + (pre.certified ? " (certified)" : " (sampled)")});
  const auto cond = aw_continuity_conditions(f);
  r.assertions.push_back({"arctan is 1-Lipschitz but fails the bounded-preimage condition", "closed-form", 0.0,
                          cond.cond1 == Status::certified_true && cond.cond2 == Status::certified_false,
                          "cond1 " + to_string(cond.cond1) + ", cond2 " + to_string(cond.cond2) + ", " + cond.overall});
  return r;
}

ScenarioReport circle_ray(const Params& p) {
  auto plane = share(AmbientSpace::euclidean(2));
  const ClosedSet ray = ClosedSet::ray(plane, point2(0.0, 0.0), point2(1.0, 0.0));

  ScenarioReport r;
  r.surrogate = "A_R = A ∩ closed ball(0, R) for the truncation rows";
  Table rays{{"theta", "e_lo", "e_hi", "method", "e_reverse_hi"}, {}};
  Table trunc{{"theta", "R", "d_H_lo", "d_H_hi", "method", "R_sin_theta"}, {}};
  Tally inf, tr;
  for (double theta : p.list("theta")) {
    const auto g = GroupElement::rotation(theta, plane);
    const ClosedSet rotated = act(g, ray);
    const CertifiedValue e = excess(ray, rotated);
    const CertifiedValue back = excess(rotated, ray);
    inf.record(e.lo.is_infinite() && e.hi.is_infinite() && back.hi.is_infinite(), 0.0, "theta=" + num(theta));
    rays.rows.push_back({theta, lo(e), hi(e), method(e), hi(back)});
    for (double radius : p.list("R")) {
      const ClosedSet ar = *truncate(ray, radius);
      const ClosedSet gar = *truncate(rotated, radius);
      const CertifiedValue d = hausdorff(ar, gar);
      const double expected = radius * std::sin(theta);
      if (theta > 0.0 && theta <= kPi / 2.0) {
        const double err = std::abs(d.hi.value_or(INFINITY) - expected);
        tr.record(near(d, expected, 1e-6 * radius), err / radius, "theta=" + num(theta) + ",R=" + num(radius));
      }
      trunc.rows.push_back({theta, radius, lo(d), hi(d), method(d), expected});
    }
  }
  r.tables.emplace_back("rays", std::move(rays));
  r.tables.emplace_back("truncations", std::move(trunc));
  r.assertions.push_back({"e(A, theta A) = infinity", "closed-form", 0.0, inf.pass(), inf.detail("angles")});
  r.assertions.push_back({"d_H(A_R, theta A_R) = R sin theta (0 < theta <= pi/2)", "closed-form", 1e-6, tr.pass(),
                          tr.detail("pairs (deviation relative to R)")});
  return r;
}

ScenarioReport aw_positive_action(const Params& p) {
  auto plane = share(AmbientSpace::euclidean(2));
  const std::size_t corpus = p.count("corpus");
  const std::size_t steps = p.count("steps");
  const double eps = p.real("eps");
  const auto schedule = p.list("schedule");
  std::mt19937_64 rng(p.seed("seed"));
  std::uniform_real_distribution<double> radius(0.2, 1.5);
  std::uniform_int_distribution<int> nballs(1, 3);

  ScenarioReport r;
  r.surrogate = "translations of R^2 acting on random finite ball unions; perturbations shrink like 1/(k+1)";
  Table t{{"instance", "set", "max_d_out_last", "verdict"}, {}};
  Tally tally;
  for (std::size_t i = 0; i < corpus; ++i) {
    std::vector<Ball> balls;
    const int nb = nballs(rng);
    for (int b = 0; b < nb; ++b) balls.push_back({random_point(rng, 2, 4.0), radius(rng)});
    const ClosedSet a = ClosedSet::balls(plane, balls);
    const Point u = random_point(rng, 2, 2.0);
    const Point du = random_point(rng, 2, 0.2);
    std::vector<Point> shifts;
    for (std::size_t b = 0; b < balls.size(); ++b) shifts.push_back(random_point(rng, 2, 0.1));
    const auto g = GroupElement::translation(u, plane);
    auto h = [&](std::size_t k) { return GroupElement::translation(u + du / static_cast<double>(k + 1), plane); };
    auto bset = [&](std::size_t k) {
      std::vector<Ball> moved = balls;
      for (std::size_t b = 0; b < moved.size(); ++b) moved[b].center += shifts[b] / static_cast<double>(k + 1);
      return ClosedSet::balls(plane, moved);
    };
    const auto rep = probe_action_continuity(g, a, MetricKind::aw, h, bset, steps, schedule, eps);
    tally.record(!rep.violation, 0.0, "instance " + std::to_string(i));
    t.rows.push_back({i, format_set(a), hi(rep.rows.back().d_out), rep.verdict()});
  }
  r.tables.emplace_back("instances", std::move(t));
  r.assertions.push_back({"no violation of AW continuity of the translation action", "corpus", 0.0, tally.pass(),
                          tally.detail("instances without violation")});
  return r;
}

ScenarioReport bch_positive_action(const Params& p) {
  auto plane = share(AmbientSpace::euclidean(2));
  const std::size_t corpus = p.count("corpus");
  const std::size_t steps = p.count("steps");
  const double eps = p.real("eps");
  const auto schedule = p.list("schedule");
  std::mt19937_64 rng(p.seed("seed"));
  std::uniform_int_distribution<int> npts(3, 8);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  std::uniform_real_distribution<double> dangle(-0.05, 0.05);

  ScenarioReport r;
  r.surrogate = "rotations composed with translations acting on random finite subsets of [-5,5]^2; reference set ball(0,10)";
  Table t{{"instance", "k", "d_group_hi", "d_set_hi", "d_out_hi", "slack"}, {}};
  Tally bound, viol;
  for (std::size_t i = 0; i < corpus; ++i) {
    std::vector<Point> pts;
    std::vector<Point> offsets;
    const int n = npts(rng);
    for (int j = 0; j < n; ++j) {
      pts.push_back(random_point(rng, 2, 5.0));
      offsets.push_back(random_point(rng, 2, 0.1));
    }
    const ClosedSet a = ClosedSet::points(plane, pts);
    const double theta = angle(rng), dtheta = dangle(rng);
    const Point u = random_point(rng, 2, 3.0), du = random_point(rng, 2, 0.1);
    auto element = [&](double th, const Point& shift) {
      return GroupElement::compose({GroupElement::translation(shift, plane), GroupElement::rotation(th, plane)});
    };
    const auto g = element(theta, u);
    auto h = [&](std::size_t k) {
      const double s = 1.0 / static_cast<double>(k);
      return element(theta + dtheta * s, u + du * s);
    };
    auto bset = [&](std::size_t k) {
      std::vector<Point> moved = pts;
      for (std::size_t j = 0; j < moved.size(); ++j) moved[j] += offsets[j] / static_cast<double>(k);
      return ClosedSet::points(plane, moved);
    };
    const auto rep = probe_action_continuity(g, a, MetricKind::hausdorff, h, bset, steps, schedule, eps);
    viol.record(!rep.violation, 0.0, "instance " + std::to_string(i));
    for (const auto& row : rep.rows) {
      const double sum = row.d_group.hi.value_or(INFINITY) + row.d_set.hi.value_or(INFINITY);
      const double out = row.d_out.hi.value_or(INFINITY);
      bound.record(out <= sum + kDefaultTol, std::max(0.0, out - sum),
                   "instance " + std::to_string(i) + ", k=" + std::to_string(row.index));
      if (i < 5) t.rows.push_back({i, row.index, hi(row.d_group), hi(row.d_set), hi(row.d_out), sum - out});
    }
  }
  r.tables.emplace_back("first five instances", std::move(t));
  r.assertions.push_back({"d_H(gA, hB) <= d_group + d_set", "certified-bound", kDefaultTol, bound.pass(),
                          bound.detail("rows")});
  r.assertions.push_back({"no violation of Hausdorff continuity of the action", "corpus", 0.0, viol.pass(),
                          viol.detail("instances without violation")});
  return r;
}

ScenarioReport uniform_witness(const Params& p) {
  const std::size_t n_max = p.count("N");
  const double eps = p.real("eps");
  auto x = share(AmbientSpace::open_interval(0.0, 1.0, 0.5));
  const MapSpec f = MapSpec::sin_reciprocal(x);
  std::vector<std::pair<Point, Point>> pairs;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const double tn = 2.0 * kPi * static_cast<double>(n);
    pairs.emplace_back(point1(1.0 / tn), point1(1.0 / (tn + kPi / 2.0)));
  }
  std::vector<std::size_t> ms;
  if (p.has("m")) {
    ms.push_back(p.count("m"));
  } else {
    for (std::size_t m = 1; m <= n_max; ++m) ms.push_back(m);
  }

  ScenarioReport r;
  r.surrogate = "B = {x_n : n <= " + std::to_string(n_max) + "} with a_n = 1/(2 pi n), x_n = 1/(2 pi n + pi/2)";
  Table t{{"m", "d(a_m,x_m)", "aw_in_lo", "aw_in_hi", "aw_in_method", "aw_out_lo", "aw_out_hi", "aw_out_method"}, {}};
  Tally in, out;
  for (std::size_t m : ms) {
    const WitnessRecord w = uniform_continuity_witness(f, pairs, m, eps);
    const std::string at = "m=" + std::to_string(m);
    in.record(w.aw_in.hi <= ExtReal(w.pair_distance + kDefaultTol),
              std::max(0.0, w.aw_in.hi.value_or(INFINITY) - w.pair_distance), at);
    out.record(near(w.aw_out, 1.0, 1e-9), std::abs(w.aw_out.hi.value_or(INFINITY) - 1.0), at);
    t.rows.push_back({m, w.pair_distance, lo(w.aw_in), hi(w.aw_in), method(w.aw_in), lo(w.aw_out), hi(w.aw_out),
                      method(w.aw_out)});
  }
  r.tables.emplace_back("witnesses", std::move(t));
  r.assertions.push_back({"d_AW(B, C_m) <= d(a_m, x_m)", "certified-bound", kDefaultTol, in.pass(), in.detail("m values")});
  r.assertions.push_back({"d'_AW(f~B, f~C_m) = 1", "closed-form", 1e-9, out.pass(), out.detail("m values")});
  return r;
}

ScenarioReport fell_proper(const Params& p) {
  auto plane = share(AmbientSpace::euclidean(2));
  const std::size_t corpus = p.count("corpus");
  const std::size_t horizon = p.count("horizon");
  std::mt19937_64 rng(p.seed("seed"));
  std::uniform_real_distribution<double> entry(-2.0, 2.0);
  std::uniform_int_distribution<int> npts(2, 6);

  ScenarioReport r;
  r.surrogate = "invertible 2x2 matrices; A random finite subsets of [-3,3]^2; B_k moves each point by at most rho/k";
  Table t{{"instance", "matrix", "K", "misses_all", "fell_entry"}, {}};
  Tally miss, conv;
  for (std::size_t i = 0; i < corpus; ++i) {
    Matrix m(2, 2);
    do {
      for (Eigen::Index a = 0; a < 2; ++a)
        for (Eigen::Index b = 0; b < 2; ++b) m(a, b) = entry(rng);
    } while (std::abs(m.determinant()) < 0.5);
    const MapSpec f = MapSpec::linear(m, plane);
    std::vector<Point> pts;
    const int n = npts(rng);
    for (int j = 0; j < n; ++j) pts.push_back(random_point(rng, 2, 3.0));
    const ClosedSet a = ClosedSet::points(plane, pts);
    const ClosedSet fa = induced_image(f, a);
    Point c;
    double gap = 0.0;
    do {
      c = random_point(rng, 2, 10.0);
      gap = dist_to_set(c, fa);
    } while (gap < 1.0);
    const CompactSet k = CompactSet::of({ClosedSet::balls(plane, {Ball{c, gap / 2.0}})});
    const double norm = Eigen::JacobiSVD<Matrix>(m).singularValues()(0);
    const double rho = gap / (4.0 * norm);
    std::vector<Point> dirs;
    for (int j = 0; j < n; ++j) dirs.push_back(random_unit(rng));
    auto image_of = [&](std::size_t step) {
      std::vector<Point> moved = pts;
      for (std::size_t j = 0; j < moved.size(); ++j) moved[j] += dirs[j] * (rho / static_cast<double>(step));
      return induced_image(f, ClosedSet::points(plane, moved));
    };
    bool all = true;
    for (std::size_t step = 1; step <= horizon; ++step) all = all && misses(image_of(step), k);
    miss.record(all, 0.0, "instance " + std::to_string(i));
    const auto nb = canonical_neighborhoods(fa, Topology::fell, gap / 4.0, pts.size(), k);
    const auto rep = converges(image_of, nb, horizon);
    conv.record(rep.pass, 0.0, "instance " + std::to_string(i));
    std::size_t entry_max = 0;
    for (const auto& o : rep.outcomes) entry_max = std::max(entry_max, o.entry.value_or(0));
    std::string ms = "[[" + num(m(0, 0)) + "," + num(m(0, 1)) + "],[" + num(m(1, 0)) + "," + num(m(1, 1)) + "]]";
    t.rows.push_back({i, ms, "ball(" + num(c[0]) + "," + num(c[1]) + "; " + num(gap / 2.0) + ")", all,
                      rep.pass ? Json(entry_max) : Json("fail")});
  }
  r.tables.emplace_back("instances", std::move(t));
  r.assertions.push_back({"f~B_k misses K for every perturbation", "corpus", 0.0, miss.pass(), miss.detail("instances")});
  r.assertions.push_back({"f~B_k eventually lies in the Fell neighbourhood of f~A", "corpus", 0.0, conv.pass(),
                          conv.detail("instances")});
  return r;
}

struct Entry {
  ScenarioInfo info;
  std::function<ScenarioReport(const Params&)> run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {{"sin-reciprocal-hausdorff",
        "sin(1/x) on (0,1): d_H(A_k, A) -> 0 while d_H(f~A_k, f~A) = 1",
        {{"N", "50", "points 1/(2 pi n), n <= N"},
         {"K", "20", "largest k"},
         {"k", "", "run a single k instead of 1..K"}}},
       sin_reciprocal_hausdorff},
      {{"arctan-aw",
        "arctan(d(x0,x)): d_AW({0},{0,n}) <= 2/n while the image distance stays 1/2",
        {{"n", "15,100,1000", "comma-separated values of n"}, {"tol", "1e-3", "aw_distance tolerance"}}},
       arctan_aw},
      {{"circle-ray",
        "rotating a ray: infinite excess, truncations at distance R sin(theta)",
        {{"theta", "0.01,0.1,1.0", "comma-separated angles"}, {"R", "10,100,1000", "comma-separated radii"}}},
       circle_ray},
      {{"aw-positive-action",
        "translation action on CL_AW(R^2): no continuity violation",
        {{"corpus", "100", "random instances"},
         {"steps", "6", "perturbation steps per instance"},
         {"schedule", "0.2,0.1,0.05", "delta schedule"},
         {"eps", "0.15", "output threshold"},
         {"seed", "0x5EED", "corpus seed"}}},
       aw_positive_action},
      {{"bch-positive-action",
        "rotations and translations on bounded sets: d_H(gA,hB) <= d_group + d_set",
        {{"corpus", "100", "random instances"},
         {"steps", "8", "perturbation steps per instance"},
         {"schedule", "0.1,0.05,0.02", "delta schedule"},
         {"eps", "0.1", "output threshold"},
         {"seed", "0x5EED", "corpus seed"}}},
       bch_positive_action},
      {{"uniform-witness",
        "sin(1/x): C_m = (B minus x_m) plus a_m is AW-close to B but the images stay 1 apart",
        {{"N", "50", "number of pairs"}, {"m", "", "run a single m instead of 1..N"}, {"eps", "0.5", "declared gap"}}},
       uniform_witness},
      {{"fell-proper",
        "invertible linear maps keep miss-neighbourhoods stable under small perturbations",
        {{"corpus", "100", "random instances"}, {"horizon", "50", "sequence length"}, {"seed", "0x5EED", "corpus seed"}}},
       fell_proper},
  };
  return entries;
}

}  // namespace

bool ScenarioReport::pass() const {
  return !assertions.empty() &&
         std::all_of(assertions.begin(), assertions.end(), [](const ScenarioAssertion& a) { return a.pass; });
}

const std::vector<ScenarioInfo>& scenario_catalog() {
  static const std::vector<ScenarioInfo> infos = [] {
    std::vector<ScenarioInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

ScenarioReport run_scenario(const std::string& name, const std::map<std::string, std::string>& overrides) {
  for (const auto& e : registry()) {
    if (e.info.name != name) continue;
    const Params params(e.info, overrides);
    ScenarioReport r = e.run(params);
    r.name = name;
    r.params = params.effective();
    return r;
  }
  throw ValidationError("unknown scenario '" + name + "'");
}

Report to_report(const ScenarioReport& r, std::uint64_t seed) {
  Json config;
  config["scenario"] = r.name;
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  config["params"] = params;
  Report rep("scenario run", config, seed);
  rep.add("surrogate", Json(r.surrogate));
  for (const auto& [name, table] : r.tables) rep.add(name, table);
  for (const auto& a : r.assertions) {
    Json v;
    v["holds"] = a.pass;
    v["basis"] = a.basis;
    v["tolerance"] = a.tolerance;
    v["detail"] = a.detail;
    rep.add(a.name, v, a.pass ? "pass" : "fail");
  }
  rep.add("scenario", Json(r.pass()), r.pass() ? "pass" : "fail");
  return rep;
}

}  // namespace hyperspace
