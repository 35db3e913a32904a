#include "hyperspace/hypermetrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "detail/maximize.hpp"

namespace hyperspace {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

CertifiedValue exact(double v, Method m) { return CertifiedValue{ExtReal(v), ExtReal(v), m, 0.0, std::nullopt}; }

CertifiedValue infinite(const Point& direction) {
  return CertifiedValue{ExtReal::infinity(), ExtReal::infinity(), Method::ray_closed_form, 0.0, direction};
}

CertifiedValue bracket(double lo, double hi, Method m, double resolution) {
  return CertifiedValue{ExtReal(std::max(0.0, lo)), ExtReal(std::max(0.0, hi)), m, resolution, std::nullopt};
}

// Folds the declared resolution of sampled clouds into the bracket.
CertifiedValue widen(CertifiedValue v, double slack, double cap = kInf) {
  if (slack <= 0.0) return v;
  if (v.lo.is_finite()) v.lo = ExtReal(std::max(0.0, v.lo.value() - slack));
  if (v.hi.is_finite()) v.hi = ExtReal(std::min(cap, v.hi.value() + slack));
  v.resolution += slack;
  return v;
}

int method_rank(Method m) {
  switch (m) {
    case Method::finite_max: return 0;
    case Method::exact_1d: return 1;
    case Method::ray_closed_form: return 2;
    case Method::tail_bound: return 3;
    case Method::grid: return 4;
  }
  return 5;
}

CertifiedValue max_of(const CertifiedValue& x, const CertifiedValue& y) {
  CertifiedValue r;
  r.lo = max(x.lo, y.lo);
  r.hi = max(x.hi, y.hi);
  r.method = method_rank(x.method) >= method_rank(y.method) ? x.method : y.method;
  r.resolution = std::max(x.resolution, y.resolution);
  if (x.hi.is_infinite() && x.witness) {
    r.witness = x.witness;
  } else if (y.hi.is_infinite() && y.witness) {
    r.witness = y.witness;
  }
  return r;
}

/// Distance to a finite union of sorted disjoint closed intervals.
class Dist1D {
 public:
  explicit Dist1D(std::vector<Interval> comps) : comps_(std::move(comps)) {}

  double operator()(double x) const {
    auto it = std::upper_bound(comps_.begin(), comps_.end(), x, [](double v, const Interval& iv) { return v < iv.lo; });
    double best = kInf;
    if (it != comps_.end()) best = it->lo - x;
    if (it != comps_.begin()) best = std::min(best, std::max(0.0, x - std::prev(it)->hi));
    return best;
  }

  const std::vector<Interval>& comps() const { return comps_; }

  /// Component endpoints and gap midpoints: the points where the distance
  /// function changes slope.
  void append_breakpoints(std::vector<double>& out) const {
    for (std::size_t i = 0; i < comps_.size(); ++i) {
      out.push_back(comps_[i].lo);
      out.push_back(comps_[i].hi);
      if (i + 1 < comps_.size()) out.push_back(0.5 * (comps_[i].hi + comps_[i + 1].lo));
    }
  }

 private:
  std::vector<Interval> comps_;
};

/// |d(x,A) - d(x,B)| on a one-dimensional ambient, with its exact sup over
/// balls about the base point.
class Gap1D {
 public:
  Gap1D(const ClosedSet& a, const ClosedSet& b) : da_(components_1d(a)), db_(components_1d(b)) {
    const AmbientSpace& sp = a.ambient();
    x0_ = sp.base_point()[0];
    if (sp.kind() == SpaceKind::OpenInterval) {
      left_ = sp.lower();
      right_ = sp.upper();
    }
    std::vector<double> xs;
    da_.append_breakpoints(xs);
    db_.append_breakpoints(xs);
    std::vector<std::pair<double, double>> pts;
    for (double x : xs) pts.emplace_back(std::abs(x - x0_), delta(x));
    std::sort(pts.begin(), pts.end());
    radii_.reserve(pts.size());
    prefix_.reserve(pts.size());
    double run = 0.0;
    for (const auto& [r, v] : pts) {
      run = std::max(run, v);
      radii_.push_back(r);
      prefix_.push_back(run);
    }
    saturation_ = radii_.empty() ? 0.0 : radii_.back();
    if (std::isfinite(left_)) saturation_ = std::max({saturation_, x0_ - left_, right_ - x0_});
  }

  double delta(double x) const { return std::abs(da_(x) - db_(x)); }

  /// Exact sup over the ball of radius j (open and closed balls agree by
  /// continuity); clipped to the closure of an open-interval ambient.
  double sup(double j) const {
    const double l = std::max(x0_ - j, left_);
    const double h = std::min(x0_ + j, right_);
    double s = std::max(delta(l), delta(h));
    const auto n = std::upper_bound(radii_.begin(), radii_.end(), j) - radii_.begin();
    if (n > 0) s = std::max(s, prefix_[static_cast<std::size_t>(n - 1)]);
    return s;
  }

  /// For j >= saturation() the sup no longer changes.
  double saturation() const { return saturation_; }

  /// e(A,B) for the two component lists.
  static double excess(const Dist1D& a, const Dist1D& b) {
    double best = 0.0;
    for (const auto& c : a.comps()) {
      best = std::max({best, b(c.lo), b(c.hi)});
      const auto& bc = b.comps();
      for (std::size_t i = 0; i + 1 < bc.size(); ++i) {
        const double m = 0.5 * (bc[i].hi + bc[i + 1].lo);
        if (c.lo < m && m < c.hi) best = std::max(best, b(m));
      }
    }
    return best;
  }

 private:
  Dist1D da_, db_;
  double x0_ = 0.0;
  double left_ = -kInf;
  double right_ = kInf;
  std::vector<double> radii_, prefix_;
  double saturation_ = 0.0;
};

bool single_convex(const ClosedSet& b) {
  switch (b.kind()) {
    case RepKind::FinitePoints: return b.as<FinitePoints>()->points.size() == 1;
    case RepKind::IntervalUnion: return b.as<IntervalUnion>()->intervals.size() == 1;
    case RepKind::BoxUnion: return b.as<BoxUnion>()->boxes.size() == 1;
    case RepKind::BallUnion: return b.as<BallUnion>()->balls.size() == 1;
    case RepKind::Ray: return true;
    case RepKind::SegmentUnion: return b.as<SegmentUnion>()->segments.size() == 1;
    case RepKind::SampledCloud: return b.as<SampledCloud>()->points.size() == 1;
  }
  return false;
}

std::vector<Point> box_vertices(const Box& box) {
  std::vector<Eigen::Index> free;
  for (Eigen::Index i = 0; i < box.lo.size(); ++i)
    if (box.lo[i] < box.hi[i]) free.push_back(i);
  if (free.size() > 20) throw UnsupportedError("box has too many nondegenerate axes for vertex enumeration");
  std::vector<Point> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << free.size()); ++mask) {
    Point v = box.lo;
    for (std::size_t k = 0; k < free.size(); ++k)
      if (mask & (std::size_t{1} << k)) v[free[k]] = box.hi[free[k]];
    out.push_back(std::move(v));
  }
  return out;
}

CertifiedValue grid_sup(const std::function<double(const Point&)>& f, const detail::Region& region, double lipschitz,
                        const CertOptions& options) {
  detail::MaximizeOptions mo;
  mo.lipschitz = lipschitz;
  mo.target_width = options.width;
  mo.max_evals = options.max_evals;
  const auto r = detail::maximize(f, region, mo);
  return bracket(r.lo, r.hi, Method::grid, options.width);
}

CertifiedValue max_over(const std::vector<Point>& pts, const ClosedSet& b) {
  double best = 0.0;
  for (const auto& p : pts) best = std::max(best, b.raw_distance(p));
  return exact(best, Method::finite_max);
}

// sup of d(., B) over one convex piece of A in R^n.
CertifiedValue piece_excess_box(const Box& box, const ClosedSet& b, const CertOptions& options) {
  if (single_convex(b)) return max_over(box_vertices(box), b);
  return grid_sup([&](const Point& x) { return b.raw_distance(x); }, detail::Region::box(box.lo, box.hi), 1.0, options);
}

CertifiedValue piece_excess_segment(const Segment& s, const ClosedSet& b, const CertOptions& options) {
  if (single_convex(b)) return max_over({s.from, s.to}, b);
  return grid_sup([&](const Point& x) { return b.raw_distance(x); }, detail::Region::segment(s.from, s.to), 1.0, options);
}

CertifiedValue piece_excess_ball(const Ball& ball, const ClosedSet& b, const CertOptions& options) {
  if (ball.radius == 0.0) return exact(b.raw_distance(ball.center), Method::finite_max);
  if (single_convex(b)) {
    const double d = b.raw_distance(ball.center);
    switch (b.kind()) {
      case RepKind::FinitePoints:
        return exact(d + ball.radius, Method::finite_max);
      case RepKind::BallUnion: {
        const Ball& other = b.as<BallUnion>()->balls.front();
        return exact(std::max(0.0, (ball.center - other.center).norm() + ball.radius - other.radius), Method::finite_max);
      }
      case RepKind::Ray:
      case RepKind::SegmentUnion:
        // Moving from the centre along a normal of the convex set B (which
        // exists in dimension >= 2 even when the centre lies on B) adds the
        // full radius.
        if (d > 0.0 || ball.center.size() >= 2) return exact(d + ball.radius, Method::finite_max);
        break;
      case RepKind::BoxUnion:
        if (d > 0.0) return exact(d + ball.radius, Method::finite_max);
        break;
      default:
        break;
    }
  }
  return grid_sup([&](const Point& x) { return b.raw_distance(x); }, detail::Region::ball(ball.center, ball.radius), 1.0,
                  options);
}

CertifiedValue excess_core(const ClosedSet& a, const ClosedSet& b, const CertOptions& options) {
  if (a.kind() == RepKind::FinitePoints) return max_over(a.as<FinitePoints>()->points, b);
  if (a.kind() == RepKind::SampledCloud) return max_over(a.as<SampledCloud>()->points, b);

  if (const auto* ra = a.as<Ray>()) {
    if (const auto* rb = b.as<Ray>()) {
      // d(., ray B) along a ray is convex; with equal directions it is also
      // bounded, hence nonincreasing, so the sup sits at the anchor.
      if (ra->direction == rb->direction) {
        auto v = exact(b.raw_distance(ra->anchor), Method::ray_closed_form);
        return v;
      }
    }
    return infinite(ra->direction);
  }

  if (a.ambient().is_one_dimensional()) {
    const Dist1D da(components_1d(a));
    const Dist1D db(components_1d(b));
    return exact(Gap1D::excess(da, db), Method::exact_1d);
  }

  CertifiedValue acc = exact(0.0, Method::finite_max);
  if (const auto* bu = a.as<BoxUnion>()) {
    for (const auto& box : bu->boxes) acc = max_of(acc, piece_excess_box(box, b, options));
  } else if (const auto* bl = a.as<BallUnion>()) {
    for (const auto& ball : bl->balls) acc = max_of(acc, piece_excess_ball(ball, b, options));
  } else if (const auto* su = a.as<SegmentUnion>()) {
    for (const auto& s : su->segments) acc = max_of(acc, piece_excess_segment(s, b, options));
  } else {
    throw UnsupportedError("excess: unsupported representation pair " + to_string(a.kind()) + " / " + to_string(b.kind()));
  }
  return acc;
}

CertifiedValue zero_for(const ClosedSet& a) {
  return exact(0.0, a.ambient().is_one_dimensional() ? Method::exact_1d : Method::finite_max);
}

double inv(std::size_t j) { return 1.0 / static_cast<double>(j); }

/// The closed-form AW loop shared by the exact (1-D and finite-metric)
/// cases. `sup` returns s(j); `saturation` is a radius beyond which s is
/// constant.
CertifiedValue aw_exact_loop(const std::function<double(std::size_t)>& sup, double saturation, std::size_t J,
                             double hausdorff_hi, Method method) {
  double lo = 0.0;
  for (std::size_t j = 1; j <= J; ++j) {
    const double s = sup(j);
    lo = std::max(lo, std::min(inv(j), s));
    if (s >= inv(j) || static_cast<double>(j) >= saturation || inv(j + 1) <= lo) return exact(lo, method);
  }
  const double hi = std::max(lo, std::min(inv(J + 1), hausdorff_hi));
  return bracket(lo, hi, hi > lo ? Method::tail_bound : method, 0.0);
}

}  // namespace

std::string to_string(Method method) {
  switch (method) {
    case Method::exact_1d: return "exact-1d";
    case Method::finite_max: return "finite-max";
    case Method::grid: return "grid";
    case Method::ray_closed_form: return "ray-closed-form";
    case Method::tail_bound: return "tail-bound";
  }
  return "?";
}

std::string to_string(Decision d) {
  switch (d) {
    case Decision::yes: return "yes";
    case Decision::no: return "no";
    case Decision::indeterminate: return "indeterminate";
  }
  return "?";
}

double CertifiedValue::width() const {
  if (hi.is_infinite()) return lo.is_infinite() ? 0.0 : kInf;
  return hi.value() - lo.value();
}

double CertifiedValue::value() const {
  if (!is_exact() || hi.is_infinite()) throw DomainError("CertifiedValue::value: not an exact finite value");
  return hi.value();
}

double gap_at(const ClosedSet& a, const ClosedSet& b, const Point& x) {
  return std::abs(a.raw_distance(x) - b.raw_distance(x));
}

CertifiedValue excess(const ClosedSet& a, const ClosedSet& b, const CertOptions& options) {
  require_same_ambient(a, b);
  if (a == b) return zero_for(a);
  return widen(excess_core(a, b, options), a.slack() + b.slack());
}

CertifiedValue hausdorff(const ClosedSet& a, const ClosedSet& b, const CertOptions& options) {
  return max_of(excess(a, b, options), excess(b, a, options));
}

CertifiedValue hausdorff_lower(const ClosedSet& a, const ClosedSet& c, const CertOptions& options) {
  return excess(a, c, options);
}

CertifiedValue hausdorff_upper(const ClosedSet& a, const ClosedSet& c, const CertOptions& options) {
  return excess(c, a, options);
}

CertifiedValue sup_gap_on_ball(const ClosedSet& a, const ClosedSet& b, double j, const CertOptions& options) {
  require_same_ambient(a, b);
  if (!(j > 0.0)) throw ValidationError("sup_gap_on_ball: radius must be positive");
  if (a == b) return zero_for(a);
  const AmbientSpace& sp = a.ambient();
  const double slack = a.slack() + b.slack();
  if (sp.is_one_dimensional()) return widen(exact(Gap1D(a, b).sup(j), Method::exact_1d), slack);
  if (sp.kind() == SpaceKind::FiniteMetric) {
    double s = 0.0;
    for (std::size_t i = 0; i < sp.size(); ++i) {
      const Point x = point1(static_cast<double>(i));
      if (sp.raw_distance(sp.base_point(), x) < j) s = std::max(s, gap_at(a, b, x));
    }
    return widen(exact(s, Method::finite_max), slack);
  }
  return widen(grid_sup([&](const Point& x) { return gap_at(a, b, x); }, detail::Region::ball(sp.base_point(), j), 2.0,
                        options),
               slack);
}

CertifiedValue aw_distance(const ClosedSet& a, const ClosedSet& b, double tol, std::size_t max_evals) {
  require_same_ambient(a, b);
  if (!(tol > 0.0) || tol > 1.0) throw ValidationError("aw_distance: tol must lie in (0,1]");
  if (a == b) return zero_for(a);
  const std::size_t J = static_cast<std::size_t>(std::ceil(1.0 / tol));
  const AmbientSpace& sp = a.ambient();
  const double slack = a.slack() + b.slack();
  // The cap gets the default budget; `max_evals` bounds each per-j sup.
  const CertOptions hopts{tol / 4.0, std::max<std::size_t>(max_evals, CertOptions{}.max_evals)};
  const auto dh = hausdorff(a, b, hopts);
  const double cap = dh.hi.value_or(kInf);

  if (sp.is_one_dimensional()) {
    const Gap1D gap(a, b);
    auto v = aw_exact_loop([&](std::size_t j) { return gap.sup(static_cast<double>(j)); }, gap.saturation(), J, cap,
                           Method::exact_1d);
    return widen(v, slack, 1.0);
  }
  if (sp.kind() == SpaceKind::FiniteMetric) {
    double far = 0.0;
    for (std::size_t i = 0; i < sp.size(); ++i) far = std::max(far, sp.raw_distance(sp.base_point(), point1(static_cast<double>(i))));
    // Beyond j > far every point is in the open ball; sup(j) is constant for
    // j >= floor(far) + 1.
    auto v = aw_exact_loop([&](std::size_t j) { return sup_gap_on_ball(a, b, static_cast<double>(j)).hi.value(); },
                           std::floor(far) + 1.0, J, cap, Method::finite_max);
    return widen(v, slack, 1.0);
  }

  const double w = tol / 4.0;
  double lo = 0.0;
  double hi = 0.0;
  bool settled = false;
  for (std::size_t j = 1; j <= J; ++j) {
    // cap and lo each carry up to w of certification error.
    const double bound = std::min(inv(j), cap);
    if (bound <= lo + 2.0 * w) {
      hi = std::max(hi, bound);
      settled = true;
      break;
    }
    detail::MaximizeOptions mo;
    mo.lipschitz = 2.0;
    mo.target_width = w;
    mo.max_evals = max_evals;
    // sup of the gap over the whole space is d_H, so nothing above cap - w
    // is worth certifying.
    mo.stop_above = std::min(inv(j), cap - w);
    mo.give_up_below = lo + w;
    const auto r = detail::maximize([&](const Point& x) { return gap_at(a, b, x); },
                                    detail::Region::ball(sp.base_point(), static_cast<double>(j)), mo);
    lo = std::max(lo, std::min(inv(j), r.lo));
    hi = std::max(hi, std::min({inv(j), r.hi, cap}));
    if (r.lo >= inv(j)) {
      settled = true;
      break;
    }
  }
  if (!settled) hi = std::max(hi, std::min(inv(J + 1), cap));
  hi = std::max(hi, lo);
  return widen(bracket(lo, hi, Method::grid, w), slack, 1.0);
}

std::string to_string(MetricKind m) {
  switch (m) {
    case MetricKind::excess: return "excess";
    case MetricKind::hausdorff: return "hausdorff";
    case MetricKind::hausdorff_lower: return "hlower";
    case MetricKind::hausdorff_upper: return "hupper";
    case MetricKind::aw: return "aw";
  }
  return "?";
}

MetricKind parse_metric(const std::string& name) {
  for (MetricKind m : {MetricKind::excess, MetricKind::hausdorff, MetricKind::hausdorff_lower,
                       MetricKind::hausdorff_upper, MetricKind::aw})
    if (to_string(m) == name) return m;
  if (name == "H") return MetricKind::hausdorff;
  if (name == "H-") return MetricKind::hausdorff_lower;
  if (name == "H+") return MetricKind::hausdorff_upper;
  if (name == "AW") return MetricKind::aw;
  throw ValidationError("unknown metric '" + name + "' (expected excess, hausdorff, hlower, hupper or aw)");
}

CertifiedValue measure(MetricKind m, const ClosedSet& a, const ClosedSet& b, double tol) {
  switch (m) {
    case MetricKind::excess: return excess(a, b);
    case MetricKind::hausdorff: return hausdorff(a, b);
    case MetricKind::hausdorff_lower: return hausdorff_lower(a, b);
    case MetricKind::hausdorff_upper: return hausdorff_upper(a, b);
    case MetricKind::aw: return aw_distance(a, b, tol);
  }
  throw ValidationError("unknown metric");
}

std::size_t aw_index(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw ValidationError("aw_index: eps must lie in (0,1)");
  auto j = static_cast<std::size_t>(std::floor(1.0 / eps));
  if (j < 1) j = 1;
  while (j > 1 && inv(j) < eps) --j;
  while (inv(j + 1) >= eps) ++j;
  return j;
}

Decision aw_less_than(const ClosedSet& a, const ClosedSet& b, double eps, const CertOptions& options) {
  const std::size_t j = aw_index(eps);
  const auto s = sup_gap_on_ball(a, b, static_cast<double>(j), options);
  if (s.hi < ExtReal(eps)) return Decision::yes;
  if (s.lo >= ExtReal(eps)) return Decision::no;
  return Decision::indeterminate;
}

}  // namespace hyperspace
