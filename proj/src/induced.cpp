#include "hyperspace/induced.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace hyperspace {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

std::string num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

double pwl_eval(const std::vector<std::pair<double, double>>& k, double x) {
  const std::size_t n = k.size();
  if (x <= k.front().first) {
    const double s = (k[1].second - k[0].second) / (k[1].first - k[0].first);
    return k[0].second + s * (x - k[0].first);
  }
  if (x >= k.back().first) {
    const double s = (k[n - 1].second - k[n - 2].second) / (k[n - 1].first - k[n - 2].first);
    return k[n - 1].second + s * (x - k[n - 1].first);
  }
  auto it = std::upper_bound(k.begin(), k.end(), x, [](double v, const auto& p) { return v < p.first; });
  const auto& r = *it;
  const auto& l = *std::prev(it);
  if (x == l.first) return l.second;
  return l.second + (r.second - l.second) * (x - l.first) / (r.first - l.first);
}

double pwl_slope(const std::vector<std::pair<double, double>>& k, std::size_t i) {
  return (k[i + 1].second - k[i].second) / (k[i + 1].first - k[i].first);
}

Point eval(const MapSpec& f, const Point& x) {
  switch (f.kind()) {
    case MapSpec::Kind::Identity: return x;
    case MapSpec::Kind::Affine: return point1(f.slope() * x[0] + f.offset());
    case MapSpec::Kind::LinearMatrix: return f.matrix() * x;
    case MapSpec::Kind::SinReciprocal: return point1(std::sin(1.0 / x[0]));
    case MapSpec::Kind::ArctanOfDistance:
      return point1(std::atan(f.domain()->raw_distance(f.domain()->base_point(), x)));
    case MapSpec::Kind::PiecewiseLinear: return point1(pwl_eval(f.knots(), x[0]));
    case MapSpec::Kind::Composition: {
      Point y = x;
      for (auto it = f.parts().rbegin(); it != f.parts().rend(); ++it) y = eval(*it, y);
      return y;
    }
  }
  throw UnsupportedError("unknown map kind");
}

// Image of a closed bounded interval of the (1-D) domain.
Interval interval_image(const MapSpec& f, const Interval& iv) {
  switch (f.kind()) {
    case MapSpec::Kind::Identity: return iv;
    case MapSpec::Kind::Affine: {
      const double p = f.slope() * iv.lo + f.offset();
      const double q = f.slope() * iv.hi + f.offset();
      return {std::min(p, q), std::max(p, q)};
    }
    case MapSpec::Kind::PiecewiseLinear: {
      double lo = std::min(pwl_eval(f.knots(), iv.lo), pwl_eval(f.knots(), iv.hi));
      double hi = std::max(pwl_eval(f.knots(), iv.lo), pwl_eval(f.knots(), iv.hi));
      for (const auto& [x, y] : f.knots()) {
        if (iv.lo < x && x < iv.hi) {
          lo = std::min(lo, y);
          hi = std::max(hi, y);
        }
      }
      return {lo, hi};
    }
    case MapSpec::Kind::SinReciprocal: {
      const double u1 = 1.0 / iv.hi;
      const double u2 = 1.0 / iv.lo;
      if (u2 - u1 >= 2.0 * kPi) return {-1.0, 1.0};
      double lo = std::min(std::sin(u1), std::sin(u2));
      double hi = std::max(std::sin(u1), std::sin(u2));
      // Critical points pi/2 + k pi, where sine is exactly +1 or -1.
      const auto k0 = static_cast<long long>(std::ceil((u1 - kPi / 2) / kPi));
      const auto k1 = static_cast<long long>(std::floor((u2 - kPi / 2) / kPi));
      for (long long k = k0; k <= k1; ++k) {
        const double v = (k % 2 == 0) ? 1.0 : -1.0;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      return {lo, hi};
    }
    case MapSpec::Kind::ArctanOfDistance: {
      const double x0 = f.domain()->base_point()[0];
      const double dmin = (iv.lo <= x0 && x0 <= iv.hi) ? 0.0 : std::min(std::abs(iv.lo - x0), std::abs(iv.hi - x0));
      const double dmax = std::max(std::abs(iv.lo - x0), std::abs(iv.hi - x0));
      return {std::atan(dmin), std::atan(dmax)};
    }
    default:
      break;
  }
  throw UnsupportedError("induced_image: no interval image for " + f.describe());
}

bool is_similarity(const Matrix& m, double& scale) {
  if (m.rows() != m.cols()) return false;
  const Matrix g = m.transpose() * m;
  const double s2 = g(0, 0);
  if (!((g - s2 * Matrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <= 1e-12 * std::max(1.0, s2))) return false;
  scale = std::sqrt(s2);
  return true;
}

bool is_monomial(const Matrix& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if ((m.row(i).array() != 0.0).count() != 1) return false;
    if ((m.col(i).array() != 0.0).count() != 1) return false;
  }
  return true;
}

ClosedSet image_catalog(const MapSpec& f, const ClosedSet& a) {
  const SpacePtr& cod = f.codomain();
  if (f.kind() == MapSpec::Kind::Identity) {
    if (a.space() == cod) return a;
  }
  if (const auto* fp = a.as<FinitePoints>()) {
    std::vector<Point> pts;
    for (const auto& p : fp->points) pts.push_back(eval(f, p));
    return ClosedSet::points(cod, std::move(pts));
  }
  if (const auto* c = a.as<SampledCloud>()) {
    const auto lip = f.lipschitz();
    if (!lip) throw UnsupportedError("induced_image: sampled cloud needs a Lipschitz map");
    std::vector<Point> pts;
    for (const auto& p : c->points) pts.push_back(eval(f, p));
    return ClosedSet::cloud(cod, std::move(pts), *lip * c->resolution);
  }
  if (const auto* iu = a.as<IntervalUnion>()) {
    std::vector<Interval> out;
    for (const auto& iv : iu->intervals) out.push_back(interval_image(f, iv));
    return ClosedSet::intervals(cod, std::move(out));
  }

  if (f.kind() == MapSpec::Kind::ArctanOfDistance) {
    // Each piece is connected: its image is [atan(min d), atan(max d)], with
    // the supremum pi/2 adjoined by the closure for a ray.
    const Point& x0 = f.domain()->base_point();
    auto piece = [&](ClosedSet s) {
      const double dmin = s.raw_distance(x0);
      const ExtReal dmax = farthest_distance(x0, s);
      return Interval{std::atan(dmin), dmax.is_finite() ? std::atan(dmax.value()) : kPi / 2};
    };
    std::vector<Interval> out;
    if (const auto* bu = a.as<BoxUnion>()) {
      for (const auto& b : bu->boxes) out.push_back(piece(ClosedSet::boxes(a.space(), {b})));
    } else if (const auto* bl = a.as<BallUnion>()) {
      for (const auto& b : bl->balls) out.push_back(piece(ClosedSet::balls(a.space(), {b})));
    } else if (const auto* su = a.as<SegmentUnion>()) {
      for (const auto& s : su->segments) out.push_back(piece(ClosedSet::segments(a.space(), {s})));
    } else if (a.as<Ray>()) {
      out.push_back(piece(a));
    }
    if (!out.empty()) return ClosedSet::intervals(cod, std::move(out));
  }

  if (f.kind() == MapSpec::Kind::LinearMatrix || f.kind() == MapSpec::Kind::Identity) {
    const Matrix m = f.kind() == MapSpec::Kind::Identity
                         ? Matrix(Matrix::Identity(static_cast<Eigen::Index>(a.ambient().dimension()),
                                                   static_cast<Eigen::Index>(a.ambient().dimension())))
                         : f.matrix();
    if (const auto* r = a.as<Ray>()) {
      const Point dir = m * r->direction;
      if (dir.norm() == 0.0) return ClosedSet::points(cod, {m * r->anchor});
      return ClosedSet::ray(cod, m * r->anchor, dir);
    }
    if (const auto* su = a.as<SegmentUnion>()) {
      std::vector<Segment> out;
      for (const auto& s : su->segments) out.push_back({m * s.from, m * s.to});
      return ClosedSet::segments(cod, std::move(out));
    }
    if (const auto* bl = a.as<BallUnion>()) {
      double s = 0.0;
      if (!is_similarity(m, s)) throw UnsupportedError("induced_image: a ball's image is an ellipsoid unless M is a similarity");
      std::vector<Ball> out;
      for (const auto& b : bl->balls) out.push_back({m * b.center, s * b.radius});
      return ClosedSet::balls(cod, std::move(out));
    }
    if (const auto* bu = a.as<BoxUnion>()) {
      if (is_monomial(m)) {
        std::vector<Box> out;
        for (const auto& b : bu->boxes) {
          const Point p = m * b.lo, q = m * b.hi;
          out.push_back({p.cwiseMin(q), p.cwiseMax(q)});
        }
        return ClosedSet::boxes(cod, std::move(out));
      }
      std::vector<Segment> out;
      for (const auto& b : bu->boxes) {
        if ((b.hi - b.lo).cwiseAbs().array().cast<bool>().count() > 1) {
          throw UnsupportedError("induced_image: a box's image under a non-monomial matrix is not a box");
        }
        out.push_back({m * b.lo, m * b.hi});
      }
      return ClosedSet::segments(cod, std::move(out));
    }
  }
  throw UnsupportedError("induced_image: unsupported pair " + f.describe() + " / " + to_string(a.kind()));
}

ClosedSet image(const MapSpec& f, const ClosedSet& a) {
  if (f.kind() == MapSpec::Kind::Composition) {
    ClosedSet cur = a;
    for (auto it = f.parts().rbegin(); it != f.parts().rend(); ++it) cur = image(*it, cur);
    return cur;
  }
  return image_catalog(f, a);
}

// Range of a map with a one-dimensional codomain: an interval with open or
// closed ends, or a finite set of values.
struct Range1D {
  double lo = -kInf, hi = kInf;
  bool lo_closed = false, hi_closed = false;
  std::optional<std::vector<double>> values;
};

std::optional<Range1D> range_1d(const MapSpec& f) {
  const AmbientSpace& dom = *f.domain();
  Range1D r;
  switch (f.kind()) {
    case MapSpec::Kind::Identity:
      if (dom.kind() == SpaceKind::EuclideanLine) return r;
      if (dom.kind() == SpaceKind::OpenInterval) {
        r.lo = dom.lower();
        r.hi = dom.upper();
        return r;
      }
      return std::nullopt;
    case MapSpec::Kind::Affine:
      if (f.slope() == 0.0) {
        r.values = std::vector<double>{f.offset()};
      }
      return r;
    case MapSpec::Kind::SinReciprocal: {
      // (a,b) with a >= 0: 1/x covers (1/b, 1/a); a full period once the
      // span reaches 2 pi (always when a = 0).
      const Interval img = dom.lower() > 0.0 ? interval_image(f, {dom.lower(), dom.upper()}) : Interval{-1.0, 1.0};
      r.lo = img.lo;
      r.hi = img.hi;
      r.lo_closed = r.hi_closed = true;
      return r;
    }
    case MapSpec::Kind::ArctanOfDistance:
      r.lo = 0.0;
      r.lo_closed = true;
      if (dom.kind() == SpaceKind::FiniteMetric) {
        std::vector<double> v;
        for (std::size_t i = 0; i < dom.size(); ++i) v.push_back(std::atan(dom.raw_distance(dom.base_point(), point1(double(i)))));
        r.values = v;
      } else if (dom.kind() == SpaceKind::OpenInterval) {
        r.hi = std::atan(std::max(dom.base_point()[0] - dom.lower(), dom.upper() - dom.base_point()[0]));
      } else {
        r.hi = kPi / 2;
      }
      return r;
    case MapSpec::Kind::PiecewiseLinear: {
      const auto& k = f.knots();
      const double sl = pwl_slope(k, 0), sr = pwl_slope(k, k.size() - 2);
      double lo = kInf, hi = -kInf;
      for (const auto& [x, y] : k) {
        lo = std::min(lo, y);
        hi = std::max(hi, y);
      }
      r.lo_closed = r.hi_closed = true;
      r.lo = lo;
      r.hi = hi;
      if (sl > 0.0 || sr < 0.0) r.lo = -kInf, r.lo_closed = false;
      if (sl < 0.0 || sr > 0.0) r.hi = kInf, r.hi_closed = false;
      return r;
    }
    default:
      return std::nullopt;
  }
}

// |B ∩ range| capped at 2.
int count_in_range(const Range1D& r, const ClosedSet& b) {
  int count = 0;
  if (r.values) {
    for (double v : *r.values)
      if (b.raw_distance(point1(v)) == 0.0) ++count;
    return std::min(count, 2);
  }
  for (const auto& iv : components_1d(b)) {
    const double lo = std::max(iv.lo, r.lo);
    const double hi = std::min(iv.hi, r.hi);
    if (lo < hi) return 2;
    if (lo == hi) {
      const bool excluded = (lo == r.lo && !r.lo_closed) || (hi == r.hi && !r.hi_closed);
      if (!excluded) ++count;
    }
  }
  return std::min(count, 2);
}

double domain_radius(const AmbientSpace& dom) {
  if (dom.kind() == SpaceKind::OpenInterval) {
    return std::max(dom.base_point()[0] - dom.lower(), dom.upper() - dom.base_point()[0]);
  }
  double far = 0.0;
  for (std::size_t i = 0; i < dom.size(); ++i) far = std::max(far, dom.raw_distance(dom.base_point(), point1(double(i))));
  return far;
}

// Points at distance rho from the base point (within the domain).
std::vector<Point> sphere_points(const AmbientSpace& dom, double rho) {
  std::vector<Point> out;
  const Point& x0 = dom.base_point();
  switch (dom.kind()) {
    case SpaceKind::EuclideanLine:
    case SpaceKind::OpenInterval:
      for (double s : {1.0, -1.0}) {
        const Point p = point1(x0[0] + s * rho);
        if (dom.contains(p)) out.push_back(p);
      }
      break;
    case SpaceKind::EuclideanN: {
      const auto n = static_cast<Eigen::Index>(dom.dimension());
      for (Eigen::Index i = 0; i < n; ++i) {
        for (double s : {1.0, -1.0}) {
          Point p = x0;
          p[i] += s * rho;
          out.push_back(p);
        }
      }
      if (n >= 2) {
        for (int k = 0; k < 32; ++k) {
          Point p = x0;
          p[0] += rho * std::cos(2 * kPi * k / 32);
          p[1] += rho * std::sin(2 * kPi * k / 32);
          out.push_back(p);
        }
      }
      break;
    }
    case SpaceKind::FiniteMetric:
      for (std::size_t i = 0; i < dom.size(); ++i)
        if (dom.raw_distance(x0, point1(double(i))) >= rho) out.push_back(point1(double(i)));
      break;
  }
  return out;
}

PreimageReport bounded(double radius, bool certified, std::string note) {
  PreimageReport r;
  r.verdict = PreimageReport::Verdict::bounded_within;
  r.certified = certified;
  r.radius = radius;
  r.note = std::move(note);
  return r;
}

PreimageReport escape(std::vector<Point> witnesses, bool certified, std::string note) {
  PreimageReport r;
  r.verdict = PreimageReport::Verdict::escape_evidence;
  r.certified = certified;
  r.witnesses = std::move(witnesses);
  r.note = std::move(note);
  return r;
}

PreimageReport sampled_preimage(const MapSpec& f, const ClosedSet& b, const std::vector<double>& radii) {
  std::vector<Point> found;
  for (double rho : radii) {
    bool any = false;
    for (const auto& p : sphere_points(*f.domain(), rho)) {
      if (b.raw_distance(eval(f, p)) <= 1e-12) {
        found.push_back(p);
        any = true;
        break;
      }
    }
    if (!any) return bounded(radii.back(), false, "no preimage point found on the sphere of radius " + num(rho));
  }
  return escape(std::move(found), false, "preimage points found at every sampled radius");
}

}  // namespace

std::string to_string(Flag f) {
  switch (f) {
    case Flag::yes: return "yes";
    case Flag::no: return "no";
    case Flag::unknown: return "unknown";
  }
  return "?";
}

std::string to_string(MapSpec::Kind kind) {
  switch (kind) {
    case MapSpec::Kind::Identity: return "identity";
    case MapSpec::Kind::Affine: return "affine";
    case MapSpec::Kind::LinearMatrix: return "linear";
    case MapSpec::Kind::SinReciprocal: return "sinrecip";
    case MapSpec::Kind::ArctanOfDistance: return "arctan";
    case MapSpec::Kind::PiecewiseLinear: return "pwl";
    case MapSpec::Kind::Composition: return "compose";
  }
  return "?";
}

std::string to_string(PreimageReport::Verdict v) {
  switch (v) {
    case PreimageReport::Verdict::bounded_within: return "bounded-within";
    case PreimageReport::Verdict::escape_evidence: return "escape-evidence";
    case PreimageReport::Verdict::not_applicable: return "not-applicable";
  }
  return "?";
}

std::string to_string(Status s) {
  switch (s) {
    case Status::certified_true: return "certified-true";
    case Status::certified_false: return "certified-false";
    case Status::evidence_true: return "evidence-true";
    case Status::evidence_false: return "evidence-false";
    case Status::unknown: return "unknown";
  }
  return "?";
}

MapSpec MapSpec::identity(SpacePtr space) {
  MapSpec f;
  f.kind_ = Kind::Identity;
  f.domain_ = space;
  f.codomain_ = std::move(space);
  return f;
}

MapSpec MapSpec::affine(double a, double b, SpacePtr line) {
  if (line->kind() != SpaceKind::EuclideanLine) throw DomainError("affine maps act on the real line");
  if (!std::isfinite(a) || !std::isfinite(b)) throw ValidationError("affine: coefficients must be finite");
  MapSpec f;
  f.kind_ = Kind::Affine;
  f.a_ = a;
  f.b_ = b;
  f.domain_ = line;
  f.codomain_ = std::move(line);
  return f;
}

MapSpec MapSpec::linear(Matrix m, SpacePtr domain) {
  if (domain->kind() != SpaceKind::EuclideanN) throw DomainError("linear maps act on R^n");
  if (static_cast<std::size_t>(m.cols()) != domain->dimension()) throw DomainError("linear: matrix columns must match the domain dimension");
  if (!m.allFinite()) throw ValidationError("linear: entries must be finite");
  MapSpec f;
  f.kind_ = Kind::LinearMatrix;
  f.codomain_ = (m.rows() == m.cols() && domain->base_point().isZero(0.0))
                    ? domain
                    : share(AmbientSpace::euclidean(static_cast<std::size_t>(m.rows())));
  f.domain_ = std::move(domain);
  f.m_ = std::move(m);
  return f;
}

MapSpec MapSpec::sin_reciprocal(SpacePtr domain, SpacePtr codomain) {
  if (domain->kind() != SpaceKind::OpenInterval || domain->lower() < 0.0) {
    throw DomainError("sin(1/x) needs an open interval of positive reals as domain");
  }
  if (codomain->kind() != SpaceKind::EuclideanLine) throw DomainError("sin(1/x) maps into the real line");
  MapSpec f;
  f.kind_ = Kind::SinReciprocal;
  f.domain_ = std::move(domain);
  f.codomain_ = std::move(codomain);
  return f;
}

MapSpec MapSpec::arctan_of_distance(SpacePtr domain, SpacePtr codomain) {
  if (codomain->kind() != SpaceKind::EuclideanLine) throw DomainError("arctan of distance maps into the real line");
  MapSpec f;
  f.kind_ = Kind::ArctanOfDistance;
  f.domain_ = std::move(domain);
  f.codomain_ = std::move(codomain);
  return f;
}

MapSpec MapSpec::piecewise_linear(std::vector<std::pair<double, double>> knots, SpacePtr line, SpacePtr codomain) {
  if (line->kind() != SpaceKind::EuclideanLine) throw DomainError("piecewise-linear maps act on the real line");
  if (knots.size() < 2) throw ValidationError("pwl: at least two knots required");
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (!std::isfinite(knots[i].first) || !std::isfinite(knots[i].second)) throw ValidationError("pwl: knots must be finite");
    if (i > 0 && !(knots[i - 1].first < knots[i].first)) throw ValidationError("pwl: knot abscissae must increase strictly");
  }
  MapSpec f;
  f.kind_ = Kind::PiecewiseLinear;
  f.knots_ = std::move(knots);
  f.codomain_ = codomain ? std::move(codomain) : line;
  f.domain_ = std::move(line);
  return f;
}

MapSpec MapSpec::compose(std::vector<MapSpec> maps) {
  if (maps.empty()) throw ValidationError("compose: at least one map required");
  for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
    if (!same_ambient(maps[i].domain(), maps[i + 1].codomain())) {
      throw DomainError("compose: codomain of " + maps[i + 1].describe() + " is not the domain of " + maps[i].describe());
    }
  }
  if (maps.size() == 1) return maps.front();
  MapSpec f;
  f.kind_ = Kind::Composition;
  f.domain_ = maps.back().domain();
  f.codomain_ = maps.front().codomain();
  f.parts_ = std::move(maps);
  return f;
}

Point MapSpec::apply(const Point& x) const {
  domain_->require(x);
  return eval(*this, x);
}

std::optional<double> MapSpec::lipschitz() const {
  switch (kind_) {
    case Kind::Identity: return 1.0;
    case Kind::Affine: return std::abs(a_);
    case Kind::LinearMatrix: {
      Eigen::JacobiSVD<Matrix> svd(m_);
      return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
    }
    case Kind::SinReciprocal: return std::nullopt;
    case Kind::ArctanOfDistance: return 1.0;
    case Kind::PiecewiseLinear: {
      double l = 0.0;
      for (std::size_t i = 0; i + 1 < knots_.size(); ++i) l = std::max(l, std::abs(pwl_slope(knots_, i)));
      return l;
    }
    case Kind::Composition: {
      double l = 1.0;
      for (const auto& p : parts_) {
        const auto pl = p.lipschitz();
        if (!pl) return std::nullopt;
        l *= *pl;
      }
      return l;
    }
  }
  return std::nullopt;
}

Flag MapSpec::boundedness_preserving() const {
  if (kind_ != Kind::Composition) return Flag::yes;
  for (const auto& p : parts_)
    if (p.boundedness_preserving() != Flag::yes) return Flag::unknown;
  return Flag::yes;
}

Flag MapSpec::uniformly_continuous_on_bounded() const {
  if (lipschitz()) return Flag::yes;
  if (kind_ == Kind::SinReciprocal) return Flag::no;
  return Flag::unknown;
}

std::optional<double> MapSpec::modulus(double eps) const {
  if (!(eps > 0.0)) throw ValidationError("modulus: eps must be positive");
  const auto l = lipschitz();
  if (!l) return std::nullopt;
  if (*l == 0.0) return kInf;
  return eps / *l;
}

std::string MapSpec::describe() const {
  switch (kind_) {
    case Kind::Identity: return "identity";
    case Kind::Affine: return "affine(" + num(a_) + "," + num(b_) + ")";
    case Kind::LinearMatrix: {
      std::string s = "linear([";
      for (Eigen::Index i = 0; i < m_.rows(); ++i) {
        s += i ? ",[" : "[";
        for (Eigen::Index j = 0; j < m_.cols(); ++j) s += (j ? "," : "") + num(m_(i, j));
        s += "]";
      }
      return s + "])";
    }
    case Kind::SinReciprocal: return "sinrecip";
    case Kind::ArctanOfDistance: return "arctan";
    case Kind::PiecewiseLinear: {
      std::string s = "pwl(";
      for (std::size_t i = 0; i < knots_.size(); ++i)
        s += (i ? ",(" : "(") + num(knots_[i].first) + "," + num(knots_[i].second) + ")";
      return s + ")";
    }
    case Kind::Composition: {
      std::string s = "compose(";
      for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? ";" : "") + parts_[i].describe();
      return s + ")";
    }
  }
  return "?";
}

ClosedSet induced_image(const MapSpec& f, const ClosedSet& a) {
  if (!same_ambient(a.space(), f.domain())) {
    throw DomainError("induced_image: set lives in " + a.ambient().describe() + ", map domain is " + f.domain()->describe());
  }
  return image(f, a);
}

PreimageReport check_preimage_boundedness(const MapSpec& f, const ClosedSet& b, const std::vector<double>& radii) {
  if (!same_ambient(b.space(), f.codomain())) throw DomainError("check_preimage_boundedness: B is not in the codomain");
  if (!b.is_bounded()) throw ValidationError("check_preimage_boundedness: B must be bounded");
  if (radii.empty()) throw ValidationError("check_preimage_boundedness: empty radius schedule");
  const AmbientSpace& dom = *f.domain();
  const Point& x0 = dom.base_point();

  // |B ∩ f(X)| > 1.
  if (f.codomain()->is_one_dimensional()) {
    if (const auto r = range_1d(f)) {
      if (count_in_range(*r, b) < 2) {
        PreimageReport rep;
        rep.certified = true;
        rep.note = "B meets the range of f in at most one point";
        return rep;
      }
    }
  } else if (point_count(b) == 1) {
    PreimageReport rep;
    rep.certified = true;
    rep.note = "B is a single point";
    return rep;
  }

  if (dom.kind() == SpaceKind::OpenInterval || dom.kind() == SpaceKind::FiniteMetric) {
    return bounded(domain_radius(dom), true, "the domain is bounded");
  }

  switch (f.kind()) {
    case MapSpec::Kind::Identity: {
      return bounded(farthest_distance(x0, b).value(), true, "preimage = B");
    }
    case MapSpec::Kind::Affine: {
      double r = 0.0;
      for (const auto& iv : components_1d(b))
        for (double y : {iv.lo, iv.hi}) r = std::max(r, std::abs((y - f.offset()) / f.slope() - x0[0]));
      return bounded(r, true, "preimage = (B - b) / a");
    }
    case MapSpec::Kind::ArctanOfDistance: {
      double top = 0.0;
      for (const auto& iv : components_1d(b)) {
        if (iv.lo < kPi / 2 && kPi / 2 <= iv.hi) {
          std::vector<Point> w;
          for (double rho : radii) {
            double d = std::max(rho, std::tan(std::max(iv.lo, 0.0)));
            while (std::atan(d) < iv.lo) d *= 1.0 + 1e-12;
            Point p = x0;
            p[0] += d;
            w.push_back(p);
          }
          return escape(std::move(w), true, "B contains [" + num(iv.lo) + ", pi/2): every radius has preimage points");
        }
        if (iv.lo < kPi / 2) top = std::max(top, iv.hi);
      }
      return bounded(std::tan(std::max(top, 0.0)), true, "preimage lies where d(x0,x) <= tan(sup B)");
    }
    case MapSpec::Kind::PiecewiseLinear: {
      const auto& k = f.knots();
      const auto comps = components_1d(b);
      double r = 0.0;
      const std::size_t n = k.size();
      // Pieces: left tail, inner segments, right tail.
      for (std::size_t i = 0; i + 1 <= n; ++i) {
        const bool left_tail = (i == 0);
        const double xl = left_tail ? -kInf : k[i - 1].first;
        const double xr = left_tail ? k[0].first : k[i].first;
        const double s = left_tail ? pwl_slope(k, 0) : pwl_slope(k, i - 1);
        const double xa = left_tail ? k[0].first : k[i - 1].first;
        const double ya = left_tail ? k[0].second : k[i - 1].second;
        for (const auto& iv : comps) {
          double lo, hi;
          if (s == 0.0) {
            if (ya < iv.lo || ya > iv.hi) continue;
            lo = xl;
            hi = xr;
          } else {
            lo = xa + (iv.lo - ya) / s;
            hi = xa + (iv.hi - ya) / s;
            if (lo > hi) std::swap(lo, hi);
            lo = std::max(lo, xl);
            hi = std::min(hi, xr);
            if (lo > hi) continue;
          }
          if (!std::isfinite(lo)) {
            std::vector<Point> w;
            for (double rho : radii) w.push_back(point1(std::min(x0[0] - rho, k[0].first)));
            return escape(std::move(w), true, "constant left tail lies in B");
          }
          r = std::max({r, std::abs(lo - x0[0]), std::abs(hi - x0[0])});
        }
      }
      {
        const double s = pwl_slope(k, n - 2);
        const double ya = k[n - 1].second;
        for (const auto& iv : comps) {
          double lo, hi;
          if (s == 0.0) {
            if (ya < iv.lo || ya > iv.hi) continue;
            std::vector<Point> w;
            for (double rho : radii) w.push_back(point1(std::max(x0[0] + rho, k[n - 1].first)));
            return escape(std::move(w), true, "constant right tail lies in B");
          }
          lo = k[n - 1].first + (iv.lo - ya) / s;
          hi = k[n - 1].first + (iv.hi - ya) / s;
          if (lo > hi) std::swap(lo, hi);
          lo = std::max(lo, k[n - 1].first);
          if (lo > hi) continue;
          r = std::max({r, std::abs(lo - x0[0]), std::abs(hi - x0[0])});
        }
      }
      return bounded(r, true, "exact piecewise preimage");
    }
    case MapSpec::Kind::LinearMatrix: {
      const Matrix& m = f.matrix();
      Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
      const auto& sv = svd.singularValues();
      const double smin = (m.rows() == m.cols() && sv.size()) ? sv(sv.size() - 1) : 0.0;
      if (m.rows() == m.cols() && smin > 1e-12 * std::max(1.0, sv(0))) {
        if (const auto* fp = b.as<FinitePoints>()) {
          double r = 0.0;
          const auto lu = m.fullPivLu();
          for (const auto& y : fp->points) r = std::max(r, (Point(lu.solve(y)) - x0).norm());
          return bounded(r, true, "preimage = M^-1 B");
        }
        const double far = farthest_distance(Point::Zero(x0.size()), b).value();
        return bounded(far / smin + x0.norm(), true, "|x - x0| <= |Mx| / sigma_min + |x0|");
      }
      if (const auto* fp = b.as<FinitePoints>()) {
        // Singular: any point of B in the range has a kernel coset as preimage.
        const Point k = svd.matrixV().col(svd.matrixV().cols() - 1);
        for (const auto& y : fp->points) {
          const Point x = svd.solve(y);
          if ((m * x - y).norm() <= 1e-12 * std::max(1.0, y.norm())) {
            std::vector<Point> w;
            for (double rho : radii) w.push_back(x + (rho + (x - x0).norm()) * k);
            return escape(std::move(w), true, "B meets the range of a singular matrix: the preimage contains a kernel line");
          }
        }
      }
      return sampled_preimage(f, b, radii);
    }
    default:
      return sampled_preimage(f, b, radii);
  }
}

ModulusResult estimate_uniform_modulus(const MapSpec& f, const ClosedSet& a, double eps, std::size_t trials,
                                       double delta_min, std::uint64_t seed) {
  if (!(eps > 0.0)) throw ValidationError("estimate_uniform_modulus: eps must be positive");
  if (!same_ambient(a.space(), f.domain())) throw DomainError("estimate_uniform_modulus: A is not in the domain");
  bool image_bounded = false;
  try {
    image_bounded = induced_image(f, a).is_bounded();
  } catch (const UnsupportedError&) {
    image_bounded = a.is_bounded() && f.boundedness_preserving() == Flag::yes;
  }
  if (!image_bounded) throw NotApplicableError("estimate_uniform_modulus: f(A) is unbounded");

  ModulusResult res;
  if (const auto d = f.modulus(eps)) {
    res.delta = *d;
    res.certified = true;
    return res;
  }

  const AmbientSpace& dom = *f.domain();
  const auto fa = std::max<std::size_t>(point_count(a), 64);
  const std::vector<Point> base = sample_points(a, fa);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const auto n = static_cast<Eigen::Index>(dom.dimension());

  auto check = [&](const Point& p, const Point& x, double delta) -> std::optional<ModulusCounterexample> {
    if (!dom.contains(x)) return std::nullopt;
    const double din = dom.raw_distance(p, x);
    if (!(din < delta)) return std::nullopt;
    const double dout = f.codomain()->raw_distance(eval(f, p), eval(f, x));
    if (dout >= eps) return ModulusCounterexample{p, x, din, dout};
    return std::nullopt;
  };

  std::optional<ModulusCounterexample> last;
  for (double delta = eps; delta >= delta_min; delta *= 0.5) {
    std::optional<ModulusCounterexample> found;
    if (f.kind() == MapSpec::Kind::SinReciprocal) {
      // Quarter-period shifts of 1/x move sin(1/x) by up to 1.
      for (const auto& p : base) {
        for (double shift : {kPi / 2, -kPi / 2}) {
          const double u = 1.0 / p[0] + shift;
          if (u <= 0.0) continue;
          if ((found = check(p, point1(1.0 / u), delta))) break;
        }
        ++res.trials;
        if (found) break;
      }
    }
    for (std::size_t t = 0; !found && t < trials && dom.kind() != SpaceKind::FiniteMetric; ++t) {
      const Point& p = base[rng() % base.size()];
      Point x = p;
      for (Eigen::Index i = 0; i < n; ++i) x[i] += delta * unit(rng) / std::sqrt(double(n));
      found = check(p, x, delta);
      ++res.trials;
    }
    if (dom.kind() == SpaceKind::FiniteMetric) {
      for (const auto& p : base) {
        for (std::size_t i = 0; i < dom.size() && !found; ++i) found = check(p, point1(double(i)), delta);
        ++res.trials;
        if (found) break;
      }
    }
    if (!found) {
      res.delta = delta;
      return res;
    }
    last = found;
  }
  res.counterexample = last;
  return res;
}

WitnessRecord uniform_continuity_witness(const MapSpec& f, const std::vector<std::pair<Point, Point>>& pairs,
                                         std::size_t m, double eps, double tol) {
  if (pairs.empty()) throw ValidationError("uniform_continuity_witness: empty pair list");
  if (m < 1 || m > pairs.size()) throw ValidationError("uniform_continuity_witness: m must lie in [1, N]");
  const AmbientSpace& dom = *f.domain();
  const AmbientSpace& cod = *f.codomain();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [a, x] = pairs[i];
    const double n = static_cast<double>(i + 1);
    if (!(dom.distance(a, x) < 1.0 / n)) {
      throw ValidationError("uniform_continuity_witness: d(a_n, x_n) >= 1/n at n = " + std::to_string(i + 1));
    }
    if (!(cod.distance(eval(f, a), eval(f, x)) >= eps)) {
      throw ValidationError("uniform_continuity_witness: image gap below eps at n = " + std::to_string(i + 1));
    }
  }
  std::vector<Point> xs;
  for (const auto& pr : pairs) xs.push_back(pr.second);
  std::vector<Point> cs;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (i + 1 != m) cs.push_back(pairs[i].second);
  cs.push_back(pairs[m - 1].first);
  ClosedSet b = ClosedSet::points(f.domain(), xs);
  ClosedSet c = ClosedSet::points(f.domain(), cs);
  ClosedSet fb = induced_image(f, b);
  ClosedSet fc = induced_image(f, c);
  const auto in = aw_distance(b, c, tol);
  const auto out = aw_distance(fb, fc, tol);
  return WitnessRecord{b, c, dom.distance(pairs[m - 1].first, pairs[m - 1].second), in, out, fb, fc};
}

ConditionsReport aw_continuity_conditions(const MapSpec& f) {
  ConditionsReport rep;
  const AmbientSpace& dom = *f.domain();
  const bool bounded_domain = dom.is_bounded();

  // Condition 1.
  if (f.lipschitz()) {
    rep.cond1 = Status::certified_true;
  } else if (f.kind() == MapSpec::Kind::SinReciprocal) {
    // a_n = 1/(2 pi n), x_n = 1/(2 pi n + pi/2): d -> 0, image gap 1, and
    // f({a_n}) is bounded.
    rep.cond1 = Status::certified_false;
  } else {
    std::vector<Point> pts;
    const Point& x0 = dom.base_point();
    for (int k = 0; k <= 40; ++k) {
      Point p = x0;
      if (dom.kind() == SpaceKind::OpenInterval) {
        p[0] = dom.lower() + (x0[0] - dom.lower()) * std::pow(0.5, k);
      } else if (dom.kind() != SpaceKind::FiniteMetric) {
        p[0] += -1.0 + k / 20.0;
      }
      if (dom.contains(p)) pts.push_back(p);
    }
    try {
      const auto mod = estimate_uniform_modulus(f, ClosedSet::points(f.domain(), pts), 0.5);
      rep.trials += mod.trials;
      rep.cond1 = mod.counterexample ? Status::evidence_false : Status::evidence_true;
    } catch (const Error&) {
      rep.cond1 = Status::unknown;
    }
  }

  // Condition 2.
  switch (f.kind()) {
    case MapSpec::Kind::Identity:
      rep.cond2 = Status::certified_true;
      break;
    case MapSpec::Kind::Affine:
      rep.cond2 = f.slope() != 0.0 ? Status::certified_true : Status::certified_false;
      break;
    case MapSpec::Kind::SinReciprocal:
      rep.cond2 = Status::certified_true;
      break;
    case MapSpec::Kind::ArctanOfDistance:
      rep.cond2 = bounded_domain ? Status::certified_true : Status::certified_false;
      break;
    case MapSpec::Kind::PiecewiseLinear: {
      const auto& k = f.knots();
      const bool flat = pwl_slope(k, 0) == 0.0 || pwl_slope(k, k.size() - 2) == 0.0;
      rep.cond2 = flat ? Status::certified_false : Status::certified_true;
      break;
    }
    case MapSpec::Kind::LinearMatrix: {
      if (bounded_domain) {
        rep.cond2 = Status::certified_true;
        break;
      }
      Eigen::FullPivLU<Matrix> lu(f.matrix());
      rep.cond2 = lu.dimensionOfKernel() == 0 ? Status::certified_true : Status::certified_false;
      break;
    }
    case MapSpec::Kind::Composition: {
      if (bounded_domain) {
        rep.cond2 = Status::certified_true;
        break;
      }
      const Point y0 = eval(f, dom.base_point());
      ClosedSet probe = f.codomain()->is_one_dimensional()
                            ? ClosedSet::intervals(f.codomain(), {{y0[0] - 1.0, y0[0] + 1.0}})
                            : ClosedSet::balls(f.codomain(), {Ball{y0, 1.0}});
      try {
        const auto pre = check_preimage_boundedness(f, probe);
        rep.trials += 1;
        if (pre.verdict == PreimageReport::Verdict::escape_evidence) {
          rep.cond2 = pre.certified ? Status::certified_false : Status::evidence_false;
        } else if (pre.verdict == PreimageReport::Verdict::bounded_within) {
          rep.cond2 = Status::evidence_true;
        }
      } catch (const Error&) {
        rep.cond2 = Status::unknown;
      }
      break;
    }
  }

  if (rep.cond1 == Status::certified_true && rep.cond2 == Status::certified_true) {
    rep.overall = "satisfied";
  } else if (rep.cond1 == Status::certified_false || rep.cond2 == Status::certified_false) {
    rep.overall = "violated";
  } else {
    rep.overall = "undetermined";
  }
  return rep;
}

ProbeReport probe_induced_continuity(const MapSpec& f, const ClosedSet& a, MetricKind metric, const SetSequence& perturb,
                                     std::size_t count, const std::vector<double>& schedule, double eps, double tol) {
  if (schedule.empty()) throw ValidationError("probe: empty delta schedule");
  const ClosedSet fa = induced_image(f, a);
  ProbeReport rep;
  for (std::size_t k = 1; k <= count; ++k) {
    std::optional<ClosedSet> b;
    try {
      b.emplace(perturb(k));
    } catch (const std::exception& e) {
      throw Error("generator fault at index " + std::to_string(k) + ": " + e.what());
    }
    const auto din = measure(metric, a, *b, tol);
    const auto dout = measure(metric, fa, induced_image(f, *b), tol);
    rep.rows.push_back(ProbeRow{k, din, dout});
  }
  auto violates = [&](const ProbeRow& r, double delta) {
    return r.d_in.hi < ExtReal(delta) && r.d_out.lo > ExtReal(eps);
  };
  rep.violation = true;
  for (double delta : schedule) {
    const bool any = std::any_of(rep.rows.begin(), rep.rows.end(), [&](const ProbeRow& r) { return violates(r, delta); });
    if (!any) {
      rep.violation = false;
      break;
    }
  }
  if (rep.violation) {
    const double smallest = *std::min_element(schedule.begin(), schedule.end());
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
      if (!violates(rep.rows[i], smallest)) continue;
      if (!rep.witness_row || rep.rows[i].d_in.hi < rep.rows[*rep.witness_row].d_in.hi) rep.witness_row = i;
    }
  }
  return rep;
}

}  // namespace hyperspace
