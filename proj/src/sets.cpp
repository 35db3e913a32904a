#include "hyperspace/sets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hyperspace {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_euclidean_n(const SpacePtr& space, const char* what) {
  if (space->kind() != SpaceKind::EuclideanN) {
    throw DomainError(std::string(what) + " requires a EuclideanN ambient, got " + space->describe());
  }
}

void require_dim(const SpacePtr& space, const Point& p, const char* what) {
  if (static_cast<std::size_t>(p.size()) != space->dimension() || !p.allFinite()) {
    throw DomainError(std::string(what) + ": point dimension mismatch or non-finite coordinate in " + space->describe());
  }
}

double segment_distance(const Segment& s, const Point& x) {
  const Point d = s.to - s.from;
  const double len2 = d.squaredNorm();
  if (len2 == 0.0) return (x - s.from).norm();
  const double t = std::clamp((x - s.from).dot(d) / len2, 0.0, 1.0);
  return (x - (s.from + t * d)).norm();
}

double box_distance(const Box& b, const Point& x) {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double g = std::max({0.0, b.lo[i] - x[i], x[i] - b.hi[i]});
    acc += g * g;
  }
  return std::sqrt(acc);
}

double ray_distance(const Ray& r, const Point& x) {
  const double t = std::max(0.0, (x - r.anchor).dot(r.direction));
  return (x - (r.anchor + t * r.direction)).norm();
}

// Parameter range [t0, t1] of {from + t (to - from)} inside closed-ball(c, L),
// restricted to [tmin, tmax]. Returns false when empty.
bool clip_line_to_ball(const Point& from, const Point& dir, const Point& c, double radius, double tmin, double tmax,
                       double& t0, double& t1) {
  const double a = dir.squaredNorm();
  const Point w = from - c;
  if (a == 0.0) {
    if (w.norm() > radius) return false;
    t0 = tmin;
    t1 = tmax;
    return true;
  }
  const double b = w.dot(dir) / a;
  const double cc = (w.squaredNorm() - radius * radius) / a;
  const double disc = b * b - cc;
  if (disc < 0.0) return false;
  const double s = std::sqrt(disc);
  t0 = std::max(tmin, -b - s);
  t1 = std::min(tmax, -b + s);
  return t0 <= t1;
}

bool axis_aligned(const Point& d) {
  int nonzero = 0;
  for (Eigen::Index i = 0; i < d.size(); ++i) nonzero += d[i] != 0.0 ? 1 : 0;
  return nonzero <= 1;
}

std::vector<Point> sorted_unique(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a == b; }), pts.end());
  return pts;
}

std::vector<Point> evenly_pick(const std::vector<Point>& pts, std::size_t m) {
  if (m >= pts.size()) return pts;
  std::vector<Point> out;
  if (m == 1) return {pts.front()};
  for (std::size_t i = 0; i < m; ++i) out.push_back(pts[i * (pts.size() - 1) / (m - 1)]);
  return out;
}

}  // namespace

std::string to_string(RepKind kind) {
  switch (kind) {
    case RepKind::FinitePoints: return "points";
    case RepKind::IntervalUnion: return "intervals";
    case RepKind::BoxUnion: return "boxes";
    case RepKind::BallUnion: return "balls";
    case RepKind::Ray: return "ray";
    case RepKind::SegmentUnion: return "segments";
    case RepKind::SampledCloud: return "cloud";
  }
  return "?";
}

ClosedSet ClosedSet::points(SpacePtr space, std::vector<Point> pts) {
  if (pts.empty()) throw ValidationError("points: closed sets must be nonempty");
  for (const auto& p : pts) space->require(p);
  return ClosedSet(std::move(space), FinitePoints{sorted_unique(std::move(pts))});
}

ClosedSet ClosedSet::intervals(SpacePtr space, std::vector<Interval> ivs) {
  if (!space->is_one_dimensional()) throw DomainError("intervals require a line or open-interval ambient");
  if (ivs.empty()) throw ValidationError("intervals: closed sets must be nonempty");
  for (const auto& iv : ivs) {
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi) || iv.lo > iv.hi) {
      throw ValidationError("intervals: each interval needs finite lo <= hi");
    }
    if (space->kind() == SpaceKind::OpenInterval && !(space->lower() < iv.lo && iv.hi < space->upper())) {
      throw DomainError("intervals: endpoints must lie strictly inside " + space->describe());
    }
  }
  std::sort(ivs.begin(), ivs.end(), [](const Interval& a, const Interval& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  std::vector<Interval> merged;
  for (const auto& iv : ivs) {
    if (!merged.empty() && iv.lo <= merged.back().hi) {
      merged.back().hi = std::max(merged.back().hi, iv.hi);
    } else {
      merged.push_back(iv);
    }
  }
  return ClosedSet(std::move(space), IntervalUnion{std::move(merged)});
}

ClosedSet ClosedSet::boxes(SpacePtr space, std::vector<Box> boxes) {
  require_euclidean_n(space, "boxes");
  if (boxes.empty()) throw ValidationError("boxes: closed sets must be nonempty");
  for (const auto& b : boxes) {
    require_dim(space, b.lo, "boxes");
    require_dim(space, b.hi, "boxes");
    if ((b.lo.array() > b.hi.array()).any()) throw ValidationError("boxes: lo must not exceed hi");
  }
  return ClosedSet(std::move(space), BoxUnion{std::move(boxes)});
}

ClosedSet ClosedSet::balls(SpacePtr space, std::vector<Ball> balls) {
  require_euclidean_n(space, "balls");
  if (balls.empty()) throw ValidationError("balls: closed sets must be nonempty");
  for (const auto& b : balls) {
    require_dim(space, b.center, "balls");
    if (!(b.radius >= 0.0) || !std::isfinite(b.radius)) throw ValidationError("balls: radius must be finite and >= 0");
  }
  return ClosedSet(std::move(space), BallUnion{std::move(balls)});
}

ClosedSet ClosedSet::ray(SpacePtr space, Point anchor, Point direction) {
  require_euclidean_n(space, "ray");
  require_dim(space, anchor, "ray");
  require_dim(space, direction, "ray");
  const double n = direction.norm();
  if (!(n > 0.0)) throw ValidationError("ray: direction must be nonzero");
  return ClosedSet(std::move(space), Ray{std::move(anchor), direction / n});
}

ClosedSet ClosedSet::segments(SpacePtr space, std::vector<Segment> segs) {
  require_euclidean_n(space, "segments");
  if (segs.empty()) throw ValidationError("segments: closed sets must be nonempty");
  for (const auto& s : segs) {
    require_dim(space, s.from, "segments");
    require_dim(space, s.to, "segments");
  }
  return ClosedSet(std::move(space), SegmentUnion{std::move(segs)});
}

ClosedSet ClosedSet::cloud(SpacePtr space, std::vector<Point> pts, double resolution) {
  if (pts.empty()) throw ValidationError("cloud: closed sets must be nonempty");
  if (!(resolution >= 0.0) || !std::isfinite(resolution)) throw ValidationError("cloud: resolution must be finite and >= 0");
  for (const auto& p : pts) space->require(p);
  return ClosedSet(std::move(space), SampledCloud{sorted_unique(std::move(pts)), resolution});
}

double ClosedSet::slack() const {
  if (const auto* c = as<SampledCloud>()) return c->resolution;
  return 0.0;
}

double ClosedSet::raw_distance(const Point& x) const {
  const AmbientSpace& sp = *space_;
  auto min_over = [](const auto& items, auto&& f) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& it : items) best = std::min(best, f(it));
    return best;
  };
  return std::visit(
      overloaded{
          [&](const FinitePoints& fp) { return min_over(fp.points, [&](const Point& p) { return sp.raw_distance(x, p); }); },
          [&](const IntervalUnion& iu) {
            return min_over(iu.intervals, [&](const Interval& iv) { return std::max({0.0, iv.lo - x[0], x[0] - iv.hi}); });
          },
          [&](const BoxUnion& bu) { return min_over(bu.boxes, [&](const Box& b) { return box_distance(b, x); }); },
          [&](const BallUnion& bu) {
            return min_over(bu.balls, [&](const Ball& b) { return std::max(0.0, (x - b.center).norm() - b.radius); });
          },
          [&](const Ray& r) { return ray_distance(r, x); },
          [&](const SegmentUnion& su) { return min_over(su.segments, [&](const Segment& s) { return segment_distance(s, x); }); },
          [&](const SampledCloud& c) { return min_over(c.points, [&](const Point& p) { return sp.raw_distance(x, p); }); },
      },
      rep_);
}

bool ClosedSet::contains(const Point& x, double tol) const {
  if (!space_->contains(x)) return false;
  return raw_distance(x) <= tol;
}

std::string ClosedSet::describe() const {
  std::ostringstream os;
  os << to_string(kind()) << " in " << space_->describe();
  return os.str();
}

double dist_to_set(const Point& x, const ClosedSet& a) {
  a.ambient().require(x);
  return a.raw_distance(x);
}

bool is_bounded(const ClosedSet& a) { return a.is_bounded(); }

bool in_r_neighborhood(const Point& x, const ClosedSet& a, double r) { return dist_to_set(x, a) < r; }

void require_same_ambient(const ClosedSet& a, const ClosedSet& b) {
  if (!same_ambient(a.space(), b.space())) {
    throw DomainError("sets live in different ambients: " + a.ambient().describe() + " vs " + b.ambient().describe());
  }
}

std::optional<ClosedSet> truncate(const ClosedSet& a, double radius) {
  if (!(radius > 0.0)) throw ValidationError("truncate: radius must be positive");
  const AmbientSpace& sp = a.ambient();
  const Point& x0 = sp.base_point();
  const SpacePtr& space = a.space();

  auto keep_points = [&](const std::vector<Point>& pts) {
    std::vector<Point> kept;
    for (const auto& p : pts)
      if (sp.raw_distance(x0, p) <= radius) kept.push_back(p);
    return kept;
  };

  auto clip_segment = [&](const Point& from, const Point& to, double tmin, double tmax) -> std::optional<Segment> {
    double t0 = 0.0, t1 = 0.0;
    const Point dir = to - from;
    if (!clip_line_to_ball(from, dir, x0, radius, tmin, tmax, t0, t1)) return std::nullopt;
    return Segment{from + t0 * dir, from + t1 * dir};
  };

  auto segment_set = [&](std::vector<Segment> segs) -> ClosedSet {
    bool all_aligned = true;
    for (const auto& s : segs) all_aligned = all_aligned && axis_aligned(s.to - s.from);
    if (all_aligned) {
      std::vector<Box> boxes;
      for (const auto& s : segs) boxes.push_back(Box{s.from.cwiseMin(s.to), s.from.cwiseMax(s.to)});
      return ClosedSet::boxes(space, std::move(boxes));
    }
    return ClosedSet::segments(space, std::move(segs));
  };

  return std::visit(
      overloaded{
          [&](const FinitePoints& fp) -> std::optional<ClosedSet> {
            auto kept = keep_points(fp.points);
            if (kept.empty()) return std::nullopt;
            return ClosedSet::points(space, std::move(kept));
          },
          [&](const SampledCloud& c) -> std::optional<ClosedSet> {
            auto kept = keep_points(c.points);
            if (kept.empty()) return std::nullopt;
            return ClosedSet::cloud(space, std::move(kept), c.resolution);
          },
          [&](const IntervalUnion& iu) -> std::optional<ClosedSet> {
            std::vector<Interval> kept;
            for (const auto& iv : iu.intervals) {
              const double lo = std::max(iv.lo, x0[0] - radius);
              const double hi = std::min(iv.hi, x0[0] + radius);
              if (lo <= hi) kept.push_back({lo, hi});
            }
            if (kept.empty()) return std::nullopt;
            return ClosedSet::intervals(space, std::move(kept));
          },
          [&](const BoxUnion& bu) -> std::optional<ClosedSet> {
            std::vector<Box> kept;
            for (const auto& b : bu.boxes) {
              if (box_distance(b, x0) > radius) continue;
              const Point far = (b.lo - x0).cwiseAbs().cwiseMax((b.hi - x0).cwiseAbs());
              if (far.norm() <= radius) {
                kept.push_back(b);
                continue;
              }
              if (axis_aligned(b.hi - b.lo)) {
                if (auto s = clip_segment(b.lo, b.hi, 0.0, 1.0)) {
                  kept.push_back(Box{s->from.cwiseMin(s->to), s->from.cwiseMax(s->to)});
                }
                continue;
              }
              throw UnsupportedError("truncate: box partially overlapping the ball has no box representation");
            }
            if (kept.empty()) return std::nullopt;
            return ClosedSet::boxes(space, std::move(kept));
          },
          [&](const BallUnion& bu) -> std::optional<ClosedSet> {
            std::vector<Ball> kept;
            for (const auto& b : bu.balls) {
              const double dc = (b.center - x0).norm();
              if (dc - b.radius > radius) continue;
              if (dc + b.radius <= radius) {
                kept.push_back(b);
                continue;
              }
              throw UnsupportedError("truncate: ball partially overlapping the truncation ball has no ball representation");
            }
            if (kept.empty()) return std::nullopt;
            return ClosedSet::balls(space, std::move(kept));
          },
          [&](const Ray& r) -> std::optional<ClosedSet> {
            double t0 = 0.0, t1 = 0.0;
            if (!clip_line_to_ball(r.anchor, r.direction, x0, radius, 0.0, std::numeric_limits<double>::infinity(), t0, t1)) {
              return std::nullopt;
            }
            return segment_set({Segment{r.anchor + t0 * r.direction, r.anchor + t1 * r.direction}});
          },
          [&](const SegmentUnion& su) -> std::optional<ClosedSet> {
            std::vector<Segment> kept;
            for (const auto& s : su.segments)
              if (auto c = clip_segment(s.from, s.to, 0.0, 1.0)) kept.push_back(*c);
            if (kept.empty()) return std::nullopt;
            return segment_set(std::move(kept));
          },
      },
      a.rep());
}

ExtReal farthest_distance(const Point& p, const ClosedSet& a) {
  const AmbientSpace& sp = a.ambient();
  auto max_over = [](const auto& items, auto&& f) {
    double best = 0.0;
    for (const auto& it : items) best = std::max(best, f(it));
    return best;
  };
  return std::visit(
      overloaded{
          [&](const FinitePoints& fp) { return ExtReal(max_over(fp.points, [&](const Point& q) { return sp.raw_distance(p, q); })); },
          [&](const SampledCloud& c) {
            return ExtReal(max_over(c.points, [&](const Point& q) { return sp.raw_distance(p, q); }) + c.resolution);
          },
          [&](const IntervalUnion& iu) {
            return ExtReal(std::max(std::abs(p[0] - iu.intervals.front().lo), std::abs(p[0] - iu.intervals.back().hi)));
          },
          [&](const BoxUnion& bu) {
            return ExtReal(max_over(bu.boxes, [&](const Box& b) { return (b.lo - p).cwiseAbs().cwiseMax((b.hi - p).cwiseAbs()).norm(); }));
          },
          [&](const BallUnion& bu) {
            return ExtReal(max_over(bu.balls, [&](const Ball& b) { return (b.center - p).norm() + b.radius; }));
          },
          [&](const Ray&) { return ExtReal::infinity(); },
          [&](const SegmentUnion& su) {
            return ExtReal(max_over(su.segments, [&](const Segment& s) { return std::max((s.from - p).norm(), (s.to - p).norm()); }));
          },
      },
      a.rep());
}

std::vector<Point> sample_points(const ClosedSet& a, std::size_t m) {
  if (m == 0) return {};
  return std::visit(
      overloaded{
          [&](const FinitePoints& fp) { return evenly_pick(fp.points, m); },
          [&](const SampledCloud& c) { return evenly_pick(c.points, m); },
          [&](const IntervalUnion& iu) {
            std::vector<Point> pts;
            double total = 0.0;
            for (const auto& iv : iu.intervals) total += iv.hi - iv.lo;
            if (m == 1 || total == 0.0) {
              std::vector<Point> ends;
              for (const auto& iv : iu.intervals) {
                ends.push_back(point1(iv.lo));
                if (iv.hi > iv.lo) ends.push_back(point1(iv.hi));
              }
              return evenly_pick(ends, m);
            }
            for (std::size_t i = 0; i < m; ++i) {
              double s = total * static_cast<double>(i) / static_cast<double>(m - 1);
              for (const auto& iv : iu.intervals) {
                const double len = iv.hi - iv.lo;
                if (s <= len || &iv == &iu.intervals.back()) {
                  pts.push_back(point1(std::min(iv.lo + s, iv.hi)));
                  break;
                }
                s -= len;
              }
            }
            return pts;
          },
          [&](const BoxUnion& bu) {
            std::vector<Point> pts;
            for (const auto& b : bu.boxes) pts.push_back(0.5 * (b.lo + b.hi));
            for (const auto& b : bu.boxes) pts.push_back(b.lo);
            for (const auto& b : bu.boxes) pts.push_back(b.hi);
            pts.resize(std::min(m, pts.size()));
            return pts;
          },
          [&](const BallUnion& bu) {
            std::vector<Point> pts;
            for (const auto& b : bu.balls) pts.push_back(b.center);
            pts.resize(std::min(m, pts.size()));
            return pts;
          },
          [&](const Ray& r) {
            std::vector<Point> pts;
            for (std::size_t i = 0; i < m; ++i) pts.push_back(r.anchor + static_cast<double>(i) * r.direction);
            return pts;
          },
          [&](const SegmentUnion& su) {
            std::vector<Point> pts;
            for (const auto& s : su.segments) pts.push_back(s.from);
            for (const auto& s : su.segments) pts.push_back(s.to);
            for (const auto& s : su.segments) pts.push_back(0.5 * (s.from + s.to));
            pts.resize(std::min(m, pts.size()));
            return pts;
          },
      },
      a.rep());
}

std::size_t point_count(const ClosedSet& a) {
  if (const auto* fp = a.as<FinitePoints>()) return fp->points.size();
  if (const auto* c = a.as<SampledCloud>()) return c->points.size();
  return 0;
}

std::vector<Interval> components_1d(const ClosedSet& a) {
  if (!a.ambient().is_one_dimensional()) throw UnsupportedError("components_1d: ambient is not one-dimensional");
  if (const auto* iu = a.as<IntervalUnion>()) return iu->intervals;
  const std::vector<Point>* pts = nullptr;
  if (const auto* fp = a.as<FinitePoints>()) pts = &fp->points;
  if (const auto* c = a.as<SampledCloud>()) pts = &c->points;
  if (pts == nullptr) throw UnsupportedError("components_1d: unsupported representation " + to_string(a.kind()));
  std::vector<Interval> out;
  for (const auto& p : *pts) out.push_back({p[0], p[0]});
  return out;
}

namespace {

// Extreme points of a convex piece (boxes: vertices over free axes).
std::vector<Point> extreme_points(const Box& b) {
  std::vector<Eigen::Index> free;
  for (Eigen::Index i = 0; i < b.lo.size(); ++i)
    if (b.lo[i] < b.hi[i]) free.push_back(i);
  if (free.size() > 20) throw UnsupportedError("is_subset: too many box axes");
  std::vector<Point> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << free.size()); ++mask) {
    Point v = b.lo;
    for (std::size_t k = 0; k < free.size(); ++k)
      if (mask & (std::size_t{1} << k)) v[free[k]] = b.hi[free[k]];
    out.push_back(std::move(v));
  }
  return out;
}

// Single convex pieces of B as standalone sets.
std::vector<ClosedSet> convex_pieces(const ClosedSet& b) {
  std::vector<ClosedSet> out;
  const SpacePtr& sp = b.space();
  if (const auto* fp = b.as<FinitePoints>()) {
    for (const auto& p : fp->points) out.push_back(ClosedSet::points(sp, {p}));
  } else if (const auto* c = b.as<SampledCloud>()) {
    for (const auto& p : c->points) out.push_back(ClosedSet::points(sp, {p}));
  } else if (const auto* bu = b.as<BoxUnion>()) {
    for (const auto& x : bu->boxes) out.push_back(ClosedSet::boxes(sp, {x}));
  } else if (const auto* bl = b.as<BallUnion>()) {
    for (const auto& x : bl->balls) out.push_back(ClosedSet::balls(sp, {x}));
  } else if (const auto* su = b.as<SegmentUnion>()) {
    for (const auto& x : su->segments) out.push_back(ClosedSet::segments(sp, {x}));
  } else {
    out.push_back(b);  // ray
  }
  return out;
}

bool all_in(const std::vector<Point>& pts, const ClosedSet& piece) {
  return std::all_of(pts.begin(), pts.end(), [&](const Point& p) { return piece.raw_distance(p) == 0.0; });
}

bool ball_in_piece(const Ball& ball, const ClosedSet& piece) {
  if (ball.radius == 0.0) return piece.raw_distance(ball.center) == 0.0;
  if (const auto* bl = piece.as<BallUnion>()) {
    const Ball& o = bl->balls.front();
    return (ball.center - o.center).norm() + ball.radius <= o.radius;
  }
  if (const auto* bu = piece.as<BoxUnion>()) {
    const Box& o = bu->boxes.front();
    return (o.lo.array() <= ball.center.array() - ball.radius).all() &&
           (ball.center.array() + ball.radius <= o.hi.array()).all();
  }
  return false;  // a nondegenerate ball has interior; segments and rays do not
}

}  // namespace

bool is_subset(const ClosedSet& a, const ClosedSet& b) {
  require_same_ambient(a, b);
  if (a == b) return true;
  if (const auto* fp = a.as<FinitePoints>()) return all_in(fp->points, b);
  if (const auto* c = a.as<SampledCloud>()) return all_in(c->points, b);
  if (const auto* r = a.as<Ray>()) {
    const auto* rb = b.as<Ray>();
    return rb && rb->direction == r->direction && b.raw_distance(r->anchor) == 0.0;
  }
  if (a.ambient().is_one_dimensional()) {
    const auto bc = components_1d(b);
    for (const auto& iv : components_1d(a)) {
      const bool in = std::any_of(bc.begin(), bc.end(), [&](const Interval& m) { return m.lo <= iv.lo && iv.hi <= m.hi; });
      if (!in) return false;
    }
    return true;
  }
  const auto pieces = convex_pieces(b);
  auto fits = [&](auto&& test) { return std::any_of(pieces.begin(), pieces.end(), test); };
  bool undecided = false;
  auto handle = [&](bool in_one, const std::vector<Point>& pts) {
    if (in_one) return true;
    for (const auto& p : pts)
      if (b.raw_distance(p) > 0.0) return false;
    undecided = true;
    return true;
  };
  if (const auto* bu = a.as<BoxUnion>()) {
    for (const auto& box : bu->boxes) {
      const auto v = extreme_points(box);
      if (!handle(fits([&](const ClosedSet& p) { return all_in(v, p); }), v)) return false;
    }
  } else if (const auto* su = a.as<SegmentUnion>()) {
    for (const auto& s : su->segments) {
      const std::vector<Point> v{s.from, s.to};
      if (!handle(fits([&](const ClosedSet& p) { return all_in(v, p); }), v)) return false;
    }
  } else if (const auto* bl = a.as<BallUnion>()) {
    for (const auto& ball : bl->balls) {
      std::vector<Point> v{ball.center};
      for (Eigen::Index i = 0; i < ball.center.size(); ++i) {
        for (double s : {1.0, -1.0}) {
          Point p = ball.center;
          p[i] += s * ball.radius;
          v.push_back(p);
        }
      }
      if (!handle(fits([&](const ClosedSet& p) { return ball_in_piece(ball, p); }), v)) return false;
    }
  }
  if (undecided) throw UnsupportedError("is_subset: a piece of A is covered only jointly by pieces of B");
  return true;
}

namespace {

bool eq(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }
bool eq(const Box& a, const Box& b) { return a.lo == b.lo && a.hi == b.hi; }
bool eq(const Ball& a, const Ball& b) { return a.center == b.center && a.radius == b.radius; }
bool eq(const Segment& a, const Segment& b) { return a.from == b.from && a.to == b.to; }
bool eq(const Point& a, const Point& b) { return a == b; }

template <class T>
bool eq_list(const std::vector<T>& a, const std::vector<T>& b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](const T& x, const T& y) { return eq(x, y); });
}

}  // namespace

bool operator==(const ClosedSet& a, const ClosedSet& b) {
  if (a.kind() != b.kind() || !same_ambient(a.space(), b.space())) return false;
  return std::visit(
      overloaded{
          [&](const FinitePoints& x) { return eq_list(x.points, b.as<FinitePoints>()->points); },
          [&](const IntervalUnion& x) { return eq_list(x.intervals, b.as<IntervalUnion>()->intervals); },
          [&](const BoxUnion& x) { return eq_list(x.boxes, b.as<BoxUnion>()->boxes); },
          [&](const BallUnion& x) { return eq_list(x.balls, b.as<BallUnion>()->balls); },
          [&](const Ray& x) {
            const auto* y = b.as<Ray>();
            return x.anchor == y->anchor && x.direction == y->direction;
          },
          [&](const SegmentUnion& x) { return eq_list(x.segments, b.as<SegmentUnion>()->segments); },
          [&](const SampledCloud& x) {
            const auto* y = b.as<SampledCloud>();
            return x.resolution == y->resolution && eq_list(x.points, y->points);
          },
      },
      a.rep());
}

}  // namespace hyperspace
