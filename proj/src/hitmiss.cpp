#include "hyperspace/hitmiss.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "detail/maximize.hpp"

namespace hyperspace {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

const std::vector<Point>* listed_points(const ClosedSet& a) {
  if (const auto* fp = a.as<FinitePoints>()) return &fp->points;
  if (const auto* c = a.as<SampledCloud>()) return &c->points;
  return nullptr;
}

std::string fmt_point(const Point& p) {
  std::ostringstream os;
  os.precision(17);
  if (p.size() == 1) {
    os << p[0];
  } else {
    os << "(";
    for (Eigen::Index i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << ")";
  }
  return os.str();
}

// Parameter range of {p0 + t d : t in [t0, t1]} inside a closed box.
bool line_meets_box(const Point& p0, const Point& d, double t0, double t1, const Box& box) {
  for (Eigen::Index i = 0; i < p0.size(); ++i) {
    if (d[i] == 0.0) {
      if (p0[i] < box.lo[i] || p0[i] > box.hi[i]) return false;
      continue;
    }
    double a = (box.lo[i] - p0[i]) / d[i];
    double b = (box.hi[i] - p0[i]) / d[i];
    if (a > b) std::swap(a, b);
    t0 = std::max(t0, a);
    t1 = std::min(t1, b);
    if (t0 > t1) return false;
  }
  return true;
}

bool boxes_meet(const Box& a, const Box& b) {
  for (Eigen::Index i = 0; i < a.lo.size(); ++i)
    if (a.hi[i] < b.lo[i] || b.hi[i] < a.lo[i]) return false;
  return true;
}

bool disjoint_piece(const ClosedSet& a, const ClosedSet& p) {
  if (const auto* pts = listed_points(p)) {
    return std::all_of(pts->begin(), pts->end(), [&](const Point& x) { return a.raw_distance(x) > 0.0; });
  }
  if (const auto* pts = listed_points(a)) {
    return std::all_of(pts->begin(), pts->end(), [&](const Point& x) { return p.raw_distance(x) > 0.0; });
  }
  if (const auto* bu = p.as<BallUnion>()) {
    return std::all_of(bu->balls.begin(), bu->balls.end(),
                       [&](const Ball& b) { return a.raw_distance(b.center) > b.radius; });
  }
  if (const auto* bu = a.as<BallUnion>()) {
    return std::all_of(bu->balls.begin(), bu->balls.end(),
                       [&](const Ball& b) { return p.raw_distance(b.center) > b.radius; });
  }
  if (a.ambient().is_one_dimensional()) {
    for (const auto& x : components_1d(a))
      for (const auto& y : components_1d(p))
        if (!(x.hi < y.lo || y.hi < x.lo)) return false;
    return true;
  }
  if (const auto* pb = p.as<BoxUnion>()) {
    for (const auto& box : pb->boxes) {
      if (const auto* ab = a.as<BoxUnion>()) {
        for (const auto& other : ab->boxes)
          if (boxes_meet(other, box)) return false;
      } else if (const auto* su = a.as<SegmentUnion>()) {
        for (const auto& s : su->segments)
          if (line_meets_box(s.from, s.to - s.from, 0.0, 1.0, box)) return false;
      } else if (const auto* r = a.as<Ray>()) {
        if (line_meets_box(r->anchor, r->direction, 0.0, kInf, box)) return false;
      } else {
        throw UnsupportedError("misses: unsupported pair " + to_string(a.kind()) + " / " + to_string(p.kind()));
      }
    }
    return true;
  }
  throw UnsupportedError("misses: unsupported pair " + to_string(a.kind()) + " / " + to_string(p.kind()));
}

// Extreme points and centres of the pieces of a bounded set in R^n.
std::vector<Point> probe_points(const ClosedSet& a) {
  std::vector<Point> out;
  if (const auto* bu = a.as<BoxUnion>()) {
    for (const auto& b : bu->boxes) {
      out.push_back(b.lo);
      out.push_back(b.hi);
      out.push_back(0.5 * (b.lo + b.hi));
    }
  } else if (const auto* bl = a.as<BallUnion>()) {
    for (const auto& b : bl->balls) out.push_back(b.center);
  } else if (const auto* su = a.as<SegmentUnion>()) {
    for (const auto& s : su->segments) {
      out.push_back(s.from);
      out.push_back(s.to);
    }
  }
  return out;
}

// True when the convex piece (box / ball / segment) lies inside the closed
// convex piece `k` (point, interval, box, ball).
template <class Piece>
bool piece_inside(const Piece& piece, const ClosedSet& k);

bool point_in(const Point& x, const ClosedSet& k) { return k.raw_distance(x) == 0.0; }

template <>
bool piece_inside(const Box& b, const ClosedSet& k) {
  if (const auto* kb = k.as<BallUnion>()) {
    for (const auto& ball : kb->balls) {
      const Point far = (b.lo - ball.center).cwiseAbs().cwiseMax((b.hi - ball.center).cwiseAbs());
      if (far.norm() <= ball.radius) return true;
    }
    return false;
  }
  if (const auto* kx = k.as<BoxUnion>()) {
    for (const auto& box : kx->boxes)
      if ((box.lo.array() <= b.lo.array()).all() && (b.hi.array() <= box.hi.array()).all()) return true;
    return false;
  }
  return b.lo == b.hi && point_in(b.lo, k);
}

template <>
bool piece_inside(const Ball& b, const ClosedSet& k) {
  if (const auto* kb = k.as<BallUnion>()) {
    for (const auto& ball : kb->balls)
      if ((b.center - ball.center).norm() + b.radius <= ball.radius) return true;
    return false;
  }
  if (const auto* kx = k.as<BoxUnion>()) {
    for (const auto& box : kx->boxes)
      if ((box.lo.array() <= b.center.array() - b.radius).all() && (b.center.array() + b.radius <= box.hi.array()).all())
        return true;
    return false;
  }
  return b.radius == 0.0 && point_in(b.center, k);
}

template <>
bool piece_inside(const Segment& s, const ClosedSet& k) {
  if (k.as<BallUnion>() || k.as<BoxUnion>()) {
    // Convex pieces: the segment is inside one piece iff both ends are.
    if (const auto* kb = k.as<BallUnion>()) {
      for (const auto& ball : kb->balls)
        if ((s.from - ball.center).norm() <= ball.radius && (s.to - ball.center).norm() <= ball.radius) return true;
      return false;
    }
    for (const auto& box : k.as<BoxUnion>()->boxes) {
      const Box one{box.lo, box.hi};
      const Box sb{s.from.cwiseMin(s.to), s.from.cwiseMax(s.to)};
      if ((one.lo.array() <= sb.lo.array()).all() && (sb.hi.array() <= one.hi.array()).all()) return true;
    }
    return false;
  }
  return s.from == s.to && point_in(s.from, k);
}

template <class Piece>
bool piece_in_compact(const Piece& piece, const CompactSet& k) {
  return std::any_of(k.pieces().begin(), k.pieces().end(), [&](const ClosedSet& p) { return piece_inside(piece, p); });
}

// A ⊆ K.
bool inside_compact(const ClosedSet& a, const CompactSet& k) {
  if (!a.is_bounded()) return false;
  if (const auto* pts = listed_points(a)) {
    return std::all_of(pts->begin(), pts->end(), [&](const Point& x) { return k.contains(x); });
  }
  if (a.ambient().is_one_dimensional()) {
    std::vector<Interval> cover;
    for (const auto& p : k.pieces())
      for (const auto& iv : components_1d(p)) cover.push_back(iv);
    std::sort(cover.begin(), cover.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    std::vector<Interval> merged;
    for (const auto& iv : cover) {
      if (!merged.empty() && iv.lo <= merged.back().hi) {
        merged.back().hi = std::max(merged.back().hi, iv.hi);
      } else {
        merged.push_back(iv);
      }
    }
    for (const auto& iv : components_1d(a)) {
      const bool in = std::any_of(merged.begin(), merged.end(),
                                  [&](const Interval& m) { return m.lo <= iv.lo && iv.hi <= m.hi; });
      if (!in) return false;
    }
    return true;
  }
  bool all_in = true;
  if (const auto* bu = a.as<BoxUnion>()) {
    for (const auto& b : bu->boxes) all_in = all_in && piece_in_compact(b, k);
  } else if (const auto* bl = a.as<BallUnion>()) {
    for (const auto& b : bl->balls) all_in = all_in && piece_in_compact(b, k);
  } else if (const auto* su = a.as<SegmentUnion>()) {
    for (const auto& s : su->segments) all_in = all_in && piece_in_compact(s, k);
  }
  if (all_in) return true;
  for (const auto& x : probe_points(a))
    if (!k.contains(x)) return false;
  throw UnsupportedError("containment in a compact union is undecided for " + a.describe());
}

double ball_union_margin(const std::vector<OpenBall>& balls, const Point& x) {
  double best = kInf;
  for (const auto& b : balls) best = std::min(best, (x - b.center).norm() - b.radius);
  return best;
}

// sup over the piece of min_i(|x - c_i| - r_i): negative iff the piece lies
// inside the open-ball union.
bool region_inside(const detail::Region& region, const std::vector<OpenBall>& balls) {
  detail::MaximizeOptions mo;
  mo.lipschitz = 1.0;
  mo.target_width = 1e-12;
  mo.max_evals = 400000;
  mo.stop_above = 0.0;
  mo.give_up_below = -1e-12;
  const auto r = detail::maximize([&](const Point& x) { return ball_union_margin(balls, x); }, region, mo);
  if (r.hi < 0.0) return true;
  if (r.lo >= 0.0) return false;
  throw UnsupportedError("containment in an open-ball union is undecided at the available resolution");
}

bool covered_1d(const Interval& iv, std::vector<OpenBall> balls) {
  // Sweep: each step needs an open interval (c-r, c+r) strictly containing
  // the current point.
  double cur = iv.lo;
  while (true) {
    double reach = -kInf;
    for (const auto& b : balls)
      if (b.center[0] - b.radius < cur && cur < b.center[0] + b.radius) reach = std::max(reach, b.center[0] + b.radius);
    if (reach == -kInf) return false;
    if (reach > iv.hi) return true;
    cur = reach;
  }
}

}  // namespace

CompactSet CompactSet::of(std::vector<ClosedSet> pieces) {
  if (pieces.empty()) throw ValidationError("compact set: at least one piece required");
  for (const auto& p : pieces) {
    if (!p.is_bounded()) throw ValidationError("compact set: pieces must be bounded");
    if (p.kind() == RepKind::SampledCloud) throw ValidationError("compact set: sampled clouds are not exact pieces");
    require_same_ambient(p, pieces.front());
  }
  return CompactSet(std::move(pieces));
}

bool CompactSet::contains(const Point& x) const {
  return std::any_of(pieces_.begin(), pieces_.end(), [&](const ClosedSet& p) { return p.raw_distance(x) == 0.0; });
}

std::string CompactSet::describe() const {
  std::string s;
  for (const auto& p : pieces_) s += (s.empty() ? "" : " u ") + p.describe();
  return s;
}

OpenSet OpenSet::balls(SpacePtr space, std::vector<OpenBall> balls) {
  if (balls.empty()) throw ValidationError("open set: at least one ball required");
  for (const auto& b : balls) {
    if (!(b.radius > 0.0) || !std::isfinite(b.radius)) throw ValidationError("open set: radii must be positive");
    if (static_cast<std::size_t>(b.center.size()) != space->dimension()) throw DomainError("open set: centre dimension mismatch");
  }
  OpenSet u;
  u.space_ = std::move(space);
  u.balls_ = std::move(balls);
  return u;
}

OpenSet OpenSet::complement_of(CompactSet k) {
  OpenSet u;
  u.space_ = k.space();
  u.complement_ = std::move(k);
  return u;
}

bool OpenSet::contains(const Point& x) const {
  if (complement_) return !complement_->contains(x);
  return ball_union_margin(balls_, x) < 0.0;
}

std::string OpenSet::describe() const {
  if (complement_) return "complement(" + complement_->describe() + ")";
  std::string s;
  for (const auto& b : balls_) {
    std::ostringstream os;
    os.precision(17);
    os << "ball(" << fmt_point(b.center) << "," << b.radius << ")";
    s += (s.empty() ? "" : " u ") + os.str();
  }
  return s;
}

std::string to_string(Constraint::Kind kind) {
  switch (kind) {
    case Constraint::Kind::hit: return "hit";
    case Constraint::Kind::contain: return "contain";
    case Constraint::Kind::miss: return "miss";
  }
  return "?";
}

std::string Constraint::describe() const {
  return to_string(kind) + " " + (open ? open->describe() : compact->describe());
}

bool hits(const ClosedSet& a, const OpenSet& u) {
  if (!same_ambient(a.space(), u.space())) throw DomainError("hits: ambient mismatch");
  if (u.is_complement()) return !inside_compact(a, u.complement());
  return std::any_of(u.ball_list().begin(), u.ball_list().end(),
                     [&](const OpenBall& b) { return a.raw_distance(b.center) < b.radius; });
}

bool subset_of(const ClosedSet& a, const OpenSet& u) {
  if (!same_ambient(a.space(), u.space())) throw DomainError("subset_of: ambient mismatch");
  if (u.is_complement()) return misses(a, u.complement());
  const auto& balls = u.ball_list();
  if (!a.is_bounded()) return false;
  if (const auto* pts = listed_points(a)) {
    return std::all_of(pts->begin(), pts->end(), [&](const Point& x) { return ball_union_margin(balls, x) < 0.0; });
  }
  if (a.ambient().is_one_dimensional()) {
    for (const auto& iv : components_1d(a))
      if (!covered_1d(iv, balls)) return false;
    return true;
  }
  for (const auto& x : probe_points(a))
    if (ball_union_margin(balls, x) >= 0.0) return false;
  auto in_one_ball = [&](auto&& far_from) {
    return std::any_of(balls.begin(), balls.end(), [&](const OpenBall& b) { return far_from(b.center) < b.radius; });
  };
  if (const auto* bu = a.as<BoxUnion>()) {
    for (const auto& box : bu->boxes) {
      const bool one = in_one_ball([&](const Point& c) { return (box.lo - c).cwiseAbs().cwiseMax((box.hi - c).cwiseAbs()).norm(); });
      if (!one && !region_inside(detail::Region::box(box.lo, box.hi), balls)) return false;
    }
    return true;
  }
  if (const auto* bl = a.as<BallUnion>()) {
    for (const auto& ball : bl->balls) {
      const bool one = in_one_ball([&](const Point& c) { return (ball.center - c).norm() + ball.radius; });
      if (!one && !region_inside(detail::Region::ball(ball.center, ball.radius), balls)) return false;
    }
    return true;
  }
  if (const auto* su = a.as<SegmentUnion>()) {
    for (const auto& s : su->segments) {
      const bool one = in_one_ball([&](const Point& c) { return std::max((s.from - c).norm(), (s.to - c).norm()); });
      if (!one && !region_inside(detail::Region::segment(s.from, s.to), balls)) return false;
    }
    return true;
  }
  throw UnsupportedError("subset_of: unsupported representation " + to_string(a.kind()));
}

bool misses(const ClosedSet& a, const CompactSet& k) {
  if (!same_ambient(a.space(), k.space())) throw DomainError("misses: ambient mismatch");
  return std::all_of(k.pieces().begin(), k.pieces().end(), [&](const ClosedSet& p) { return disjoint_piece(a, p); });
}

bool satisfies(const ClosedSet& a, const Constraint& c) {
  switch (c.kind) {
    case Constraint::Kind::hit: return hits(a, *c.open);
    case Constraint::Kind::contain: return subset_of(a, *c.open);
    case Constraint::Kind::miss: return misses(a, *c.compact);
  }
  return false;
}

ConvergenceReport converges(const SetSequence& seq, const NeighborhoodSpec& nbhds, std::size_t horizon) {
  if (horizon < 1) throw ValidationError("converges: horizon must be >= 1");
  if (nbhds.constraints.empty()) throw ValidationError("converges: empty neighbourhood specification");
  const std::size_t n = nbhds.constraints.size();
  std::vector<std::size_t> last_fail(n, 0);
  std::vector<std::size_t> run_start(n, 0);
  for (std::size_t k = 1; k <= horizon; ++k) {
    std::optional<ClosedSet> member;
    try {
      member.emplace(seq(k));
    } catch (const std::exception& e) {
      throw Error("generator fault at index " + std::to_string(k) + ": " + e.what());
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (satisfies(*member, nbhds.constraints[i])) continue;
      if (last_fail[i] != k - 1 || k == 1) run_start[i] = k;
      last_fail[i] = k;
    }
  }
  ConvergenceReport report;
  report.horizon = horizon;
  report.pass = true;
  for (std::size_t i = 0; i < n; ++i) {
    ConstraintOutcome o;
    if (last_fail[i] < horizon) {
      o.entry = last_fail[i] + 1;
    } else {
      o.witness = run_start[i];
      report.pass = false;
    }
    report.outcomes.push_back(o);
  }
  return report;
}

std::string to_string(Topology t) {
  switch (t) {
    case Topology::lowerV: return "lowerV";
    case Topology::upperV: return "upperV";
    case Topology::fell: return "fell";
    case Topology::vietoris: return "vietoris";
  }
  return "?";
}

Topology parse_topology(const std::string& name) {
  for (Topology t : {Topology::lowerV, Topology::upperV, Topology::fell, Topology::vietoris})
    if (to_string(t) == name) return t;
  throw ValidationError("unknown topology '" + name + "' (expected lowerV, upperV, fell or vietoris)");
}

NeighborhoodSpec canonical_neighborhoods(const ClosedSet& a, Topology topology, double r, std::size_t m,
                                         const std::optional<CompactSet>& fell_miss) {
  if (!(r > 0.0)) throw ValidationError("canonical_neighborhoods: scale must be positive");
  if (m < 1) throw ValidationError("canonical_neighborhoods: at least one sample point required");
  NeighborhoodSpec spec;
  auto lower = [&] {
    for (const auto& p : sample_points(a, m))
      spec.constraints.push_back(Constraint::hit(OpenSet::balls(a.space(), {OpenBall{p, r}})));
  };
  auto upper = [&] {
    std::vector<OpenBall> balls;
    if (const auto* pts = listed_points(a)) {
      for (const auto& p : *pts) balls.push_back({p, r});
    } else if (const auto* iu = a.as<IntervalUnion>()) {
      for (const auto& iv : iu->intervals) balls.push_back({point1(0.5 * (iv.lo + iv.hi)), 0.5 * (iv.hi - iv.lo) + r});
    } else if (const auto* bu = a.as<BallUnion>()) {
      for (const auto& b : bu->balls) balls.push_back({b.center, b.radius + r});
    } else {
      throw UnsupportedError("upperV: N_r(A) is not a finite open-ball union for " + to_string(a.kind()));
    }
    spec.constraints.push_back(Constraint::contain(OpenSet::balls(a.space(), std::move(balls))));
  };
  switch (topology) {
    case Topology::lowerV:
      lower();
      break;
    case Topology::upperV:
      upper();
      break;
    case Topology::fell:
      lower();
      if (fell_miss) {
        if (!misses(a, *fell_miss)) throw ValidationError("fell: the supplied compact set meets A");
        spec.constraints.push_back(Constraint::miss(*fell_miss));
      }
      break;
    case Topology::vietoris:
      lower();
      upper();
      break;
  }
  return spec;
}

}  // namespace hyperspace
