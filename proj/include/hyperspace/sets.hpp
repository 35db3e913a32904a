#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hyperspace/ext_real.hpp"
#include "hyperspace/spaces.hpp"

namespace hyperspace {

struct Interval {
  double lo;
  double hi;
};

/// Closed axis-aligned box [lo, hi] (degenerate axes allowed).
struct Box {
  Point lo;
  Point hi;
};

/// Closed ball.
struct Ball {
  Point center;
  double radius;
};

/// Closed line segment between two points.
struct Segment {
  Point from;
  Point to;
};

struct FinitePoints {
  std::vector<Point> points;  // sorted lexicographically, no duplicates
};

struct IntervalUnion {
  std::vector<Interval> intervals;  // sorted, pairwise disjoint
};

struct BoxUnion {
  std::vector<Box> boxes;
};

struct BallUnion {
  std::vector<Ball> balls;
};

/// {anchor + t * direction : t >= 0}, direction of unit length.
struct Ray {
  Point anchor;
  Point direction;
};

struct SegmentUnion {
  std::vector<Segment> segments;
};

/// Finite sample standing in for a closed set within Hausdorff distance
/// `resolution` of the listed points.
struct SampledCloud {
  std::vector<Point> points;
  double resolution;
};

using Representation =
    std::variant<FinitePoints, IntervalUnion, BoxUnion, BallUnion, Ray, SegmentUnion, SampledCloud>;

enum class RepKind { FinitePoints, IntervalUnion, BoxUnion, BallUnion, Ray, SegmentUnion, SampledCloud };

std::string to_string(RepKind kind);

/// A nonempty closed subset of an ambient space. Immutable value; the
/// factories validate and normalise their input.
class ClosedSet {
 public:
  static ClosedSet points(SpacePtr space, std::vector<Point> pts);
  /// Intervals are sorted and overlapping pieces merged.
  static ClosedSet intervals(SpacePtr space, std::vector<Interval> ivs);
  static ClosedSet boxes(SpacePtr space, std::vector<Box> boxes);
  static ClosedSet balls(SpacePtr space, std::vector<Ball> balls);
  /// `direction` is normalised; it must be nonzero.
  static ClosedSet ray(SpacePtr space, Point anchor, Point direction);
  static ClosedSet segments(SpacePtr space, std::vector<Segment> segs);
  static ClosedSet cloud(SpacePtr space, std::vector<Point> pts, double resolution);

  const AmbientSpace& ambient() const { return *space_; }
  const SpacePtr& space() const { return space_; }
  const Representation& rep() const { return rep_; }
  RepKind kind() const { return static_cast<RepKind>(rep_.index()); }

  template <class T>
  const T* as() const { return std::get_if<T>(&rep_); }

  /// Declared Hausdorff slack of the representation (nonzero only for
  /// SampledCloud).
  double slack() const;

  bool is_bounded() const { return kind() != RepKind::Ray; }

  /// Distance from `x` to the set; `x` is not validated against the ambient
  /// (limit evaluations at open-interval endpoints rely on this).
  double raw_distance(const Point& x) const;

  /// Membership with an explicit tolerance (0 means exact).
  bool contains(const Point& x, double tol = 0.0) const;

  std::string describe() const;

 private:
  ClosedSet(SpacePtr space, Representation rep) : space_(std::move(space)), rep_(std::move(rep)) {}

  SpacePtr space_;
  Representation rep_;
};

/// Indexed family k -> A_k (k starts at 1).
using SetSequence = std::function<ClosedSet(std::size_t)>;

/// d(x, A). Exact for every representation except SampledCloud, where it is
/// the distance to the listed points (see ClosedSet::slack()).
double dist_to_set(const Point& x, const ClosedSet& a);

bool is_bounded(const ClosedSet& a);

/// True iff d(x, A) < r.
bool in_r_neighborhood(const Point& x, const ClosedSet& a, double r);

/// A ∩ closed-ball(x0, L), or nullopt when the intersection is empty. Rays
/// truncate to a segment (a degenerate box when the ray is axis-aligned).
/// Boxes and balls are kept whole when inside the ball and dropped when
/// disjoint; a partial overlap is an UnsupportedError.
std::optional<ClosedSet> truncate(const ClosedSet& a, double radius);

/// sup{d(p, a) : a in A}, infinite for rays.
ExtReal farthest_distance(const Point& p, const ClosedSet& a);

/// Up to `m` representative points of A in a deterministic (lexicographic)
/// order. Finite sets return their points; continua are sampled evenly.
std::vector<Point> sample_points(const ClosedSet& a, std::size_t m);

/// Number of listed points for FinitePoints / SampledCloud, otherwise 0.
std::size_t point_count(const ClosedSet& a);

/// For 1-D ambients: the set as sorted disjoint closed intervals (points are
/// degenerate intervals). UnsupportedError for other representations.
std::vector<Interval> components_1d(const ClosedSet& a);

/// A ⊆ B. Exact when every piece of A fits in a single convex piece of B,
/// or when some extreme point of A lies outside B; UnsupportedError when a
/// piece is covered only by several pieces of B jointly (R^n).
bool is_subset(const ClosedSet& a, const ClosedSet& b);

/// Same ambient and identical normalised representation (a sufficient, not
/// necessary, condition for equality of the underlying sets).
bool operator==(const ClosedSet& a, const ClosedSet& b);
inline bool operator!=(const ClosedSet& a, const ClosedSet& b) { return !(a == b); }

/// Throws DomainError unless both sets live in the same ambient.
void require_same_ambient(const ClosedSet& a, const ClosedSet& b);

}  // namespace hyperspace
