#pragma once

#include <cstddef>
#include <functional>
#include <optional>

#include "hyperspace/spaces.hpp"

namespace hyperspace::detail {

/// Compact region searched by the maximizer.
struct Region {
  enum class Kind { Box, Ball, Segment };
  Kind kind = Kind::Box;
  Point lo, hi;        // Box
  Point center;        // Ball
  double radius = 0.0;
  Point from, to;      // Segment

  static Region box(Point lo, Point hi);
  static Region ball(Point center, double radius);
  static Region segment(Point from, Point to);
};

struct MaximizeOptions {
  double lipschitz = 1.0;
  double target_width = 1e-6;
  std::size_t max_evals = 200000;
  /// Stop as soon as the lower bound exceeds this value.
  std::optional<double> stop_above;
  /// Stop as soon as the upper bound falls to this value or below.
  std::optional<double> give_up_below;
};

struct MaximizeResult {
  double lo = 0.0;
  double hi = 0.0;
  Point argmax;  // point achieving `lo`
  std::size_t evals = 0;
};

/// Certified bracket for sup of an L-Lipschitz function over the region:
/// best-first branch and bound on axis-aligned cells, each bounded above by
/// f(center) + L * half-diagonal.
MaximizeResult maximize(const std::function<double(const Point&)>& f, const Region& region,
                        const MaximizeOptions& options);

}  // namespace hyperspace::detail
