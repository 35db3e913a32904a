#include "detail/maximize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace hyperspace::detail {

Region Region::box(Point lo, Point hi) {
  Region r;
  r.kind = Kind::Box;
  r.lo = std::move(lo);
  r.hi = std::move(hi);
  return r;
}

Region Region::ball(Point center, double radius) {
  Region r;
  r.kind = Kind::Ball;
  r.center = std::move(center);
  r.radius = radius;
  return r;
}

Region Region::segment(Point from, Point to) {
  Region r;
  r.kind = Kind::Segment;
  r.from = std::move(from);
  r.to = std::move(to);
  return r;
}

namespace {

// Cell coordinates live in a flat arena (mid then half, `dim` doubles each)
// so the queue holds small records and the hot loop does not allocate.
struct Cell {
  double upper;
  double value;
  std::size_t offset;
};

struct ByUpper {
  bool operator()(const Cell& a, const Cell& b) const { return a.upper < b.upper; }
};

}  // namespace

MaximizeResult maximize(const std::function<double(const Point&)>& f, const Region& region,
                        const MaximizeOptions& options) {
  // Parameter space: the box itself, the ball's bounding box, or t in [0,1]
  // for a segment. Parameter half-diagonals times `scale` are region
  // distances.
  Point plo, phi;
  double scale = 1.0;
  switch (region.kind) {
    case Region::Kind::Box:
      plo = region.lo;
      phi = region.hi;
      break;
    case Region::Kind::Ball:
      plo = region.center.array() - region.radius;
      phi = region.center.array() + region.radius;
      break;
    case Region::Kind::Segment:
      plo = point1(0.0);
      phi = point1(1.0);
      scale = (region.to - region.from).norm();
      break;
  }
  const auto dim = plo.size();
  const auto n = static_cast<std::size_t>(dim);

  MaximizeResult result;
  result.lo = -std::numeric_limits<double>::infinity();
  const double lip = options.lipschitz * scale;
  std::priority_queue<Cell, std::vector<Cell>, ByUpper> queue;
  std::vector<double> arena;
  std::vector<std::size_t> free_slots;
  Point mid(dim), half(dim), x(region.kind == Region::Kind::Segment ? region.from.size() : dim);

  // Evaluates the cell (mid, half) held in the scratch vectors. For the ball
  // the evaluation point is the cell centre projected onto the ball, which
  // may lie outside the cell; the bound then reaches from it.
  auto add = [&]() {
    double reach = half.norm();
    switch (region.kind) {
      case Region::Kind::Box: x = mid; break;
      case Region::Kind::Ball: {
        x = mid - region.center;
        const double d = x.norm();
        if (d - reach > region.radius) return;  // cell misses the ball
        if (d <= region.radius) {
          x = mid;
        } else {
          x = region.center + x * (region.radius / d);
          reach += d - region.radius;
        }
        break;
      }
      case Region::Kind::Segment: x = region.from + mid[0] * (region.to - region.from); break;
    }
    const double v = f(x);
    ++result.evals;
    if (v > result.lo) {
      result.lo = v;
      result.argmax = x;
    }
    std::size_t off;
    if (!free_slots.empty()) {
      off = free_slots.back();
      free_slots.pop_back();
    } else {
      off = arena.size();
      arena.resize(arena.size() + 2 * n);
    }
    std::copy(mid.data(), mid.data() + n, arena.begin() + static_cast<std::ptrdiff_t>(off));
    std::copy(half.data(), half.data() + n, arena.begin() + static_cast<std::ptrdiff_t>(off + n));
    queue.push(Cell{v + lip * reach, v, off});
  };

  mid = 0.5 * (plo + phi);
  half = 0.5 * (phi - plo);
  add();

  while (!queue.empty()) {
    const Cell top = queue.top();
    if (top.upper <= result.lo + options.target_width) break;
    if (options.stop_above && result.lo > *options.stop_above) break;
    if (options.give_up_below && top.upper <= *options.give_up_below) break;
    if (result.evals >= options.max_evals) break;
    queue.pop();
    std::copy(arena.begin() + static_cast<std::ptrdiff_t>(top.offset),
              arena.begin() + static_cast<std::ptrdiff_t>(top.offset + n), mid.data());
    std::copy(arena.begin() + static_cast<std::ptrdiff_t>(top.offset + n),
              arena.begin() + static_cast<std::ptrdiff_t>(top.offset + 2 * n), half.data());
    free_slots.push_back(top.offset);
    Eigen::Index axis = 0;
    half.maxCoeff(&axis);
    half[axis] *= 0.5;
    const double c = mid[axis];
    mid[axis] = c - half[axis];
    add();
    mid[axis] = c + half[axis];
    add();
  }
  result.hi = queue.empty() ? result.lo : std::max(result.lo, queue.top().upper);
  return result;
}

}  // namespace hyperspace::detail
