#pragma once

// Seeded generators for the property and acceptance suites.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "hyperspace/sets.hpp"

namespace hstest {

using namespace hyperspace;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }

  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  /// Multiple of 2^-bits in [-range, range]; sums and differences of such
  /// values are exact in double precision.
  double dyadic(int range, int bits = 8) {
    const long long scale = 1LL << bits;
    const long long m = std::uniform_int_distribution<long long>(-range * scale, range * scale)(rng_);
    return static_cast<double>(m) / static_cast<double>(scale);
  }

  Point point(std::size_t dim, double half) {
    Point p(static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < p.size(); ++i) p[i] = real(-half, half);
    return p;
  }

  Point dyadic_point(std::size_t dim, int range, int bits = 8) {
    Point p(static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < p.size(); ++i) p[i] = dyadic(range, bits);
    return p;
  }

  std::vector<Point> points(std::size_t dim, int nmin, int nmax, double half) {
    std::vector<Point> out;
    const int n = integer(nmin, nmax);
    for (int i = 0; i < n; ++i) out.push_back(point(dim, half));
    return out;
  }

  ClosedSet finite_set(const SpacePtr& space, int nmin, int nmax, double half) {
    return ClosedSet::points(space, points(space->dimension(), nmin, nmax, half));
  }

  ClosedSet dyadic_set(const SpacePtr& space, int nmin, int nmax, int range) {
    std::vector<Point> out;
    const int n = integer(nmin, nmax);
    for (int i = 0; i < n; ++i) out.push_back(dyadic_point(space->dimension(), range));
    return ClosedSet::points(space, out);
  }

  ClosedSet interval_union(const SpacePtr& line, int nmin, int nmax, double half) {
    std::vector<Interval> ivs;
    const int n = integer(nmin, nmax);
    for (int i = 0; i < n; ++i) {
      const double a = real(-half, half);
      const double len = coin() ? 0.0 : real(0.0, half / 4.0);
      ivs.push_back({a, a + len});
    }
    return ClosedSet::intervals(line, ivs);
  }

  /// Finite set or interval union, with equal odds.
  ClosedSet line_set(const SpacePtr& line, double half) {
    return coin() ? finite_set(line, 1, 6, half) : interval_union(line, 1, 4, half);
  }

  ClosedSet ball_union(const SpacePtr& plane, int nmin, int nmax, double half) {
    std::vector<Ball> balls;
    const int n = integer(nmin, nmax);
    for (int i = 0; i < n; ++i) balls.push_back({point(plane->dimension(), half), real(0.1, half / 4.0)});
    return ClosedSet::balls(plane, balls);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace hstest
