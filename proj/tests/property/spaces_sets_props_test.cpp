#include <gtest/gtest.h>

#include "corpus.hpp"

using namespace hstest;

namespace {

// Random finite metric: shortest-path closure of random positive weights.
Matrix random_metric(Gen& g, int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m(i, j) = m(j, i) = i == j ? 0.0 : g.real(0.5, 3);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = std::min(m(i, j), m(i, k) + m(k, j));
  return m;
}

}  // namespace

TEST(SpaceProperties, LineExactOnDyadics) {
  Gen g(11);
  const auto l = AmbientSpace::line();
  for (int i = 0; i < 1000; ++i) {
    const auto p = point1(g.dyadic(100)), q = point1(g.dyadic(100)), r = point1(g.dyadic(100));
    ASSERT_EQ(l.distance(p, q), l.distance(q, p));
    ASSERT_LE(l.distance(p, r), l.distance(p, q) + l.distance(q, r));
  }
}

TEST(SpaceProperties, EuclideanWithinTolerance) {
  Gen g(12);
  for (std::size_t dim : {2u, 3u, 5u}) {
    const auto s = AmbientSpace::euclidean(dim);
    for (int i = 0; i < 1000; ++i) {
      const auto p = g.point(dim, 50), q = g.point(dim, 50), r = g.point(dim, 50);
      ASSERT_NEAR(s.distance(p, q), s.distance(q, p), 1e-12);
      ASSERT_LE(s.distance(p, r), s.distance(p, q) + s.distance(q, r) + 1e-12);
      ASSERT_NEAR(s.distance(p, q), oracle::euclid(coords_of(p), coords_of(q)), 1e-12);
    }
  }
}

TEST(SpaceProperties, OpenIntervalAndFinite) {
  Gen g(13);
  const auto x = AmbientSpace::open_interval(-1, 2, 0);
  for (int i = 0; i < 1000; ++i) {
    const auto p = point1(g.real(-0.999, 1.999)), q = point1(g.real(-0.999, 1.999)), r = point1(g.real(-0.999, 1.999));
    ASSERT_EQ(x.distance(p, q), x.distance(q, p));
    ASSERT_LE(x.distance(p, r), x.distance(p, q) + x.distance(q, r) + 1e-12);
  }
  for (int t = 0; t < 20; ++t) {
    const int n = g.integer(2, 8);
    const auto m = random_metric(g, n);
    ASSERT_FALSE(validate_finite_metric(m).has_value());
    const auto f = AmbientSpace::finite_metric(m);
    for (int i = 0; i < 50; ++i) {
      const auto p = point1(g.integer(0, n - 1)), q = point1(g.integer(0, n - 1)), r = point1(g.integer(0, n - 1));
      ASSERT_EQ(f.distance(p, q), f.distance(q, p));
      ASSERT_LE(f.distance(p, r), f.distance(p, q) + f.distance(q, r) + 1e-9);
    }
  }
}

TEST(SetProperties, DistanceIsOneLipschitz) {
  Gen g(14);
  const auto line = share(AmbientSpace::line());
  const auto plane = share(AmbientSpace::euclidean(2));
  for (int i = 0; i < 1000; ++i) {
    const bool flat = i % 2 == 0;
    const auto a = flat ? g.line_set(line, 10) : (g.coin() ? g.ball_union(plane, 1, 3, 5) : g.finite_set(plane, 1, 5, 5));
    const auto& s = flat ? line : plane;
    const auto x = g.point(s->dimension(), 12), y = g.point(s->dimension(), 12);
    ASSERT_LE(std::abs(dist_to_set(x, a) - dist_to_set(y, a)), s->distance(x, y) + 1e-12) << a.describe();
  }
}

TEST(SetProperties, DistanceZeroIffMember) {
  Gen g(15);
  const auto line = share(AmbientSpace::line());
  const auto plane = share(AmbientSpace::euclidean(2));
  for (int i = 0; i < 500; ++i) {
    const auto a = g.line_set(line, 10);
    for (const auto& p : sample_points(a, 5)) {
      ASSERT_EQ(dist_to_set(p, a), 0.0);
      ASSERT_TRUE(a.contains(p));
    }
    const auto x = g.point(1, 12);
    ASSERT_EQ(dist_to_set(x, a) == 0.0, a.contains(x)) << a.describe() << " x=" << x[0];

    const auto b = g.ball_union(plane, 1, 3, 5);
    const auto y = g.point(2, 8);
    ASSERT_EQ(dist_to_set(y, b) == 0.0, b.contains(y));
    for (const auto& p : b.as<BallUnion>()->balls) ASSERT_TRUE(b.contains(p.center));
  }
}

TEST(SetProperties, TruncateStaysInsideAndInBall) {
  Gen g(16);
  const auto line = share(AmbientSpace::line(1));
  const auto plane = share(AmbientSpace::euclidean(2, point2(1, -1)));
  for (int i = 0; i < 500; ++i) {
    const bool flat = i % 2 == 0;
    const auto& s = flat ? line : plane;
    const auto a = flat ? g.line_set(line, 20)
                        : (g.coin() ? g.finite_set(plane, 1, 8, 20)
                                    : ClosedSet::segments(plane, {{g.point(2, 20), g.point(2, 20)}}));
    const double l = g.real(0.5, 25);
    const auto t = truncate(a, l);
    if (!t) {
      ASSERT_GT(dist_to_set(s->base_point(), a), l);
      continue;
    }
    for (const auto& p : sample_points(*t, 20)) {
      ASSERT_LE(dist_to_set(p, a), 1e-9) << a.describe();
      ASSERT_LE(s->distance(s->base_point(), p), l + 1e-9);
    }
  }
}

TEST(SetProperties, RayTruncationIsSegment) {
  Gen g(17);
  const auto plane = share(AmbientSpace::euclidean(2));
  for (int i = 0; i < 200; ++i) {
    const auto r = ClosedSet::ray(plane, g.point(2, 3), g.point(2, 1));
    const double l = g.real(4.5, 30);
    const auto t = truncate(r, l);
    ASSERT_TRUE(t.has_value());
    ASSERT_TRUE(t->is_bounded());
    ASSERT_LE(farthest_distance(plane->base_point(), *t).value(), l + 1e-9);
    for (const auto& p : sample_points(*t, 10)) ASSERT_LE(dist_to_set(p, r), 1e-9);
  }
}

TEST(LocalizationProperty, Line) {
  const auto t = localization_line(101, 200, 50);
  EXPECT_TRUE(t.ok()) << t.summary();
}

TEST(LocalizationProperty, Plane) {
  const auto t = localization_plane(102, 200, 50);
  EXPECT_TRUE(t.ok()) << t.summary();
}
