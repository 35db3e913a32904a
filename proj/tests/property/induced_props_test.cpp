#include <gtest/gtest.h>

#include "corpus.hpp"

using namespace hstest;

TEST(InducedProperty, LipschitzTransferForContractions) {
  const auto t = lipschitz_transfer(41, 400);
  EXPECT_TRUE(t.ok()) << t.summary();
}

TEST(InducedProperty, LipschitzTransferScaled) {
  Gen g(42);
  const auto line = share(AmbientSpace::line());
  for (int i = 0; i < 400; ++i) {
    const double s = g.real(-4, 4);
    const auto f = i % 2 ? MapSpec::affine(s, g.real(-2, 2), line)
                         : MapSpec::piecewise_linear({{-5, 0}, {0, s}, {2, s + g.real(-3, 3)}}, line);
    const double lip = *f.lipschitz();
    const auto a = g.line_set(line, 8), b = g.line_set(line, 8);
    const auto fa = induced_image(f, a), fb = induced_image(f, b);
    ASSERT_LE(excess(fa, fb).hi.value(), lip * excess(a, b).hi.value() + 1e-9) << f.describe();
    ASSERT_LE(hausdorff(fa, fb).hi.value(), lip * hausdorff(a, b).hi.value() + 1e-9) << f.describe();
  }
}

TEST(InducedProperty, FiniteSetsMapPointwise) {
  Gen g(43);
  const auto line = share(AmbientSpace::line());
  const auto plane = share(AmbientSpace::euclidean(2));
  Matrix m(2, 2);
  m << 2, 1, 0, 1;
  const std::vector<MapSpec> maps = {MapSpec::affine(-1.5, 2, line), MapSpec::arctan_of_distance(line),
                                     MapSpec::piecewise_linear({{0, 0}, {1, 1}, {2, 0}}, line),
                                     MapSpec::linear(m, plane), MapSpec::arctan_of_distance(plane)};
  for (const auto& f : maps) {
    for (int i = 0; i < 100; ++i) {
      const auto a = g.finite_set(f.domain(), 1, 6, 5);
      std::vector<Point> img;
      for (const auto& p : a.as<FinitePoints>()->points) img.push_back(f.apply(p));
      ASSERT_EQ(induced_image(f, a), ClosedSet::points(f.codomain(), img)) << f.describe();
    }
  }
  // The sin map on its open interval.
  const auto sinf = MapSpec::sin_reciprocal();
  for (int i = 0; i < 100; ++i) {
    std::vector<Point> pa;
    for (int n = g.integer(1, 6); n > 0; --n) pa.push_back(point1(g.real(1e-3, 0.999)));
    const auto a = ClosedSet::points(sinf.domain(), pa);
    std::vector<Point> img;
    for (const auto& p : a.as<FinitePoints>()->points) img.push_back(sinf.apply(p));
    ASSERT_EQ(induced_image(sinf, a), ClosedSet::points(sinf.codomain(), img));
  }
}

TEST(InducedProperty, ImageContainsSampledImages) {
  Gen g(44);
  const auto line = share(AmbientSpace::line());
  const auto sinf = MapSpec::sin_reciprocal();
  for (int i = 0; i < 200; ++i) {
    const auto f = i % 2 ? MapSpec::piecewise_linear({{-2, 1}, {0, -1}, {1, 2}, {3, 0}}, line)
                         : MapSpec::arctan_of_distance(line);
    const auto a = g.interval_union(line, 1, 3, 5);
    const auto img = induced_image(f, a);
    for (const auto& p : sample_points(a, 40)) ASSERT_LE(dist_to_set(f.apply(p), img), 1e-12);

    const double lo = g.real(0.01, 0.9);
    const auto b = ClosedSet::intervals(sinf.domain(), {{lo, lo + g.real(0, 0.09)}});
    const auto simg = induced_image(sinf, b);
    for (const auto& p : sample_points(b, 40)) ASSERT_LE(dist_to_set(sinf.apply(p), simg), 1e-12);
  }
}

TEST(InducedProperty, LowerVietorisContinuityCorpus) {
  Gen g(45);
  const auto line = share(AmbientSpace::line());
  const std::vector<MapSpec> maps = {MapSpec::affine(3, -1, line), MapSpec::arctan_of_distance(line),
                                     MapSpec::piecewise_linear({{0, 0}, {1, 4}, {2, -1}}, line),
                                     MapSpec::compose({MapSpec::arctan_of_distance(line), MapSpec::affine(2, 1, line)}),
                                     MapSpec::sin_reciprocal()};
  Tally t;
  for (const auto& f : maps) {
    const auto& dom = f.domain();
    for (int i = 0; i < 20; ++i) {
      std::vector<Point> pa;
      for (int n = g.integer(1, 5); n > 0; --n)
        pa.push_back(point1(dom->is_bounded() ? g.real(0.2, 0.94) : g.real(-5, 5)));
      const auto a = ClosedSet::points(dom, pa);
      const auto& pts = a.as<FinitePoints>()->points;
      std::vector<double> offsets;
      for (std::size_t q = 0; q < pts.size(); ++q) offsets.push_back(g.real(-0.05, 0.05));
      const SetSequence seq = [=](std::size_t k) {
        std::vector<Point> b = pts;
        for (std::size_t q = 0; q < b.size(); ++q) b[q][0] += offsets[q] / static_cast<double>(k);
        return induced_image(f, ClosedSet::points(dom, b));
      };
      const auto fa = induced_image(f, a);
      for (double r : {1.0, 0.1, 0.01}) {
        const auto nb = canonical_neighborhoods(fa, Topology::lowerV, r, pts.size());
        t.check(settled(converges(seq, nb, 400)), f.describe() + " A=" + a.describe());
      }
    }
  }
  EXPECT_TRUE(t.ok()) << t.summary();
}

TEST(InducedProperty, PositiveProbeFindsNoViolation) {
  const auto t = positive_probe(46, 10);
  EXPECT_TRUE(t.ok()) << t.summary();
}

TEST(InducedProperty, PositiveProbeDirectionalMetrics) {
  Gen g(47);
  const auto line = share(AmbientSpace::line());
  const auto f = MapSpec::affine(2, 1, line);
  ASSERT_EQ(aw_continuity_conditions(f).overall, "satisfied");
  for (int i = 0; i < 30; ++i) {
    const auto a = g.line_set(line, 5);
    const double s = g.real(-1, 1);
    const SetSequence seq = [=](std::size_t k) {
      std::vector<Interval> ivs = components_1d(a);
      for (auto& iv : ivs) {
        iv.lo += s / static_cast<double>(k);
        iv.hi += s / static_cast<double>(k);
      }
      return ClosedSet::intervals(line, ivs);
    };
    for (auto m : {MetricKind::hausdorff_lower, MetricKind::hausdorff_upper, MetricKind::hausdorff}) {
      const auto p = probe_induced_continuity(f, a, m, seq, 20, {0.1, 0.05}, 0.25);
      ASSERT_FALSE(p.violation);
      // d_out <= L d_in for the affine map.
      for (const auto& row : p.rows) ASSERT_LE(row.d_out.lo.value(), 2 * row.d_in.hi.value() + 1e-9);
    }
  }
}
