#include <gtest/gtest.h>

#include <numbers>

#include "corpus.hpp"

using namespace hstest;

TEST(ActionProperty, IsometryInvarianceExactOnDyadicInputs) {
  const auto t = isometry_invariance(51, 400);
  EXPECT_TRUE(t.ok()) << t.summary();
}

TEST(ActionProperty, IsometryInvarianceGeneralRotations) {
  Gen g(52);
  const auto plane = share(AmbientSpace::euclidean(2));
  for (int i = 0; i < 500; ++i) {
    const auto a = g.finite_set(plane, 1, 6, 5), b = g.finite_set(plane, 1, 6, 5);
    const auto h = GroupElement::compose(
        {GroupElement::translation(g.point(2, 5), plane), GroupElement::rotation(g.real(-3.1, 3.1), plane)});
    ASSERT_NEAR(hausdorff(act(h, a), act(h, b)).value(), hausdorff(a, b).value(), 1e-12);
    ASSERT_NEAR(excess(act(h, a), act(h, b)).value(), excess(a, b).value(), 1e-12);
  }
}

TEST(ActionProperty, GroupLawsOnFiniteSets) {
  Gen g(53);
  const auto plane = share(AmbientSpace::euclidean(2));
  for (int i = 0; i < 300; ++i) {
    const auto a = g.dyadic_set(plane, 1, 6, 8);
    const auto x = dyadic_isometry(g, plane), y = dyadic_isometry(g, plane);
    ASSERT_EQ(act(x, act(y, a)), act(GroupElement::compose({x, y}), a));
    ASSERT_EQ(act(x.inverse(), act(x, a)), a);

    // General elements: equal up to rounding.
    const auto r = GroupElement::rotation(g.real(-3, 3), plane);
    const auto s = GroupElement::scaling(g.real(0.5, 2), plane);
    const auto lhs = act(r, act(s, a)), rhs = act(GroupElement::compose({r, s}), a);
    ASSERT_LE(hausdorff(lhs, rhs).value(), 1e-12);
    ASSERT_LE(hausdorff(act(r.inverse(), act(r, a)), a).value(), 1e-12);
  }
}

TEST(ActionProperty, LowerVietorisCorpus) {
  const auto t = action_lower_vietoris(54, 40);
  EXPECT_TRUE(t.ok()) << t.summary();
}

TEST(ActionProperty, UcbReflexiveAndMonotone) {
  Gen g(55);
  const auto plane = share(AmbientSpace::euclidean(2));
  const auto line = share(AmbientSpace::line());
  for (int i = 0; i < 200; ++i) {
    const bool flat = i % 2 == 0;
    const auto& s = flat ? line : plane;
    const auto a = flat ? g.line_set(line, 4) : g.ball_union(plane, 1, 2, 3);
    const auto f = flat ? GroupElement::translation(g.point(1, 2), line)
                        : GroupElement::compose({GroupElement::translation(g.point(2, 2), plane),
                                                 GroupElement::rotation(g.real(-3, 3), plane)});
    const auto h = flat ? GroupElement::scaling(g.real(0.8, 1.2), line) : GroupElement::rotation(g.real(-0.3, 0.3), plane);
    for (double eps : {1e-9, 0.01, 1.0}) ASSERT_EQ(ucb_nbhd_contains(f, a, f, eps), Decision::yes);
    bool seen_yes = false;
    for (double eps = 0.001; eps < 20; eps *= 1.7) {
      const auto d = ucb_nbhd_contains(h, a, f, eps);
      if (seen_yes) ASSERT_EQ(d, Decision::yes) << "not monotone at eps=" << eps;
      seen_yes = seen_yes || d == Decision::yes;
    }
    ASSERT_TRUE(seen_yes);
    (void)s;
  }
}

TEST(ActionProperty, DisplacementBracketsSampledValue) {
  Gen g(56);
  const auto plane = share(AmbientSpace::euclidean(2));
  for (int i = 0; i < 100; ++i) {
    const auto a = g.ball_union(plane, 1, 2, 3);
    const auto f = GroupElement::rotation(g.real(-3, 3), plane);
    const auto h = GroupElement::compose({GroupElement::scaling(g.real(0.5, 2), plane), GroupElement::rotation(g.real(-3, 3), plane)});
    const auto d = displacement_sup(f, h, a);
    double sampled = 0.0;
    for (const auto& b : a.as<BallUnion>()->balls)
      for (int q = 0; q < 200; ++q) {
        Point x = g.point(2, b.radius);
        if (x.norm() > b.radius) continue;
        x += b.center;
        sampled = std::max(sampled, (f.apply(x) - h.apply(x)).norm());
      }
    ASSERT_GE(d.hi.value(), sampled - 1e-12);
    ASSERT_LE(d.width(), 1e-6);
  }
}

TEST(ActionProperty, BchTriangleBound) {
  Gen g(57);
  const auto plane = share(AmbientSpace::euclidean(2));
  for (int i = 0; i < 200; ++i) {
    const auto a = g.finite_set(plane, 1, 6, 5), b = g.finite_set(plane, 1, 6, 5);
    const auto x = GroupElement::compose({GroupElement::translation(g.point(2, 2), plane), GroupElement::rotation(g.real(-3, 3), plane)});
    const auto y = GroupElement::compose({GroupElement::translation(g.point(2, 2), plane), GroupElement::rotation(g.real(-3, 3), plane)});
    const auto ref = ClosedSet::balls(plane, {{plane->base_point(), 10}});
    const double dg = displacement_sup(x, y, ref).hi.value();
    const double out = hausdorff(act(x, a), act(y, b)).hi.value();
    ASSERT_LE(out, dg + hausdorff(a, b).hi.value() + 1e-9);
  }
}
