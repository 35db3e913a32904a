#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hyperspace/actions.hpp"

using namespace hyperspace;

namespace {

SpacePtr line() { return share(AmbientSpace::line()); }
SpacePtr plane() { return share(AmbientSpace::euclidean(2)); }

}  // namespace

TEST(Act, QuarterTurn) {
  const auto g = GroupElement::rotation(std::numbers::pi / 2, plane());
  const auto img = act(g, ClosedSet::points(plane(), {point2(1, 0)}));
  const auto& p = img.as<FinitePoints>()->points.at(0);
  EXPECT_NEAR(p[0], 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(p[1], 1.0);
}

TEST(Act, TranslateInterval) {
  const auto img = act(GroupElement::translation(point1(3), line()), ClosedSet::intervals(line(), {{0, 1}}));
  EXPECT_EQ(img, ClosedSet::intervals(line(), {{3, 4}}));
}

TEST(Act, RotateRay) {
  const double th = 0.3;
  const auto img =
      act(GroupElement::rotation(th, plane()), ClosedSet::ray(plane(), point2(0, 0), point2(1, 0)));
  const auto* r = img.as<Ray>();
  ASSERT_NE(r, nullptr);
  EXPECT_EQ(r->anchor, point2(0, 0));
  EXPECT_NEAR(r->direction[0], std::cos(th), 1e-15);
  EXPECT_NEAR(r->direction[1], std::sin(th), 1e-15);
}

TEST(Act, ScalingBall) {
  const auto img = act(GroupElement::scaling(2, plane()), ClosedSet::balls(plane(), {{point2(1, 1), 0.5}}));
  const auto& b = img.as<BallUnion>()->balls.at(0);
  EXPECT_EQ(b.center, point2(2, 2));
  EXPECT_EQ(b.radius, 1.0);
}

TEST(Act, RotatedBoxUnsupported) {
  const auto box = ClosedSet::boxes(plane(), {{point2(0, 0), point2(1, 1)}});
  EXPECT_THROW(act(GroupElement::rotation(0.3, plane()), box), UnsupportedError);
  EXPECT_NO_THROW(act(GroupElement::rotation(0.0, plane()), box));
}

TEST(Ucb, Examples) {
  const auto id = GroupElement::identity(line());
  const auto a = ClosedSet::intervals(line(), {{0, 1}});
  const auto h = GroupElement::translation(point1(0.05), line());
  EXPECT_EQ(ucb_nbhd_contains(h, a, id, 0.1), Decision::yes);
  EXPECT_NEAR(displacement_sup(id, h, a).hi.value(), 0.05, 1e-15);
  EXPECT_EQ(ucb_nbhd_contains(h, a, id, 0.05), Decision::no);

  const auto disc = ClosedSet::balls(plane(), {{point2(0, 0), 1}});
  const auto rot = GroupElement::rotation(0.2, plane());
  const auto pid = GroupElement::identity(plane());
  const auto d = displacement_sup(pid, rot, disc);
  EXPECT_NEAR(d.lo.value(), 2 * std::sin(0.1), 1e-12);
  EXPECT_NEAR(d.hi.value(), 2 * std::sin(0.1), 1e-12);
  EXPECT_EQ(ucb_nbhd_contains(rot, disc, pid, 0.21), Decision::yes);
  EXPECT_EQ(ucb_nbhd_contains(rot, disc, pid, 0.19), Decision::no);

  EXPECT_EQ(ucb_nbhd_contains(rot, disc, rot, 1e-9), Decision::yes);
}

TEST(Ucb, GeneralLinearUsesGrid) {
  const auto disc = ClosedSet::balls(plane(), {{point2(0, 0), 1}});
  const auto s = GroupElement::compose({GroupElement::scaling(2, plane()), GroupElement::rotation(0.5, plane())});
  const auto d = displacement_sup(GroupElement::identity(plane()), s, disc);
  // |2R(0.5)x - x| on the unit disc has norm |2e^{0.5i} - 1|.
  const double exact = std::hypot(2 * std::cos(0.5) - 1, 2 * std::sin(0.5));
  EXPECT_LE(d.lo.value(), exact + 1e-12);
  EXPECT_GE(d.hi.value(), exact - 1e-12);
}

TEST(MapsInto, Examples) {
  const auto a = ClosedSet::intervals(line(), {{0.2, 0.4}});
  const auto b = ClosedSet::intervals(line(), {{0, 1}});
  EXPECT_TRUE(maps_into(GroupElement::identity(line()), a, b));
  EXPECT_FALSE(maps_into(GroupElement::translation(point1(10), line()), ClosedSet::points(line(), {point1(0)}), b));
  EXPECT_TRUE(maps_into(GroupElement::scaling(0.5, line()), ClosedSet::intervals(line(), {{0, 2}}), b));
}

TEST(Group, InverseAndCompose) {
  const auto g = GroupElement::compose(
      {GroupElement::translation(point2(1, -2), plane()), GroupElement::rotation(0.7, plane())});
  const auto x = point2(0.3, 4.0);
  const auto y = g.inverse().apply(g.apply(x));
  EXPECT_NEAR((y - x).norm(), 0.0, 1e-14);
  EXPECT_TRUE(g.is_isometry());
  EXPECT_EQ(g.lipschitz(), 1.0);
  const Point expected = GroupElement::rotation(0.7, plane()).apply(x) + point2(1, -2);
  EXPECT_NEAR((g.apply(x) - expected).norm(), 0.0, 1e-15);
  EXPECT_THROW(GroupElement::scaling(-1, plane()), ValidationError);
  Matrix shear(2, 2);
  shear << 1, 1, 0, 1;
  EXPECT_THROW(GroupElement::isometry(shear, point2(0, 0), plane()), ValidationError);
}

TEST(ProbeAction, RayUnderShrinkingRotations) {
  const auto a = ClosedSet::ray(plane(), point2(0, 0), point2(1, 0));
  const auto g = GroupElement::identity(plane());
  const auto p = probe_action_continuity(
      g, a, MetricKind::hausdorff,
      [](std::size_t n) { return GroupElement::rotation(1.0 / static_cast<double>(n)); },
      [&](std::size_t) { return a; }, 20, {1.0, 0.6}, 1.0);
  EXPECT_TRUE(p.violation);
  for (const auto& row : p.rows) EXPECT_TRUE(row.d_out.lo.is_infinite());
}

TEST(ProbeAction, TranslationsNoViolation) {
  const auto a = ClosedSet::points(plane(), {point2(0, 0), point2(1, 2), point2(-2, 1)});
  const auto g = GroupElement::identity(plane());
  const auto p = probe_action_continuity(
      g, a, MetricKind::hausdorff,
      [](std::size_t n) { return GroupElement::translation(point2(0.5 / static_cast<double>(n), 0), share(AmbientSpace::euclidean(2))); },
      [&](std::size_t n) {
        std::vector<Point> b = a.as<FinitePoints>()->points;
        for (auto& q : b) q[1] += 0.3 / static_cast<double>(n);
        return ClosedSet::points(share(AmbientSpace::euclidean(2)), b);
      },
      20, {0.1, 0.01}, 0.05);
  EXPECT_FALSE(p.violation);
  for (const auto& row : p.rows)
    EXPECT_LE(row.d_out.hi.value(), row.d_group.hi.value() + row.d_set.hi.value() + 1e-12);
}
