#pragma once

// Randomized checks shared by the property suites and the acceptance runner.
// Each returns a Tally: the number of trials and of counterexamples, with a
// description of the first counterexample.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "gen.hpp"
#include "hyperspace/actions.hpp"
#include "hyperspace/hitmiss.hpp"
#include "hyperspace/hypermetrics.hpp"
#include "hyperspace/induced.hpp"
#include "hyperspace/literals.hpp"
#include "oracles.hpp"

namespace hstest {

struct Tally {
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::size_t skipped = 0;
  std::string first;

  void check(bool ok, const std::string& what) {
    ++trials;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
  bool ok() const { return failures == 0 && trials > 0; }
  void merge(const Tally& o) {
    if (failures == 0 && o.failures > 0) first = o.first;
    trials += o.trials;
    failures += o.failures;
    skipped += o.skipped;
  }
  std::string summary() const {
    std::ostringstream os;
    os << trials << " checks, " << failures << " counterexamples";
    if (skipped) os << ", " << skipped << " skipped";
    if (failures) os << "; first: " << first;
    return os.str();
  }
};

inline std::vector<oracle::Iv> to_ivs(const ClosedSet& a) {
  std::vector<oracle::Iv> out;
  for (const auto& iv : components_1d(a)) out.emplace_back(iv.lo, iv.hi);
  return out;
}

inline std::vector<oracle::Pt> to_pts(const ClosedSet& a) {
  std::vector<oracle::Pt> out;
  for (const auto& p : a.as<FinitePoints>()->points) out.push_back(coords_of(p));
  return out;
}

inline double hi_of(const CertifiedValue& v) { return v.hi.value(); }
inline double lo_of(const CertifiedValue& v) { return v.lo.value(); }

inline bool bit_equal(const CertifiedValue& a, const CertifiedValue& b) { return a.lo == b.lo && a.hi == b.hi; }

// --- localization: d(x,C) = d(x, C ∩ B[x0,L]) when d(x0,x) < j and
// L > 2j + d(x0,C).

inline Tally localization_line(std::uint64_t seed, std::size_t trials = 1000, std::size_t xs = 100) {
  Gen g(seed);
  Tally t;
  for (std::size_t i = 0; i < trials; ++i) {
    const double x0 = g.dyadic(20);
    const auto space = share(AmbientSpace::line(x0));
    ClosedSet c = ClosedSet::points(space, {point1(0)});
    if (g.coin()) {
      std::vector<Point> pts;
      for (int n = g.integer(1, 8); n > 0; --n) pts.push_back(point1(g.dyadic(60)));
      c = ClosedSet::points(space, pts);
    } else {
      std::vector<Interval> ivs;
      for (int n = g.integer(1, 5); n > 0; --n) {
        const double a = g.dyadic(60);
        ivs.push_back({a, a + std::abs(g.dyadic(8))});
      }
      c = ClosedSet::intervals(space, ivs);
    }
    const double j = g.integer(1, 10);
    const double l = 2 * j + dist_to_set(point1(x0), c) + std::abs(g.dyadic(4)) + 0.0078125;
    const auto cut = truncate(c, l);
    if (!cut) {
      t.check(false, "truncate(C, L) empty although L > d(x0, C)");
      continue;
    }
    for (std::size_t s = 0; s < xs; ++s) {
      double off = g.dyadic(static_cast<int>(j));
      if (std::abs(off) >= j) off = 0.0;
      const Point x = point1(x0 + off);
      const double d1 = dist_to_set(x, c), d2 = dist_to_set(x, *cut);
      std::ostringstream os;
      os << "C=" << c.describe() << " j=" << j << " L=" << l << " x=" << x[0] << ": " << d1 << " vs " << d2;
      t.check(d1 == d2, os.str());
    }
  }
  return t;
}

inline Tally localization_plane(std::uint64_t seed, std::size_t trials = 1000, std::size_t xs = 100,
                                double width = 1e-9) {
  Gen g(seed);
  Tally t;
  for (std::size_t i = 0; i < trials; ++i) {
    const Point x0 = g.point(2, 5);
    const auto space = share(AmbientSpace::euclidean(2, x0));
    ClosedSet c = ClosedSet::points(space, {x0});
    if (g.coin()) {
      c = ClosedSet::points(space, g.points(2, 1, 8, 40));
    } else {
      std::vector<Segment> segs;
      for (int n = g.integer(1, 4); n > 0; --n) segs.push_back({g.point(2, 40), g.point(2, 40)});
      c = ClosedSet::segments(space, segs);
    }
    const double j = g.integer(1, 10);
    const double l = 2 * j + dist_to_set(x0, c) + g.real(1e-3, 4);
    const auto cut = truncate(c, l);
    if (!cut) {
      t.check(false, "truncate(C, L) empty although L > d(x0, C)");
      continue;
    }
    for (std::size_t s = 0; s < xs; ++s) {
      Point x;
      do x = x0 + g.point(2, j);
      while ((x - x0).norm() >= j);
      const double d1 = dist_to_set(x, c), d2 = dist_to_set(x, *cut);
      std::ostringstream os;
      os << "C=" << c.describe() << " j=" << j << " L=" << l << ": " << d1 << " vs " << d2;
      t.check(std::abs(d1 - d2) <= width, os.str());
    }
  }
  return t;
}

// --- aw_less_than against the certified distance.

inline Tally aw_lemma(std::uint64_t seed, std::size_t pairs = 500) {
  Gen g(seed);
  Tally t;
  const auto space = share(AmbientSpace::line());
  for (std::size_t i = 0; i < pairs; ++i) {
    const double spread = g.real(0.5, 30);
    const auto a = g.finite_set(space, 1, 6, spread);
    const auto b = g.finite_set(space, 1, 6, spread);
    const auto d = aw_distance(a, b);
    double eps = g.real(1e-3, 1.0 - 1e-3);
    if (i % 3 == 1) eps = 1.0 / g.integer(2, 40);
    if (i % 3 == 2 && d.hi.value() > 0 && d.hi.value() < 1) eps = std::clamp(d.hi.value() + g.real(-1e-3, 1e-3), 1e-6, 1 - 1e-6);
    const auto dec = aw_less_than(a, b, eps);
    std::ostringstream os;
    os << "A=" << a.describe() << " B=" << b.describe() << " eps=" << eps << " d=[" << d.lo << "," << d.hi
       << "] decision=" << to_string(dec);
    if (d.hi < ExtReal(eps)) {
      t.check(dec == Decision::yes, os.str());
    } else if (d.lo >= ExtReal(eps)) {
      t.check(dec == Decision::no, os.str());
    } else {
      ++t.skipped;
    }
  }
  return t;
}

// --- metric axioms for d_H and d_AW.

inline Tally metric_axioms(const SpacePtr& space, std::uint64_t seed, std::size_t triples) {
  Gen g(seed);
  Tally t;
  auto make = [&]() {
    if (space->is_one_dimensional()) return g.line_set(space, g.real(0.5, 20));
    return g.coin() ? g.finite_set(space, 1, 5, 6) : g.ball_union(space, 1, 2, 6);
  };
  for (std::size_t i = 0; i < triples; ++i) {
    const auto a = make(), b = make(), c = make();
    const std::string tag = "A=" + a.describe() + " B=" + b.describe() + " C=" + c.describe();

    const auto hab = hausdorff(a, b), hba = hausdorff(b, a), hbc = hausdorff(b, c), hac = hausdorff(a, c);
    t.check(bit_equal(hab, hba), "d_H asymmetric: " + tag);
    t.check(hausdorff(a, a).hi == ExtReal(0.0), "d_H(A,A) != 0: " + tag);
    t.check(lo_of(hac) <= hi_of(hab) + hi_of(hbc) + 1e-9, "d_H triangle: " + tag);

    const auto wab = aw_distance(a, b), wba = aw_distance(b, a), wbc = aw_distance(b, c), wac = aw_distance(a, c);
    t.check(bit_equal(wab, wba), "d_AW asymmetric: " + tag);
    const auto waa = aw_distance(a, a);
    t.check(waa.lo == ExtReal(0.0) && waa.hi == ExtReal(0.0), "d_AW(A,A) != [0,0]: " + tag);
    t.check(lo_of(wac) <= hi_of(wab) + hi_of(wbc) + 1e-9, "d_AW triangle: " + tag);
    for (const auto* w : {&wab, &wbc, &wac}) {
      t.check(lo_of(*w) >= 0.0 && hi_of(*w) <= 1.0, "d_AW outside [0,1]: " + tag);
    }
    t.check(hi_of(wab) <= std::min(1.0, hi_of(hab)) + wab.width() + hab.width() + 1e-12,
            "d_AW > min(1, d_H): " + tag);
    if (a != b && space->is_one_dimensional()) {
      // Normalised representations differ, so the sets differ.
      t.check(lo_of(hab) > 0.0 && lo_of(wab) > 0.0, "distinct sets at distance 0: " + tag);
    }
  }
  return t;
}

// --- Lipschitz transfer under 1-Lipschitz catalog maps.

inline MapSpec random_contraction(Gen& g, const SpacePtr& line) {
  switch (g.integer(0, 4)) {
    case 0: return MapSpec::identity(line);
    case 1: return MapSpec::affine(g.coin() ? 1.0 : -1.0, g.real(-5, 5), line);
    case 2: return MapSpec::affine(g.real(-1, 1), g.real(-5, 5), line);
    case 3: return MapSpec::arctan_of_distance(line);
    default: {
      std::vector<std::pair<double, double>> knots;
      double x = g.real(-10, -5), y = g.real(-3, 3);
      for (int n = g.integer(2, 6); n > 0; --n) {
        knots.emplace_back(x, y);
        const double dx = g.real(0.5, 5);
        x += dx;
        y += g.real(-1, 1) * dx;
      }
      return MapSpec::piecewise_linear(knots, line);
    }
  }
}

inline Tally lipschitz_transfer(std::uint64_t seed, std::size_t pairs = 1000) {
  Gen g(seed);
  Tally t;
  const auto line = share(AmbientSpace::line(0));
  const auto plane = share(AmbientSpace::euclidean(2));
  for (std::size_t i = 0; i < pairs; ++i) {
    if (i % 4 == 3) {
      const double th = g.real(0, 2 * std::numbers::pi);
      Matrix m(2, 2);
      m << std::cos(th), -std::sin(th), std::sin(th), std::cos(th);
      if (g.coin()) m.col(0) *= g.real(0.2, 1.0);
      const auto f = MapSpec::linear(m, plane);
      const auto a = g.finite_set(plane, 1, 6, 5), b = g.finite_set(plane, 1, 6, 5);
      const double lip = *f.lipschitz();
      const auto din = hausdorff(a, b), dout = hausdorff(induced_image(f, a), induced_image(f, b));
      t.check(lip <= 1 + 1e-12 && hi_of(dout) <= lip * hi_of(din) + 1e-9,
              "linear " + f.describe() + " A=" + a.describe() + " B=" + b.describe());
      continue;
    }
    auto f = random_contraction(g, line);
    if (g.integer(0, 3) == 0) f = MapSpec::compose({random_contraction(g, line), f});
    const auto a = g.line_set(line, 10), b = g.line_set(line, 10);
    const auto fa = induced_image(f, a), fb = induced_image(f, b);
    const double lip = f.lipschitz().value_or(1.0);
    const auto din = hausdorff(a, b), dout = hausdorff(fa, fb);
    const std::string tag = f.describe() + " A=" + a.describe() + " B=" + b.describe();
    t.check(lip <= 1.0, "not 1-Lipschitz: " + tag);
    t.check(hi_of(dout) <= hi_of(din) + 1e-9, "d_H grew: " + tag);
    t.check(hi_of(excess(fa, fb)) <= lip * hi_of(excess(a, b)) + 1e-9, "excess grew: " + tag);
  }
  return t;
}

/// Catalog maps whose two AW conditions are both certified; no violation
/// expected from the probe in metrics H and AW.
inline Tally positive_probe(std::uint64_t seed, std::size_t instances = 40) {
  Gen g(seed);
  Tally t;
  const auto line = share(AmbientSpace::line(0));
  const auto plane = share(AmbientSpace::euclidean(2));
  Matrix m(2, 2);
  m << 1, 0.5, -0.25, 1;
  const std::vector<MapSpec> maps = {
      MapSpec::identity(line), MapSpec::affine(2, 1, line), MapSpec::affine(-0.5, 3, line),
      MapSpec::piecewise_linear({{-1, 0}, {0, 1}, {1, 3}}, line), MapSpec::linear(m, plane)};
  std::size_t certified = 0;
  for (const auto& f : maps) {
    if (aw_continuity_conditions(f).overall != "satisfied") continue;
    ++certified;
    const auto& space = f.domain();
    for (std::size_t i = 0; i < instances; ++i) {
      const auto a = g.finite_set(space, 1, 5, 4);
      std::vector<Point> offsets;
      for (const auto& p : a.as<FinitePoints>()->points) {
        (void)p;
        offsets.push_back(g.point(space->dimension(), 1));
      }
      const SetSequence seq = [a, offsets, space](std::size_t k) {
        std::vector<Point> b = a.as<FinitePoints>()->points;
        for (std::size_t q = 0; q < b.size(); ++q) b[q] += offsets[q] / static_cast<double>(k);
        return ClosedSet::points(space, b);
      };
      for (auto metric : {MetricKind::hausdorff, MetricKind::aw}) {
        const auto p = probe_induced_continuity(f, a, metric, seq, 20, {0.1, 0.05}, 0.5);
        t.check(!p.violation, f.describe() + " " + to_string(metric) + " A=" + a.describe());
      }
    }
  }
  t.check(certified >= 3, "too few maps with both conditions certified");
  return t;
}

/// A pass whose every constraint holds on [H/2, H]. converges() accepts a
/// tail of any length, which lets an oscillating sequence pass on its last
/// index alone.
inline bool settled(const ConvergenceReport& rep) {
  if (!rep.pass) return false;
  for (const auto& o : rep.outcomes)
    if (*o.entry > rep.horizon / 2) return false;
  return true;
}

// --- action suites.

/// Group elements that are exact on dyadic inputs: dyadic translations and
/// isometries with signed-permutation matrices.
inline GroupElement dyadic_isometry(Gen& g, const SpacePtr& space) {
  const auto n = static_cast<Eigen::Index>(space->dimension());
  if (n == 1 || g.coin()) return GroupElement::translation(g.dyadic_point(space->dimension(), 8), space);
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::shuffle(perm.begin(), perm.end(), g.engine());
  Matrix q = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) q(i, perm[static_cast<std::size_t>(i)]) = g.coin() ? 1.0 : -1.0;
  return GroupElement::isometry(q, g.dyadic_point(space->dimension(), 8), space);
}

inline Tally isometry_invariance(std::uint64_t seed, std::size_t pairs = 1000) {
  Gen g(seed);
  Tally t;
  const auto line = share(AmbientSpace::line());
  const auto plane = share(AmbientSpace::euclidean(2));
  for (std::size_t i = 0; i < pairs; ++i) {
    const auto& space = i % 2 ? plane : line;
    ClosedSet a = g.dyadic_set(space, 1, 6, 16), b = g.dyadic_set(space, 1, 6, 16);
    if (space == line && g.coin()) {
      std::vector<Interval> ia, ib;
      for (int n = g.integer(1, 3); n > 0; --n) {
        const double lo = g.dyadic(16);
        ia.push_back({lo, lo + std::abs(g.dyadic(2))});
      }
      for (int n = g.integer(1, 3); n > 0; --n) {
        const double lo = g.dyadic(16);
        ib.push_back({lo, lo + std::abs(g.dyadic(2))});
      }
      a = ClosedSet::intervals(line, ia);
      b = ClosedSet::intervals(line, ib);
    }
    auto h = dyadic_isometry(g, space);
    if (g.integer(0, 2) == 0) h = GroupElement::compose({dyadic_isometry(g, space), h});
    const auto ga = act(h, a), gb = act(h, b);
    const std::string tag = h.describe() + " A=" + a.describe() + " B=" + b.describe();
    t.check(h.is_isometry(), "not an isometry: " + tag);
    t.check(bit_equal(excess(ga, gb), excess(a, b)), "excess changed: " + tag);
    t.check(bit_equal(hausdorff(ga, gb), hausdorff(a, b)), "d_H changed: " + tag);
  }
  return t;
}

/// (h_n, B_n) -> (g, A) with both distances shrinking like 1/n; every
/// lowerV canonical neighbourhood of gA must eventually hold h_n B_n.
inline Tally action_lower_vietoris(std::uint64_t seed, std::size_t instances = 100, std::size_t horizon = 200) {
  Gen g(seed);
  Tally t;
  const auto plane = share(AmbientSpace::euclidean(2));
  for (std::size_t i = 0; i < instances; ++i) {
    const double th = g.real(-std::numbers::pi, std::numbers::pi), dth = g.real(-0.05, 0.05);
    const Point tr = g.point(2, 3), dtr = g.point(2, 0.2);
    const auto a = g.finite_set(plane, 1, 6, 3);
    const auto& pts = a.as<FinitePoints>()->points;
    std::vector<Point> offsets;
    for (std::size_t q = 0; q < pts.size(); ++q) offsets.push_back(g.point(2, 0.3));

    const auto elem = [plane](double angle, const Point& shift) {
      return GroupElement::compose({GroupElement::translation(shift, plane), GroupElement::rotation(angle, plane)});
    };
    const auto gel = elem(th, tr);
    const auto ga = act(gel, a);
    const auto hn = [=](std::size_t n) { return elem(th + dth / static_cast<double>(n), tr + dtr / static_cast<double>(n)); };
    const auto bn = [=](std::size_t n) {
      std::vector<Point> b = pts;
      for (std::size_t q = 0; q < b.size(); ++q) b[q] += offsets[q] / static_cast<double>(n);
      return ClosedSet::points(plane, b);
    };
    const std::string tag = "instance " + std::to_string(i) + " A=" + a.describe();

    const double dset = hi_of(hausdorff(bn(horizon), a));
    const double dgrp = hi_of(displacement_sup(gel, hn(horizon), ClosedSet::balls(plane, {{plane->base_point(), 10}})));
    t.check(dset < 0.01 && dgrp < 0.01, "perturbations did not shrink: " + tag);

    const SetSequence seq = [=](std::size_t n) { return act(hn(n), bn(n)); };
    for (double r : {1.0, 0.1, 0.01}) {
      const auto nb = canonical_neighborhoods(ga, Topology::lowerV, r, pts.size());
      t.check(settled(converges(seq, nb, horizon)), tag + " r=" + std::to_string(r));
    }
  }
  return t;
}

// --- convergence cross-checks between hit-and-miss neighbourhoods and the
// Hausdorff quantities.

enum class SeqKind { convergent, extra_far_point, dropped_point, oscillating };

struct SeqCase {
  SeqKind kind;
  ClosedSet limit;
  SetSequence seq;
};

/// Finite-set sequences in the line or the plane. Limit points are at least
/// 0.2 apart; the extra point is at distance >= 1 from the limit.
inline SeqCase make_sequence(Gen& g, std::size_t index) {
  const auto space = index % 2 ? share(AmbientSpace::euclidean(2)) : share(AmbientSpace::line());
  const auto dim = space->dimension();
  std::vector<Point> pts;
  const int want = g.integer(2, 6);
  while (static_cast<int>(pts.size()) < want) {
    const Point p = g.point(dim, 3);
    bool far = true;
    for (const auto& q : pts) far = far && (p - q).norm() >= 0.2;
    if (far) pts.push_back(p);
  }
  const auto limit = ClosedSet::points(space, pts);
  const auto sorted = limit.as<FinitePoints>()->points;
  std::vector<Point> offsets;
  for (std::size_t q = 0; q < sorted.size(); ++q) offsets.push_back(g.point(dim, 0.4));
  Point extra = g.point(dim, 1);
  extra *= (5.0 + g.real(0, 2)) / std::max(extra.norm(), 1e-3);
  const auto kind = static_cast<SeqKind>(index % 4);

  SetSequence seq = [=](std::size_t k) {
    std::vector<Point> b;
    for (std::size_t q = 0; q < sorted.size(); ++q) {
      if (kind == SeqKind::dropped_point && q == 0) continue;
      b.push_back(sorted[q] + offsets[q] / static_cast<double>(k));
    }
    if (kind == SeqKind::extra_far_point || (kind == SeqKind::oscillating && k % 2 == 1)) b.push_back(extra);
    return ClosedSet::points(space, b);
  };
  return {kind, limit, seq};
}

/// Checked limit: the sup over k in [H/2, H] lies below `target` and does
/// not exceed the sup over [H/4, H/2).
template <class F>
bool checked_to_zero(F value, std::size_t horizon, double target = 5e-3) {
  double early = 0.0, late = 0.0;
  for (std::size_t k = horizon / 4; k < horizon / 2; ++k) early = std::max(early, value(k));
  for (std::size_t k = horizon / 2; k <= horizon; ++k) late = std::max(late, value(k));
  return late <= early && late < target;
}

struct HitMissTallies {
  Tally a, b, c, consistency;
};

inline HitMissTallies hitmiss_properties(std::uint64_t seed, std::size_t instances = 100,
                                         std::size_t horizon = 400) {
  Gen g(seed);
  HitMissTallies out;
  const double scales[] = {1.0, 0.1, 0.01};
  for (std::size_t i = 0; i < instances; ++i) {
    const auto sc = make_sequence(g, i);
    const auto& a = sc.limit;
    const std::size_t m = point_count(a);
    const std::string tag = "sequence " + std::to_string(i) + " A=" + a.describe();

    // (a) e(A, A_k) -> 0 forces every lowerV neighbourhood.
    const bool lower_to_zero =
        checked_to_zero([&](std::size_t k) { return hi_of(hausdorff_lower(a, sc.seq(k))); }, horizon);
    bool lower_all = true;
    for (double r : scales) lower_all = lower_all && settled(converges(sc.seq, canonical_neighborhoods(a, Topology::lowerV, r, m), horizon));
    if (lower_to_zero) out.a.check(lower_all, "(a) " + tag);
    else ++out.a.skipped;

    // (b) every upperV neighbourhood passing forces e(A_k, A) below each
    // scale from the entry index on.
    bool upper_all = true;
    for (double r : scales) {
      const auto rep = converges(sc.seq, canonical_neighborhoods(a, Topology::upperV, r, m), horizon);
      upper_all = upper_all && settled(rep);
      if (!settled(rep)) continue;
      const std::size_t entry = *rep.outcomes.front().entry;
      for (std::size_t k = entry; k <= horizon; k += std::max<std::size_t>(1, (horizon - entry) / 16)) {
        const double e = hi_of(hausdorff_upper(a, sc.seq(k)));
        out.b.check(e < r, "(b) " + tag + " r=" + std::to_string(r) + " k=" + std::to_string(k) +
                               " e(A_k,A)=" + std::to_string(e));
      }
    }
    const bool upper_to_zero =
        checked_to_zero([&](std::size_t k) { return hi_of(hausdorff_upper(a, sc.seq(k))); }, horizon);
    if (upper_all) out.b.check(upper_to_zero, "(b) limit " + tag);

    // (c) d_H(A_k, A) -> 0 iff every vietoris neighbourhood passes.
    const bool h_to_zero = checked_to_zero([&](std::size_t k) { return hi_of(hausdorff(a, sc.seq(k))); }, horizon);
    bool viet_all = true;
    for (double r : scales)
      viet_all = viet_all && settled(converges(sc.seq, canonical_neighborhoods(a, Topology::vietoris, r, m), horizon));
    out.c.check(h_to_zero == viet_all, "(c) " + tag + " d_H->0 " + std::to_string(h_to_zero) + " vietoris " +
                                           std::to_string(viet_all));
    out.c.check(h_to_zero == (sc.kind == SeqKind::convergent), "(c) construction " + tag);

    // subset_of(A_k, X \ K) iff misses(A_k, K) for a random compact K.
    const auto dim = a.space()->dimension();
    const Point kc = g.point(dim, 4);
    const double kr = g.real(0.05, 1.5);
    const auto k = CompactSet::of({dim == 1 ? ClosedSet::intervals(a.space(), {{kc[0] - kr, kc[0] + kr}})
                                            : ClosedSet::balls(a.space(), {{kc, kr}})});
    const auto u = OpenSet::complement_of(k);
    for (std::size_t idx : {std::size_t{1}, std::size_t{2}, std::size_t{7}, horizon}) {
      const auto ak = sc.seq(idx);
      out.consistency.check(subset_of(ak, u) == misses(ak, k), "complement consistency " + tag);
    }
  }
  return out;
}

}  // namespace hstest
