#include "hyperspace/actions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "detail/maximize.hpp"

namespace hyperspace {
namespace {

std::string num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string vec(const Point& p) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < p.size(); ++i) s += (i ? "," : "") + num(p[i]);
  return s + ")";
}

void require_affine_space(const SpacePtr& space) {
  if (space->kind() != SpaceKind::EuclideanLine && space->kind() != SpaceKind::EuclideanN) {
    throw DomainError("group elements act on the real line or R^n, not on " + space->describe());
  }
}

Matrix rotation_matrix(double theta) {
  Matrix r(2, 2);
  r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return r;
}

// Linear part applied to a vector, evaluated the same way apply() is.
Point apply_linear(const GroupElement& g, const Point& v) {
  switch (g.kind()) {
    case GroupElement::Kind::Identity:
    case GroupElement::Kind::Translation: return v;
    case GroupElement::Kind::Rotation: {
      const double c = std::cos(g.angle()), s = std::sin(g.angle());
      return point2(c * v[0] - s * v[1], s * v[0] + c * v[1]);
    }
    case GroupElement::Kind::Isometry: return g.matrix() * v;
    case GroupElement::Kind::Scaling: return g.factor() * v;
    case GroupElement::Kind::Composition: {
      Point y = v;
      for (auto it = g.parts().rbegin(); it != g.parts().rend(); ++it) y = apply_linear(*it, y);
      return y;
    }
  }
  return v;
}

bool is_monomial(const Matrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if ((m.row(i).array() != 0.0).count() != 1) return false;
    if ((m.col(i).array() != 0.0).count() != 1) return false;
  }
  return true;
}

bool similarity_scale(const Matrix& k, double& s) {
  const Matrix g = k.transpose() * k;
  const double s2 = g(0, 0);
  const double off = (g - s2 * Matrix::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
  if (off > 1e-15 * std::max(1.0, s2)) return false;
  s = std::sqrt(s2);
  return true;
}

ClosedSet act_single(const GroupElement& g, const ClosedSet& a) {
  const SpacePtr& sp = a.space();
  if (const auto* fp = a.as<FinitePoints>()) {
    std::vector<Point> pts;
    for (const auto& p : fp->points) pts.push_back(g.apply(p));
    return ClosedSet::points(sp, std::move(pts));
  }
  if (const auto* c = a.as<SampledCloud>()) {
    std::vector<Point> pts;
    for (const auto& p : c->points) pts.push_back(g.apply(p));
    return ClosedSet::cloud(sp, std::move(pts), g.lipschitz() * c->resolution);
  }
  if (const auto* iu = a.as<IntervalUnion>()) {
    std::vector<Interval> out;
    for (const auto& iv : iu->intervals) {
      const double p = g.apply(point1(iv.lo))[0], q = g.apply(point1(iv.hi))[0];
      out.push_back({std::min(p, q), std::max(p, q)});
    }
    return ClosedSet::intervals(sp, std::move(out));
  }
  if (const auto* bl = a.as<BallUnion>()) {
    std::vector<Ball> out;
    for (const auto& b : bl->balls) out.push_back({g.apply(b.center), g.lipschitz() * b.radius});
    return ClosedSet::balls(sp, std::move(out));
  }
  if (const auto* r = a.as<Ray>()) return ClosedSet::ray(sp, g.apply(r->anchor), apply_linear(g, r->direction));
  if (const auto* su = a.as<SegmentUnion>()) {
    std::vector<Segment> out;
    for (const auto& s : su->segments) out.push_back({g.apply(s.from), g.apply(s.to)});
    return ClosedSet::segments(sp, std::move(out));
  }
  if (const auto* bu = a.as<BoxUnion>()) {
    const bool axis_preserving = g.kind() == GroupElement::Kind::Identity || g.kind() == GroupElement::Kind::Translation ||
                                 g.kind() == GroupElement::Kind::Scaling || is_monomial(g.linear_part());
    if (axis_preserving) {
      std::vector<Box> out;
      for (const auto& b : bu->boxes) {
        const Point p = g.apply(b.lo), q = g.apply(b.hi);
        out.push_back({p.cwiseMin(q), p.cwiseMax(q)});
      }
      return ClosedSet::boxes(sp, std::move(out));
    }
    std::vector<Segment> out;
    for (const auto& b : bu->boxes) {
      if (((b.hi - b.lo).array() != 0.0).count() > 1) {
        throw UnsupportedError("act: a rotated box is not representable (" + g.describe() + ")");
      }
      out.push_back({g.apply(b.lo), g.apply(b.hi)});
    }
    return ClosedSet::segments(sp, std::move(out));
  }
  throw UnsupportedError("act: unsupported representation " + to_string(a.kind()));
}

CertifiedValue exact_value(double v) { return CertifiedValue{ExtReal(v), ExtReal(v), Method::finite_max, 0.0, std::nullopt}; }

}  // namespace

std::string to_string(GroupElement::Kind kind) {
  switch (kind) {
    case GroupElement::Kind::Identity: return "identity";
    case GroupElement::Kind::Rotation: return "rotation";
    case GroupElement::Kind::Isometry: return "isometry";
    case GroupElement::Kind::Translation: return "translation";
    case GroupElement::Kind::Scaling: return "scaling";
    case GroupElement::Kind::Composition: return "compose";
  }
  return "?";
}

GroupElement GroupElement::identity(SpacePtr space) {
  require_affine_space(space);
  GroupElement g;
  g.space_ = std::move(space);
  return g;
}

GroupElement GroupElement::rotation(double theta, SpacePtr plane) {
  if (plane->kind() != SpaceKind::EuclideanN || plane->dimension() != 2) throw DomainError("rotations act on R^2");
  if (!std::isfinite(theta)) throw ValidationError("rotation: angle must be finite");
  GroupElement g;
  g.kind_ = Kind::Rotation;
  g.theta_ = theta;
  g.space_ = std::move(plane);
  return g;
}

GroupElement GroupElement::isometry(Matrix q, Point t, SpacePtr space) {
  require_affine_space(space);
  const auto n = static_cast<Eigen::Index>(space->dimension());
  if (q.rows() != n || q.cols() != n || t.size() != n) throw DomainError("isometry: dimension mismatch");
  if ((q.transpose() * q - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-12) {
    throw ValidationError("isometry: matrix is not orthogonal");
  }
  GroupElement g;
  g.kind_ = Kind::Isometry;
  g.q_ = std::move(q);
  g.t_ = std::move(t);
  g.space_ = std::move(space);
  return g;
}

GroupElement GroupElement::translation(Point t, SpacePtr space) {
  require_affine_space(space);
  if (static_cast<std::size_t>(t.size()) != space->dimension() || !t.allFinite()) {
    throw DomainError("translation: vector dimension mismatch");
  }
  GroupElement g;
  g.kind_ = Kind::Translation;
  g.t_ = std::move(t);
  g.space_ = std::move(space);
  return g;
}

GroupElement GroupElement::scaling(double lambda, SpacePtr space) {
  require_affine_space(space);
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw ValidationError("scaling: factor must be positive");
  GroupElement g;
  g.kind_ = Kind::Scaling;
  g.lambda_ = lambda;
  g.space_ = std::move(space);
  return g;
}

GroupElement GroupElement::compose(std::vector<GroupElement> elems) {
  if (elems.empty()) throw ValidationError("compose: at least one element required");
  for (const auto& e : elems)
    if (!same_ambient(e.space(), elems.front().space())) throw DomainError("compose: elements act on different spaces");
  if (elems.size() == 1) return elems.front();
  GroupElement g;
  g.kind_ = Kind::Composition;
  g.space_ = elems.front().space();
  g.parts_ = std::move(elems);
  return g;
}

Point GroupElement::apply(const Point& x) const {
  switch (kind_) {
    case Kind::Identity: return x;
    case Kind::Rotation: {
      const double c = std::cos(theta_), s = std::sin(theta_);
      return point2(c * x[0] - s * x[1], s * x[0] + c * x[1]);
    }
    case Kind::Isometry: return q_ * x + t_;
    case Kind::Translation: return x + t_;
    case Kind::Scaling: return lambda_ * x;
    case Kind::Composition: {
      Point y = x;
      for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) y = it->apply(y);
      return y;
    }
  }
  return x;
}

GroupElement GroupElement::inverse() const {
  switch (kind_) {
    case Kind::Identity: return *this;
    case Kind::Rotation: return rotation(-theta_, space_);
    case Kind::Isometry: {
      const Matrix qt = q_.transpose();
      return isometry(qt, -(qt * t_), space_);
    }
    case Kind::Translation: return translation(-t_, space_);
    case Kind::Scaling: return scaling(1.0 / lambda_, space_);
    case Kind::Composition: {
      std::vector<GroupElement> inv;
      for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) inv.push_back(it->inverse());
      return compose(std::move(inv));
    }
  }
  return *this;
}

Matrix GroupElement::linear_part() const {
  const auto n = static_cast<Eigen::Index>(space_->dimension());
  switch (kind_) {
    case Kind::Identity:
    case Kind::Translation: return Matrix::Identity(n, n);
    case Kind::Rotation: return rotation_matrix(theta_);
    case Kind::Isometry: return q_;
    case Kind::Scaling: return lambda_ * Matrix::Identity(n, n);
    case Kind::Composition: {
      Matrix m = Matrix::Identity(n, n);
      for (const auto& p : parts_) m = m * p.linear_part();
      return m;
    }
  }
  return Matrix::Identity(n, n);
}

Point GroupElement::translation_part() const {
  const auto n = static_cast<Eigen::Index>(space_->dimension());
  switch (kind_) {
    case Kind::Isometry:
    case Kind::Translation: return t_;
    case Kind::Composition: {
      Point c = Point::Zero(n);
      for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) c = it->linear_part() * c + it->translation_part();
      return c;
    }
    default: return Point::Zero(n);
  }
}

bool GroupElement::is_isometry() const {
  switch (kind_) {
    case Kind::Scaling: return lambda_ == 1.0;
    case Kind::Composition:
      return std::all_of(parts_.begin(), parts_.end(), [](const GroupElement& p) { return p.is_isometry(); });
    default: return true;
  }
}

double GroupElement::lipschitz() const {
  switch (kind_) {
    case Kind::Scaling: return lambda_;
    case Kind::Composition: {
      double l = 1.0;
      for (const auto& p : parts_) l *= p.lipschitz();
      return l;
    }
    default: return 1.0;
  }
}

std::string GroupElement::describe() const {
  switch (kind_) {
    case Kind::Identity: return "identity";
    case Kind::Rotation: return "rotation(" + num(theta_) + ")";
    case Kind::Isometry: {
      std::string s = "isometry([";
      for (Eigen::Index i = 0; i < q_.rows(); ++i) {
        s += i ? ",[" : "[";
        for (Eigen::Index j = 0; j < q_.cols(); ++j) s += (j ? "," : "") + num(q_(i, j));
        s += "]";
      }
      return s + "];" + vec(t_) + ")";
    }
    case Kind::Translation: return "translation" + vec(t_);
    case Kind::Scaling: return "scaling(" + num(lambda_) + ")";
    case Kind::Composition: {
      std::string s = "compose(";
      for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? ";" : "") + parts_[i].describe();
      return s + ")";
    }
  }
  return "?";
}

ClosedSet act(const GroupElement& g, const ClosedSet& a) {
  if (!same_ambient(g.space(), a.space())) throw DomainError("act: element and set live in different spaces");
  if (g.kind() == GroupElement::Kind::Composition) {
    ClosedSet cur = a;
    for (auto it = g.parts().rbegin(); it != g.parts().rend(); ++it) cur = act_single(*it, cur);
    return cur;
  }
  return act_single(g, a);
}

CertifiedValue displacement_sup(const GroupElement& f, const GroupElement& h, const ClosedSet& a,
                                const CertOptions& options) {
  if (!same_ambient(f.space(), a.space()) || !same_ambient(h.space(), a.space())) {
    throw DomainError("displacement_sup: elements and set live in different spaces");
  }
  if (!a.is_bounded()) throw NotApplicableError("displacement_sup: A must be bounded");
  auto disp = [&](const Point& x) { return (f.apply(x) - h.apply(x)).norm(); };
  auto max_at = [&](const std::vector<Point>& pts) {
    double best = 0.0;
    for (const auto& p : pts) best = std::max(best, disp(p));
    return best;
  };
  const Matrix k = f.linear_part() - h.linear_part();
  const Point c = f.translation_part() - h.translation_part();

  if (const auto* fp = a.as<FinitePoints>()) return exact_value(max_at(fp->points));
  if (const auto* cl = a.as<SampledCloud>()) {
    Eigen::JacobiSVD<Matrix> svd(k);
    const double lip = svd.singularValues()(0);
    const double v = max_at(cl->points);
    return CertifiedValue{ExtReal(std::max(0.0, v - lip * cl->resolution)), ExtReal(v + lip * cl->resolution),
                          Method::finite_max, lip * cl->resolution, std::nullopt};
  }
  // x -> |Kx + c| is convex: its sup over a convex piece sits at an extreme
  // point.
  if (const auto* iu = a.as<IntervalUnion>()) {
    std::vector<Point> pts;
    for (const auto& iv : iu->intervals) {
      pts.push_back(point1(iv.lo));
      pts.push_back(point1(iv.hi));
    }
    return exact_value(max_at(pts));
  }
  if (const auto* su = a.as<SegmentUnion>()) {
    std::vector<Point> pts;
    for (const auto& s : su->segments) {
      pts.push_back(s.from);
      pts.push_back(s.to);
    }
    return exact_value(max_at(pts));
  }
  if (const auto* bu = a.as<BoxUnion>()) {
    std::vector<Point> pts;
    for (const auto& b : bu->boxes) {
      std::vector<Eigen::Index> free;
      for (Eigen::Index i = 0; i < b.lo.size(); ++i)
        if (b.lo[i] < b.hi[i]) free.push_back(i);
      if (free.size() > 20) throw UnsupportedError("displacement_sup: too many box axes");
      for (std::size_t mask = 0; mask < (std::size_t{1} << free.size()); ++mask) {
        Point v = b.lo;
        for (std::size_t j = 0; j < free.size(); ++j)
          if (mask & (std::size_t{1} << j)) v[free[j]] = b.hi[free[j]];
        pts.push_back(std::move(v));
      }
    }
    return exact_value(max_at(pts));
  }
  if (const auto* bl = a.as<BallUnion>()) {
    double s = 0.0;
    if (similarity_scale(k, s)) {
      double best = 0.0;
      for (const auto& b : bl->balls) best = std::max(best, (k * b.center + c).norm() + s * b.radius);
      return exact_value(best);
    }
    Eigen::JacobiSVD<Matrix> svd(k);
    const double lip = svd.singularValues()(0);
    CertifiedValue acc = exact_value(0.0);
    for (const auto& b : bl->balls) {
      detail::MaximizeOptions mo;
      mo.lipschitz = lip;
      mo.target_width = options.width;
      mo.max_evals = options.max_evals;
      const auto r = detail::maximize(disp, detail::Region::ball(b.center, b.radius), mo);
      acc.lo = max(acc.lo, ExtReal(r.lo));
      acc.hi = max(acc.hi, ExtReal(r.hi));
      acc.method = Method::grid;
      acc.resolution = options.width;
    }
    return acc;
  }
  throw UnsupportedError("displacement_sup: unsupported representation " + to_string(a.kind()));
}

Decision ucb_nbhd_contains(const GroupElement& h, const ClosedSet& a, const GroupElement& f, double eps,
                           const CertOptions& options) {
  if (!(eps > 0.0)) throw ValidationError("ucb_nbhd_contains: eps must be positive");
  const auto sup = displacement_sup(f, h, a, options);
  if (sup.hi < ExtReal(eps)) return Decision::yes;
  if (sup.lo >= ExtReal(eps)) return Decision::no;
  return Decision::indeterminate;
}

bool maps_into(const GroupElement& g, const ClosedSet& a, const ClosedSet& b) {
  require_same_ambient(a, b);
  return is_subset(act(g, a), b);
}

ActionProbeReport probe_action_continuity(const GroupElement& g, const ClosedSet& a, MetricKind metric,
                                          const ElementSequence& group_perturb, const SetSequence& set_perturb,
                                          std::size_t count, const std::vector<double>& schedule, double eps,
                                          const std::optional<ClosedSet>& reference, double tol) {
  if (schedule.empty()) throw ValidationError("probe: empty delta schedule");
  const SpacePtr& sp = a.space();
  const ClosedSet ref = reference ? *reference
                        : sp->kind() == SpaceKind::EuclideanN
                            ? ClosedSet::balls(sp, {Ball{sp->base_point(), 10.0}})
                            : ClosedSet::intervals(sp, {{sp->base_point()[0] - 10.0, sp->base_point()[0] + 10.0}});
  const ClosedSet ga = act(g, a);
  ActionProbeReport rep;
  for (std::size_t k = 1; k <= count; ++k) {
    std::optional<GroupElement> h;
    std::optional<ClosedSet> b;
    try {
      h.emplace(group_perturb(k));
      b.emplace(set_perturb(k));
    } catch (const std::exception& e) {
      throw Error("generator fault at index " + std::to_string(k) + ": " + e.what());
    }
    ActionProbeRow row{k, displacement_sup(g, *h, ref), measure(metric, a, *b, tol), measure(metric, ga, act(*h, *b), tol)};
    rep.rows.push_back(std::move(row));
  }
  auto violates = [&](const ActionProbeRow& r, double delta) {
    return r.d_group.hi < ExtReal(delta) && r.d_set.hi < ExtReal(delta) && r.d_out.lo > ExtReal(eps);
  };
  rep.violation = true;
  for (double delta : schedule) {
    if (std::none_of(rep.rows.begin(), rep.rows.end(), [&](const ActionProbeRow& r) { return violates(r, delta); })) {
      rep.violation = false;
      break;
    }
  }
  if (rep.violation) {
    const double smallest = *std::min_element(schedule.begin(), schedule.end());
    for (std::size_t i = 0; i < rep.rows.size(); ++i)
      if (violates(rep.rows[i], smallest) && !rep.witness_row) rep.witness_row = i;
  }
  return rep;
}

}  // namespace hyperspace
