#include "hyperspace/spaces.hpp"

#include <cmath>
#include <sstream>

namespace hyperspace {

Point point1(double x) {
  Point p(1);
  p << x;
  return p;
}

Point point2(double x, double y) {
  Point p(2);
  p << x, y;
  return p;
}

Point point_of(const std::vector<double>& coords) {
  Point p(static_cast<Eigen::Index>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) p[static_cast<Eigen::Index>(i)] = coords[i];
  return p;
}

std::vector<double> coords_of(const Point& p) { return {p.data(), p.data() + p.size()}; }

bool lex_less(const Point& a, const Point& b) {
  const auto n = std::min(a.size(), b.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

std::string to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::EuclideanLine: return "line";
    case SpaceKind::EuclideanN: return "euclidean";
    case SpaceKind::OpenInterval: return "open_interval";
    case SpaceKind::FiniteMetric: return "finite_metric";
  }
  return "?";
}

std::string MetricViolation::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::NonzeroDiagonal: os << "nonzero diagonal at (" << i << "," << i << ")"; break;
    case Kind::Asymmetry: os << "asymmetry at (" << i << "," << j << ")"; break;
    case Kind::NonPositive: os << "nonpositive off-diagonal at (" << i << "," << j << ")"; break;
    case Kind::Triangle:
      os << "triangle inequality fails for (" << i << "," << j << "," << k << "): d(" << i << "," << k
         << ") > d(" << i << "," << j << ") + d(" << j << "," << k << ")";
      break;
  }
  return os.str();
}

std::optional<MetricViolation> validate_finite_metric(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) throw ValidationError("finite metric: matrix is not square");
  const auto n = static_cast<std::size_t>(m.rows());
  auto at = [&](std::size_t i, std::size_t j) { return m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)); };
  using K = MetricViolation::Kind;
  for (std::size_t i = 0; i < n; ++i) {
    if (at(i, i) != 0.0) return MetricViolation{K::NonzeroDiagonal, i, i, 0};
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (at(i, j) != at(j, i)) return MetricViolation{K::Asymmetry, i, j, 0};
      if (!(at(i, j) > 0.0) || !std::isfinite(at(i, j))) return MetricViolation{K::NonPositive, i, j, 0};
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (at(i, k) > at(i, j) + at(j, k) + tol) return MetricViolation{K::Triangle, i, j, k};
  return std::nullopt;
}

AmbientSpace AmbientSpace::line(double base) {
  if (!std::isfinite(base)) throw ValidationError("line: base point must be finite");
  AmbientSpace s;
  s.kind_ = SpaceKind::EuclideanLine;
  s.dimension_ = 1;
  s.base_ = point1(base);
  return s;
}

AmbientSpace AmbientSpace::euclidean(std::size_t dimension, Point base) {
  if (dimension == 0) throw ValidationError("euclidean: dimension must be at least 1");
  if (static_cast<std::size_t>(base.size()) != dimension) throw ValidationError("euclidean: base point has wrong dimension");
  if (!base.allFinite()) throw ValidationError("euclidean: base point must be finite");
  AmbientSpace s;
  s.kind_ = SpaceKind::EuclideanN;
  s.dimension_ = dimension;
  s.base_ = std::move(base);
  return s;
}

AmbientSpace AmbientSpace::euclidean(std::size_t dimension) {
  return euclidean(dimension, Point::Zero(static_cast<Eigen::Index>(dimension)));
}

AmbientSpace AmbientSpace::open_interval(double a, double b, double base) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) throw ValidationError("open_interval: need finite a < b");
  if (!(a < base && base < b)) throw ValidationError("open_interval: base point must lie strictly inside (a,b)");
  AmbientSpace s;
  s.kind_ = SpaceKind::OpenInterval;
  s.dimension_ = 1;
  s.a_ = a;
  s.b_ = b;
  s.base_ = point1(base);
  return s;
}

AmbientSpace AmbientSpace::finite_metric(Matrix distances, std::size_t base_index) {
  if (auto v = validate_finite_metric(distances)) throw ValidationError("finite_metric: " + v->describe());
  if (distances.rows() == 0) throw ValidationError("finite_metric: empty space");
  if (base_index >= static_cast<std::size_t>(distances.rows())) throw ValidationError("finite_metric: base index out of range");
  AmbientSpace s;
  s.kind_ = SpaceKind::FiniteMetric;
  s.dimension_ = 1;
  s.matrix_ = std::move(distances);
  s.base_ = point1(static_cast<double>(base_index));
  return s;
}

std::size_t AmbientSpace::size() const { return static_cast<std::size_t>(matrix_.rows()); }

bool AmbientSpace::contains(const Point& p) const {
  if (static_cast<std::size_t>(p.size()) != dimension_ || !p.allFinite()) return false;
  switch (kind_) {
    case SpaceKind::EuclideanLine:
    case SpaceKind::EuclideanN: return true;
    case SpaceKind::OpenInterval: return a_ < p[0] && p[0] < b_;
    case SpaceKind::FiniteMetric: {
      const double idx = p[0];
      return idx >= 0 && idx == std::floor(idx) && idx < static_cast<double>(size());
    }
  }
  return false;
}

void AmbientSpace::require(const Point& p) const {
  if (static_cast<std::size_t>(p.size()) != dimension_) {
    throw DomainError("point has dimension " + std::to_string(p.size()) + ", ambient " + describe() + " expects " +
                      std::to_string(dimension_));
  }
  if (!contains(p)) throw DomainError("point lies outside ambient " + describe());
}

double AmbientSpace::distance(const Point& p, const Point& q) const {
  require(p);
  require(q);
  return raw_distance(p, q);
}

double AmbientSpace::raw_distance(const Point& p, const Point& q) const {
  if (kind_ == SpaceKind::FiniteMetric) {
    return matrix_(static_cast<Eigen::Index>(p[0]), static_cast<Eigen::Index>(q[0]));
  }
  if (dimension_ == 1) return std::abs(p[0] - q[0]);
  return (p - q).norm();
}

std::string AmbientSpace::describe() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind_) {
    case SpaceKind::EuclideanLine: os << "line(x0=" << base_[0] << ")"; break;
    case SpaceKind::EuclideanN: {
      os << "R^" << dimension_ << "(x0=(";
      for (Eigen::Index i = 0; i < base_.size(); ++i) os << (i ? "," : "") << base_[i];
      os << "))";
      break;
    }
    case SpaceKind::OpenInterval: os << "(" << a_ << "," << b_ << ")(x0=" << base_[0] << ")"; break;
    case SpaceKind::FiniteMetric: os << "finite[" << size() << "](x0=#" << base_[0] << ")"; break;
  }
  return os.str();
}

bool operator==(const AmbientSpace& a, const AmbientSpace& b) {
  if (a.kind_ != b.kind_ || a.dimension_ != b.dimension_) return false;
  if (a.base_ != b.base_) return false;
  switch (a.kind_) {
    case SpaceKind::OpenInterval: return a.a_ == b.a_ && a.b_ == b.b_;
    case SpaceKind::FiniteMetric: return a.matrix_.rows() == b.matrix_.rows() && a.matrix_ == b.matrix_;
    default: return true;
  }
}

bool same_ambient(const SpacePtr& a, const SpacePtr& b) { return a == b || (a && b && *a == *b); }

}  // namespace hyperspace
