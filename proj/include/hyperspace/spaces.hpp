#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hyperspace/errors.hpp"

namespace hyperspace {

/// Coordinates of a point. Euclidean kinds use one coordinate per axis; the
/// real line and its open-interval subspaces use a 1-vector; finite metric
/// spaces store the point index as the single coordinate.
using Point = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

Point point1(double x);
Point point2(double x, double y);
Point point_of(const std::vector<double>& coords);
std::vector<double> coords_of(const Point& p);

/// Lexicographic order on coordinates; used wherever output must be
/// reproducible.
bool lex_less(const Point& a, const Point& b);

enum class SpaceKind { EuclideanLine, EuclideanN, OpenInterval, FiniteMetric };

std::string to_string(SpaceKind kind);

/// First violated metric axiom of a finite distance matrix.
struct MetricViolation {
  enum class Kind { NonzeroDiagonal, Asymmetry, NonPositive, Triangle };
  Kind kind;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;  // only meaningful for Triangle: M[i][k] > M[i][j] + M[j][k]
  std::string describe() const;
};

/// Returns nullopt when the matrix is a metric (zero diagonal, symmetric,
/// positive off-diagonal, triangle inequality within `tol`). Throws
/// ValidationError for a non-square input.
std::optional<MetricViolation> validate_finite_metric(const Matrix& m, double tol = kDefaultTol);

/// A concrete metric space with a fixed base point. Immutable.
class AmbientSpace {
 public:
  static AmbientSpace line(double base = 0.0);
  static AmbientSpace euclidean(std::size_t dimension, Point base);
  static AmbientSpace euclidean(std::size_t dimension);  // base at the origin
  static AmbientSpace open_interval(double a, double b, double base);
  static AmbientSpace finite_metric(Matrix distances, std::size_t base_index = 0);

  SpaceKind kind() const { return kind_; }
  /// Number of coordinates of a point (1 for line, interval and finite kinds).
  std::size_t dimension() const { return dimension_; }
  const Point& base_point() const { return base_; }

  /// Interval bounds; only for OpenInterval.
  double lower() const { return a_; }
  double upper() const { return b_; }
  /// Distance matrix; only for FiniteMetric.
  const Matrix& matrix() const { return matrix_; }
  std::size_t size() const;  // number of points of a FiniteMetric space

  /// True for the real line and its open-interval subspaces.
  bool is_one_dimensional() const {
    return kind_ == SpaceKind::EuclideanLine || kind_ == SpaceKind::OpenInterval;
  }
  /// True when points live in R^n with the Euclidean metric (line, interval, R^n).
  bool is_euclidean() const { return kind_ != SpaceKind::FiniteMetric; }
  bool is_bounded() const { return kind_ == SpaceKind::OpenInterval || kind_ == SpaceKind::FiniteMetric; }
  /// Every ambient kind offered here is locally compact (open subsets of R
  /// included).
  bool is_locally_compact() const { return true; }

  bool contains(const Point& p) const;
  /// Throws DomainError when `p` is not a point of this space.
  void require(const Point& p) const;

  /// Metric of the space; validates both points.
  double distance(const Point& p, const Point& q) const;
  /// Metric without membership checks (used for limit evaluations at the
  /// missing endpoints of an open interval).
  double raw_distance(const Point& p, const Point& q) const;

  std::string describe() const;

  friend bool operator==(const AmbientSpace& a, const AmbientSpace& b);
  friend bool operator!=(const AmbientSpace& a, const AmbientSpace& b) { return !(a == b); }

 private:
  AmbientSpace() = default;

  SpaceKind kind_ = SpaceKind::EuclideanLine;
  std::size_t dimension_ = 1;
  Point base_;
  double a_ = 0.0;
  double b_ = 0.0;
  Matrix matrix_;
};

using SpacePtr = std::shared_ptr<const AmbientSpace>;

inline SpacePtr share(AmbientSpace space) { return std::make_shared<const AmbientSpace>(std::move(space)); }

/// Same metric space (kind, parameters and base point).
bool same_ambient(const SpacePtr& a, const SpacePtr& b);

}  // namespace hyperspace
