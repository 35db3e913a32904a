#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hyperspace/hypermetrics.hpp"
#include "hyperspace/sets.hpp"

namespace hyperspace {

/// An invertible affine self-map of a line or R^n acting on closed sets.
class GroupElement {
 public:
  enum class Kind { Identity, Rotation, Isometry, Translation, Scaling, Composition };

  static GroupElement identity(SpacePtr space);
  /// Rotation of R^2 about the origin by `theta`.
  static GroupElement rotation(double theta, SpacePtr plane = share(AmbientSpace::euclidean(2)));
  /// x -> Q x + t with Q orthogonal (checked to 1e-12).
  static GroupElement isometry(Matrix q, Point t, SpacePtr space);
  static GroupElement translation(Point t, SpacePtr space);
  /// x -> lambda x, lambda > 0.
  static GroupElement scaling(double lambda, SpacePtr space);
  /// elems[0] ∘ elems[1] ∘ ... (the last element acts first).
  static GroupElement compose(std::vector<GroupElement> elems);

  Kind kind() const { return kind_; }
  const SpacePtr& space() const { return space_; }
  double angle() const { return theta_; }
  double factor() const { return lambda_; }
  const Matrix& matrix() const { return q_; }
  const Point& shift() const { return t_; }
  const std::vector<GroupElement>& parts() const { return parts_; }

  Point apply(const Point& x) const;
  GroupElement inverse() const;

  /// Affine form x -> M x + c (composed in floating point).
  Matrix linear_part() const;
  Point translation_part() const;

  bool is_isometry() const;
  /// Lipschitz constant (1 for isometries, lambda for scalings).
  double lipschitz() const;
  /// g and g^{-1} both send bounded sets to bounded sets (true for every
  /// element of this catalogue).
  bool boundedness_preserving() const { return true; }
  /// δ(ε) = ε / Lipschitz constant.
  double modulus(double eps) const { return eps / lipschitz(); }

  std::string describe() const;

 private:
  GroupElement() = default;

  Kind kind_ = Kind::Identity;
  SpacePtr space_;
  double theta_ = 0.0;
  double lambda_ = 1.0;
  Matrix q_;
  Point t_;
  std::vector<GroupElement> parts_;
};

std::string to_string(GroupElement::Kind kind);

/// gA = {ga : a in A}.
ClosedSet act(const GroupElement& g, const ClosedSet& a);

/// sup_{x in A} d(f(x), h(x)) for bounded A. Exact on finite sets, intervals,
/// boxes, segments, and on balls when the displacement is a similarity;
/// branch and bound otherwise.
CertifiedValue displacement_sup(const GroupElement& f, const GroupElement& h, const ClosedSet& a,
                                const CertOptions& options = {});

/// h in (A, f, eps), i.e. sup_{x in A} d(f(x), h(x)) < eps.
Decision ucb_nbhd_contains(const GroupElement& h, const ClosedSet& a, const GroupElement& f, double eps,
                           const CertOptions& options = {});

/// g in [A, B], i.e. gA ⊆ B.
bool maps_into(const GroupElement& g, const ClosedSet& a, const ClosedSet& b);

using ElementSequence = std::function<GroupElement(std::size_t)>;

struct ActionProbeRow {
  std::size_t index = 0;
  CertifiedValue d_group;  // displacement of g against h_k over the reference set
  CertifiedValue d_set;    // metric(A, B_k)
  CertifiedValue d_out;    // metric(gA, h_k B_k)
};

struct ActionProbeReport {
  std::vector<ActionProbeRow> rows;
  bool violation = false;
  std::optional<std::size_t> witness_row;
  std::string verdict() const { return violation ? "violation" : "no-violation-found"; }
};

/// Compares (h_k, B_k) against (g, A) for k = 1..count. A violation needs, for
/// every δ of the schedule, some k with d_group, d_set < δ and d_out > eps.
/// `reference` defaults to the closed ball of radius 10 about the base point.
ActionProbeReport probe_action_continuity(const GroupElement& g, const ClosedSet& a, MetricKind metric,
                                          const ElementSequence& group_perturb, const SetSequence& set_perturb,
                                          std::size_t count, const std::vector<double>& schedule, double eps,
                                          const std::optional<ClosedSet>& reference = std::nullopt,
                                          double tol = 1e-3);

}  // namespace hyperspace
