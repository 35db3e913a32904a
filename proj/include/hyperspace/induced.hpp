#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperspace/hypermetrics.hpp"
#include "hyperspace/sets.hpp"

namespace hyperspace {

enum class Flag { yes, no, unknown };

std::string to_string(Flag f);

/// A catalogued continuous map between two ambient spaces.
class MapSpec {
 public:
  enum class Kind { Identity, Affine, LinearMatrix, SinReciprocal, ArctanOfDistance, PiecewiseLinear, Composition };

  static MapSpec identity(SpacePtr space);
  /// x -> a x + b on a line.
  static MapSpec affine(double a, double b, SpacePtr line = share(AmbientSpace::line()));
  /// x -> M x from R^n to R^m (codomain based at the origin).
  static MapSpec linear(Matrix m, SpacePtr domain);
  /// x -> sin(1/x) from (0,1) to the line; default base points 1/2 and 0.
  static MapSpec sin_reciprocal(SpacePtr domain = share(AmbientSpace::open_interval(0.0, 1.0, 0.5)),
                                SpacePtr codomain = share(AmbientSpace::line()));
  /// x -> arctan(d(x0, x)) into the line based at 0.
  static MapSpec arctan_of_distance(SpacePtr domain, SpacePtr codomain = share(AmbientSpace::line()));
  /// Continuous piecewise-linear map on a line through the knots (x_i, y_i)
  /// (strictly increasing x), extended linearly past the first and last knot.
  static MapSpec piecewise_linear(std::vector<std::pair<double, double>> knots,
                                  SpacePtr line = share(AmbientSpace::line()), SpacePtr codomain = nullptr);
  /// maps[0] ∘ maps[1] ∘ ... (the last map is applied first).
  static MapSpec compose(std::vector<MapSpec> maps);

  Kind kind() const { return kind_; }
  const SpacePtr& domain() const { return domain_; }
  const SpacePtr& codomain() const { return codomain_; }
  double slope() const { return a_; }
  double offset() const { return b_; }
  const Matrix& matrix() const { return m_; }
  const std::vector<std::pair<double, double>>& knots() const { return knots_; }
  const std::vector<MapSpec>& parts() const { return parts_; }

  Point apply(const Point& x) const;

  /// Global Lipschitz constant when known in closed form.
  std::optional<double> lipschitz() const;
  /// Bounded sets go to bounded sets.
  Flag boundedness_preserving() const;
  /// Uniformly continuous on bounded sets.
  Flag uniformly_continuous_on_bounded() const;
  /// Certified modulus δ(ε) valid on bounded sets (ε / L for Lipschitz maps;
  /// +inf for constant maps).
  std::optional<double> modulus(double eps) const;

  std::string describe() const;

 private:
  MapSpec() = default;

  Kind kind_ = Kind::Identity;
  SpacePtr domain_, codomain_;
  double a_ = 1.0, b_ = 0.0;
  Matrix m_;
  std::vector<std::pair<double, double>> knots_;
  std::vector<MapSpec> parts_;
};

std::string to_string(MapSpec::Kind kind);

/// closure(f(A)).
ClosedSet induced_image(const MapSpec& f, const ClosedSet& a);

struct PreimageReport {
  enum class Verdict { bounded_within, escape_evidence, not_applicable };
  Verdict verdict = Verdict::not_applicable;
  /// Closed-form analysis (true) or sampled search (false).
  bool certified = false;
  /// bounded_within: f^{-1}(B) lies in the closed ball of this radius about
  /// the domain's base point.
  double radius = 0.0;
  /// escape_evidence: points mapped into B, one per requested radius.
  std::vector<Point> witnesses;
  std::string note;
};

std::string to_string(PreimageReport::Verdict v);

/// Is f^{-1}(B) bounded? First checks |B ∩ f(X)| > 1 (not_applicable
/// otherwise). `radii` is the increasing schedule used for witnesses and for
/// the sampled fallback.
PreimageReport check_preimage_boundedness(const MapSpec& f, const ClosedSet& b,
                                          const std::vector<double>& radii = {1, 10, 100, 1000});

struct ModulusCounterexample {
  Point a;
  Point x;
  double d_in = 0.0;
  double d_out = 0.0;
};

struct ModulusResult {
  /// Largest δ of the schedule that passed every trial (or the certified δ).
  std::optional<double> delta;
  bool certified = false;
  std::optional<ModulusCounterexample> counterexample;
  std::size_t trials = 0;
};

/// δ for the ε-δ condition of f near A. Catalog maps with a certified
/// modulus answer in closed form; otherwise a seeded search (random and
/// structured pairs) runs over δ = ε, ε/2, ... down to `delta_min`.
/// NotApplicableError when f(A) is unbounded.
ModulusResult estimate_uniform_modulus(const MapSpec& f, const ClosedSet& a, double eps, std::size_t trials = 2000,
                                       double delta_min = 1e-4, std::uint64_t seed = 0x5EED);

struct WitnessRecord {
  ClosedSet b;
  ClosedSet c;
  double pair_distance = 0.0;  // d(a_m, x_m)
  CertifiedValue aw_in;        // d_AW(B, C_m)
  CertifiedValue aw_out;       // d'_AW(f~B, f~C_m)
  ClosedSet image_b;
  ClosedSet image_c;
};

/// B = {x_n}, C_m = (B \ {x_m}) ∪ {a_m} for pairs with d(a_n,x_n) < 1/n and
/// d'(f a_n, f x_n) >= eps (validated; m is 1-based).
WitnessRecord uniform_continuity_witness(const MapSpec& f, const std::vector<std::pair<Point, Point>>& pairs,
                                         std::size_t m, double eps = 0.5, double tol = 1e-3);

enum class Status { certified_true, certified_false, evidence_true, evidence_false, unknown };

std::string to_string(Status s);

struct ConditionsReport {
  /// Uniformly continuous on every A with f(A) bounded.
  Status cond1 = Status::unknown;
  /// f^{-1}(B) bounded for every bounded B.
  Status cond2 = Status::unknown;
  /// "satisfied" iff both are certified true, "violated" if either is
  /// certified false, "undetermined" otherwise.
  std::string overall;
  std::size_t trials = 0;
};

ConditionsReport aw_continuity_conditions(const MapSpec& f);

struct ProbeRow {
  std::size_t index = 0;
  CertifiedValue d_in;
  CertifiedValue d_out;
};

struct ProbeReport {
  std::vector<ProbeRow> rows;
  bool violation = false;
  /// Row exhibiting the violation at the smallest δ.
  std::optional<std::size_t> witness_row;
  std::string verdict() const { return violation ? "violation" : "no-violation-found"; }
};

/// For B_1..B_count compares metric(A, B) (upper end) with
/// metric(f~A, f~B) (lower end). A violation needs, for every δ in the
/// schedule, some B with d_in < δ and d_out > eps.
ProbeReport probe_induced_continuity(const MapSpec& f, const ClosedSet& a, MetricKind metric, const SetSequence& perturb,
                                     std::size_t count, const std::vector<double>& schedule, double eps,
                                     double tol = 1e-3);

}  // namespace hyperspace
