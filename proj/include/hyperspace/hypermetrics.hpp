#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "hyperspace/ext_real.hpp"
#include "hyperspace/sets.hpp"

namespace hyperspace {

/// How a certified value was obtained.
enum class Method {
  exact_1d,         // breakpoint enumeration of a piecewise-linear function
  finite_max,       // maximum over finitely many points
  grid,             // Lipschitz branch and bound over a continuum
  ray_closed_form,  // unbounded ray analysis
  tail_bound,       // series truncated at J terms, tail bounded by 1/(J+1)
};

std::string to_string(Method method);

/// Interval [lo, hi] guaranteed to contain the exact quantity.
struct CertifiedValue {
  ExtReal lo;
  ExtReal hi;
  Method method = Method::finite_max;
  /// Extra slack folded into the bracket (sampled-cloud resolution, grid
  /// target width); 0 for exact results.
  double resolution = 0.0;
  /// Direction of escape when the value is infinite.
  std::optional<Point> witness;

  bool is_exact() const { return lo == hi; }
  /// hi - lo, or +inf when exactly one end is infinite.
  double width() const;
  /// Midpoint-free accessor for exact finite values; throws otherwise.
  double value() const;
};

struct CertOptions {
  /// Target width of grid-certified sups.
  double width = 1e-7;
  /// Function-evaluation budget of a single grid-certified sup.
  std::size_t max_evals = 200000;
};

/// e(A,B) = sup_{a in A} d(a,B).
CertifiedValue excess(const ClosedSet& a, const ClosedSet& b, const CertOptions& options = {});

/// max{e(A,B), e(B,A)}.
CertifiedValue hausdorff(const ClosedSet& a, const ClosedSet& b, const CertOptions& options = {});
/// d_{H-}(A,C) = e(A,C).
CertifiedValue hausdorff_lower(const ClosedSet& a, const ClosedSet& c, const CertOptions& options = {});
/// d_{H+}(A,C) = e(C,A).
CertifiedValue hausdorff_upper(const ClosedSet& a, const ClosedSet& c, const CertOptions& options = {});

/// |d(x,A) - d(x,B)|.
double gap_at(const ClosedSet& a, const ClosedSet& b, const Point& x);

/// sup of |d(x,A) - d(x,B)| over the ball of radius j about the base point.
/// Line and interval ambients: exact. Finite metric spaces: exact over the
/// open ball. R^n: branch and bound with the 2-Lipschitz bound.
CertifiedValue sup_gap_on_ball(const ClosedSet& a, const ClosedSet& b, double j, const CertOptions& options = {});

/// Attouch-Wets distance sup_j min{1/j, sup_gap_on_ball(A,B,j)} about the
/// ambient's base point. Terms j = 1..ceil(1/tol) are evaluated (fewer when
/// the value is settled earlier); the rest are bounded by 1/(J+1) and by
/// d_H(A,B). In R^n each term gets `max_evals` evaluations and width tol/4.
CertifiedValue aw_distance(const ClosedSet& a, const ClosedSet& b, double tol = 1e-3,
                           std::size_t max_evals = 20000);

/// Hyperspace distances selectable at run time.
enum class MetricKind { excess, hausdorff, hausdorff_lower, hausdorff_upper, aw };

/// Names "excess", "hausdorff", "hlower", "hupper", "aw".
std::string to_string(MetricKind m);
MetricKind parse_metric(const std::string& name);

/// Dispatches to the named distance; `tol` is the Attouch-Wets tolerance.
CertifiedValue measure(MetricKind m, const ClosedSet& a, const ClosedSet& b, double tol = 1e-3);

enum class Decision { yes, no, indeterminate };

std::string to_string(Decision d);

/// The integer j with 1/(j+1) < eps <= 1/j, for eps in (0,1).
std::size_t aw_index(double eps);

/// d_AW(A,B) < eps decided through sup_gap_on_ball(A,B,aw_index(eps)) < eps.
/// eps must lie in (0,1). Indeterminate only when a grid bracket straddles eps.
Decision aw_less_than(const ClosedSet& a, const ClosedSet& b, double eps, const CertOptions& options = {});

}  // namespace hyperspace
