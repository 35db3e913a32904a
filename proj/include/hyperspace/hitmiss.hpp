#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hyperspace/hypermetrics.hpp"
#include "hyperspace/sets.hpp"

namespace hyperspace {

/// A bounded closed set used as the K of a miss constraint: a finite union
/// of bounded pieces (points, intervals, boxes, balls).
class CompactSet {
 public:
  static CompactSet of(std::vector<ClosedSet> pieces);

  const std::vector<ClosedSet>& pieces() const { return pieces_; }
  const SpacePtr& space() const { return pieces_.front().space(); }
  bool contains(const Point& x) const;
  std::string describe() const;

 private:
  explicit CompactSet(std::vector<ClosedSet> pieces) : pieces_(std::move(pieces)) {}
  std::vector<ClosedSet> pieces_;
};

struct OpenBall {
  Point center;
  double radius;
};

/// An open set: a finite union of open balls, or the complement of a
/// compact set.
class OpenSet {
 public:
  static OpenSet balls(SpacePtr space, std::vector<OpenBall> balls);
  static OpenSet complement_of(CompactSet k);

  bool is_complement() const { return complement_.has_value(); }
  const std::vector<OpenBall>& ball_list() const { return balls_; }
  const CompactSet& complement() const { return *complement_; }
  const SpacePtr& space() const { return space_; }
  bool contains(const Point& x) const;
  std::string describe() const;

 private:
  OpenSet() = default;
  SpacePtr space_;
  std::vector<OpenBall> balls_;
  std::optional<CompactSet> complement_;
};

/// One subbasic constraint: A hits U, A is contained in U, or A misses K.
struct Constraint {
  enum class Kind { hit, contain, miss };
  Kind kind;
  std::optional<OpenSet> open;
  std::optional<CompactSet> compact;

  static Constraint hit(OpenSet u) { return {Kind::hit, std::move(u), std::nullopt}; }
  static Constraint contain(OpenSet u) { return {Kind::contain, std::move(u), std::nullopt}; }
  static Constraint miss(CompactSet k) { return {Kind::miss, std::nullopt, std::move(k)}; }

  std::string describe() const;
};

std::string to_string(Constraint::Kind kind);

/// A finite intersection of subbasic sets.
struct NeighborhoodSpec {
  std::vector<Constraint> constraints;
};

/// A ∩ U ≠ ∅.
bool hits(const ClosedSet& a, const OpenSet& u);
/// A ⊆ U.
bool subset_of(const ClosedSet& a, const OpenSet& u);
/// A ∩ K = ∅.
bool misses(const ClosedSet& a, const CompactSet& k);
/// Membership of A in the subbasic set described by `c`.
bool satisfies(const ClosedSet& a, const Constraint& c);

struct ConstraintOutcome {
  /// Least N such that every k in [N, horizon] satisfies the constraint.
  std::optional<std::size_t> entry;
  /// On failure: first index of the trailing run of failures.
  std::optional<std::size_t> witness;
};

struct ConvergenceReport {
  std::vector<ConstraintOutcome> outcomes;
  std::size_t horizon = 0;
  bool pass = false;
  /// "evidence" for a pass, "proof" for a failure.
  std::string basis() const { return pass ? "evidence" : "proof"; }
};

/// Checks members k = 1..horizon of the sequence against every constraint.
/// A generator exception is rethrown as Error naming the index.
ConvergenceReport converges(const SetSequence& seq, const NeighborhoodSpec& nbhds, std::size_t horizon = 1000);

enum class Topology { lowerV, upperV, fell, vietoris };

std::string to_string(Topology t);
Topology parse_topology(const std::string& name);

/// Finite witness neighbourhood of A at scale r:
///   lowerV   hit ball(a_i, r) for m deterministic sample points a_i of A
///   upperV   contain N_r(A), as an open-ball union (points, intervals, balls)
///   fell     the lowerV hits plus miss K when `fell_miss` is given (K must
///            miss A)
///   vietoris lowerV together with upperV
NeighborhoodSpec canonical_neighborhoods(const ClosedSet& a, Topology topology, double r, std::size_t m,
                                         const std::optional<CompactSet>& fell_miss = std::nullopt);

}  // namespace hyperspace
