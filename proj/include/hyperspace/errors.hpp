#pragma once

#include <stdexcept>
#include <string>

namespace hyperspace {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point or set does not belong to the ambient space it is used with
/// (dimension mismatch, point outside an open interval, different ambients).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The operation has no closed-form or certified route for the given
/// representation (or representation pair).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Construction-time validation failure (bad radii, non-metric matrix,
/// malformed witness pairs, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The operation's precondition is not met by the input (e.g. a modulus
/// estimate requested for a set whose image is unbounded).
class NotApplicableError : public Error {
 public:
  using Error::Error;
};

/// Default tolerance for comparisons that gate logic.
inline constexpr double kDefaultTol = 1e-9;

}  // namespace hyperspace
