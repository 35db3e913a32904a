#pragma once

#include <algorithm>
#include <limits>
#include <ostream>

#include "hyperspace/errors.hpp"

namespace hyperspace {

/// A value in [0, +inf]. Infinity is a tag, never a floating-point inf, so it
/// cannot leak into arithmetic.
class ExtReal {
 public:
  constexpr ExtReal() = default;
  explicit ExtReal(double v) : value_(v) {
    if (!(v >= 0.0) || v == std::numeric_limits<double>::infinity()) {
      throw ValidationError("ExtReal: finite nonnegative value expected");
    }
  }

  static constexpr ExtReal infinity() {
    ExtReal r;
    r.infinite_ = true;
    return r;
  }

  constexpr bool is_finite() const { return !infinite_; }
  constexpr bool is_infinite() const { return infinite_; }

  double value() const {
    if (infinite_) throw DomainError("ExtReal: value() on infinity");
    return value_;
  }

  /// Finite value, or `fallback` when infinite.
  constexpr double value_or(double fallback) const { return infinite_ ? fallback : value_; }

  friend constexpr bool operator==(const ExtReal& a, const ExtReal& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr bool operator<(const ExtReal& a, const ExtReal& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend constexpr bool operator<=(const ExtReal& a, const ExtReal& b) { return !(b < a); }
  friend constexpr bool operator>(const ExtReal& a, const ExtReal& b) { return b < a; }
  friend constexpr bool operator>=(const ExtReal& a, const ExtReal& b) { return !(a < b); }

  friend ExtReal operator+(const ExtReal& a, const ExtReal& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return ExtReal(a.value_ + b.value_);
  }

  friend ExtReal max(const ExtReal& a, const ExtReal& b) { return a < b ? b : a; }
  friend ExtReal min(const ExtReal& a, const ExtReal& b) { return a < b ? a : b; }

  friend std::ostream& operator<<(std::ostream& os, const ExtReal& v) {
    if (v.infinite_) return os << "inf";
    return os << v.value_;
  }

 private:
  double value_ = 0.0;
  bool infinite_ = false;
};

}  // namespace hyperspace
