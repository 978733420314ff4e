#pragma once

#include <algorithm>
#include <cmath>

namespace lozi {

/// Closed real interval [lo, hi]. Arithmetic is the textbook enclosure
/// arithmetic with round-to-nearest; no outward rounding is attempted.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  static constexpr Interval point(double v) noexcept { return {v, v}; }
  static constexpr Interval symmetric(double r) noexcept { return {-r, r}; }

  constexpr double mid() const noexcept { return 0.5 * (lo + hi); }
  constexpr double radius() const noexcept { return 0.5 * (hi - lo); }
  constexpr double width() const noexcept { return hi - lo; }
  constexpr bool contains(double v) const noexcept { return lo <= v && v <= hi; }
  constexpr bool contains(const Interval& o) const noexcept { return lo <= o.lo && o.hi <= hi; }
  constexpr bool contains_zero() const noexcept { return lo <= 0.0 && 0.0 <= hi; }

  friend constexpr Interval operator+(const Interval& x, const Interval& y) noexcept {
    return {x.lo + y.lo, x.hi + y.hi};
  }
  friend constexpr Interval operator-(const Interval& x, const Interval& y) noexcept {
    return {x.lo - y.hi, x.hi - y.lo};
  }
  friend constexpr Interval operator-(const Interval& x) noexcept { return {-x.hi, -x.lo}; }
  friend constexpr Interval operator+(double c, const Interval& x) noexcept {
    return {c + x.lo, c + x.hi};
  }
  friend constexpr Interval operator-(double c, const Interval& x) noexcept {
    return {c - x.hi, c - x.lo};
  }
  friend constexpr Interval operator*(double c, const Interval& x) noexcept {
    return c >= 0.0 ? Interval{c * x.lo, c * x.hi} : Interval{c * x.hi, c * x.lo};
  }
  friend Interval operator*(const Interval& x, const Interval& y) noexcept {
    const double a = x.lo * y.lo, b = x.lo * y.hi, c = x.hi * y.lo, d = x.hi * y.hi;
    return {std::min({a, b, c, d}), std::max({a, b, c, d})};
  }
};

/// 1/x for an interval that does not straddle zero. Callers guarantee the
/// denominator is bounded away from zero.
inline Interval reciprocal(const Interval& x) noexcept { return {1.0 / x.hi, 1.0 / x.lo}; }

/// A value together with an error radius: the true value lies in
/// [value - err, value + err].
struct BoundedValue {
  double value = 0.0;
  double err = 0.0;

  static BoundedValue from(const Interval& iv) noexcept { return {iv.mid(), iv.radius()}; }
  Interval interval() const noexcept { return {value - err, value + err}; }
  bool contains(double v) const noexcept { return std::abs(v - value) <= err; }
};

}  // namespace lozi
