#pragma once

#include "fermataudit/rational.hpp"

namespace fermataudit {

/// Closed interval with exact rational endpoints. Arithmetic returns the
/// tightest rational-endpoint interval containing the pointwise image;
/// endpoints stay exact, so no rounding is ever introduced.
class Interval {
 public:
  Interval() : lo_(0), hi_(0) {}
  explicit Interval(Rational point) : lo_(point), hi_(std::move(point)) {}
  Interval(Rational lo, Rational hi);  // lo > hi -> domain_error

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / Rational(2); }
  bool is_point() const { return lo_ == hi_; }

  bool contains(const Rational& t) const { return lo_ <= t && t <= hi_; }
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool intersects(const Interval& other) const {
    return lo_ <= other.hi_ && other.lo_ <= hi_;
  }

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }
  friend bool operator!=(const Interval& a, const Interval& b) { return !(a == b); }

 private:
  Rational lo_;
  Rational hi_;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);  // 0 in b -> domain_error
Interval operator-(const Interval& a);

/// Enclosure of r^(1/p) with width <= eps, certified by lo^p <= r <= hi^p.
/// Exact p-th powers yield a degenerate interval. Bisection from
/// [0, max(1, r)]. Requires r >= 0, p >= 1, eps > 0.
Interval nth_root_interval(const Rational& r, unsigned p, const Rational& eps);

}  // namespace fermataudit
