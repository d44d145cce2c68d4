#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "fermataudit/integers.hpp"

namespace fermataudit {

/// Exact rational scalar in canonical form: denominator > 0,
/// gcd(|numerator|, denominator) = 1, zero stored as 0/1.
/// Canonical form makes equality structural, so == compares members.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt num, BigInt den);

  /// Accepts "n" or "n/d" with an optional leading minus sign.
  /// Malformed text -> parameter_error; zero denominator -> domain_error.
  static Rational parse(std::string_view text);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.is_zero() ? 0 : (num_ > 0 ? 1 : -1); }

  Rational abs() const;
  Rational reciprocal() const;  // zero -> domain_error
  /// Exact power; a negative exponent requires a nonzero value.
  Rational pow(long long e) const;

  /// "n" when integral, "num/den" otherwise, in lowest terms.
  std::string to_string() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // division by zero -> domain_error

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace fermataudit
