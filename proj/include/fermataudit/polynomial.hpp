#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fermataudit/interval.hpp"

namespace fermataudit {

/// Dense univariate polynomial over exact rationals, constant term first.
/// The canonical zero polynomial is the empty coefficient vector; its
/// degree is std::nullopt, never a sentinel number.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::vector<Rational> coefficients);  // trims trailing zeros
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(Rational c);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of t^k; zero beyond the degree.
  const Rational& coefficient(std::size_t k) const;
  const Rational& leading_coefficient() const;  // zero polynomial -> domain_error

  Rational evaluate(const Rational& t) const;  // exact Horner
  /// Horner in interval arithmetic; contains every pointwise value.
  Interval evaluate(const Interval& t) const;

  Polynomial derivative() const;
  /// Coefficients of f(-t).
  Polynomial reflected() const;
  Polynomial monic() const;  // zero polynomial -> domain_error

  /// Quotient and remainder of a / b; b must be nonzero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& f);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Monic gcd via the Euclidean algorithm over rationals.
/// gcd(0, 0) -> domain_error.
Polynomial gcd_monic(const Polynomial& a, const Polynomial& b);

/// f / gcd(f, f'), made monic: same distinct roots, all simple.
/// Zero polynomial -> domain_error.
Polynomial square_free_part(const Polynomial& f);

struct IntegerScaled {
  Polynomial primitive;  // scale * f: integer coefficients, content 1
  Rational scale;
};

/// Clears denominators and divides out the content. Roots are unchanged:
/// primitive(t) = scale * f(t). Zero polynomial -> domain_error.
IntegerScaled scale_to_integer(const Polynomial& f);

std::string to_string(const Polynomial& f);

}  // namespace fermataudit
