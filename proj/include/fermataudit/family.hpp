#pragma once

#include <string_view>

#include "fermataudit/polynomial.hpp"

namespace fermataudit {

/// Validated slope-family instance: p an odd prime, u strictly inside (0, 1).
/// Endpoints of (0, 1) are rejected, not special-cased.
class FamilyParams {
 public:
  FamilyParams(unsigned p, Rational u);  // parameter_error on violation

  unsigned p() const { return p_; }
  const Rational& u() const { return u_; }

  bool operator==(const FamilyParams&) const = default;

 private:
  unsigned p_;
  Rational u_;
};

/// Candidate triple for x^p + y^p = z^p; all entries >= 1, p an odd prime.
struct FermatTriple {
  BigInt x;
  BigInt y;
  BigInt z;
  unsigned p;

  FermatTriple(BigInt x, BigInt y, BigInt z, unsigned p);

  bool operator==(const FermatTriple&) const = default;
};

/// Monic degree-p slope polynomial: coefficient of d^k is
/// (-1)^(k+1) * C(p,k) * u^(k-p) for 1 <= k <= p, and -1 for k = 0.
/// Its real roots d are the positive slope magnitudes of lines through
/// (0, 1) meeting the curve u^p + v^p = 1 at abscissa u.
struct SlopePolynomial {
  FamilyParams params;
  Polynomial poly;
};

/// Enclosures of the intersection geometry at abscissa u:
/// alpha encloses the curve ordinate (1 - u^p)^(1/p); d_star encloses
/// (1 - alpha)/u, the positive magnitude of the secant slope from (0, 1)
/// to (u, alpha). Both lie strictly inside (0, 1).
struct GeometricSlope {
  Interval alpha;
  Interval d_star;

  // The signed slope of the secant line itself.
  static constexpr std::string_view sign_note = "signed secant slope = -d_star";
};

/// Coefficients taken directly from the closed form above.
SlopePolynomial build_family_closed_form(const FamilyParams& params);

/// Binomial expansion of u^p + (-du + 1)^p - 1 as a polynomial in d,
/// normalized to monic form by the scalar -u^(-p). Agrees with the closed
/// form exactly; the two constructions are cross-checked in the audit.
SlopePolynomial build_family_by_expansion(const FamilyParams& params);

/// x^(p-1) * F_{p, x/z}: integer coefficients, coefficient of d^k equal to
/// (-1)^(k+1) * C(p,k) * x^(k-1) * z^(p-k) for k >= 1 and -x^(p-1) for k = 0.
/// Requires 0 < x < z with gcd(x, z) = 1.
Polynomial integer_family_poly(unsigned p, const BigInt& x, const BigInt& z);

/// Enclosure of (1 - u^p)^(1/p) of width <= eps, strictly inside (0, 1).
Interval alpha(const FamilyParams& params, const Rational& eps);

/// alpha and d_star enclosures, both of width <= eps.
GeometricSlope geometric_slope_d(const FamilyParams& params, const Rational& eps);

/// F_{p, x/z} evaluated at the candidate rational slope d = (z - y)/x.
/// Equals (z^p - x^p - y^p)/x^p exactly; zero iff x^p + y^p = z^p.
/// Requires 0 < x < z.
Rational fermat_residual(const FermatTriple& t);

/// The coefficient test at the linear index, reduced: lhs = p * u^(-p),
/// rhs = (p - 1)/2. Equivalent to a_1^2 > a_0 * a_2 for the family.
struct BoundaryInequality {
  Rational lhs;
  Rational rhs;
  bool holds;
};

BoundaryInequality newton_boundary_inequality(const FamilyParams& params);

}  // namespace fermataudit
