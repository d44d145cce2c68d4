#include "fermataudit/family.hpp"

#include <utility>
#include <vector>

#include "fermataudit/errors.hpp"

namespace fermataudit {

FamilyParams::FamilyParams(unsigned p, Rational u) : p_(p), u_(std::move(u)) {
  if (!is_odd_prime(BigInt(p_))) {
    throw parameter_error("FamilyParams: p must be an odd prime, got " + std::to_string(p_));
  }
  if (u_ <= Rational(0) || u_ >= Rational(1)) {
    throw parameter_error("FamilyParams: u must lie strictly inside (0, 1), got " +
                          u_.to_string());
  }
}

FermatTriple::FermatTriple(BigInt x_, BigInt y_, BigInt z_, unsigned p_)
    : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)), p(p_) {
  if (x < 1 || y < 1 || z < 1) {
    throw parameter_error("FermatTriple: entries must be positive integers");
  }
  if (!is_odd_prime(BigInt(p))) {
    throw parameter_error("FermatTriple: p must be an odd prime, got " + std::to_string(p));
  }
}

SlopePolynomial build_family_closed_form(const FamilyParams& params) {
  const unsigned p = params.p();
  const Rational& u = params.u();
  std::vector<Rational> coeffs;
  coeffs.reserve(p + 1);
  coeffs.emplace_back(-1);
  for (unsigned k = 1; k <= p; ++k) {
    Rational c = Rational(binomial_coefficient(p, k)) *
                 u.pow(static_cast<long long>(k) - static_cast<long long>(p));
    coeffs.push_back(k % 2 == 1 ? c : -c);
  }
  return {params, Polynomial(std::move(coeffs))};
}

SlopePolynomial build_family_by_expansion(const FamilyParams& params) {
  const unsigned p = params.p();
  const Rational& u = params.u();
  // u^p + (-du + 1)^p - 1 as a polynomial in d: the binomial theorem gives
  // coefficient C(p,k) * (-u)^k for d^k, and the k = 0 term cancels the -1.
  std::vector<Rational> expanded;
  expanded.reserve(p + 1);
  expanded.push_back(u.pow(p));
  for (unsigned k = 1; k <= p; ++k) {
    expanded.push_back(Rational(binomial_coefficient(p, k)) * (-u).pow(k));
  }
  Polynomial intersection(std::move(expanded));
  // Normalize to monic degree p.
  Polynomial poly = (-u.pow(-static_cast<long long>(p))) * intersection;
  return {params, std::move(poly)};
}

Polynomial integer_family_poly(unsigned p, const BigInt& x, const BigInt& z) {
  if (!is_odd_prime(BigInt(p))) {
    throw parameter_error("integer_family_poly: p must be an odd prime");
  }
  if (x < 1 || x >= z) {
    throw parameter_error("integer_family_poly: requires 0 < x < z");
  }
  if (boost::multiprecision::gcd(x, z) != 1) {
    throw parameter_error("integer_family_poly: x and z must be coprime");
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(p + 1);
  coeffs.emplace_back(-boost::multiprecision::pow(x, p - 1));
  for (unsigned k = 1; k <= p; ++k) {
    BigInt c = binomial_coefficient(p, k) * boost::multiprecision::pow(x, k - 1) *
               boost::multiprecision::pow(z, p - k);
    coeffs.emplace_back(k % 2 == 1 ? c : -c);
  }
  return Polynomial(std::move(coeffs));
}

Interval alpha(const FamilyParams& params, const Rational& eps) {
  if (eps.sign() <= 0) {
    throw parameter_error("alpha: eps must be > 0");
  }
  const Rational radicand = Rational(1) - params.u().pow(params.p());
  Rational e = eps;
  Interval enclosure = nth_root_interval(radicand, params.p(), e);
  // The true value is strictly inside (0, 1); refine until the enclosure is too.
  while (enclosure.lo().sign() <= 0 || enclosure.hi() >= Rational(1)) {
    e /= Rational(2);
    enclosure = nth_root_interval(radicand, params.p(), e);
  }
  return enclosure;
}

GeometricSlope geometric_slope_d(const FamilyParams& params, const Rational& eps) {
  if (eps.sign() <= 0) {
    throw parameter_error("geometric_slope_d: eps must be > 0");
  }
  const Interval u_point{params.u()};
  const Interval one{Rational(1)};
  // width(d_star) = width(alpha)/u, so request alpha at eps * u.
  Rational e = eps * params.u();
  Interval a = alpha(params, e);
  Interval d = (one - a) / u_point;
  while (d.lo().sign() <= 0 || d.hi() >= Rational(1)) {
    e /= Rational(2);
    a = alpha(params, e);
    d = (one - a) / u_point;
  }
  return {std::move(a), std::move(d)};
}

Rational fermat_residual(const FermatTriple& t) {
  if (t.x >= t.z) {
    throw parameter_error("fermat_residual: requires 0 < x < z");
  }
  FamilyParams params(t.p, Rational(t.x, t.z));
  const Polynomial f = build_family_closed_form(params).poly;
  return f.evaluate(Rational(t.z - t.y, t.x));
}

BoundaryInequality newton_boundary_inequality(const FamilyParams& params) {
  Rational lhs = Rational(BigInt(params.p())) * params.u().pow(-static_cast<long long>(params.p()));
  Rational rhs = Rational(BigInt(params.p()) - 1, 2);
  return {lhs, rhs, lhs > rhs};
}

}  // namespace fermataudit
