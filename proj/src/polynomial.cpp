#include "fermataudit/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "fermataudit/errors.hpp"

namespace fermataudit {

namespace {
const Rational kZero(0);
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
  trim();
}

Polynomial Polynomial::constant(Rational c) { return Polynomial({std::move(c)}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) {
    coeffs_.pop_back();
  }
}

std::optional<std::size_t> Polynomial::degree() const {
  if (coeffs_.empty()) {
    return std::nullopt;
  }
  return coeffs_.size() - 1;
}

const Rational& Polynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : kZero;
}

const Rational& Polynomial::leading_coefficient() const {
  if (coeffs_.empty()) {
    throw domain_error("Polynomial: zero polynomial has no leading coefficient");
  }
  return coeffs_.back();
}

Rational Polynomial::evaluate(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * t + *it;
  }
  return acc;
}

Interval Polynomial::evaluate(const Interval& t) const {
  Interval acc{Rational(0)};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * t + Interval(*it);
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) {
    return Polynomial();
  }
  std::vector<Rational> d;
  d.reserve(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    d.push_back(Rational(BigInt(k)) * coeffs_[k]);
  }
  return Polynomial(std::move(d));
}

Polynomial Polynomial::reflected() const {
  std::vector<Rational> r = coeffs_;
  for (std::size_t k = 1; k < r.size(); k += 2) {
    r[k] = -r[k];
  }
  return Polynomial(std::move(r));
}

Polynomial Polynomial::monic() const {
  const Rational& lead = leading_coefficient();
  return lead.reciprocal() * *this;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) {
    throw domain_error("Polynomial: division by the zero polynomial");
  }
  if (a.is_zero() || *a.degree() < *b.degree()) {
    return {Polynomial(), a};
  }
  const std::size_t db = *b.degree();
  const Rational lead_inv = b.leading_coefficient().reciprocal();
  std::vector<Rational> rem = a.coeffs_;
  std::vector<Rational> quot(a.coeffs_.size() - db, Rational(0));
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i].is_zero()) {
      continue;
    }
    Rational q = rem[i] * lead_inv;
    quot[i - db] = q;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[i - db + j] -= q * b.coeffs_[j];
    }
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::operator-() const { return Rational(-1) * *this; }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> sum(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t k = 0; k < sum.size(); ++k) {
    sum[k] = a.coefficient(k) + b.coefficient(k);
  }
  return Polynomial(std::move(sum));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) {
    return Polynomial();
  }
  std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial(std::move(prod));
}

Polynomial operator*(const Rational& s, const Polynomial& f) {
  std::vector<Rational> scaled = f.coeffs_;
  for (auto& c : scaled) {
    c *= s;
  }
  return Polynomial(std::move(scaled));
}

Polynomial gcd_monic(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) {
    throw domain_error("gcd_monic: gcd of two zero polynomials");
  }
  Polynomial f = a;
  Polynomial g = b;
  while (!g.is_zero()) {
    Polynomial r = Polynomial::divmod(f, g).second;
    f = std::move(g);
    g = std::move(r);
  }
  return f.monic();
}

Polynomial square_free_part(const Polynomial& f) {
  if (f.is_zero()) {
    throw domain_error("square_free_part: zero polynomial");
  }
  if (*f.degree() == 0) {
    return Polynomial::constant(Rational(1));
  }
  Polynomial g = gcd_monic(f, f.derivative());
  auto [quot, rem] = Polynomial::divmod(f, g);
  // gcd divides f exactly.
  if (!rem.is_zero()) {
    throw domain_error("square_free_part: inexact division by gcd");
  }
  return quot.monic();
}

IntegerScaled scale_to_integer(const Polynomial& f) {
  if (f.is_zero()) {
    throw domain_error("scale_to_integer: zero polynomial");
  }
  BigInt den_lcm = 1;
  for (const auto& c : f.coefficients()) {
    den_lcm = boost::multiprecision::lcm(den_lcm, c.denominator());
  }
  BigInt content = 0;
  for (const auto& c : f.coefficients()) {
    // c * den_lcm is integral.
    content = boost::multiprecision::gcd(content, c.numerator() * (den_lcm / c.denominator()));
  }
  Rational scale{den_lcm, content};
  return {scale * f, scale};
}

std::string to_string(const Polynomial& f) {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < f.coefficients().size(); ++k) {
    if (k > 0) {
      os << ", ";
    }
    os << f.coefficients()[k].to_string();
  }
  os << "]";
  return os.str();
}

}  // namespace fermataudit
