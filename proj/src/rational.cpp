#include "fermataudit/rational.hpp"

#include <ostream>
#include <utility>

#include "fermataudit/errors.hpp"

namespace fermataudit {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void Rational::normalize() {
  if (den_.is_zero()) {
    throw domain_error("Rational: zero denominator");
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(std::string_view text) {
  auto is_digits = [](std::string_view s) {
    if (s.empty()) {
      return false;
    }
    for (char c : s) {
      if (c < '0' || c > '9') {
        return false;
      }
    }
    return true;
  };

  std::string_view num_part = text;
  std::string_view den_part;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num_part = text.substr(0, slash);
    den_part = text.substr(slash + 1);
  }
  bool negative = false;
  if (!num_part.empty() && num_part.front() == '-') {
    negative = true;
    num_part.remove_prefix(1);
  }
  if (!is_digits(num_part) || (!den_part.empty() && !is_digits(den_part)) ||
      (den_part.empty() && text.find('/') != std::string_view::npos)) {
    throw parameter_error("Rational: malformed value '" + std::string(text) + "'");
  }
  BigInt num{std::string(num_part)};
  if (negative) {
    num = -num;
  }
  BigInt den = den_part.empty() ? BigInt(1) : BigInt(std::string(den_part));
  return Rational(std::move(num), std::move(den));
}

Rational Rational::abs() const { return num_ < 0 ? Rational(-num_, den_) : *this; }

Rational Rational::reciprocal() const {
  if (is_zero()) {
    throw domain_error("Rational: reciprocal of zero");
  }
  return Rational(den_, num_);
}

Rational Rational::pow(long long e) const {
  if (e == 0) {
    return Rational(1);
  }
  if (e < 0) {
    return reciprocal().pow(-e);
  }
  // Powering preserves coprimality, no renormalization needed.
  Rational result;
  result.num_ = boost::multiprecision::pow(num_, static_cast<unsigned>(e));
  result.den_ = boost::multiprecision::pow(den_, static_cast<unsigned>(e));
  return result;
}

std::string Rational::to_string() const {
  if (den_ == 1) {
    return num_.str();
  }
  return num_.str() + "/" + den_.str();
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw domain_error("Rational: division by zero");
  }
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace fermataudit
