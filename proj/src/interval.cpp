#include "fermataudit/interval.hpp"

#include <algorithm>
#include <utility>

#include "fermataudit/errors.hpp"

namespace fermataudit {

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) {
    throw domain_error("Interval: lo > hi");
  }
}

Interval operator+(const Interval& a, const Interval& b) {
  return Interval(a.lo() + b.lo(), a.hi() + b.hi());
}

Interval operator-(const Interval& a, const Interval& b) {
  return Interval(a.lo() - b.hi(), a.hi() - b.lo());
}

Interval operator*(const Interval& a, const Interval& b) {
  const Rational p1 = a.lo() * b.lo();
  const Rational p2 = a.lo() * b.hi();
  const Rational p3 = a.hi() * b.lo();
  const Rational p4 = a.hi() * b.hi();
  return Interval(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) {
    throw domain_error("Interval: division by interval containing zero");
  }
  return a * Interval(b.hi().reciprocal(), b.lo().reciprocal());
}

Interval operator-(const Interval& a) { return Interval(-a.hi(), -a.lo()); }

Interval nth_root_interval(const Rational& r, unsigned p, const Rational& eps) {
  if (r.sign() < 0) {
    throw domain_error("nth_root_interval: negative radicand");
  }
  if (p == 0) {
    throw domain_error("nth_root_interval: p must be >= 1");
  }
  if (eps.sign() <= 0) {
    throw domain_error("nth_root_interval: eps must be > 0");
  }

  // Exact-power fast path: r = (a/b)^p iff both numerator and denominator
  // are exact p-th powers (r is in lowest terms).
  BigInt num_root;
  BigInt den_root;
  if (exact_integer_nth_root(r.numerator(), p, num_root) &&
      exact_integer_nth_root(r.denominator(), p, den_root)) {
    Rational exact(std::move(num_root), std::move(den_root));
    return Interval(exact, exact);
  }

  const long long pe = static_cast<long long>(p);
  Rational lo(0);
  Rational hi = std::max(Rational(1), r);
  // Invariant: lo^p <= r <= hi^p.
  while (hi - lo > eps) {
    Rational mid = (lo + hi) / Rational(2);
    Rational mp = mid.pow(pe);
    if (mp == r) {
      return Interval(mid, mid);
    }
    if (mp < r) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  return Interval(std::move(lo), std::move(hi));
}

}  // namespace fermataudit
