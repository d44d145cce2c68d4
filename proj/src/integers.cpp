#include "fermataudit/integers.hpp"

#include "fermataudit/errors.hpp"

namespace fermataudit {

BigInt binomial_coefficient(unsigned n, unsigned k) {
  if (k > n) {
    throw domain_error("binomial_coefficient: k > n");
  }
  if (k > n - k) {
    k = n - k;
  }
  // Multiplicative form; every intermediate division is exact.
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt integer_nth_root(const BigInt& x, unsigned p) {
  if (x < 0) {
    throw domain_error("integer_nth_root: negative radicand");
  }
  if (p == 0) {
    throw domain_error("integer_nth_root: p must be >= 1");
  }
  if (p == 1 || x == 0 || x == 1) {
    return x;
  }
  // Binary search bracket from the bit length: 2^(msb/p) <= root < 2^(msb/p + 1).
  const unsigned bits = boost::multiprecision::msb(x);
  BigInt lo = BigInt(1) << (bits / p);
  BigInt hi = (lo << 1) + 1;
  while (lo < hi) {
    BigInt mid = (lo + hi + 1) >> 1;
    if (boost::multiprecision::pow(mid, p) <= x) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

bool exact_integer_nth_root(const BigInt& x, unsigned p, BigInt& root) {
  BigInt r = integer_nth_root(x, p);
  if (boost::multiprecision::pow(r, p) == x) {
    root = r;
    return true;
  }
  return false;
}

bool is_prime(const BigInt& n) {
  if (n < 2) {
    return false;
  }
  if (n % 2 == 0) {
    return n == 2;
  }
  for (BigInt d = 3; d * d <= n; d += 2) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

bool is_odd_prime(const BigInt& n) { return n > 2 && is_prime(n); }

}  // namespace fermataudit
