// Test-only oracles, independent of the library's implementation paths:
// Pascal-triangle binomials, power-sum polynomial evaluation, polynomials
// assembled from known roots, and deterministic random value generators.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fermataudit/polynomial.hpp"

namespace oracle {

using fermataudit::BigInt;
using fermataudit::Polynomial;
using fermataudit::Rational;

inline BigInt pascal_binomial(unsigned n, unsigned k) {
  std::vector<BigInt> row{1};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<BigInt> next(i + 1, BigInt(1));
    for (unsigned j = 1; j < i; ++j) {
      next[j] = row[j - 1] + row[j];
    }
    row = std::move(next);
  }
  return k < row.size() ? row[k] : BigInt(0);
}

inline Rational naive_eval(const Polynomial& f, const Rational& t) {
  Rational sum(0);
  for (std::size_t k = 0; k < f.coefficients().size(); ++k) {
    sum += f.coefficients()[k] * t.pow(static_cast<long long>(k));
  }
  return sum;
}

inline Polynomial poly_from_roots(const std::vector<Rational>& roots) {
  Polynomial f = Polynomial::constant(Rational(1));
  for (const auto& r : roots) {
    f = f * Polynomial{-r, Rational(1)};
  }
  return f;
}

inline long long rand_int(std::mt19937_64& gen, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(gen);
}

inline Rational random_rational(std::mt19937_64& gen, long long max_abs_num, long long max_den) {
  return Rational(BigInt(rand_int(gen, -max_abs_num, max_abs_num)),
                  BigInt(rand_int(gen, 1, max_den)));
}

inline Rational random_nonzero_rational(std::mt19937_64& gen, long long max_abs_num,
                                        long long max_den) {
  while (true) {
    Rational r = random_rational(gen, max_abs_num, max_den);
    if (!r.is_zero()) {
      return r;
    }
  }
}

// Uniformly random rational strictly inside (0, 1).
inline Rational random_unit_rational(std::mt19937_64& gen, long long max_den) {
  long long den = rand_int(gen, 2, max_den);
  long long num = rand_int(gen, 1, den - 1);
  return Rational(BigInt(num), BigInt(den));
}

inline Polynomial random_polynomial(std::mt19937_64& gen, std::size_t max_degree,
                                    long long max_abs_num, long long max_den) {
  std::size_t deg = static_cast<std::size_t>(rand_int(gen, 0, static_cast<long long>(max_degree)));
  std::vector<Rational> coeffs;
  for (std::size_t k = 0; k <= deg; ++k) {
    coeffs.push_back(random_rational(gen, max_abs_num, max_den));
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace oracle
