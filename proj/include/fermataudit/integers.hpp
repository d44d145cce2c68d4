#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fermataudit {

using BigInt = boost::multiprecision::cpp_int;

/// C(n, k), exact. Throws domain_error if k > n.
BigInt binomial_coefficient(unsigned n, unsigned k);

/// floor(x^(1/p)) for x >= 0, p >= 1. Throws domain_error otherwise.
BigInt integer_nth_root(const BigInt& x, unsigned p);

/// True iff x is an exact p-th power; on success sets root = x^(1/p).
bool exact_integer_nth_root(const BigInt& x, unsigned p, BigInt& root);

/// Deterministic trial division up to sqrt(n).
bool is_prime(const BigInt& n);
bool is_odd_prime(const BigInt& n);

}  // namespace fermataudit
