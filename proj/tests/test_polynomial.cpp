#include <doctest.h>

#include "fermataudit/errors.hpp"
#include "fermataudit/polynomial.hpp"
#include "oracles.hpp"

using namespace fermataudit;

namespace {
Rational rat(long long n, long long d) { return Rational(BigInt(n), BigInt(d)); }
}

TEST_CASE("canonical zero polynomial and trimming") {
  Polynomial zero;
  CHECK(zero.is_zero());
  CHECK_FALSE(zero.degree().has_value());
  CHECK(Polynomial({Rational(0), Rational(0)}).is_zero());
  CHECK(Polynomial({Rational(1), Rational(0)}) == Polynomial({Rational(1)}));
  CHECK(Polynomial({Rational(1), Rational(0)}).degree() == 0);
  CHECK_THROWS_AS(zero.leading_coefficient(), domain_error);
}

TEST_CASE("evaluate examples") {
  // Slope polynomial at p=3, u=2/3, evaluated at the (6,8,9) candidate slope.
  Polynomial f{Rational(-1), rat(27, 4), rat(-9, 2), Rational(1)};
  CHECK(f.evaluate(rat(1, 6)) == rat(1, 216));
  CHECK(f.evaluate(Rational(0)) == f.coefficient(0));
  Polynomial g{Rational(-1), Rational(12), Rational(-6), Rational(1)};
  CHECK(g.evaluate(Rational(1)) == Rational(6));
}

TEST_CASE("Horner agrees exactly with the power-sum oracle") {
  std::mt19937_64 gen(20240904);
  for (int i = 0; i < 1000; ++i) {
    Polynomial f = oracle::random_polynomial(gen, 8, 100, 20);
    Rational t = oracle::random_rational(gen, 20, 10);
    CHECK(f.evaluate(t) == oracle::naive_eval(f, t));
  }
}

TEST_CASE("interval evaluation contains pointwise values") {
  std::mt19937_64 gen(20240905);
  for (int i = 0; i < 300; ++i) {
    Polynomial f = oracle::random_polynomial(gen, 6, 50, 10);
    Rational a = oracle::random_rational(gen, 10, 5);
    Rational b = a + oracle::random_rational(gen, 10, 5).abs();
    Interval box(a, b);
    long long den = oracle::rand_int(gen, 1, 32);
    long long num = oracle::rand_int(gen, 0, den);
    Rational t = a + Rational(BigInt(num), BigInt(den)) * box.width();
    CHECK(f.evaluate(box).contains(f.evaluate(t)));
  }
}

TEST_CASE("derivative examples and linearity") {
  CHECK(Polynomial{Rational(-1), Rational(12), Rational(-6), Rational(1)}.derivative() ==
        Polynomial{Rational(12), Rational(-12), Rational(3)});
  CHECK(Polynomial::constant(Rational(5)).derivative().is_zero());
  CHECK(Polynomial{Rational(0), Rational(0), Rational(1)}.derivative() ==
        Polynomial{Rational(0), Rational(2)});

  std::mt19937_64 gen(20240906);
  for (int i = 0; i < 200; ++i) {
    Polynomial f = oracle::random_polynomial(gen, 7, 50, 10);
    Polynomial g = oracle::random_polynomial(gen, 7, 50, 10);
    Rational a = oracle::random_rational(gen, 10, 5);
    Rational b = oracle::random_rational(gen, 10, 5);
    CHECK((a * f + b * g).derivative() == a * f.derivative() + b * g.derivative());
  }
}

TEST_CASE("divmod is an exact Euclidean division") {
  std::mt19937_64 gen(20240907);
  for (int i = 0; i < 200; ++i) {
    Polynomial a = oracle::random_polynomial(gen, 8, 30, 6);
    Polynomial b = oracle::random_polynomial(gen, 4, 30, 6);
    if (b.is_zero()) {
      continue;
    }
    auto [q, r] = Polynomial::divmod(a, b);
    CHECK(a == q * b + r);
    if (!r.is_zero()) {
      CHECK(*r.degree() < *b.degree());
    }
  }
  CHECK_THROWS_AS(Polynomial::divmod(Polynomial{Rational(1)}, Polynomial()), domain_error);
}

TEST_CASE("gcd_monic on constructed common factors") {
  Polynomial common = oracle::poly_from_roots({Rational(1)});
  Polynomial a = common * oracle::poly_from_roots({Rational(2)});
  Polynomial b = common * oracle::poly_from_roots({Rational(3)});
  CHECK(gcd_monic(a, b) == common);
  CHECK(gcd_monic(a, Polynomial()) == a.monic());
  CHECK_THROWS_AS(gcd_monic(Polynomial(), Polynomial()), domain_error);
}

TEST_CASE("square_free_part examples") {
  // (t-1)^2 -> t-1
  CHECK(square_free_part(Polynomial{Rational(1), Rational(-2), Rational(1)}) ==
        Polynomial{Rational(-1), Rational(1)});
  // The slope polynomial at (3, 1/2) has gcd(f, f') = 1.
  Polynomial family{Rational(-1), Rational(12), Rational(-6), Rational(1)};
  CHECK(square_free_part(family) == family);
  // (t-1)^2 (t-2) -> (t-1)(t-2)
  Polynomial squared = oracle::poly_from_roots({Rational(1), Rational(1), Rational(2)});
  CHECK(square_free_part(squared) == oracle::poly_from_roots({Rational(1), Rational(2)}));
  CHECK_THROWS_AS(square_free_part(Polynomial()), domain_error);
}

TEST_CASE("square_free_part divides the input exactly") {
  std::mt19937_64 gen(20240908);
  for (int i = 0; i < 100; ++i) {
    std::vector<Rational> roots;
    int distinct = static_cast<int>(oracle::rand_int(gen, 1, 3));
    for (int r = 0; r < distinct; ++r) {
      Rational root = oracle::random_rational(gen, 6, 3);
      long long mult = oracle::rand_int(gen, 1, 3);
      for (long long m = 0; m < mult; ++m) {
        roots.push_back(root);
      }
    }
    Polynomial f = oracle::poly_from_roots(roots);
    Polynomial sf = square_free_part(f);
    auto [q, rem] = Polynomial::divmod(f, sf);
    CHECK(rem.is_zero());
    CHECK_FALSE(q.is_zero());
  }
}

TEST_CASE("scale_to_integer examples") {
  auto [g, s] = scale_to_integer(Polynomial{Rational(-1), rat(27, 4), rat(-9, 2), Rational(1)});
  CHECK(g == Polynomial{Rational(-4), Rational(27), Rational(-18), Rational(4)});
  CHECK(s == Rational(4));

  Polynomial primitive{Rational(3), Rational(-2), Rational(5)};
  auto [g2, s2] = scale_to_integer(primitive);
  CHECK(g2 == primitive);
  CHECK(s2 == Rational(1));

  auto [g3, s3] = scale_to_integer(Polynomial{rat(1, 2), rat(1, 2)});
  CHECK(g3 == Polynomial{Rational(1), Rational(1)});
  CHECK(s3 == Rational(2));

  CHECK_THROWS_AS(scale_to_integer(Polynomial()), domain_error);
}

TEST_CASE("scale_to_integer preserves evaluations up to the scalar") {
  std::mt19937_64 gen(20240909);
  for (int i = 0; i < 200; ++i) {
    Polynomial f = oracle::random_polynomial(gen, 6, 40, 12);
    if (f.is_zero()) {
      continue;
    }
    auto [g, s] = scale_to_integer(f);
    for (const auto& c : g.coefficients()) {
      CHECK(c.is_integer());
    }
    Rational t = oracle::random_rational(gen, 10, 6);
    CHECK(g.evaluate(t) == s * f.evaluate(t));
  }
}
