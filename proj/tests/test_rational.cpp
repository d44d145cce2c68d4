#include <doctest.h>

#include "fermataudit/errors.hpp"
#include "fermataudit/rational.hpp"
#include "oracles.hpp"

using namespace fermataudit;

TEST_CASE("binomial_coefficient matches the Pascal-triangle oracle on examples") {
  CHECK(binomial_coefficient(5, 2) == oracle::pascal_binomial(5, 2));
  CHECK(binomial_coefficient(5, 2) == 10);
  CHECK(binomial_coefficient(7, 3) == oracle::pascal_binomial(7, 3));
  CHECK(binomial_coefficient(7, 3) == 35);
  for (unsigned p : {3u, 5u, 7u, 11u, 13u}) {
    CHECK(binomial_coefficient(p, 0) == 1);
    CHECK(binomial_coefficient(p, p) == 1);
  }
}

TEST_CASE("binomial_coefficient agrees with the recurrence on random inputs") {
  std::mt19937_64 gen(20240901);
  for (int i = 0; i < 200; ++i) {
    unsigned n = static_cast<unsigned>(oracle::rand_int(gen, 0, 40));
    unsigned k = static_cast<unsigned>(oracle::rand_int(gen, 0, n));
    CHECK(binomial_coefficient(n, k) == oracle::pascal_binomial(n, k));
  }
}

TEST_CASE("binomial_coefficient rejects k > n") {
  CHECK_THROWS_AS(binomial_coefficient(3, 4), domain_error);
}

TEST_CASE("integer_nth_root and exact detection") {
  CHECK(integer_nth_root(BigInt(0), 3) == 0);
  CHECK(integer_nth_root(BigInt(727), 3) == 8);
  CHECK(integer_nth_root(BigInt(729), 3) == 9);
  CHECK(integer_nth_root(BigInt(730), 3) == 9);
  BigInt huge = boost::multiprecision::pow(BigInt(12345), 11);
  CHECK(integer_nth_root(huge, 11) == 12345);
  CHECK(integer_nth_root(huge - 1, 11) == 12344);
  BigInt root;
  CHECK(exact_integer_nth_root(BigInt(243), 5, root));
  CHECK(root == 3);
  CHECK_FALSE(exact_integer_nth_root(BigInt(244), 5, root));
  CHECK_THROWS_AS(integer_nth_root(BigInt(-8), 3), domain_error);
}

TEST_CASE("primality by trial division") {
  CHECK(is_odd_prime(BigInt(3)));
  CHECK(is_odd_prime(BigInt(13)));
  CHECK_FALSE(is_odd_prime(BigInt(2)));
  CHECK_FALSE(is_odd_prime(BigInt(9)));
  CHECK_FALSE(is_odd_prime(BigInt(1)));
  CHECK(is_prime(BigInt(2)));
  CHECK_FALSE(is_prime(BigInt(1000001)));  // 101 * 9901
  CHECK(is_prime(BigInt(104729)));
}

TEST_CASE("Rational canonical form") {
  Rational a(BigInt(2), BigInt(-4));
  CHECK(a.numerator() == -1);
  CHECK(a.denominator() == 2);
  Rational zero(BigInt(0), BigInt(7));
  CHECK(zero.numerator() == 0);
  CHECK(zero.denominator() == 1);
  CHECK(zero == Rational(0));
  CHECK(Rational(BigInt(6), BigInt(4)) == Rational(BigInt(3), BigInt(2)));
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), domain_error);
}

TEST_CASE("Rational parse and to_string round trip") {
  CHECK(Rational::parse("-9/2") == Rational(BigInt(-9), BigInt(2)));
  CHECK(Rational::parse("-9/2").to_string() == "-9/2");
  CHECK(Rational::parse("3").to_string() == "3");
  CHECK(Rational::parse("6/4").to_string() == "3/2");
  CHECK(Rational::parse("0").to_string() == "0");
  CHECK_THROWS_AS(Rational::parse(""), parameter_error);
  CHECK_THROWS_AS(Rational::parse("1/"), parameter_error);
  CHECK_THROWS_AS(Rational::parse("/2"), parameter_error);
  CHECK_THROWS_AS(Rational::parse("1.5"), parameter_error);
  CHECK_THROWS_AS(Rational::parse("x"), parameter_error);
  CHECK_THROWS_AS(Rational::parse("1/0"), domain_error);
}

TEST_CASE("Rational arithmetic is exact: associativity and distributivity") {
  std::mt19937_64 gen(20240902);
  for (int i = 0; i < 1000; ++i) {
    Rational a = oracle::random_rational(gen, 1000, 1000);
    Rational b = oracle::random_rational(gen, 1000, 1000);
    Rational c = oracle::random_rational(gen, 1000, 1000);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("Rational division and powers") {
  CHECK(Rational(1) / Rational(BigInt(-2), BigInt(3)) == Rational(BigInt(-3), BigInt(2)));
  CHECK_THROWS_AS(Rational(1) / Rational(0), domain_error);
  CHECK(Rational(BigInt(2), BigInt(3)).pow(-2) == Rational(BigInt(9), BigInt(4)));
  CHECK(Rational(BigInt(-2), BigInt(3)).pow(3) == Rational(BigInt(-8), BigInt(27)));
  CHECK(Rational(5).pow(0) == Rational(1));
  CHECK_THROWS_AS(Rational(0).pow(-1), domain_error);
  CHECK_THROWS_AS(Rational(0).reciprocal(), domain_error);
}

TEST_CASE("Rational ordering") {
  CHECK(Rational(BigInt(1), BigInt(3)) < Rational(BigInt(1), BigInt(2)));
  CHECK(Rational(BigInt(-1), BigInt(2)) < Rational(0));
  CHECK(Rational(BigInt(7), BigInt(5)) > Rational(1));
  CHECK(Rational(2).abs() == Rational(-2).abs());
  CHECK(Rational(-3).sign() == -1);
  CHECK(Rational(0).sign() == 0);
}
