#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "setcalc/rational.hpp"

using setcalc::BigInt;
using setcalc::Rational;

TEST_CASE("reduction and accessors") {
  Rational r(BigInt(8), BigInt(6));
  CHECK(r.num() == 4);
  CHECK(r.den() == 3);
  CHECK(!r.is_integer());
  CHECK(Rational(BigInt(0), BigInt(7)).den() == 1);
  CHECK(Rational(5).is_integer());
}

TEST_CASE("exact comparisons cross-multiply") {
  Rational a(BigInt(1), BigInt(3));
  Rational b(BigInt(2), BigInt(6));
  CHECK(a == b);
  CHECK(Rational(BigInt(10000001), BigInt(10000000)) > Rational(1));
  CHECK(Rational(BigInt(4), BigInt(3)) < Rational(BigInt(3), BigInt(2)));
}

TEST_CASE("arithmetic") {
  Rational a(BigInt(4), BigInt(3));
  Rational b(BigInt(3), BigInt(2));
  CHECK(a * b == Rational(2));
  CHECK(a + b == Rational(BigInt(17), BigInt(6)));
  CHECK(b / a == Rational(BigInt(9), BigInt(8)));
  CHECK(a.pow(0) == Rational(1));
  CHECK(a.pow(3) == Rational(BigInt(64), BigInt(27)));
  // Exponents past 64-bit range stay exact.
  Rational big = Rational(BigInt(37), BigInt(13)).pow(31);
  CHECK(big == Rational(BigInt(37), BigInt(13)).pow(30) * Rational(BigInt(37), BigInt(13)));
}

TEST_CASE("invalid rationals rejected") {
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), setcalc::Error);
  CHECK_THROWS_AS(Rational(BigInt(-1), BigInt(2)), setcalc::Error);
}

TEST_CASE("string rendering") {
  CHECK(Rational(BigInt(4), BigInt(3)).str() == "4/3");
  CHECK(Rational(7).str() == "7");
  CHECK(Rational(BigInt(4), BigInt(3)).decimal(6) == "1.33333");
  CHECK(Rational(BigInt(3), BigInt(2)).decimal(6) == "1.5");
  CHECK(Rational(1).decimal(6) == "1");
  CHECK(Rational(BigInt(1), BigInt(8)).decimal(3) == "0.125");
  CHECK(Rational(BigInt(2), BigInt(3)).decimal(4) == "0.6667");
  CHECK(Rational(BigInt(1000000), BigInt(1)).decimal(3) == "1000000");
  CHECK(Rational(BigInt(0), BigInt(5)).decimal(6) == "0");
}
