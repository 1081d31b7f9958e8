#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

#include "changhee/rational.hpp"
#include "oracles.hpp"

using changhee::BigInt;
using changhee::Rational;

TEST_CASE("construction normalizes eagerly", "[rational]") {
  Rational half(BigInt(2), BigInt(4));
  CHECK(half.num() == 1);
  CHECK(half.den() == 2);

  Rational neg(BigInt(1), BigInt(-2));
  CHECK(neg.num() == -1);
  CHECK(neg.den() == 2);

  Rational zero(BigInt(0), BigInt(-7));
  CHECK(zero.num() == 0);
  CHECK(zero.den() == 1);
  CHECK(zero.is_zero());

  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("division by zero is rejected", "[rational]") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("arithmetic satisfies field laws on random values", "[rational]") {
  testing_oracles::Rng rng(0x5eed01);
  for (int i = 0; i < 200; ++i) {
    Rational a = rng.rational();
    Rational b = rng.rational();
    Rational c = rng.rational();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (!a.is_zero()) CHECK(a / a == Rational(1));
    CHECK(a + Rational(0) == a);
    CHECK(a * Rational(1) == a);
  }
}

TEST_CASE("results stay normalized after arithmetic", "[rational]") {
  Rational r = Rational(BigInt(3), BigInt(4)) + Rational(BigInt(1), BigInt(4));
  CHECK(r.num() == 1);
  CHECK(r.den() == 1);

  Rational s = Rational(BigInt(1), BigInt(6)) * Rational(BigInt(3), BigInt(2));
  CHECK(s.num() == 1);
  CHECK(s.den() == 4);
}

TEST_CASE("ordering is exact", "[rational]") {
  CHECK(Rational(BigInt(1), BigInt(3)) < Rational(BigInt(1), BigInt(2)));
  CHECK(Rational(-1) < Rational(BigInt(-1), BigInt(2)));
  testing_oracles::Rng rng(0x5eed02);
  for (int i = 0; i < 100; ++i) {
    Rational a = rng.rational();
    Rational b = rng.rational();
    if (a < b) {
      CHECK(!(b < a));
      CHECK(a != b);
    }
  }
}

TEST_CASE("canonical text round trips", "[rational]") {
  CHECK(Rational(BigInt(-3), BigInt(4)).to_string() == "-3/4");
  CHECK(Rational(12).to_string() == "12");
  CHECK(Rational(0).to_string() == "0");
  CHECK(Rational::parse("-3/4") == Rational(BigInt(-3), BigInt(4)));
  CHECK(Rational::parse(" 7 ") == Rational(7));
  CHECK(Rational::parse("6/4") == Rational(BigInt(3), BigInt(2)));

  testing_oracles::Rng rng(0x5eed03);
  for (int i = 0; i < 200; ++i) {
    Rational r = rng.rational(1000);
    CHECK(Rational::parse(r.to_string()) == r);
  }
}

TEST_CASE("parse rejects malformed text", "[rational]") {
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
}

TEST_CASE("integer powers use the 0^0 = 1 convention", "[rational]") {
  CHECK(changhee::rational_pow(Rational(0), 0) == Rational(1));
  CHECK(changhee::rational_pow(Rational(0), 3) == Rational(0));
  CHECK(changhee::rational_pow(Rational(BigInt(-1), BigInt(2)), 3) ==
        Rational(BigInt(-1), BigInt(8)));
  CHECK(changhee::rational_pow(Rational(2), 10) == Rational(1024));
}

TEST_CASE("factorial", "[rational]") {
  CHECK(changhee::factorial(0) == Rational(1));
  CHECK(changhee::factorial(5) == Rational(120));
  CHECK(changhee::factorial(20) == Rational(BigInt("2432902008176640000")));
}
