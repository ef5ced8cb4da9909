#include <doctest.h>

#include "nhpoly/field.hpp"

using namespace nhpoly;

TEST_CASE("rational parsing and rendering") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("12") == Rational(12));
  CHECK(rational_string(Rational(-3, 2)) == "-3/2");
  CHECK(rational_string(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("decimal rendering is correctly rounded") {
  CHECK(decimal_string(Rational(7, 4), 6) == "1.750000");
  CHECK(decimal_string(Rational(2, 3), 6) == "0.666667");
  CHECK(decimal_string(Rational(1, 3), 6) == "0.333333");
  CHECK(decimal_string(Rational(-2, 3), 6) == "-0.666667");
  CHECK(decimal_string(Rational(0), 6) == "0.000000");
  CHECK(decimal_string(Rational(1, 5), 6) == "0.200000");
  CHECK(decimal_string(Rational(28, 15), 6) == "1.866667");
  CHECK(decimal_string(Rational(1, 2), 0) == "1");  // half away from zero
}

TEST_CASE("prime field validation and arithmetic") {
  CHECK_THROWS_AS(FieldConfig::prime(6), FieldError);
  CHECK_THROWS_AS(FieldConfig::parse("fp:91"), FieldError);
  FieldConfig f7 = FieldConfig::parse("fp:7");
  FieldScalar a = FieldScalar::from_integer(f7, BigInt(10));  // 3
  FieldScalar b = FieldScalar::from_integer(f7, BigInt(-1));  // 6
  CHECK(a.prime_value() == 3);
  CHECK(b.prime_value() == 6);
  CHECK((a * b).prime_value() == 4);  // 18 mod 7
  CHECK((a + b).prime_value() == 2);
  CHECK((a / b).prime_value() == (3 * 6) % 7);  // 6^-1 = 6
  CHECK_THROWS_AS(FieldScalar::zero(f7).inverse(), FieldError);
  FieldConfig q = FieldConfig::rationals();
  CHECK_THROWS_AS(a + FieldScalar::one(q), FieldError);
}

TEST_CASE("rational scalar arithmetic stays in lowest terms") {
  FieldConfig q = FieldConfig::rationals();
  FieldScalar half = FieldScalar::from_rational(q, Rational(2, 4));
  CHECK(half.rational_value() == Rational(1, 2));
  CHECK((half + half).is_one());
  CHECK((half - half).is_zero());
  CHECK((half / half).is_one());
  CHECK_THROWS_AS(half / FieldScalar::zero(q), FieldError);
}

TEST_CASE("exact nth roots over Q") {
  FieldConfig q = FieldConfig::rationals();
  auto roots = FieldScalar::from_rational(q, Rational(8, 27)).nth_roots(3);
  REQUIRE(roots.has_value());
  REQUIRE(roots->size() == 1);
  CHECK((*roots)[0].rational_value() == Rational(2, 3));

  roots = FieldScalar::from_rational(q, Rational(9, 4)).nth_roots(2);
  REQUIRE(roots.has_value());
  CHECK(roots->size() == 2);  // both square roots

  roots = FieldScalar::from_rational(q, Rational(2)).nth_roots(2);
  REQUIRE(roots.has_value());
  CHECK(roots->empty());  // sqrt(2) is irrational

  roots = FieldScalar::from_rational(q, Rational(-8)).nth_roots(3);
  REQUIRE(roots.has_value());
  REQUIRE(roots->size() == 1);
  CHECK((*roots)[0].rational_value() == Rational(-2));

  roots = FieldScalar::from_rational(q, Rational(-4)).nth_roots(2);
  REQUIRE(roots.has_value());
  CHECK(roots->empty());
}

TEST_CASE("nth roots over F_p") {
  FieldConfig f7 = FieldConfig::prime(7);
  auto roots = FieldScalar::from_integer(f7, BigInt(2)).nth_roots(2);
  REQUIRE(roots.has_value());
  REQUIRE(roots->size() == 2);  // 3^2 = 2, 4^2 = 2 mod 7
  CHECK((*roots)[0].prime_value() == 3);
  CHECK((*roots)[1].prime_value() == 4);

  auto none = FieldScalar::from_integer(f7, BigInt(3)).nth_roots(2);
  REQUIRE(none.has_value());
  CHECK(none->empty());  // 3 is not a QR mod 7
}
