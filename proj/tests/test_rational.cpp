#include <doctest.h>

#include "dirlap/rational.hpp"

using namespace dirlap;

TEST_CASE("parse_rational accepts integers, fractions and decimals") {
  CHECK(*parse_rational("3") == Rational(3));
  CHECK(*parse_rational("-17") == Rational(-17));
  CHECK(*parse_rational("+4") == Rational(4));
  CHECK(*parse_rational("7/4") == Rational(7, 4));
  CHECK(*parse_rational("-5/2") == Rational(-5, 2));
  CHECK(*parse_rational("6/4") == Rational(3, 2));  // normalized
  CHECK(*parse_rational("0.25") == Rational(1, 4));
  CHECK(*parse_rational("-0.5") == Rational(-1, 2));
  CHECK(*parse_rational(".5") == Rational(1, 2));
  CHECK(*parse_rational("2.") == Rational(2));
  CHECK(*parse_rational("123456789012345678901234567890") ==
        Rational(BigInt("123456789012345678901234567890")));
}

TEST_CASE("parse_rational rejects malformed input") {
  CHECK_FALSE(parse_rational(""));
  CHECK_FALSE(parse_rational("-"));
  CHECK_FALSE(parse_rational("1/0"));
  CHECK_FALSE(parse_rational("abc"));
  CHECK_FALSE(parse_rational("1.2.3"));
  CHECK_FALSE(parse_rational("1/2/3"));
  CHECK_FALSE(parse_rational("1e3"));
  CHECK_FALSE(parse_rational("."));
  CHECK_FALSE(parse_rational("2/-3"));
}

TEST_CASE("format_rational round-trips through parse_rational") {
  for (const char* text : {"0", "7", "-3", "1/2", "-19/7", "355/113"}) {
    Rational r = *parse_rational(text);
    CHECK(format_rational(r) == text);
    CHECK(*parse_rational(format_rational(r)) == r);
  }
  CHECK(format_rational(Rational(4, 2)) == "2");
}

TEST_CASE("to_double is exact on dyadic rationals") {
  CHECK(to_double(Rational(3, 8)) == 0.375);
  CHECK(to_double(Rational(-17, 4)) == -4.25);
  CHECK(to_double(Rational(1)) == 1.0);
  CHECK(to_double(Rational(1, 3)) == doctest::Approx(1.0 / 3).epsilon(1e-15));
}
