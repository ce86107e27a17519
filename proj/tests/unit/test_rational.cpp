#include "doctest.h"
#include "memlearn/errors.hpp"
#include "memlearn/rational.hpp"

using namespace memlearn;

TEST_CASE("parse integers, fractions and decimals exactly") {
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("-3/2") == Rational(-3) / 2);
  CHECK(parse_rational("1.25") == Rational(5) / 4);
  CHECK(parse_rational("+0.5") == Rational(1) / 2);
  CHECK(parse_rational("-0.125") == Rational(-1) / 8);
  CHECK(parse_rational("6/4") == Rational(3) / 2);
}

TEST_CASE("malformed rationals are rejected") {
  for (const char* bad : {"", "abc", "1/0", ".", ".5.", "1/2/3", "--1", "1e5"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), ValidationError);
  }
}

TEST_CASE("canonical and decimal printing") {
  CHECK(to_string(Rational(-3) / 2) == "-3/2");
  CHECK(to_string(Rational(4)) == "4");
  CHECK(to_decimal_string(Rational(5) / 4) == "1.25");
  CHECK(to_decimal_string(Rational(-1) / 8) == "-0.125");
  CHECK(to_decimal_string(Rational(1) / 3) == "1/3");
  CHECK(to_decimal_string(Rational(2)) == "2");
  CHECK(is_integer(Rational(6) / 3));
  CHECK_FALSE(is_integer(Rational(1) / 2));
}

TEST_CASE("decimal round trip") {
  for (const char* s : {"0.1", "12.375", "-7", "0"}) {
    CAPTURE(s);
    CHECK(to_decimal_string(parse_rational(s)) == s);
  }
}
