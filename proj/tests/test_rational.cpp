#include "ambigine/rational.hpp"

#include <doctest.h>

using namespace ambigine;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == Rat(3, 4));
  CHECK(parse_rational("-3/4") == Rat(-3, 4));
  CHECK(parse_rational("7") == Rat(7));
  CHECK(parse_rational("0.25") == Rat(1, 4));
  CHECK(parse_rational("-0.6") == Rat(-3, 5));
  CHECK(parse_rational(" 1/3 ") == Rat(1, 3));
  CHECK(parse_rational("6/8") == Rat(3, 4));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("a/b"));
  CHECK_THROWS(parse_rational("1e-3"));
  CHECK_THROWS(parse_rational(""));
}

TEST_CASE("rational formatting is canonical") {
  CHECK(format_rational(Rat(3, 4)) == "3/4");
  CHECK(format_rational(Rat(2, 1)) == "2");
  CHECK(format_rational(Rat(-6, 8)) == "-3/4");
  CHECK(format_rational(Rat(0)) == "0");
}

TEST_CASE("dyadic conversion is exact") {
  CHECK(rational_from_double(0.5) == Rat(1, 2));
  CHECK(rational_from_double(0.0) == Rat(0));
  CHECK(rational_from_double(-1.25) == Rat(-5, 4));
  const double x = 0.1;
  CHECK(to_double(rational_from_double(x)) == x);
}

TEST_CASE("rational powers") {
  CHECK(rational_pow(Rat(4, 3), 3) == Rat(64, 27));
  CHECK(rational_pow(Rat(4, 3), 0) == Rat(1));
}
