#include "cg/rational.hpp"
#include "doctest.h"

using cg::Rational;

TEST_CASE("rationals reduce and compare exactly") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(0, 7) == Rational(0, 3));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(1, -2) < Rational(0, 1));
  CHECK(Rational(2, 3) < Rational(3, 4));
  CHECK(Rational(5, 3) > Rational(3, 2));
  CHECK(Rational(7, 2) >= Rational(7, 2));
  CHECK(Rational(1, 3) != Rational(1, 4));
}

TEST_CASE("rational formatting and value") {
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational(3, 4).value() == doctest::Approx(0.75));
}
