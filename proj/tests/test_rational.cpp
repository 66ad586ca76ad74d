#include "doctest.h"

#include "hk/errors.hpp"
#include "hk/rational.hpp"

using hk::Rat;

TEST_CASE("construction and formatting") {
  CHECK(Rat().str() == "0");
  CHECK(Rat(2).str() == "2");
  CHECK(Rat(1, 4).str() == "1/4");
  CHECK(Rat(-3, 6).str() == "-1/2");
  CHECK(Rat(4, 2).str() == "2");
  CHECK_THROWS_AS(Rat(1, 0), hk::Error);
}

TEST_CASE("parsing") {
  CHECK(Rat::parse("3") == Rat(3));
  CHECK(Rat::parse("-3") == Rat(-3));
  CHECK(Rat::parse("3/4") == Rat(3, 4));
  CHECK(Rat::parse("-7/2") == Rat(-7, 2));
  CHECK(Rat::parse("0.25") == Rat(1, 4));
  CHECK(Rat::parse("2.5") == Rat(5, 2));
  CHECK(Rat::parse("-0.125") == Rat(-1, 8));
  CHECK_THROWS_AS(Rat::parse(""), hk::ParseError);
  CHECK_THROWS_AS(Rat::parse("1/0"), hk::ParseError);
  CHECK_THROWS_AS(Rat::parse("abc"), hk::ParseError);
  CHECK_THROWS_AS(Rat::parse("1//2"), hk::ParseError);
}

TEST_CASE("exact arithmetic") {
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(1, 3) - Rat(1, 3) == Rat(0));
  CHECK(Rat(2, 3) * Rat(3, 4) == Rat(1, 2));
  CHECK(Rat(1, 2) / Rat(1, 4) == Rat(2));
  CHECK_THROWS_AS(Rat(1) / Rat(0), hk::Error);
  CHECK(-Rat(1, 2) == Rat(-1, 2));
  CHECK(hk::abs(Rat(-5, 7)) == Rat(5, 7));
  CHECK(Rat(-5, 7).sign() == -1);
  CHECK(Rat(0).is_zero());

  Rat acc;
  for (int i = 0; i < 10; ++i) acc += Rat(1, 10);
  CHECK(acc == Rat(1));
}

TEST_CASE("ordering") {
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1) < Rat(0));
  CHECK(Rat(7, 3) > Rat(2));
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(1, 3) != Rat(2, 3));
}

TEST_CASE("from_double is the exact binary value") {
  CHECK(Rat::from_double(0.5) == Rat(1, 2));
  CHECK(Rat::from_double(0.1) != Rat(1, 10));
  CHECK(Rat::from_double(0.1).to_double() == 0.1);
  CHECK(Rat::from_double(-0.75) == Rat(-3, 4));
}
