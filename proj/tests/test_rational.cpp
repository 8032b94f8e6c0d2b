#include <doctest.h>

#include "wiretap/rational.hpp"

using namespace wiretap;

TEST_SUITE("rational") {

TEST_CASE("fraction strings are reduced with positive denominator") {
  CHECK(to_fraction_string(Rational(2, 4)) == "1/2");
  CHECK(to_fraction_string(Rational(0)) == "0/1");
  CHECK(to_fraction_string(Rational(-2, 22)) == "-1/11");
  CHECK(to_fraction_string(*parse_fraction("3/-9")) == "-1/3");
}

TEST_CASE("parse_fraction round-trips and rejects junk") {
  CHECK(*parse_fraction("3/22") == Rational(3, 22));
  CHECK(*parse_fraction("-1/3") == Rational(-1, 3));
  CHECK(*parse_fraction("7") == Rational(7));
  CHECK(*parse_fraction("0") == Rational(0));
  CHECK(!parse_fraction("1/0"));
  CHECK(!parse_fraction(""));
  CHECK(!parse_fraction("a/b"));
  CHECK(!parse_fraction("1/"));
  CHECK(!parse_fraction("1.5"));
}

TEST_CASE("exact comparisons") {
  CHECK(Rational(1, 3) + Rational(1, 3) + Rational(1, 3) == 1);
  CHECK(Rational(1, 10'000'000) * Rational(10'000'000) == 1);
}

}  // TEST_SUITE
