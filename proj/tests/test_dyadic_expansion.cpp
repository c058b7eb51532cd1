#include <random>

#include "doctest.h"
#include "gambler/bit_expansion.hpp"
#include "gambler/dyadic.hpp"
#include "gambler/rational.hpp"

using namespace gambler;

TEST_CASE("dyadic canonical form") {
  CHECK(Dyadic(2, 2) == Dyadic(1, 1));
  CHECK(Dyadic(4, 2) == Dyadic::one());
  CHECK(Dyadic(0, 5) == Dyadic::zero());
  CHECK(Dyadic(6, 3).level() == 2);
  CHECK(Dyadic(6, 3).numerator() == 3);
  CHECK_THROWS_AS(Dyadic(5, 2), std::invalid_argument);
  CHECK_THROWS_AS(Dyadic(1, 63), std::invalid_argument);
}

TEST_CASE("dyadic ordering and arithmetic") {
  CHECK(Dyadic(1, 2) < Dyadic(1, 1));
  CHECK(Dyadic(3, 2) > Dyadic(1, 1));
  CHECK(Dyadic(1, 1).plus(Dyadic(1, 2)) == Dyadic(3, 2));
  CHECK(Dyadic(1, 1).minus(Dyadic(1, 2)) == Dyadic(1, 2));
  CHECK(Dyadic::one().minus(Dyadic(3, 2)) == Dyadic(1, 2));
  CHECK_THROWS_AS(Dyadic(3, 2).plus(Dyadic(1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(Dyadic(1, 2).minus(Dyadic(3, 2)), std::invalid_argument);
  CHECK(Dyadic(5, 3).bits() == std::vector<int>{1, 0, 1});
  CHECK(Dyadic(1, 1).bits_at(3) == std::vector<int>{1, 0, 0});
  CHECK(Dyadic(3, 8).to_rational() == Rational(3, 256));
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK(parse_rational("0.6") == Rational(3, 5));
  CHECK(parse_rational("2/3") == Rational(2, 3));
  CHECK(parse_rational("1") == Rational(1));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-0.5") == Rational(-1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
}

TEST_CASE("binary expansion of rationals") {
  SUBCASE("one half terminates") {
    BitExpansion e = expand_binary(1, 2);
    CHECK(e.prefix() == std::vector<int>{1});
    CHECK(e.terminating());
    CHECK_FALSE(e.truncated());
  }
  SUBCASE("two thirds is purely periodic") {
    BitExpansion e = expand_binary(2, 3);
    CHECK(e.prefix().empty());
    CHECK(e.period() == std::vector<int>{1, 0});
    CHECK(e.to_rational() == Rational(2, 3));
  }
  SUBCASE("zero") {
    BitExpansion e = expand_binary(0, 1);
    CHECK(e.is_zero());
    CHECK(e.terminating());
  }
  SUBCASE("one") {
    CHECK(expand_binary(1, 1).is_one());
    CHECK(expand_binary(1, 1).to_rational() == Rational(1));
  }
  SUBCASE("rejects values outside [0,1]") {
    CHECK_THROWS_AS(expand_binary(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(expand_binary(1, 0), std::invalid_argument);
  }
}

TEST_CASE("expansion normalization removes dual representations") {
  // 0.0111... = 0.1
  CHECK(BitExpansion({0}, {1}) == BitExpansion({1}));
  // 0.111... = 1
  CHECK(BitExpansion({}, {1}).is_one());
  // 0.101 111... = 0.11
  CHECK(BitExpansion({1, 0, 1}, {1}) == BitExpansion({1, 1}));
  // all-zero periods collapse to the terminating form
  CHECK(BitExpansion({1, 0}, {0, 0}) == BitExpansion({1}));
  CHECK_THROWS_AS(BitExpansion({2}), std::invalid_argument);
}

TEST_CASE("depth cap yields a flagged truncation") {
  // 6/7 = 0.110110... repeats with period 3, so a 2-bit budget truncates
  BitExpansion e = expand_binary(Rational(6, 7), 2);
  CHECK(e.truncated());
  CHECK(e.terminating());
  CHECK(e.prefix() == std::vector<int>{1, 1});
  // a long enough budget detects the period instead
  CHECK_FALSE(expand_binary(Rational(6, 7), 8).truncated());
  CHECK(expand_binary(Rational(6, 7), 8).period() == std::vector<int>{1, 1, 0});
}

TEST_CASE("expansion round-trips random rationals") {
  std::mt19937 gen(20240901);
  for (int trial = 0; trial < 200; ++trial) {
    const int den = 1 + static_cast<int>(gen() % 1000);
    const int num = static_cast<int>(gen() % (den + 1));
    BitExpansion e = expand_binary(num, den);
    CHECK_FALSE(e.truncated());
    CHECK(e.to_rational() == Rational(num, den));
  }
}

TEST_CASE("dyadic helpers") {
  CHECK(dyadic_from_rational(Rational(3, 8)) == Dyadic(3, 3));
  CHECK_THROWS_AS(dyadic_from_rational(Rational(1, 3)), std::invalid_argument);
  CHECK(dyadic_floor(Rational(2, 3), 4) == Dyadic(10, 4));
  CHECK(dyadic_nearest(Rational(2, 3), 4) == Dyadic(11, 4));
}
