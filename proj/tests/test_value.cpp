#include <cmath>

#include "doctest.h"
#include "gambler/value.hpp"

using namespace gambler;

namespace {

Params params06(const char* gamma = "1") {
  return Params::from_strings("0.6", gamma);
}

// Independent truncation oracle: first `count` bits of num/den by plain long
// division, no period detection.
std::vector<int> leading_bits(int num, int den, unsigned count) {
  std::vector<int> bits;
  long long rem = num;
  for (unsigned i = 0; i < count; ++i) {
    rem *= 2;
    if (rem >= den) {
      bits.push_back(1);
      rem -= den;
    } else {
      bits.push_back(0);
    }
  }
  return bits;
}

}  // namespace

TEST_CASE("params validation") {
  CHECK_THROWS_AS(Params::from_strings("0.4", "1"), std::invalid_argument);
  CHECK_THROWS_AS(Params::from_strings("1", "1"), std::invalid_argument);
  CHECK_THROWS_AS(Params::from_strings("0.6", "1.1"), std::invalid_argument);
  CHECK_THROWS_AS(Params::from_strings("0.6", "-0.1"), std::invalid_argument);
  CHECK(Params::from_strings("0.5", "0").p() == Rational(1, 2));
}

TEST_CASE("value at dyadic states") {
  Params p = params06();
  CHECK(value_dyadic(Dyadic(1, 1), p) == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(value_dyadic(Dyadic(1, 2), p) == doctest::Approx(0.16).epsilon(1e-14));
  CHECK(value_dyadic(Dyadic(3, 2), p) == doctest::Approx(0.64).epsilon(1e-14));
  CHECK(value_dyadic(Dyadic::zero(), p) == 0.0);
  CHECK(value_dyadic(Dyadic::one(), p) == 1.0);

  Params pg = params06("0.9");
  CHECK(value_dyadic(Dyadic(1, 1), pg) == doctest::Approx(0.36).epsilon(1e-14));
}

TEST_CASE("quarter-point values are exact rationals") {
  for (const char* ps : {"0.55", "0.6", "0.75", "0.9"}) {
    Params p = Params::from_strings(ps, "1");
    const Rational q = p.win();
    CHECK(value_dyadic_exact(Dyadic(1, 1), p) == q);
    CHECK(value_dyadic_exact(Dyadic(1, 2), p) == q * q);
    CHECK(value_dyadic_exact(Dyadic(3, 2), p) == q + p.p() * q);
  }
}

TEST_CASE("midpoint recursion fixes v(3/8)") {
  Params p = params06();
  const Rational lhs = value_dyadic_exact(Dyadic(3, 3), p);
  const Rational rhs = p.p() * value_dyadic_exact(Dyadic(1, 2), p) +
                       p.win() * value_dyadic_exact(Dyadic(1, 1), p);
  CHECK(lhs == rhs);
  CHECK(value_dyadic(Dyadic(3, 3), p) == doctest::Approx(0.256).epsilon(1e-14));
}

TEST_CASE("periodic expansions use the closed form") {
  Params p = params06();
  BitExpansion two_thirds = expand_binary(2, 3);
  const double closed = value_expansion(two_thirds, p);
  CHECK(closed == doctest::Approx(0.4 / 0.76).epsilon(1e-12));

  // oracle: direct truncation of the series after 64 bits
  const double truncated =
      value_expansion(BitExpansion(leading_bits(2, 3, 64)), p);
  CHECK(closed == doctest::Approx(truncated).epsilon(1e-12));

  CHECK(value_expansion(BitExpansion::zero(), p) == 0.0);
  CHECK(value_expansion(expand_binary(5, 8), p) ==
        doctest::Approx(0.496).epsilon(1e-14));
}

TEST_CASE("expansion evaluation honors the tolerance contract") {
  Params p = params06();
  CHECK_THROWS_AS(value_expansion(expand_binary(2, 3), p, 0.0),
                  std::invalid_argument);
  BitExpansion shallow = expand_binary(Rational(1, 97), 6);  // period is 48
  REQUIRE(shallow.truncated());
  CHECK_THROWS_AS(value_expansion(shallow, p, 1e-12), std::invalid_argument);
  CHECK(value_expansion(shallow, p, 0.5) ==
        doctest::Approx(value_expansion(expand_binary(1, 97), p))
            .epsilon(0.1));
}

TEST_CASE("exact rational evaluation matches the dyadic path") {
  Params p = params06("0.9");
  CHECK(value_rational_exact(Rational(5, 8), p) ==
        value_dyadic_exact(Dyadic(5, 3), p));
  CHECK(value_rational_exact(Rational(1), p) == Rational(1));
  CHECK_THROWS_AS(value_rational_exact(Rational(3, 2), p),
                  std::invalid_argument);
}

TEST_CASE("q values") {
  Params p = params06();
  CHECK(q_value(Dyadic(1, 1), Dyadic(1, 1), p) ==
        doctest::Approx(0.4).epsilon(1e-14));
  // derived from the frozen quarter values: 0.6*0.16 + 0.4*0.64
  CHECK(q_value(Dyadic(1, 1), Dyadic(1, 2), p) ==
        doctest::Approx(0.352).epsilon(1e-14));
  CHECK(q_value(Dyadic(1, 1), Dyadic(1, 2), p) <
        value_dyadic(Dyadic(1, 1), p));
  // the bold action attains v
  CHECK(q_value(Dyadic(3, 2), Dyadic(1, 2), p) ==
        doctest::Approx(value_dyadic(Dyadic(3, 2), p)).epsilon(1e-14));

  CHECK_THROWS_AS(q_value(Dyadic(1, 2), Dyadic(1, 1), p),
                  std::invalid_argument);
  CHECK_THROWS_AS(q_value(Dyadic(1, 1), Dyadic::zero(), p),
                  std::invalid_argument);
  CHECK_THROWS_AS(q_value(Dyadic(3, 2), Dyadic(1, 1), p),
                  std::invalid_argument);
}

TEST_CASE("the maximizing action is not unique off the lattice") {
  // q(1/3, 1/6) = v(1/3) exactly, for every p and gamma: chaining the shift
  // identities v(1/6) = (1-p)gamma v(1/3), v(1/3) = (1-p)gamma v(2/3) and
  // v(2/3) = (1-p)gamma + p gamma v(1/3) closes the loop.
  for (const char* ps : {"0.6", "0.75"}) {
    for (const char* gs : {"1", "0.9", "0.5"}) {
      Params p = Params::from_strings(ps, gs);
      CHECK(q_value_exact(Rational(1, 3), Rational(1, 6), p) ==
            value_rational_exact(Rational(1, 3), p));
      CHECK(q_value_exact(Rational(1, 3), Rational(1, 3), p) ==
            value_rational_exact(Rational(1, 3), p));
    }
  }
}

TEST_CASE("forward difference closed form") {
  Params p = params06();
  CHECK(forward_diff(Dyadic(1, 1), 1, p) == doctest::Approx(0.24).epsilon(1e-14));
  CHECK(forward_diff(Dyadic::zero(), 0, p) ==
        doctest::Approx(0.4).epsilon(1e-14));
  // factors 0.4 * 0.4 * 0.6 from the level-2 bits of 1/4
  CHECK(forward_diff(Dyadic(1, 2), 2, p) ==
        doctest::Approx(0.096).epsilon(1e-14));
  CHECK(forward_diff_exact(Dyadic(1, 2), 2, p) ==
        value_dyadic_exact(Dyadic(3, 3), p) -
            value_dyadic_exact(Dyadic(1, 2), p));
  CHECK_THROWS_AS(forward_diff(Dyadic::one(), 1, p), std::invalid_argument);
  CHECK_THROWS_AS(forward_diff(Dyadic(1, 3), 2, p), std::invalid_argument);
}

TEST_CASE("backward difference and its bound") {
  Params p = params06();
  SUBCASE("equality at gamma = 1") {
    DiffReport r = backward_diff(Dyadic(1, 1), 1, p);
    CHECK(r.backward == doctest::Approx(0.24).epsilon(1e-14));
    CHECK(r.backward == doctest::Approx(r.bound).epsilon(1e-14));
    CHECK(r.forward.has_value());
  }
  SUBCASE("s = 1 uses the all-ones tail") {
    DiffReport r = backward_diff(Dyadic::one(), 1, p);
    CHECK(r.backward == doctest::Approx(0.36).epsilon(1e-14));
    CHECK(r.bound == doctest::Approx(0.36).epsilon(1e-14));
    CHECK_FALSE(r.forward.has_value());
  }
  SUBCASE("strict inequality under discounting") {
    Params pg = params06("0.9");
    DiffReport r = backward_diff(Dyadic(1, 1), 1, pg);
    // oracle: direct subtraction of the two evaluations
    const double direct = value_dyadic(Dyadic(1, 1), pg) -
                          value_dyadic(Dyadic(1, 2), pg);
    CHECK(r.backward == doctest::Approx(direct).epsilon(1e-14));
    CHECK(r.bound == doctest::Approx(0.1944).epsilon(1e-14));
    CHECK(r.backward > r.bound + 1e-3);
  }
  CHECK_THROWS_AS(backward_diff(Dyadic::zero(), 1, p), std::invalid_argument);
}

TEST_CASE("self-similar evaluation") {
  Params p = params06();
  CHECK(self_similar_value(Dyadic(1, 1), 1, BitExpansion::from_dyadic(Dyadic(1, 1)),
                           p) == doctest::Approx(0.64).epsilon(1e-14));
  CHECK(self_similar_value(Dyadic(1, 1), 1, BitExpansion::from_dyadic(Dyadic(1, 2)),
                           p) == doctest::Approx(0.496).epsilon(1e-14));
  CHECK(self_similar_value(Dyadic::zero(), 0, expand_binary(2, 3), p) ==
        doctest::Approx(value_expansion(expand_binary(2, 3), p))
            .epsilon(1e-14));
  CHECK(self_similar_value_exact(Dyadic(1, 1), 1,
                                 BitExpansion::from_dyadic(Dyadic(1, 2)), p) ==
        value_dyadic_exact(Dyadic(5, 3), p));
}

TEST_CASE("left limits and jumps") {
  Params pg = params06("0.9");
  SUBCASE("at one half") {
    auto [left, jump] = left_limit_and_jump_exact(Dyadic(1, 1), pg);
    const Rational q = pg.win();
    const Rational g = pg.gamma();
    CHECK(left == q * q * g * g / (1 - pg.p() * g));
    CHECK(jump == q * g * (1 - g) / (1 - pg.p() * g));
    CHECK(to_double(left) == doctest::Approx(0.281739).epsilon(1e-5));
    CHECK(to_double(jump) == doctest::Approx(0.078261).epsilon(1e-5));
  }
  SUBCASE("continuous when undiscounted") {
    auto r = left_limit_and_jump(Dyadic(1, 1), params06());
    CHECK(r.jump == doctest::Approx(0.0).epsilon(1e-15));
  }
  SUBCASE("deep approach oracle at three quarters") {
    auto [left, jump] = left_limit_and_jump_exact(Dyadic(3, 2), pg);
    // approach 3/4 from below along the lattice; the residual decays like
    // (gamma p)^L so depth 60 pins the limit far below 1e-12
    const Rational near =
        value_rational_exact(Rational(3, 4) - Rational(BigInt(1), BigInt(1) << 60), pg);
    CHECK(std::fabs(to_double(left) - to_double(near)) < 1e-12);
    CHECK(to_double(jump) == doctest::Approx(0.042261).epsilon(1e-5));
    CHECK(to_double(jump) ==
          doctest::Approx(value_dyadic(Dyadic(3, 2), pg) - to_double(near))
              .epsilon(1e-9));
  }
  SUBCASE("at one") {
    auto [left, jump] = left_limit_and_jump_exact(Dyadic::one(), pg);
    CHECK(left == pg.win() * pg.gamma() / (1 - pg.p() * pg.gamma()));
    CHECK(left + jump == Rational(1));
  }
  CHECK_THROWS_AS(left_limit_and_jump(Dyadic::zero(), pg),
                  std::invalid_argument);
}

TEST_CASE("tail bounds and depth selection") {
  Params p = params06("0.9");
  CHECK(tail_bound(10, p) ==
        doctest::Approx(0.4 * std::pow(0.9, 11) * std::pow(0.6, 10) / 0.46)
            .epsilon(1e-12));
  const unsigned depth = depth_for_tol(1e-9, p);
  CHECK(depth <= 4096);
  CHECK(tail_bound(depth, p) <= 1e-9);
  CHECK(tail_bound(depth - 1, p) > 1e-9);
  CHECK_THROWS_AS(depth_for_tol(0.0, p), std::invalid_argument);
}
