#include <cmath>

#include "doctest.h"
#include "gambler/simulate.hpp"
#include "gambler/value.hpp"

using namespace gambler;

namespace {

Params params06(const char* gamma = "1") {
  return Params::from_strings("0.6", gamma);
}

}  // namespace

TEST_CASE("single episodes") {
  Params p = params06();
  Rng rng(123);
  SUBCASE("from one half the game ends in one flip") {
    for (int i = 0; i < 100; ++i) {
      EpisodeResult ep =
          run_episode(expand_binary(1, 2), Policy::bold(), p, 100, rng);
      CHECK(ep.steps == 1);
      CHECK(ep.outcome != Outcome::truncated);
      CHECK(ep.discounted_return == (ep.outcome == Outcome::reached_one ? 1.0 : 0.0));
    }
  }
  SUBCASE("dyadic starts end within their bit length") {
    for (int i = 0; i < 1000; ++i) {
      EpisodeResult ep =
          run_episode(expand_binary(11, 16), Policy::bold(), p, 100, rng);
      CHECK(ep.steps <= 4);
      CHECK(ep.outcome != Outcome::truncated);
    }
    for (int i = 0; i < 1000; ++i) {
      EpisodeResult ep =
          run_episode(expand_binary(11, 16), Policy::alt(), p, 100, rng);
      CHECK(ep.steps <= 4);
      CHECK(ep.outcome != Outcome::truncated);
    }
  }
  SUBCASE("non-dyadic starts can truncate at a shallow cutoff") {
    long truncated = 0;
    for (int i = 0; i < 2000; ++i) {
      EpisodeResult ep =
          run_episode(expand_binary(2, 3), Policy::bold(), p, 1, rng);
      if (ep.outcome == Outcome::truncated) {
        ++truncated;
        CHECK(ep.discounted_return == 0.0);
      }
    }
    CHECK(truncated > 0);  // survival probability p after one step
  }
  SUBCASE("a deep cutoff never truncates in practice") {
    for (int i = 0; i < 10000; ++i) {
      EpisodeResult ep =
          run_episode(expand_binary(2, 3), Policy::bold(), p, 60, rng);
      CHECK(ep.outcome != Outcome::truncated);
    }
  }
  SUBCASE("validation") {
    CHECK_THROWS_AS(
        run_episode(expand_binary(0, 1), Policy::bold(), p, 10, rng),
        std::invalid_argument);
    CHECK_THROWS_AS(
        run_episode(expand_binary(2, 3), Policy::alt(), p, 10, rng),
        std::invalid_argument);
    CHECK_THROWS_AS(
        run_episode(expand_binary(1, 2), Policy::bold(), p, 0, rng),
        std::invalid_argument);
  }
}

TEST_CASE("custom policy tables") {
  Params p = params06();
  Rng rng(5);
  SUBCASE("a feasible table plays") {
    std::map<Dyadic, Dyadic> table;
    table[Dyadic(1, 1)] = Dyadic(1, 1);
    EpisodeResult ep =
        run_episode(expand_binary(1, 2), Policy::custom(table), p, 10, rng);
    CHECK(ep.steps == 1);
  }
  SUBCASE("infeasible actions are rejected at construction") {
    std::map<Dyadic, Dyadic> table;
    table[Dyadic(1, 2)] = Dyadic(1, 1);  // a = 1/2 > s = 1/4
    CHECK_THROWS_AS(Policy::custom(table), std::invalid_argument);
    CHECK_THROWS_AS(Policy::custom({}), std::invalid_argument);
  }
  SUBCASE("missing reachable states are rejected during play") {
    std::map<Dyadic, Dyadic> table;
    table[Dyadic(1, 2)] = Dyadic(1, 2);  // only covers s = 1/4
    bool threw = false;
    for (int i = 0; i < 50 && !threw; ++i) {
      try {
        run_episode(expand_binary(1, 4), Policy::custom(table), p, 10, rng);
      } catch (const std::invalid_argument&) {
        threw = true;
      }
    }
    CHECK(threw);
  }
}

TEST_CASE("monte carlo estimates") {
  SUBCASE("one half, undiscounted") {
    Params p = params06();
    McEstimate est = mc_value(expand_binary(1, 2), Policy::bold(), p, 100000, 3);
    CHECK(std::fabs(est.mean - 0.4) <= 3 * est.stderr_);
    CHECK(est.truncation_count == 0);
    CHECK(est.rng_name == "mt19937_64+splitmix64");
  }
  SUBCASE("one half, discounted") {
    Params p = params06("0.9");
    McEstimate est = mc_value(expand_binary(1, 2), Policy::bold(), p, 100000, 4);
    CHECK(std::fabs(est.mean - 0.36) <= 3 * est.stderr_);
  }
  SUBCASE("three quarters") {
    Params p = params06();
    McEstimate est = mc_value(expand_binary(3, 4), Policy::bold(), p, 100000, 5);
    CHECK(std::fabs(est.mean - 0.64) <= 3 * est.stderr_);
  }
  SUBCASE("seeded determinism") {
    Params p = params06();
    McEstimate a = mc_value(expand_binary(2, 3), Policy::bold(), p, 30000, 17);
    McEstimate b = mc_value(expand_binary(2, 3), Policy::bold(), p, 30000, 17);
    CHECK(a.mean == b.mean);
    CHECK(a.stderr_ == b.stderr_);
    CHECK(a.truncation_count == b.truncation_count);
  }
  SUBCASE("bold and alt agree at a dyadic start") {
    Params p = params06();
    McEstimate bold =
        mc_value(expand_binary(11, 16), Policy::bold(), p, 200000, 21);
    McEstimate alt =
        mc_value(expand_binary(11, 16), Policy::alt(), p, 200000, 22);
    const double joint =
        std::sqrt(bold.stderr_ * bold.stderr_ + alt.stderr_ * alt.stderr_);
    CHECK(std::fabs(bold.mean - alt.mean) <= 3 * joint);
    const double v = value_dyadic(Dyadic(11, 4), p);
    CHECK(std::fabs(bold.mean - v) <= 3 * bold.stderr_);
  }
  SUBCASE("discounted dyadic start still matches v") {
    Params p = params06("0.9");
    McEstimate est =
        mc_value(expand_binary(5, 8), Policy::bold(), p, 200000, 23);
    const double v = value_dyadic(Dyadic(5, 3), p);
    CHECK(std::fabs(est.mean - v) <= 3 * est.stderr_);
  }
  SUBCASE("truncation accounting") {
    Params p = params06();
    McEstimate est = mc_value(expand_binary(5, 8), Policy::bold(), p, 50000,
                              31, /*cutoff=*/10);
    CHECK(est.truncation_count == 0);
    CHECK(est.bias_bound == doctest::Approx(std::pow(0.6, 10)).epsilon(1e-12));
    const double v = value_dyadic(Dyadic(5, 3), p);
    CHECK(std::fabs(est.mean - v) <= 3 * est.stderr_ + est.bias_bound);
  }
}
