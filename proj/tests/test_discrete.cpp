#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "gambler/discrete.hpp"

using namespace gambler;

namespace {

Params params06(const char* gamma = "1") {
  return Params::from_strings("0.6", gamma);
}

double sup_gap(const std::vector<double>& a, const std::vector<double>& b) {
  double gap = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    gap = std::max(gap, std::fabs(a[i] - b[i]));
  return gap;
}

}  // namespace

TEST_CASE("exact discrete tables") {
  SUBCASE("N = 4 reproduces the quarter values") {
    DiscreteSpec spec(4, params06());
    std::vector<Rational> z = exact_table_exact(spec);
    CHECK(z[0] == 0);
    CHECK(z[1] == Rational(4, 25));
    CHECK(z[2] == Rational(2, 5));
    CHECK(z[3] == Rational(16, 25));
    CHECK(z[4] == 1);
  }
  SUBCASE("N = 100 midpoint") {
    DiscreteSpec spec(100, params06());
    CHECK(exact_table(spec).values[50] == doctest::Approx(0.4).epsilon(1e-15));
  }
  SUBCASE("N = 3 needs the periodic closed form") {
    DiscreteSpec spec(3, params06());
    std::vector<Rational> z = exact_table_exact(spec);
    // 2/3 = 0.101010..., one period sums to (1-p)gamma and scales by
    // gamma^2 p (1-p): value = 0.4 / (1 - 0.24) = 10/19
    CHECK(z[2] == Rational(10, 19));
    CHECK(to_double(z[2]) == doctest::Approx(0.526316).epsilon(1e-6));
  }
  CHECK_THROWS_AS(DiscreteSpec(1, params06()), std::invalid_argument);
}

TEST_CASE("value iteration agrees with the exact reduction") {
  DiscreteSpec spec(16, params06());
  ValueTable exact = exact_table(spec);
  SUBCASE("from zero") {
    ValueTable vi = value_iteration(spec, 0.0, 1e-12);
    CHECK(vi.converged);
    CHECK(sup_gap(exact.values, vi.values) < 1e-10);
  }
  SUBCASE("from a constant two, the discrete system is still unique") {
    ValueTable vi = value_iteration(spec, 2.0, 1e-12);
    CHECK(vi.converged);
    CHECK(sup_gap(exact.values, vi.values) < 1e-8);
  }
}

TEST_CASE("single interior state converges immediately") {
  for (const char* g : {"1", "0.9", "0.5"}) {
    DiscreteSpec spec(2, params06(g));
    ValueTable vi = value_iteration(spec, 0.0, 1e-12);
    CHECK(vi.values[1] ==
          doctest::Approx(to_double(spec.params.win() * spec.params.gamma()))
              .epsilon(1e-15));
    CHECK(vi.iterations <= 2);
  }
}

TEST_CASE("non-convergence is reported, not thrown") {
  DiscreteSpec spec(64, params06());
  ValueTable vi = value_iteration(spec, 2.0, 1e-12, 3);
  CHECK_FALSE(vi.converged);
  CHECK(vi.iterations == 3);
  CHECK(vi.final_delta >= 1e-12);
}

TEST_CASE("greedy policy on the exact table") {
  SUBCASE("bold bet is always among the maximizers and wins ties") {
    DiscreteSpec spec(8, params06());
    std::vector<int> policy = greedy_policy(exact_table(spec), spec);
    for (int n = 1; n < 8; ++n) CHECK(policy[n] == std::min(n, 8 - n));
    CHECK(policy[4] == 4);
  }
  SUBCASE("small bets tie at dyadic states") {
    DiscreteSpec spec(32, params06());
    ValueTable z = exact_table(spec);
    const double q1 = spec.params.p_d() * z.values[14] +
                      spec.params.win_d() * z.values[16];
    CHECK(q1 == doctest::Approx(z.values[15]).epsilon(1e-13));
  }
}

TEST_CASE("q-learning") {
  SUBCASE("two-state bandit with sample averages") {
    DiscreteSpec spec(2, params06());
    QLearnConfig config;
    config.episodes = 50000;
    config.alpha = visit_average_schedule();
    config.epsilon = power_decay_schedule(0.5, 1e4);
    config.seed = 7;
    QLearnResult r = q_learning(spec, config);
    CHECK(std::fabs(r.table.q[1][0] - 0.4) <= 0.01);
    CHECK(r.table.visits[1][0] == 50000);
    CHECK(r.returns.size() == 50000);
  }
  SUBCASE("bit-identical under a fixed seed") {
    DiscreteSpec spec(8, Params::from_strings("0.55", "0.9"));
    QLearnConfig config = QLearnConfig::defaults(20000, 7);
    QLearnResult a = q_learning(spec, config);
    QLearnResult b = q_learning(spec, config);
    CHECK(a.table.q == b.table.q);
    CHECK(a.table.visits == b.table.visits);
    CHECK(a.returns == b.returns);
    QLearnResult c = q_learning(spec, QLearnConfig::defaults(20000, 8));
    CHECK(a.table.q != c.table.q);
  }
  SUBCASE("rejects empty schedules and bad episode counts") {
    DiscreteSpec spec(4, params06());
    QLearnConfig config;
    config.episodes = 10;
    CHECK_THROWS_AS(q_learning(spec, config), std::invalid_argument);
    config = QLearnConfig::defaults(0, 1);
    CHECK_THROWS_AS(q_learning(spec, config), std::invalid_argument);
  }
}

TEST_CASE("greedy q values approach the exact table") {
  DiscreteSpec spec(8, Params::from_strings("0.55", "0.9"));
  // sample-average step sizes: the default power decay plateaus near 0.05
  // sup-norm noise at this episode budget
  QLearnConfig config = QLearnConfig::defaults(200000, 7);
  config.alpha = visit_average_schedule();
  QLearnResult r = q_learning(spec, config);
  ValueTable z = exact_table(spec);
  double gap = 0;
  for (int n = 1; n < 8; ++n)
    gap = std::max(gap, std::fabs(r.table.greedy_value(n) - z.values[n]));
  CHECK(gap <= 0.05);
}
