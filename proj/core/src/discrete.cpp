#include "gambler/discrete.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gambler {

DiscreteSpec::DiscreteSpec(int n, Params p) : n_target(n), params(std::move(p)) {
  if (n < 2) throw std::invalid_argument("target capital must be >= 2");
}

std::vector<Rational> exact_table_exact(const DiscreteSpec& spec) {
  const int n_target = spec.n_target;
  std::vector<Rational> z(static_cast<std::size_t>(n_target) + 1);
  for (int n = 0; n <= n_target; ++n)
    z[static_cast<std::size_t>(n)] =
        value_rational_exact(Rational(n, n_target), spec.params);
  return z;
}

ValueTable exact_table(const DiscreteSpec& spec) {
  ValueTable table;
  for (const Rational& zn : exact_table_exact(spec))
    table.values.push_back(to_double(zn));
  return table;
}

namespace {

double discrete_backup(const std::vector<double>& z, int n, int n_target,
                       const Params& params) {
  const int amax = std::min(n, n_target - n);
  const double pg = params.p_d() * params.gamma_d();
  const double wg = params.win_d() * params.gamma_d();
  double best = pg * z[static_cast<std::size_t>(n - 1)] +
                wg * z[static_cast<std::size_t>(n + 1)];
  for (int a = 2; a <= amax; ++a)
    best = std::max(best, pg * z[static_cast<std::size_t>(n - a)] +
                              wg * z[static_cast<std::size_t>(n + a)]);
  return best;
}

}  // namespace

ValueTable value_iteration(const DiscreteSpec& spec,
                           const std::vector<double>& init, double tol,
                           long max_iter) {
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
  const std::size_t size = static_cast<std::size_t>(spec.n_target) + 1;
  if (init.size() != size)
    throw std::invalid_argument("init table size does not match target");
  ValueTable table;
  table.values = init;
  table.values.front() = 0.0;
  table.values.back() = 1.0;
  std::vector<double> next(size, 0.0);
  next.back() = 1.0;
  table.converged = false;
  for (long it = 0; it < max_iter; ++it) {
    double delta = 0;
    for (int n = 1; n < spec.n_target; ++n) {
      const std::size_t i = static_cast<std::size_t>(n);
      next[i] = discrete_backup(table.values, n, spec.n_target, spec.params);
      delta = std::max(delta, std::fabs(next[i] - table.values[i]));
    }
    table.values.swap(next);
    table.final_delta = delta;
    table.iterations = it + 1;
    if (delta < tol) {
      table.converged = true;
      break;
    }
  }
  return table;
}

ValueTable value_iteration(const DiscreteSpec& spec, double interior_fill,
                           double tol, long max_iter) {
  std::vector<double> init(static_cast<std::size_t>(spec.n_target) + 1,
                           interior_fill);
  init.front() = 0.0;
  init.back() = 1.0;
  return value_iteration(spec, init, tol, max_iter);
}

std::vector<int> greedy_policy(const ValueTable& table,
                               const DiscreteSpec& spec) {
  if (table.values.size() != static_cast<std::size_t>(spec.n_target) + 1)
    throw std::invalid_argument("table size does not match target");
  std::vector<int> policy(table.values.size(), 0);
  const double pg = spec.params.p_d() * spec.params.gamma_d();
  const double wg = spec.params.win_d() * spec.params.gamma_d();
  for (int n = 1; n < spec.n_target; ++n) {
    const int amax = std::min(n, spec.n_target - n);
    double best = -1;
    int best_a = 1;
    for (int a = 1; a <= amax; ++a) {
      const double q = pg * table.values[static_cast<std::size_t>(n - a)] +
                       wg * table.values[static_cast<std::size_t>(n + a)];
      if (q >= best) {  // >= so the largest action wins ties
        best = q;
        best_a = a;
      }
    }
    policy[static_cast<std::size_t>(n)] = best_a;
  }
  return policy;
}

double QTable::greedy_value(int n) const {
  if (n <= 0 || n >= n_target) return 0.0;
  const auto& row = q[static_cast<std::size_t>(n)];
  return *std::max_element(row.begin(), row.end());
}

int QTable::greedy_action(int n) const {
  const auto& row = q[static_cast<std::size_t>(n)];
  int best = 1;
  for (std::size_t a = 1; a < row.size(); ++a) {
    if (row[a] >= row[static_cast<std::size_t>(best - 1)])
      best = static_cast<int>(a + 1);
  }
  return best;
}

Schedule power_decay_schedule(double a0, double tau) {
  if (!(a0 > 0) || !(tau > 0))
    throw std::invalid_argument("schedule parameters must be positive");
  return [a0, tau](std::uint64_t step, std::uint64_t) {
    return a0 / (1.0 + static_cast<double>(step) / tau);
  };
}

Schedule visit_average_schedule() {
  return [](std::uint64_t, std::uint64_t visit) {
    return 1.0 / static_cast<double>(visit);
  };
}

QLearnConfig QLearnConfig::defaults(long episodes, std::uint64_t seed) {
  QLearnConfig config;
  config.episodes = episodes;
  config.alpha = power_decay_schedule(0.5, 1e4);
  config.epsilon = power_decay_schedule(0.5, 1e4);
  config.seed = seed;
  return config;
}

QLearnResult q_learning(const DiscreteSpec& spec, const QLearnConfig& config) {
  if (config.episodes < 1)
    throw std::invalid_argument("episodes must be >= 1");
  if (!config.alpha || !config.epsilon)
    throw std::invalid_argument("schedules must be non-empty");

  const int n_target = spec.n_target;
  QLearnResult result;
  result.rng_name = std::string(kRngName);
  QTable& table = result.table;
  table.n_target = n_target;
  table.q.resize(static_cast<std::size_t>(n_target));
  table.visits.resize(static_cast<std::size_t>(n_target));
  for (int n = 1; n < n_target; ++n) {
    const std::size_t width =
        static_cast<std::size_t>(std::min(n, n_target - n));
    table.q[static_cast<std::size_t>(n)].assign(width, 0.0);
    table.visits[static_cast<std::size_t>(n)].assign(width, 0);
  }

  Rng rng(config.seed);
  const double p = spec.params.p_d();
  const double gamma = spec.params.gamma_d();
  std::uint64_t step_count = 0;
  result.returns.reserve(static_cast<std::size_t>(config.episodes));

  for (long episode = 0; episode < config.episodes; ++episode) {
    int n = 1 + static_cast<int>(
                    uniform_below(rng, static_cast<std::uint64_t>(n_target - 1)));
    double discount = 1.0;
    double episode_return = 0.0;
    for (long step = 0; step < config.max_steps_per_episode; ++step) {
      auto& row = table.q[static_cast<std::size_t>(n)];
      const int amax = static_cast<int>(row.size());
      const double eps = config.epsilon(step_count + 1, 0);
      int action;
      if (uniform01(rng) < eps) {
        action = 1 + static_cast<int>(
                         uniform_below(rng, static_cast<std::uint64_t>(amax)));
      } else {
        action = table.greedy_action(n);
      }
      const bool lose = uniform01(rng) < p;
      const int next = lose ? n - action : n + action;
      const double reward = next == n_target ? 1.0 : 0.0;
      const double continuation =
          (next > 0 && next < n_target) ? table.greedy_value(next) : 0.0;
      const double target = gamma * (reward + continuation);

      auto& visit = table.visits[static_cast<std::size_t>(n)]
                                [static_cast<std::size_t>(action - 1)];
      ++visit;
      ++step_count;
      const double alpha = config.alpha(step_count, visit);
      double& entry = row[static_cast<std::size_t>(action - 1)];
      entry += alpha * (target - entry);

      discount *= gamma;
      n = next;
      if (n == 0 || n == n_target) {
        if (n == n_target) episode_return = discount;
        break;
      }
    }
    result.returns.push_back(episode_return);
  }
  return result;
}

}  // namespace gambler
