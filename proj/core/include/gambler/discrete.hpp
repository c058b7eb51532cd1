#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gambler/params.hpp"
#include "gambler/random.hpp"
#include "gambler/value.hpp"

namespace gambler {

/// The integer-capital game: states 0..n_target, integer bets
/// 1 <= a <= min{n, n_target - n}.
struct DiscreteSpec {
  int n_target;
  Params params;

  DiscreteSpec(int n, Params p);
};

struct ValueTable {
  std::vector<double> values;  // z(0..N); z(0)=0, z(N)=1
  long iterations = 0;
  double final_delta = 0;
  bool converged = true;
};

/// z(n) = v(n/N), evaluated exactly (periodic closed form when n/N is not
/// dyadic) and rounded once to double.
ValueTable exact_table(const DiscreteSpec& spec);
std::vector<Rational> exact_table_exact(const DiscreteSpec& spec);

/// Synchronous value iteration, ascending sweep, boundaries pinned. Stops when
/// the sup-norm change drops below tol; reports non-convergence through the
/// `converged` flag if max_iter is exhausted first.
ValueTable value_iteration(const DiscreteSpec& spec,
                           const std::vector<double>& init, double tol = 1e-12,
                           long max_iter = 200000);
ValueTable value_iteration(const DiscreteSpec& spec, double interior_fill = 0.0,
                           double tol = 1e-12, long max_iter = 200000);

/// Greedy action per interior state (0 at the boundaries), ties resolved
/// toward the largest action.
std::vector<int> greedy_policy(const ValueTable& table,
                               const DiscreteSpec& spec);

/// Ragged action-value table: q(n, a) for 1 <= n <= N-1, 1 <= a <= min{n, N-n}.
struct QTable {
  int n_target = 0;
  std::vector<std::vector<double>> q;            // q[n][a-1]
  std::vector<std::vector<std::uint64_t>> visits;

  double greedy_value(int n) const;  // max_a q(n, a); 0 at boundaries
  int greedy_action(int n) const;    // ties toward the largest action
};

/// Step-size / exploration schedule: arguments are the global update count
/// (1-based) and the visit count of the updated pair (1-based).
using Schedule = std::function<double(std::uint64_t step, std::uint64_t visit)>;

Schedule power_decay_schedule(double a0, double tau);  // a0 / (1 + step/tau)
Schedule visit_average_schedule();                     // 1 / visit

struct QLearnConfig {
  long episodes = 0;
  Schedule alpha;
  Schedule epsilon;
  std::uint64_t seed = 0;
  long max_steps_per_episode = 1000000;

  /// Recorded defaults: alpha and epsilon both a0/(1 + t/tau) with a0 = 0.5,
  /// tau = 1e4 on the global step count.
  static QLearnConfig defaults(long episodes, std::uint64_t seed);
};

struct QLearnResult {
  QTable table;
  std::vector<double> returns;  // gamma^T per episode (0 when ruined)
  std::string rng_name;
};

/// Tabular Q-learning with exploring starts and epsilon-greedy actions. The
/// update target is gamma * (r(n') + max_a' q(n', a')) so the terminal reward
/// is discounted through the arrival step, matching the episodic return
/// convention gamma^T. Deterministic for a fixed seed.
QLearnResult q_learning(const DiscreteSpec& spec, const QLearnConfig& config);

}  // namespace gambler
