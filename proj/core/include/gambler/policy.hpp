#pragma once

#include <vector>

#include "gambler/value.hpp"

namespace gambler {

/// Blackwell-optimal bet min{s, 1-s}; valid on interior states only.
Dyadic optimal_action(const Dyadic& s);
BitExpansion optimal_action(const BitExpansion& s);

/// The small-bet alternative 2^-level at a state whose terminating expansion
/// has exactly `level` bits. Only optimal without discounting, so gamma < 1 is
/// rejected. The returned action is checked to attain v(s) to 1e-12.
Dyadic alt_optimal_action(const Dyadic& s, const Params& params);

/// A member of the Bellman-solution families: the exact value function, a
/// constant C on the interior, or a linear C's + B' on the interior, always
/// with the boundary values f(0) = 0 and f(1) = 1 pinned. Constants below 1
/// (and linear with C'+B' < 1) may be constructed but are flagged as
/// non-solutions.
class CandidateFn {
 public:
  enum class Kind { exact_value, constant, linear };

  static CandidateFn exact_value();
  static CandidateFn constant(double c);
  static CandidateFn linear(double slope, double intercept);

  Kind kind() const { return kind_; }
  double constant_value() const { return c_; }
  double slope() const { return slope_; }
  double intercept() const { return intercept_; }
  bool claimed_solution() const;

  /// Values at k 2^-level, k = 0..2^level, boundaries pinned to 0 and 1.
  std::vector<double> tabulate(unsigned level, const Params& params) const;

 private:
  CandidateFn() = default;
  Kind kind_ = Kind::exact_value;
  double c_ = 0;
  double slope_ = 0;
  double intercept_ = 0;
};

struct StateResidual {
  Dyadic state;
  double f_value;
  double backup;    // max over grid actions of p*gamma*f(s-a)+(1-p)*gamma*f(s+a)
  double residual;  // |f_value - backup|
};

struct ResidualReport {
  double max_residual = 0;
  Dyadic argmax_state;
  std::vector<StateResidual> per_state;  // ascending state order
};

/// Bellman residual of a candidate over the states G_state_level with actions
/// drawn from G_action_level (action_level >= state_level >= 1).
ResidualReport bellman_residual(const CandidateFn& f, unsigned state_level,
                                unsigned action_level, const Params& params);

struct IterateResult {
  std::vector<double> table;   // iterate on the action lattice, boundaries pinned
  unsigned level = 0;          // lattice level of `table`
  std::vector<double> deltas;  // sup-norm change per step
};

/// Synchronous Bellman sweeps on the G_action_level lattice. The start table
/// is given on G_state_level (boundaries 0 and 1) and prolonged to the action
/// lattice by the nearest interior coarse point (floor, clamped away from the
/// boundary), so constant starts stay constant on the interior.
IterateResult iterate_bellman(const std::vector<double>& start,
                              unsigned state_level, unsigned action_level,
                              const Params& params, int steps);

/// Convenience start: `interior_fill` on the interior, boundaries 0 and 1.
IterateResult iterate_bellman(double interior_fill, unsigned state_level,
                              unsigned action_level, const Params& params,
                              int steps);

/// Grid backup max over j = 1..min(i, n-i) of pg*table[i-j] + wg*table[i+j].
double grid_backup(const std::vector<double>& table, std::size_t i,
                   const Params& params);

/// Actions (lattice offsets j) whose backup is within `tol` of the maximum.
std::vector<std::size_t> grid_maximizers(const std::vector<double>& table,
                                         std::size_t i, const Params& params,
                                         double tol);

}  // namespace gambler
