#include "gambler/policy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gambler {

Dyadic optimal_action(const Dyadic& s) {
  if (!s.is_interior())
    throw std::invalid_argument("no action at a boundary state");
  Dyadic complement = Dyadic::one().minus(s);
  return s < complement ? s : complement;
}

BitExpansion optimal_action(const BitExpansion& s) {
  Rational r = s.to_rational();
  if (r <= 0 || r >= 1)
    throw std::invalid_argument("no action at a boundary state");
  Rational a = r <= 1 - r ? r : 1 - r;
  return expand_binary(a);
}

Dyadic alt_optimal_action(const Dyadic& s, const Params& params) {
  if (params.gamma() != 1)
    throw std::invalid_argument("small-bet policy requires gamma = 1");
  if (!s.is_interior())
    throw std::invalid_argument("no action at a boundary state");
  Dyadic action(1, s.level());
  const double q = q_value(s, action, params);
  const double v = value_dyadic(s, params);
  if (std::fabs(q - v) > 1e-12)
    throw std::logic_error("small-bet action failed to attain v(s)");
  return action;
}

CandidateFn CandidateFn::exact_value() {
  CandidateFn f;
  f.kind_ = Kind::exact_value;
  return f;
}

CandidateFn CandidateFn::constant(double c) {
  CandidateFn f;
  f.kind_ = Kind::constant;
  f.c_ = c;
  return f;
}

CandidateFn CandidateFn::linear(double slope, double intercept) {
  CandidateFn f;
  f.kind_ = Kind::linear;
  f.slope_ = slope;
  f.intercept_ = intercept;
  return f;
}

bool CandidateFn::claimed_solution() const {
  switch (kind_) {
    case Kind::exact_value:
      return true;
    case Kind::constant:
      return c_ >= 1.0;
    case Kind::linear:
      return slope_ + intercept_ >= 1.0;
  }
  return false;
}

std::vector<double> CandidateFn::tabulate(unsigned level,
                                          const Params& params) const {
  if (kind_ == Kind::exact_value) return value_lattice(level, params);
  const std::size_t n = (std::size_t{1} << level) + 1;
  std::vector<double> table(n);
  table.front() = 0.0;
  table.back() = 1.0;
  const double ds = 1.0 / static_cast<double>(n - 1);
  for (std::size_t k = 1; k + 1 < n; ++k) {
    table[k] = kind_ == Kind::constant
                   ? c_
                   : slope_ * (static_cast<double>(k) * ds) + intercept_;
  }
  return table;
}

double grid_backup(const std::vector<double>& table, std::size_t i,
                   const Params& params) {
  const std::size_t n = table.size() - 1;
  const std::size_t amax = std::min(i, n - i);
  if (amax == 0) throw std::invalid_argument("boundary state has no actions");
  const double pg = params.p_d() * params.gamma_d();
  const double wg = params.win_d() * params.gamma_d();
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 1; j <= amax; ++j)
    best = std::max(best, pg * table[i - j] + wg * table[i + j]);
  return best;
}

std::vector<std::size_t> grid_maximizers(const std::vector<double>& table,
                                         std::size_t i, const Params& params,
                                         double tol) {
  const std::size_t n = table.size() - 1;
  const std::size_t amax = std::min(i, n - i);
  const double pg = params.p_d() * params.gamma_d();
  const double wg = params.win_d() * params.gamma_d();
  const double best = grid_backup(table, i, params);
  std::vector<std::size_t> out;
  for (std::size_t j = 1; j <= amax; ++j) {
    if (pg * table[i - j] + wg * table[i + j] >= best - tol) out.push_back(j);
  }
  return out;
}

ResidualReport bellman_residual(const CandidateFn& f, unsigned state_level,
                                unsigned action_level, const Params& params) {
  if (state_level < 1) throw std::invalid_argument("state level must be >= 1");
  if (action_level < state_level)
    throw std::invalid_argument("action level must be >= state level");
  const std::vector<double> table = f.tabulate(action_level, params);
  const std::size_t stride = std::size_t{1} << (action_level - state_level);
  const std::size_t states = (std::size_t{1} << state_level) - 1;

  ResidualReport report;
  report.per_state.reserve(states);
  for (std::size_t k = 1; k <= states; ++k) {
    const std::size_t i = k * stride;
    const double backup = grid_backup(table, i, params);
    const double residual = std::fabs(table[i] - backup);
    report.per_state.push_back(
        {Dyadic(k, state_level), table[i], backup, residual});
    if (residual > report.max_residual) {
      report.max_residual = residual;
      report.argmax_state = Dyadic(k, state_level);
    }
  }
  if (report.argmax_state.is_zero() && !report.per_state.empty())
    report.argmax_state = report.per_state.front().state;
  return report;
}

namespace {

std::vector<double> prolong(const std::vector<double>& start,
                            unsigned state_level, unsigned action_level) {
  const std::size_t coarse = (std::size_t{1} << state_level) + 1;
  if (start.size() != coarse)
    throw std::invalid_argument("start table size does not match state level");
  if (start.front() != 0.0 || start.back() != 1.0)
    throw std::invalid_argument("start table must pin f(0)=0 and f(1)=1");
  const unsigned shift = action_level - state_level;
  const std::size_t fine = (std::size_t{1} << action_level) + 1;
  std::vector<double> table(fine);
  table.front() = 0.0;
  table.back() = 1.0;
  for (std::size_t i = 1; i + 1 < fine; ++i) {
    const std::size_t floor_idx = i >> shift;
    if ((floor_idx << shift) == i) {
      table[i] = start[floor_idx];
    } else {
      table[i] = start[std::max<std::size_t>(floor_idx, 1)];
    }
  }
  return table;
}

}  // namespace

IterateResult iterate_bellman(const std::vector<double>& start,
                              unsigned state_level, unsigned action_level,
                              const Params& params, int steps) {
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
  if (state_level < 1) throw std::invalid_argument("state level must be >= 1");
  if (action_level < state_level)
    throw std::invalid_argument("action level must be >= state level");
  IterateResult result;
  result.level = action_level;
  result.table = prolong(start, state_level, action_level);
  std::vector<double> next(result.table.size());
  next.front() = 0.0;
  next.back() = 1.0;
  for (int step = 0; step < steps; ++step) {
    double delta = 0;
    for (std::size_t i = 1; i + 1 < result.table.size(); ++i) {
      next[i] = grid_backup(result.table, i, params);
      delta = std::max(delta, std::fabs(next[i] - result.table[i]));
    }
    result.table.swap(next);
    result.deltas.push_back(delta);
  }
  return result;
}

IterateResult iterate_bellman(double interior_fill, unsigned state_level,
                              unsigned action_level, const Params& params,
                              int steps) {
  std::vector<double> start((std::size_t{1} << state_level) + 1, interior_fill);
  start.front() = 0.0;
  start.back() = 1.0;
  return iterate_bellman(start, state_level, action_level, params, steps);
}

}  // namespace gambler
