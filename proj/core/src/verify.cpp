#include "gambler/verify.hpp"

#include <cmath>
#include <sstream>

#include "gambler/approx.hpp"
#include "gambler/discrete.hpp"
#include "gambler/policy.hpp"
#include "gambler/simulate.hpp"
#include "gambler/value.hpp"

namespace gambler {

namespace {

Params make_params(const char* p, const char* gamma) {
  return Params::from_strings(p, gamma);
}

std::string param_tag(const Params& params) {
  std::ostringstream os;
  os << "p=" << to_string(params.p()) << " gamma=" << to_string(params.gamma());
  return os.str();
}

PropertyResult lattice_monotonicity(bool deep) {
  // strict increase is checked in exact arithmetic; the double lattice is only
  // required to be non-decreasing, since at p = 0.9 increments shrink below
  // one ulp around level 18
  const unsigned exact_level = deep ? 16 : 12;
  const unsigned double_level = deep ? 20 : 12;
  for (const char* p : {"0.6", "0.9"}) {
    for (const char* g : {"1", "0.9"}) {
      Params params = make_params(p, g);
      std::vector<Rational> exact = value_lattice_exact(exact_level, params);
      for (std::size_t k = 0; k + 1 < exact.size(); ++k) {
        if (!(exact[k] < exact[k + 1])) {
          std::ostringstream os;
          os << param_tag(params) << " exact tie at k=" << k;
          return {"lattice_monotonicity", false, os.str()};
        }
      }
      std::vector<double> table = value_lattice(double_level, params);
      for (std::size_t k = 0; k + 1 < table.size(); ++k) {
        if (table[k] > table[k + 1]) {
          std::ostringstream os;
          os << param_tag(params) << " double inversion at k=" << k;
          return {"lattice_monotonicity", false, os.str()};
        }
      }
    }
  }
  return {"lattice_monotonicity", true,
          "exactly strict through level " + std::to_string(exact_level) +
              ", non-decreasing doubles through level " +
              std::to_string(double_level)};
}

PropertyResult bellman_on_lattice(bool deep) {
  const unsigned level = deep ? 12 : 8;
  for (const char* p : {"0.6", "0.9"}) {
    for (const char* g : {"1", "0.9", "0.5"}) {
      Params params = make_params(p, g);
      ResidualReport report =
          bellman_residual(CandidateFn::exact_value(), level, level, params);
      if (report.max_residual > 1e-12) {
        std::ostringstream os;
        os << param_tag(params) << " residual=" << report.max_residual;
        return {"bellman_on_lattice", false, os.str()};
      }
    }
  }
  return {"bellman_on_lattice", true,
          "max residual <= 1e-12 at level " + std::to_string(level)};
}

PropertyResult action_grid_dominance(bool deep) {
  const unsigned max_level = deep ? 8 : 6;
  for (const char* p : {"0.6", "0.9"}) {
    for (const char* g : {"1", "0.9"}) {
      Params params = make_params(p, g);
      for (unsigned level = 1; level <= max_level; ++level) {
        std::vector<double> table = value_lattice(level + 1, params);
        const std::size_t n = table.size() - 1;
        for (std::size_t i = 2; i < n; i += 2) {  // states of G_level
          const std::size_t amax = std::min(i, n - i);
          const double pg = params.p_d() * params.gamma_d();
          const double wg = params.win_d() * params.gamma_d();
          double coarse = -1, fine = -1;
          for (std::size_t j = 1; j <= amax; ++j) {
            const double q = pg * table[i - j] + wg * table[i + j];
            fine = std::max(fine, q);
            if (j % 2 == 0) coarse = std::max(coarse, q);
          }
          if (fine > coarse + 1e-13) {
            std::ostringstream os;
            os << param_tag(params) << " level=" << level << " state=" << i;
            return {"action_grid_dominance", false, os.str()};
          }
        }
      }
    }
  }
  return {"action_grid_dominance", true,
          "fine action grids never beat coarse ones through level " +
              std::to_string(max_level)};
}

PropertyResult self_similarity(bool deep) {
  // interior tails only: at gamma < 1 the right endpoint of a dyadic interval
  // carries the jump, so the affine image there is the left limit, not v
  const unsigned level = deep ? 7 : 6;
  Params params = make_params("0.6", "0.9");
  const std::uint64_t n = std::uint64_t{1} << level;
  for (std::uint64_t ks = 0; ks < n; ++ks) {
    for (std::uint64_t kt = 1; kt < n; ++kt) {
      const Dyadic sbar(ks, level);
      const Dyadic tail(kt, level);
      const double lhs = self_similar_value(
          sbar, level, BitExpansion::from_dyadic(tail), params);
      const Dyadic s(ks * n + kt, 2 * level);
      const double rhs = value_dyadic(s, params);
      if (std::fabs(lhs - rhs) > 1e-12) {
        std::ostringstream os;
        os << "sbar=" << ks << "/2^" << level << " tail=" << kt << "/2^"
           << level;
        return {"self_similarity", false, os.str()};
      }
    }
  }
  return {"self_similarity", true,
          "decomposition matches direct evaluation on G_" +
              std::to_string(level)};
}

PropertyResult diff_closed_forms(bool deep) {
  const unsigned level = deep ? 12 : 10;
  for (const char* g : {"1", "0.9"}) {
    Params params = make_params("0.6", g);
    const bool undiscounted = params.undiscounted();
    const std::uint64_t n = std::uint64_t{1} << level;
    for (std::uint64_t k = 1; k <= n; ++k) {
      const Dyadic s(k, level);
      const Dyadic half_step(1, level + 1);
      if (k < n) {
        const Rational fwd = forward_diff_exact(s, level, params);
        const Rational direct =
            value_dyadic_exact(s.plus(half_step), params) -
            value_dyadic_exact(s, params);
        if (fwd != direct)
          return {"diff_closed_forms", false,
                  "forward mismatch at k=" + std::to_string(k)};
      }
      const auto [diff, bound] = backward_diff_exact(s, level, params);
      const Rational direct = value_dyadic_exact(s, params) -
                              value_dyadic_exact(s.minus(half_step), params);
      if (diff != direct)
        return {"diff_closed_forms", false,
                "backward mismatch at k=" + std::to_string(k)};
      if (undiscounted ? diff != bound : !(diff > bound))
        return {"diff_closed_forms", false,
                "bound relation failed at k=" + std::to_string(k) + " " +
                    param_tag(params)};
    }
  }
  return {"diff_closed_forms", true,
          "closed forms equal direct subtraction on G_" +
              std::to_string(level)};
}

PropertyResult off_lattice_continuity(bool deep) {
  const unsigned max_level = deep ? 24 : 16;
  Params params = make_params("0.6", "0.9");
  for (const auto& [num, den] : {std::pair<int, int>{1, 3},
                                 {2, 3},
                                 {2, 5},
                                 {5, 7}}) {
    const Rational s(num, den);
    const Rational vs = value_rational_exact(s, params);
    for (unsigned level = 4; level <= max_level; level += 4) {
      const Dyadic near = dyadic_nearest(s, level);
      Rational gap = vs - value_dyadic_exact(near, params);
      if (gap < 0) gap = -gap;
      const Rational bound = 2 * params.win() *
                             rational_pow(params.gamma(), level) *
                             rational_pow(params.p(), level - 1);
      if (gap > bound) {
        std::ostringstream os;
        os << num << "/" << den << " level=" << level;
        return {"off_lattice_continuity", false, os.str()};
      }
    }
  }
  return {"off_lattice_continuity", true,
          "nearest-lattice gap within 2(1-p)gamma^L p^(L-1)"};
}

std::vector<int> first_bits(const Rational& s, unsigned count) {
  std::vector<int> bits;
  BigInt rem = numerator(s);
  const BigInt den = denominator(s);
  for (unsigned i = 0; i < count; ++i) {
    rem <<= 1;
    if (rem >= den) {
      bits.push_back(1);
      rem -= den;
    } else {
      bits.push_back(0);
    }
  }
  return bits;
}

PropertyResult truncation_tail_bound(bool deep) {
  const unsigned max_level = deep ? 32 : 24;
  for (const char* g : {"1", "0.9"}) {
    Params params = make_params("0.6", g);
    for (const auto& [num, den] :
         {std::pair<int, int>{2, 3}, {5, 7}, {1, 10}}) {
      const Rational s(num, den);
      const Rational vs = value_rational_exact(s, params);
      for (unsigned level = 8; level <= max_level; level += 8) {
        Rational partial =
            value_expansion_exact(BitExpansion(first_bits(s, level)), params);
        Rational err = vs - partial;
        if (err < 0) err = -err;
        const Rational bound =
            params.win() * rational_pow(params.gamma(), level + 1) *
            rational_pow(params.p(), level) /
            (1 - params.gamma() * params.p());
        if (err > bound) {
          std::ostringstream os;
          os << num << "/" << den << " level=" << level << " "
             << param_tag(params);
          return {"truncation_tail_bound", false, os.str()};
        }
      }
    }
  }
  return {"truncation_tail_bound", true,
          "series truncation error within the geometric tail bound"};
}

PropertyResult integral_additivity(bool deep) {
  const unsigned level = deep ? 8 : 6;
  for (const char* g : {"1", "0.9"}) {
    Params params = make_params("0.6", g);
    const Rational whole =
        integral_exact(Dyadic::zero(), Dyadic::one(), params);
    if (whole != value_mean(params))
      return {"integral_additivity", false, "whole-interval integral " +
                                                param_tag(params)};
    const std::uint64_t n = std::uint64_t{1} << level;
    for (std::uint64_t k = 1; k < n; ++k) {
      const Dyadic m(k, level);
      const Rational sum = integral_exact(Dyadic::zero(), m, params) +
                           integral_exact(m, Dyadic::one(), params);
      if (sum != whole)
        return {"integral_additivity", false,
                "split at k=" + std::to_string(k) + " " + param_tag(params)};
    }
  }
  return {"integral_additivity", true,
          "exact additivity across G_" + std::to_string(level)};
}

PropertyResult argmax_membership(bool deep) {
  const unsigned max_level = deep ? 6 : 5;
  for (const char* p : {"0.6", "0.9"}) {
    for (const char* g : {"1", "0.9"}) {
      Params params = make_params(p, g);
      for (unsigned level = 1; level <= max_level; ++level) {
        const unsigned action_level = level + 2;
        std::vector<double> table = value_lattice(action_level, params);
        const std::size_t stride = std::size_t{1} << 2;
        const std::size_t states = (std::size_t{1} << level) - 1;
        for (std::size_t k = 1; k <= states; ++k) {
          const std::size_t i = k * stride;
          for (std::size_t j : grid_maximizers(table, i, params, 1e-12)) {
            if (j % stride != 0) {
              std::ostringstream os;
              os << param_tag(params) << " level=" << level << " state=" << k
                 << " action_idx=" << j;
              return {"argmax_membership", false, os.str()};
            }
          }
        }
      }
    }
  }
  return {"argmax_membership", true,
          "all near-maximizing actions lie on the state's own lattice"};
}

PropertyResult nondyadic_bold_attains_sup(bool deep) {
  // Off the lattice the bold bet attains the supremum of the one-step backup
  // exactly, and grid backups approach it from below. (The maximizing action
  // need not be unique: q(1/3, 1/6) = v(1/3) for every p and gamma, and at
  // gamma = 1 vanishing bets are asymptotically maximizing, so the grid
  // argmax itself is not pinned down.)
  const unsigned action_level = deep ? 12 : 10;
  for (const char* g : {"1", "0.9"}) {
    Params params = make_params("0.6", g);
    for (const auto& [num, den] : {std::pair<int, int>{1, 3}, {2, 5}}) {
      const Rational s(num, den);
      const Rational bold = s <= 1 - s ? s : 1 - s;
      const Rational v = value_rational_exact(s, params);
      if (q_value_exact(s, bold, params) != v) {
        std::ostringstream os;
        os << num << "/" << den << " " << param_tag(params)
           << ": bold backup != v(s)";
        return {"nondyadic_bold_attains_sup", false, os.str()};
      }
      Rational prev_deficit{1};
      for (unsigned level = action_level - 4; level <= action_level;
           level += 4) {
        Rational best{-1};
        const std::uint64_t n = std::uint64_t{1} << level;
        for (std::uint64_t j = 1; j <= n; ++j) {
          const Rational a{BigInt(j), BigInt(n)};
          if (a > s || a > 1 - s) break;
          const Rational q = q_value_exact(s, a, params);
          if (q > best) best = q;
        }
        const Rational deficit = v - best;
        if (deficit < 0 || deficit > prev_deficit) {
          std::ostringstream os;
          os << num << "/" << den << " " << param_tag(params)
             << " level=" << level << " deficit=" << to_double(deficit);
          return {"nondyadic_bold_attains_sup", false, os.str()};
        }
        prev_deficit = deficit;
      }
    }
  }
  return {"nondyadic_bold_attains_sup", true,
          "grid backups increase to v(s), which the bold bet attains exactly"};
}

PropertyResult vi_uniqueness_discounted(bool /*deep*/) {
  Params params = make_params("0.6", "0.9");
  const unsigned state_level = 6;
  const unsigned action_level = 7;
  const int steps = 400;
  IterateResult base =
      iterate_bellman(0.0, state_level, action_level, params, steps);
  for (double fill : {0.5, 2.0}) {
    IterateResult other =
        iterate_bellman(fill, state_level, action_level, params, steps);
    double gap = 0;
    for (std::size_t i = 0; i < base.table.size(); ++i)
      gap = std::max(gap, std::fabs(base.table[i] - other.table[i]));
    if (gap > 1e-8) {
      std::ostringstream os;
      os << "fill=" << fill << " gap=" << gap;
      return {"vi_uniqueness_discounted", false, os.str()};
    }
  }
  return {"vi_uniqueness_discounted", true,
          "starts 0, 0.5, 2 meet within 1e-8 at gamma=0.9"};
}

PropertyResult constant_solution_dichotomy(bool /*deep*/) {
  Params params = make_params("0.6", "1");
  const unsigned state_level = 6;
  const unsigned action_level = 7;
  for (double c : {1.0, 1.5, 3.0}) {
    ResidualReport rep = bellman_residual(CandidateFn::constant(c),
                                          state_level, action_level, params);
    if (rep.max_residual > 1e-12)
      return {"constant_solution_dichotomy", false,
              "constant " + format_double(c) + " should solve the system"};
  }
  for (double c : {0.5, 0.9}) {
    ResidualReport rep = bellman_residual(CandidateFn::constant(c),
                                          state_level, action_level, params);
    const StateResidual& edge = rep.per_state.back();  // state 1 - 2^-level
    const double expected = params.win_d() * (1.0 - c);
    if (edge.residual < expected - 1e-12)
      return {"constant_solution_dichotomy", false,
              "constant " + format_double(c) + " edge residual too small"};
  }
  return {"constant_solution_dichotomy", true,
          "constants >= 1 solve the grid system, constants < 1 fail at the "
          "edge"};
}

PropertyResult discrete_grid_agreement(bool deep) {
  std::vector<int> targets = deep
                                 ? std::vector<int>{}
                                 : std::vector<int>{2, 3, 4, 16, 17, 31, 32,
                                                    63, 64};
  if (deep) {
    for (int n = 2; n <= 64; ++n) targets.push_back(n);
  }
  for (const char* p : {"0.55", "0.6", "0.75", "0.9"}) {
    for (const char* g : {"1", "0.9", "0.5"}) {
      Params params = make_params(p, g);
      for (int n : targets) {
        DiscreteSpec spec(n, params);
        ValueTable exact = exact_table(spec);
        ValueTable vi = value_iteration(spec, 0.0, 1e-12, 200000);
        if (!vi.converged)
          return {"discrete_grid_agreement", false,
                  "no convergence at N=" + std::to_string(n)};
        double gap = 0;
        for (std::size_t i = 0; i < exact.values.size(); ++i)
          gap = std::max(gap, std::fabs(exact.values[i] - vi.values[i]));
        if (gap > 1e-8) {
          std::ostringstream os;
          os << "N=" << n << " " << param_tag(params) << " gap=" << gap;
          return {"discrete_grid_agreement", false, os.str()};
        }
      }
    }
  }
  return {"discrete_grid_agreement", true,
          "value iteration meets the exact reduction within 1e-8"};
}

PropertyResult z_monotone(bool /*deep*/) {
  for (const char* p : {"0.6", "0.9"}) {
    Params params = make_params(p, "1");
    DiscreteSpec spec(100, params);
    ValueTable z = exact_table(spec);
    for (std::size_t n = 0; n + 1 < z.values.size(); ++n) {
      if (!(z.values[n] < z.values[n + 1]))
        return {"z_monotone", false, "n=" + std::to_string(n)};
    }
  }
  return {"z_monotone", true, "z strictly increasing at gamma=1"};
}

PropertyResult figure_points(bool /*deep*/) {
  for (const char* p : {"0.6", "0.9"}) {
    Params params = make_params(p, "1");
    DiscreteSpec spec(100, params);
    std::vector<Rational> z = exact_table_exact(spec);
    const Rational q = params.win();
    if (z[50] != q || z[25] != q * q || z[75] != q + params.p() * q)
      return {"figure_points", false, param_tag(params)};
  }
  return {"figure_points", true,
          "z(N/4), z(N/2), z(3N/4) equal the quarter-point values exactly"};
}

PropertyResult mc_determinism(bool /*deep*/) {
  Params params = make_params("0.6", "1");
  const BitExpansion start = expand_binary(1, 2);
  McEstimate a = mc_value(start, Policy::bold(), params, 20000, 42);
  McEstimate b = mc_value(start, Policy::bold(), params, 20000, 42);
  if (a.mean != b.mean || a.stderr_ != b.stderr_)
    return {"mc_determinism", false, "same seed produced different estimates"};
  McEstimate c = mc_value(start, Policy::bold(), params, 20000, 43);
  if (a.mean == c.mean)
    return {"mc_determinism", false,
            "different seeds produced identical estimates"};
  return {"mc_determinism", true, "estimates are a pure function of the seed"};
}

PropertyResult bold_alt_agreement(bool deep) {
  Params params = make_params("0.6", "1");
  const long episodes = deep ? 1000000 : 200000;
  const BitExpansion start = expand_binary(11, 16);
  McEstimate bold = mc_value(start, Policy::bold(), params, episodes, 11);
  McEstimate alt = mc_value(start, Policy::alt(), params, episodes, 12);
  const double joint =
      std::sqrt(bold.stderr_ * bold.stderr_ + alt.stderr_ * alt.stderr_);
  if (std::fabs(bold.mean - alt.mean) > 3 * joint) {
    std::ostringstream os;
    os << "bold=" << bold.mean << " alt=" << alt.mean << " 3sigma=" << 3 * joint;
    return {"bold_alt_agreement", false, os.str()};
  }
  return {"bold_alt_agreement", true,
          "both optimal policies estimate the same value at 11/16"};
}

PropertyResult blackwell_discounted(bool /*deep*/) {
  Params params = make_params("0.6", "0.9");
  const BitExpansion start = expand_binary(5, 8);
  McEstimate est = mc_value(start, Policy::bold(), params, 200000, 5);
  const double v = value_dyadic(Dyadic(5, 3), params);
  if (std::fabs(est.mean - v) > 3 * est.stderr_) {
    std::ostringstream os;
    os << "mean=" << est.mean << " v=" << v << " 3sigma=" << 3 * est.stderr_;
    return {"blackwell_discounted", false, os.str()};
  }
  return {"blackwell_discounted", true,
          "bold-policy returns match v under discounting"};
}

PropertyResult truncation_accounting(bool /*deep*/) {
  Params params = make_params("0.6", "1");
  const BitExpansion start = expand_binary(5, 8);
  McEstimate est =
      mc_value(start, Policy::bold(), params, 100000, 9, /*cutoff=*/10);
  if (est.truncation_count != 0)
    return {"truncation_accounting", false,
            "dyadic start truncated despite cutoff >= level"};
  const double v = value_dyadic(Dyadic(5, 3), params);
  if (std::fabs(est.mean - v) > 3 * est.stderr_ + est.bias_bound)
    return {"truncation_accounting", false, "bias bound exceeded"};
  return {"truncation_accounting", true,
          "no truncation on dyadic starts and bias within (gamma p)^D"};
}

PropertyResult pc_exact_vs_brute(bool deep) {
  const unsigned depth = deep ? 20 : 18;
  const std::vector<unsigned> bins =
      deep ? std::vector<unsigned>{4, 8, 16, 32} : std::vector<unsigned>{4, 8};
  for (const char* p : {"0.55", "0.6", "0.9"}) {
    for (const char* g : {"1", "0.9"}) {
      Params params = make_params(p, g);
      for (unsigned n : bins) {
        const double exact = pc_error_exact(n, params).exact_error;
        const double brute = pc_error_brute(n, params, depth);
        if (std::fabs(exact - brute) > 1e-4) {
          std::ostringstream os;
          os << "N=" << n << " " << param_tag(params) << " exact=" << exact
             << " brute=" << brute;
          return {"pc_exact_vs_brute", false, os.str()};
        }
      }
    }
  }
  return {"pc_exact_vs_brute", true,
          "closed form matches midpoint integration within 1e-4"};
}

PropertyResult pc_scaling(bool /*deep*/) {
  Params params = make_params("0.6", "1");
  double prev = pc_error_exact(4, params).exact_error;
  for (unsigned n = 8; n <= 256; n *= 2) {
    const double cur = pc_error_exact(n, params).exact_error;
    const double ratio = cur / prev;
    if (ratio < 0.45 || ratio > 0.55) {
      std::ostringstream os;
      os << "N=" << n << " ratio=" << ratio;
      return {"pc_scaling", false, os.str()};
    }
    prev = cur;
  }
  return {"pc_scaling", true, "best-fit error halves as bins double"};
}

PropertyResult jump_consistency(bool /*deep*/) {
  for (const char* p : {"0.6", "0.9"}) {
    for (const char* g : {"1", "0.9", "0.5"}) {
      Params params = make_params(p, g);
      const Rational h = lipschitz_h_exact(params);
      const auto [left, jump] = left_limit_and_jump_exact(Dyadic(1, 1), params);
      if (h != jump)
        return {"jump_consistency", false, param_tag(params)};
    }
  }
  return {"jump_consistency", true,
          "lipschitz h equals the jump of v at 1/2 exactly"};
}

PropertyResult lipschitz_ramp(bool /*deep*/) {
  Params params = make_params("0.6", "0.9");
  for (double lipschitz : {1.0, 10.0}) {
    const LipschitzBound lb = lipschitz_bound(lipschitz, params);
    // L1 distance between the step (0 below 1/2, h above) and a fit.
    const auto step_error = [&](auto&& fit) {
      const int cells = 1 << 16;
      long double total = 0;
      for (int i = 0; i < cells; ++i) {
        const double s = (i + 0.5) / cells;
        const double xi = s < 0.5 ? 0.0 : lb.h;
        total += std::fabs(xi - fit(s));
      }
      return static_cast<double>(total / cells);
    };
    const auto ramp = [&](double s) {
      if (s < lb.ramp_start) return 0.0;
      if (s > lb.ramp_end) return lb.h;
      return lb.h / 2 + lipschitz * (s - 0.5);
    };
    const double ramp_error = step_error(ramp);
    if (std::fabs(ramp_error - lb.bound) > 1e-6)
      return {"lipschitz_ramp", false,
              "optimal ramp error " + format_double(ramp_error) +
                  " differs from h^2/(4L) = " + format_double(lb.bound)};
    // other Lipschitz-feasible fits must do no better
    const auto shifted = [&](double s) { return ramp(s - 0.01); };
    const auto flat = [&](double) { return lb.h / 2; };
    if (step_error(shifted) < lb.bound - 1e-9 ||
        step_error(flat) < lb.bound - 1e-9)
      return {"lipschitz_ramp", false, "a feasible fit beat the lower bound"};
  }
  return {"lipschitz_ramp", true,
          "clamped ramp attains h^2/(4L); feasible fits never beat it"};
}

}  // namespace

std::vector<PropertyResult> run_properties(bool deep) {
  std::vector<PropertyResult> results;
  results.push_back(lattice_monotonicity(deep));
  results.push_back(bellman_on_lattice(deep));
  results.push_back(action_grid_dominance(deep));
  results.push_back(self_similarity(deep));
  results.push_back(diff_closed_forms(deep));
  results.push_back(off_lattice_continuity(deep));
  results.push_back(truncation_tail_bound(deep));
  results.push_back(integral_additivity(deep));
  results.push_back(argmax_membership(deep));
  results.push_back(nondyadic_bold_attains_sup(deep));
  results.push_back(vi_uniqueness_discounted(deep));
  results.push_back(constant_solution_dichotomy(deep));
  results.push_back(discrete_grid_agreement(deep));
  results.push_back(z_monotone(deep));
  results.push_back(figure_points(deep));
  results.push_back(mc_determinism(deep));
  results.push_back(bold_alt_agreement(deep));
  results.push_back(blackwell_discounted(deep));
  results.push_back(truncation_accounting(deep));
  results.push_back(pc_exact_vs_brute(deep));
  results.push_back(pc_scaling(deep));
  results.push_back(jump_consistency(deep));
  results.push_back(lipschitz_ramp(deep));
  return results;
}

}  // namespace gambler
