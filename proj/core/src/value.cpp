#include "gambler/value.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace gambler {

namespace {

template <class T>
struct Coeffs {
  T lose;   // p
  T win;    // 1 - p
  T gamma;  // discount
};

Coeffs<double> coeffs_d(const Params& params) {
  return {params.p_d(), params.win_d(), params.gamma_d()};
}

Coeffs<Rational> coeffs_q(const Params& params) {
  return {params.p(), params.win(), params.gamma()};
}

template <class T>
struct SumScale {
  T value;  // partial sum of the series over the given bits
  T scale;  // gamma^m prod_j ((1-p) + (2p-1) b_j) after m bits
};

template <class T>
SumScale<T> accumulate_bits(const std::vector<int>& bits, const Coeffs<T>& c) {
  T acc{0};
  T scale{1};
  for (int b : bits) {
    scale *= c.gamma;
    if (b != 0) {
      acc += c.win * scale;
      scale *= c.lose;
    } else {
      scale *= c.win;
    }
  }
  return {std::move(acc), std::move(scale)};
}

template <class T>
T expansion_value(const BitExpansion& bits, const Coeffs<T>& c) {
  if (bits.is_one()) return T{1};
  SumScale<T> head = accumulate_bits(bits.prefix(), c);
  if (bits.terminating()) return head.value;
  SumScale<T> cycle = accumulate_bits(bits.period(), c);
  // Purely periodic tail: one-period sum repeated with ratio cycle.scale < 1.
  return head.value + head.scale * cycle.value / (T{1} - cycle.scale);
}

template <class T>
std::vector<T> lattice_impl(unsigned level, const Coeffs<T>& c) {
  std::vector<T> cur{T{0}, T{1}};
  for (unsigned j = 1; j <= level; ++j) {
    const std::size_t half = std::size_t{1} << (j - 1);
    std::vector<T> next(2 * half + 1);
    const T wg = c.win * c.gamma;
    const T pg = c.lose * c.gamma;
    for (std::size_t k = 0; k < half; ++k) next[k] = wg * cur[k];
    for (std::size_t m = 0; m < half; ++m) next[half + m] = wg + pg * cur[m];
    next[2 * half] = T{1};
    cur = std::move(next);
  }
  return cur;
}

void check_level_in_grid(const Dyadic& s, unsigned level) {
  if (s.level() > level)
    throw std::invalid_argument("state is not on the requested lattice level");
  if (level > Dyadic::kMaxLevel)
    throw std::invalid_argument("lattice level exceeds 62");
}

}  // namespace

double value_dyadic(const Dyadic& d, const Params& params) {
  if (d.is_one()) return 1.0;
  return accumulate_bits(d.bits(), coeffs_d(params)).value;
}

Rational value_dyadic_exact(const Dyadic& d, const Params& params) {
  if (d.is_one()) return Rational{1};
  return accumulate_bits(d.bits(), coeffs_q(params)).value;
}

double value_expansion(const BitExpansion& bits, const Params& params,
                       double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
  if (bits.truncated() &&
      tail_bound(static_cast<unsigned>(bits.prefix().size()), params) > tol)
    throw std::invalid_argument(
        "truncated expansion is too shallow for the requested tolerance");
  return expansion_value(bits, coeffs_d(params));
}

Rational value_expansion_exact(const BitExpansion& bits, const Params& params) {
  return expansion_value(bits, coeffs_q(params));
}

Rational value_rational_exact(const Rational& s, const Params& params) {
  if (s < 0 || s > 1) throw std::invalid_argument("state outside [0,1]");
  if (s == 1) return Rational{1};
  BitExpansion bits = expand_binary(s);
  if (bits.truncated())
    throw std::domain_error("expansion period not detected within depth cap");
  return value_expansion_exact(bits, params);
}

std::vector<double> value_lattice(unsigned level, const Params& params) {
  if (level > 22) throw std::invalid_argument("lattice level above 22");
  return lattice_impl(level, coeffs_d(params));
}

std::vector<Rational> value_lattice_exact(unsigned level, const Params& params) {
  if (level > 18) throw std::invalid_argument("exact lattice level above 18");
  return lattice_impl(level, coeffs_q(params));
}

namespace {

void check_action(const Rational& s, const Rational& a) {
  if (a <= 0 || a > s || a > 1 - s)
    throw std::invalid_argument("action outside the feasible set");
}

}  // namespace

double q_value(const Dyadic& s, const Dyadic& a, const Params& params) {
  check_action(s.to_rational(), a.to_rational());
  return params.p_d() * params.gamma_d() * value_dyadic(s.minus(a), params) +
         params.win_d() * params.gamma_d() * value_dyadic(s.plus(a), params);
}

double q_value(const BitExpansion& s, const BitExpansion& a,
               const Params& params) {
  return to_double(q_value_exact(s.to_rational(), a.to_rational(), params));
}

Rational q_value_exact(const Rational& s, const Rational& a,
                       const Params& params) {
  check_action(s, a);
  return params.p() * params.gamma() * value_rational_exact(s - a, params) +
         params.win() * params.gamma() * value_rational_exact(s + a, params);
}

Rational forward_diff_exact(const Dyadic& s, unsigned level,
                            const Params& params) {
  if (s.is_one()) throw std::invalid_argument("no forward step from s = 1");
  check_level_in_grid(s, level);
  auto c = coeffs_q(params);
  SumScale<Rational> acc = accumulate_bits(s.bits_at(level), c);
  return c.win * c.gamma * acc.scale;
}

double forward_diff(const Dyadic& s, unsigned level, const Params& params) {
  return to_double(forward_diff_exact(s, level, params));
}

std::pair<Rational, Rational> backward_diff_exact(const Dyadic& s,
                                                  unsigned level,
                                                  const Params& params) {
  if (s.is_zero()) throw std::invalid_argument("no backward step from s = 0");
  auto c = coeffs_q(params);
  const Rational gp = c.gamma * c.lose;
  if (s.is_one()) {
    Rational diff =
        Rational{1} - c.win * c.gamma * (1 - rational_pow(gp, level + 1)) /
                          (1 - gp);
    return {std::move(diff), rational_pow(gp, level + 1)};
  }
  check_level_in_grid(s, level);
  const unsigned k = s.level();  // position of the last 1 bit
  std::vector<int> bits = s.bits();
  bits.pop_back();  // b_1 .. b_{k-1}
  SumScale<Rational> head = accumulate_bits(bits, c);
  const Rational lead = c.win * head.scale * c.gamma;  // (1-p) gamma^k prod w
  Rational diff = lead * (1 - c.win * c.gamma *
                                  (1 - rational_pow(gp, level + 1 - k)) /
                                  (1 - gp));
  Rational bound =
      lead * rational_pow(c.lose, level + 1 - k) * rational_pow(c.gamma, level + 1 - k);
  if (diff < bound) throw std::logic_error("backward difference below bound");
  return {std::move(diff), std::move(bound)};
}

DiffReport backward_diff(const Dyadic& s, unsigned level, const Params& params) {
  auto [diff, bound] = backward_diff_exact(s, level, params);
  DiffReport report;
  report.site = s;
  report.level = level;
  if (!s.is_one())
    report.forward = to_double(forward_diff_exact(s, level, params));
  report.backward = to_double(diff);
  report.bound = to_double(bound);
  return report;
}

namespace {

Rational self_similar_scale(const Dyadic& sbar, unsigned level,
                            const Params& params) {
  if (level == 0) {
    if (!sbar.is_zero())
      throw std::invalid_argument("level 0 requires sbar = 0");
    return Rational{1};
  }
  if (sbar.is_one())
    throw std::invalid_argument("sbar must be below 1");
  check_level_in_grid(sbar, level);
  return accumulate_bits(sbar.bits_at(level), coeffs_q(params)).scale;
}

}  // namespace

Rational self_similar_value_exact(const Dyadic& sbar, unsigned level,
                                  const BitExpansion& tail,
                                  const Params& params) {
  Rational scale = self_similar_scale(sbar, level, params);
  return value_dyadic_exact(sbar, params) +
         scale * value_expansion_exact(tail, params);
}

double self_similar_value(const Dyadic& sbar, unsigned level,
                          const BitExpansion& tail, const Params& params,
                          double tol) {
  Rational scale = self_similar_scale(sbar, level, params);
  return value_dyadic(sbar, params) +
         to_double(scale) * value_expansion(tail, params, tol);
}

std::pair<Rational, Rational> left_limit_and_jump_exact(const Dyadic& s,
                                                        const Params& params) {
  if (s.is_zero())
    throw std::invalid_argument("s = 0 has no left neighborhood");
  auto c = coeffs_q(params);
  const Rational gp = c.gamma * c.lose;
  if (s.is_one()) {
    Rational left = c.win * c.gamma / (1 - gp);
    return {left, Rational{1} - left};
  }
  std::vector<int> bits = s.bits();
  bits.pop_back();  // the last 1 bit marks the jump site
  SumScale<Rational> head = accumulate_bits(bits, c);
  Rational jump = head.scale * c.gamma * c.win * (1 - c.gamma) / (1 - gp);
  Rational left = value_dyadic_exact(s, params) - jump;
  return {std::move(left), std::move(jump)};
}

LeftLimit left_limit_and_jump(const Dyadic& s, const Params& params) {
  auto [left, jump] = left_limit_and_jump_exact(s, params);
  return {to_double(left), to_double(jump)};
}

Rational value_mean(const Params& params) {
  return params.win() * params.gamma() / (2 - params.gamma());
}

Rational integral_exact(const Dyadic& lo, const Dyadic& hi,
                        const Params& params) {
  if (!(lo < hi)) throw std::invalid_argument("requires lo < hi");
  const Rational mean = value_mean(params);
  const auto c = coeffs_q(params);
  const unsigned common = std::max(lo.level(), hi.level());
  std::uint64_t a = lo.numerator_at(common);
  const std::uint64_t b = hi.numerator_at(common);
  Rational total{0};
  while (a < b) {
    std::uint64_t step = std::bit_floor(b - a);
    if (a != 0) step = std::min(step, a & (~a + 1));
    const unsigned e = static_cast<unsigned>(std::countr_zero(step));
    const unsigned seg_level = common - e;
    const Dyadic sbar(a, common);
    SumScale<Rational> acc = seg_level == 0
                                 ? SumScale<Rational>{Rational{0}, Rational{1}}
                                 : accumulate_bits(sbar.bits_at(seg_level), c);
    total += (acc.value + acc.scale * mean) /
             Rational(BigInt(1) << seg_level);
    a += step;
  }
  return total;
}

double integral(const Dyadic& lo, const Dyadic& hi, const Params& params) {
  return to_double(integral_exact(lo, hi, params));
}

namespace {

DerivativeReport witness_report(const Rational& s, bool dyadic_site,
                                const Params& params, unsigned depth) {
  if (depth == 0 || depth > 4096)
    throw std::invalid_argument("witness depth must be in 1..4096");
  DerivativeReport report;
  const bool at_zero = s == 0;
  const bool at_one = s == 1;
  if (!at_zero)
    report.left = (dyadic_site || at_one) ? DerivSide::infinite : DerivSide::zero;
  if (!at_one) report.right = DerivSide::zero;
  const Rational vs = value_rational_exact(s, params);
  Rational h{1, 2};
  for (unsigned level = 1; level <= depth; ++level) {
    if (s - h >= 0) {
      Rational ratio = (vs - value_rational_exact(s - h, params)) / h;
      report.left_witness.emplace_back(level, to_double(ratio));
    }
    if (s + h <= 1) {
      Rational ratio = (value_rational_exact(s + h, params) - vs) / h;
      report.right_witness.emplace_back(level, to_double(ratio));
    }
    h /= 2;
  }
  return report;
}

}  // namespace

DerivativeReport derivative_class(const Dyadic& s, const Params& params,
                                  unsigned depth) {
  return witness_report(s.to_rational(), true, params, depth);
}

DerivativeReport derivative_class(const BitExpansion& s, const Params& params,
                                  unsigned depth) {
  return witness_report(s.to_rational(), s.terminating() || s.is_one(), params,
                        depth);
}

ArcLength arc_length(unsigned level, const Params& params) {
  if (level < 1) throw std::invalid_argument("level must be >= 1");
  if (level > 22) throw std::invalid_argument("lattice level above 22");
  ArcLength out{0.0, 0.0};
  const double ds = 1.0 / static_cast<double>(std::uint64_t{1} << level);
  if (level <= 16) {
    std::vector<Rational> table = value_lattice_exact(level, params);
    Rational manhattan{0};
    const Rational step(BigInt(1), BigInt(1) << level);
    long double euclid = 0;
    for (std::size_t k = 0; k + 1 < table.size(); ++k) {
      Rational dv = table[k + 1] - table[k];
      if (dv < 0) dv = -dv;
      manhattan += step + dv;
      const double dvd = to_double(dv);
      euclid += std::sqrt(static_cast<long double>(ds * ds + dvd * dvd));
    }
    out.manhattan = to_double(manhattan);
    out.euclidean = static_cast<double>(euclid);
  } else {
    std::vector<double> table = value_lattice(level, params);
    long double euclid = 0;
    long double manhattan = 0;
    for (std::size_t k = 0; k + 1 < table.size(); ++k) {
      const double dv = std::fabs(table[k + 1] - table[k]);
      manhattan += ds + dv;
      euclid += std::sqrt(static_cast<long double>(ds * ds + dv * dv));
    }
    out.manhattan = static_cast<double>(manhattan);
    out.euclidean = static_cast<double>(euclid);
  }
  return out;
}

Dyadic gap_argmin(unsigned level, const Params& params) {
  if (level < 2) throw std::invalid_argument("level must be >= 2");
  std::vector<double> table = value_lattice(level, params);
  const double ds = 1.0 / static_cast<double>(std::uint64_t{1} << level);
  std::size_t best = 1;
  double best_gap = table[1] - ds;
  for (std::size_t k = 2; k + 1 < table.size(); ++k) {
    const double gap = table[k] - static_cast<double>(k) * ds;
    if (gap < best_gap) {
      best_gap = gap;
      best = k;
    }
  }
  return Dyadic(best, level);
}

double tail_bound(unsigned depth, const Params& params) {
  const double gp = params.gamma_d() * params.p_d();
  return params.win_d() * params.gamma_d() * std::pow(gp, depth) / (1.0 - gp);
}

unsigned depth_for_tol(double tol, const Params& params) {
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
  if (params.gamma() == 0) return 1;
  const double gp = params.gamma_d() * params.p_d();
  const double lead = params.win_d() * params.gamma_d() / (1.0 - gp);
  unsigned depth = 1;
  if (lead > tol) {
    const double raw = std::ceil(std::log(tol / lead) / std::log(gp));
    depth = raw < 1 ? 1u : (raw > 4096 ? 4096u : static_cast<unsigned>(raw));
  }
  while (depth < 4096 && tail_bound(depth, params) > tol) ++depth;
  return depth;
}

}  // namespace gambler
