#include "gambler/simulate.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace gambler {

Policy Policy::custom(std::map<Dyadic, Dyadic> table) {
  Policy p(Kind::custom);
  if (table.empty()) throw std::invalid_argument("empty policy table");
  for (const auto& [state, action] : table) {
    if (!state.is_interior())
      throw std::invalid_argument("policy table contains a boundary state");
    Rational s = state.to_rational();
    Rational a = action.to_rational();
    if (a <= 0 || a > s || a > 1 - s)
      throw std::invalid_argument("policy table action is infeasible");
  }
  p.table_ = std::move(table);
  return p;
}

namespace {

struct Int64State {
  std::uint64_t num;
  std::uint64_t den;
};

Int64State to_fixed_den(const BitExpansion& s0) {
  Rational r = s0.to_rational();
  const BigInt den = denominator(r);
  if (den > (BigInt(1) << 62))
    throw std::invalid_argument("start state denominator exceeds 2^62");
  return {numerator(r).convert_to<std::uint64_t>(),
          den.convert_to<std::uint64_t>()};
}

EpisodeResult bold_episode(Int64State s, double p, double gamma, long cutoff,
                           Rng& rng) {
  double discount = 1.0;
  for (long step = 1; step <= cutoff; ++step) {
    const bool lose = uniform01(rng) < p;
    if (2 * s.num <= s.den) {
      // bet the whole stake: lose -> 0, win -> 2s
      s.num = lose ? 0 : 2 * s.num;
    } else {
      // bet the distance to 1: win -> 1, lose -> 2s - 1
      s.num = lose ? 2 * s.num - s.den : s.den;
    }
    discount *= gamma;
    if (s.num == 0) return {Outcome::reached_zero, step, 0.0};
    if (s.num == s.den) return {Outcome::reached_one, step, discount};
  }
  return {Outcome::truncated, cutoff, 0.0};
}

EpisodeResult lattice_episode(Dyadic s, const Policy& policy, double p,
                              double gamma, long cutoff, Rng& rng) {
  double discount = 1.0;
  for (long step = 1; step <= cutoff; ++step) {
    Dyadic action(1, s.level());
    if (policy.kind() == Policy::Kind::custom) {
      auto it = policy.table().find(s);
      if (it == policy.table().end())
        throw std::invalid_argument("policy table missing a reachable state");
      action = it->second;
    }
    const bool lose = uniform01(rng) < p;
    s = lose ? s.minus(action) : s.plus(action);
    discount *= gamma;
    if (s.is_zero()) return {Outcome::reached_zero, step, 0.0};
    if (s.is_one()) return {Outcome::reached_one, step, discount};
  }
  return {Outcome::truncated, cutoff, 0.0};
}

}  // namespace

EpisodeResult run_episode(const BitExpansion& s0, const Policy& policy,
                          const Params& params, long cutoff_depth, Rng& rng) {
  if (cutoff_depth < 1) throw std::invalid_argument("cutoff must be >= 1");
  Rational start = s0.to_rational();
  if (start <= 0 || start >= 1)
    throw std::invalid_argument("start state must be interior");
  if (policy.kind() == Policy::Kind::bold)
    return bold_episode(to_fixed_den(s0), params.p_d(), params.gamma_d(),
                        cutoff_depth, rng);
  if (!s0.terminating())
    throw std::invalid_argument("lattice policies require a dyadic start");
  return lattice_episode(dyadic_from_rational(start), policy, params.p_d(),
                         params.gamma_d(), cutoff_depth, rng);
}

McEstimate mc_value(const BitExpansion& s0, const Policy& policy,
                    const Params& params, long episodes, std::uint64_t seed,
                    long cutoff_depth) {
  if (episodes < 1) throw std::invalid_argument("episodes must be >= 1");

  struct Partial {
    double sum = 0;
    double sum_sq = 0;
    long truncated = 0;
  };

  constexpr long kBatch = 65536;
  SplitMix64 seeder(seed);
  std::vector<Partial> partials;
  long remaining = episodes;
  while (remaining > 0) {
    const long count = std::min(remaining, kBatch);
    Rng rng(seeder.next());
    Partial part;
    for (long i = 0; i < count; ++i) {
      EpisodeResult ep = run_episode(s0, policy, params, cutoff_depth, rng);
      part.sum += ep.discounted_return;
      part.sum_sq += ep.discounted_return * ep.discounted_return;
      if (ep.outcome == Outcome::truncated) ++part.truncated;
    }
    partials.push_back(part);
    remaining -= count;
  }

  // Pairwise merge keeps the reduction order independent of batching.
  while (partials.size() > 1) {
    std::vector<Partial> merged;
    for (std::size_t i = 0; i + 1 < partials.size(); i += 2) {
      merged.push_back({partials[i].sum + partials[i + 1].sum,
                        partials[i].sum_sq + partials[i + 1].sum_sq,
                        partials[i].truncated + partials[i + 1].truncated});
    }
    if (partials.size() % 2 == 1) merged.push_back(partials.back());
    partials = std::move(merged);
  }

  const Partial total = partials.front();
  McEstimate est;
  est.episodes = episodes;
  est.truncation_count = total.truncated;
  est.mean = total.sum / static_cast<double>(episodes);
  if (episodes > 1) {
    const double n = static_cast<double>(episodes);
    double variance = (total.sum_sq - total.sum * total.sum / n) / (n - 1.0);
    if (variance < 0) variance = 0;
    est.stderr_ = std::sqrt(variance / n);
  }
  est.bias_bound = std::pow(params.gamma_d() * params.p_d(),
                            static_cast<double>(cutoff_depth));
  est.rng_name = std::string(kRngName);
  return est;
}

}  // namespace gambler
