#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "gambler/bit_expansion.hpp"
#include "gambler/params.hpp"
#include "gambler/random.hpp"

namespace gambler {

enum class Outcome { reached_one, reached_zero, truncated };

struct EpisodeResult {
  Outcome outcome;
  long steps;
  double discounted_return;  // gamma^steps on reaching 1, else 0
};

/// Episode policy: bold bets min{s, 1-s} (the state evolves by a binary
/// shift), alt bets one unit of the state's own dyadic level, custom reads a
/// dyadic state -> action table.
class Policy {
 public:
  enum class Kind { bold, alt, custom };

  static Policy bold() { return Policy(Kind::bold); }
  static Policy alt() { return Policy(Kind::alt); }
  static Policy custom(std::map<Dyadic, Dyadic> table);

  Kind kind() const { return kind_; }
  const std::map<Dyadic, Dyadic>& table() const { return table_; }

 private:
  explicit Policy(Kind kind) : kind_(kind) {}
  Kind kind_;
  std::map<Dyadic, Dyadic> table_;
};

/// Plays one episode from s0 (interior) until a boundary is hit or
/// cutoff_depth steps have elapsed. States evolve exactly: bold keeps the
/// exact rational with a fixed denominator, alt and custom walk the dyadic
/// lattice.
EpisodeResult run_episode(const BitExpansion& s0, const Policy& policy,
                          const Params& params, long cutoff_depth, Rng& rng);

struct McEstimate {
  double mean = 0;
  double stderr_ = 0;  // sample std / sqrt(episodes)
  long episodes = 0;
  long truncation_count = 0;
  double bias_bound = 0;  // (gamma p)^cutoff, the documented truncation bias
  std::string rng_name;
};

/// Mean discounted return over seeded episodes. Episodes are grouped into
/// batches with SplitMix64-derived seeds and batch sums are merged pairwise,
/// so the estimate is reproducible and independent of batch execution order.
McEstimate mc_value(const BitExpansion& s0, const Policy& policy,
                    const Params& params, long episodes, std::uint64_t seed,
                    long cutoff_depth = 10000);

}  // namespace gambler
