#pragma once

#include <cstdint>
#include <vector>

#include "gambler/dyadic.hpp"
#include "gambler/rational.hpp"

namespace gambler {

/// Finite or eventually-periodic binary expansion of a state s in [0, 1].
/// An empty period means a terminating (dyadic) expansion. Expansions ending
/// in all ones are normalized to the terminating form, so no value has two
/// representations; the carry out of 0.111... is stored as the unit flag.
class BitExpansion {
 public:
  BitExpansion() = default;
  BitExpansion(std::vector<int> prefix, std::vector<int> period = {});

  static BitExpansion zero() { return BitExpansion(); }
  static BitExpansion unit();
  static BitExpansion from_dyadic(const Dyadic& d);

  const std::vector<int>& prefix() const { return prefix_; }
  const std::vector<int>& period() const { return period_; }

  bool terminating() const { return period_.empty(); }
  bool is_zero() const { return !one_ && prefix_.empty() && period_.empty(); }
  bool is_one() const { return one_; }
  bool truncated() const { return truncated_; }

  Rational to_rational() const;
  double to_double() const { return to_double(to_rational()); }

  bool operator==(const BitExpansion&) const = default;

 private:
  static double to_double(const Rational& r) { return gambler::to_double(r); }

  std::vector<int> prefix_;
  std::vector<int> period_;
  bool one_ = false;
  bool truncated_ = false;

  friend BitExpansion expand_binary(const Rational&, unsigned);
};

/// Eventually-periodic expansion of an exact rational in [0, 1] by long
/// division. If `depth` bits are produced before the remainder repeats, the
/// truncated terminating expansion is returned with the truncated flag set.
/// Throws std::invalid_argument for values outside [0, 1].
BitExpansion expand_binary(const Rational& value, unsigned depth = 4096);
BitExpansion expand_binary(std::int64_t num, std::int64_t den,
                           unsigned depth = 4096);

}  // namespace gambler
