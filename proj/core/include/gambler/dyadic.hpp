#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "gambler/rational.hpp"

namespace gambler {

/// Exact dyadic rational k/2^level in [0, 1]. Always canonical: k odd, or
/// k = 0 at level 0, or the value one stored as (1, 0). Levels are capped at
/// 62 so that lattice arithmetic stays inside 64-bit integers.
class Dyadic {
 public:
  static constexpr unsigned kMaxLevel = 62;

  Dyadic() : k_(0), level_(0) {}
  Dyadic(std::uint64_t k, unsigned level);

  static Dyadic zero() { return Dyadic(); }
  static Dyadic one() { return Dyadic(1, 0); }

  std::uint64_t numerator() const { return k_; }
  unsigned level() const { return level_; }

  bool is_zero() const { return k_ == 0; }
  bool is_one() const { return k_ == 1 && level_ == 0; }
  bool is_interior() const { return !is_zero() && !is_one(); }

  /// Numerator when the denominator exponent is raised to `level` >= level().
  std::uint64_t numerator_at(unsigned level) const;

  /// Terminating expansion b_1..b_level() of the canonical form (empty for 0;
  /// for the value one the integer bit is implied and the list is empty).
  std::vector<int> bits() const { return bits_at(level_); }
  std::vector<int> bits_at(unsigned level) const;

  double to_double() const;
  Rational to_rational() const;

  Dyadic plus(const Dyadic& other) const;
  Dyadic minus(const Dyadic& other) const;

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  std::strong_ordering operator<=>(const Dyadic& other) const;

 private:
  std::uint64_t k_;
  unsigned level_;
};

/// Largest dyadic not exceeding num/den at the given level (used to snap
/// rationals onto the lattice G_level).
Dyadic dyadic_floor(const Rational& value, unsigned level);

/// Nearest lattice point of G_level to the rational (ties round up).
Dyadic dyadic_nearest(const Rational& value, unsigned level);

/// Converts a rational whose denominator is a power of two; throws
/// std::invalid_argument otherwise.
Dyadic dyadic_from_rational(const Rational& value);

}  // namespace gambler
