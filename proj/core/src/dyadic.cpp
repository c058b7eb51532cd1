#include "gambler/dyadic.hpp"

#include <stdexcept>

namespace gambler {

Dyadic::Dyadic(std::uint64_t k, unsigned level) : k_(k), level_(level) {
  if (level > kMaxLevel) throw std::invalid_argument("dyadic level exceeds 62");
  if (k > (std::uint64_t{1} << level))
    throw std::invalid_argument("dyadic numerator exceeds 2^level");
  while (level_ > 0 && (k_ & 1u) == 0) {
    k_ >>= 1u;
    --level_;
  }
  if (k_ == 0) level_ = 0;
}

std::uint64_t Dyadic::numerator_at(unsigned level) const {
  if (level < level_ || level > kMaxLevel)
    throw std::invalid_argument("requested level below canonical level");
  return k_ << (level - level_);
}

std::vector<int> Dyadic::bits_at(unsigned level) const {
  if (is_one()) {
    if (level == 0) return {};
    throw std::invalid_argument("value one has no fractional bits");
  }
  std::uint64_t k = numerator_at(level);
  std::vector<int> bits(level);
  for (unsigned j = 1; j <= level; ++j)
    bits[j - 1] = static_cast<int>((k >> (level - j)) & 1u);
  return bits;
}

double Dyadic::to_double() const {
  return static_cast<double>(k_) / static_cast<double>(std::uint64_t{1} << level_);
}

Rational Dyadic::to_rational() const {
  return Rational(BigInt(k_), BigInt(1) << level_);
}

std::strong_ordering Dyadic::operator<=>(const Dyadic& other) const {
  unsigned common = std::max(level_, other.level_);
  return numerator_at(common) <=> other.numerator_at(common);
}

Dyadic Dyadic::plus(const Dyadic& other) const {
  unsigned common = std::max(level_, other.level_);
  std::uint64_t sum = numerator_at(common) + other.numerator_at(common);
  if (sum > (std::uint64_t{1} << common))
    throw std::invalid_argument("dyadic sum exceeds 1");
  return Dyadic(sum, common);
}

Dyadic Dyadic::minus(const Dyadic& other) const {
  unsigned common = std::max(level_, other.level_);
  std::uint64_t a = numerator_at(common);
  std::uint64_t b = other.numerator_at(common);
  if (b > a) throw std::invalid_argument("dyadic difference below 0");
  return Dyadic(a - b, common);
}

Dyadic dyadic_floor(const Rational& value, unsigned level) {
  if (value < 0 || value > 1)
    throw std::invalid_argument("value outside [0,1]");
  BigInt scaled_num = numerator(value) << level;
  BigInt k = scaled_num / denominator(value);
  return Dyadic(k.convert_to<std::uint64_t>(), level);
}

Dyadic dyadic_nearest(const Rational& value, unsigned level) {
  if (value < 0 || value > 1)
    throw std::invalid_argument("value outside [0,1]");
  BigInt scaled_num = (numerator(value) << (level + 1)) + denominator(value);
  BigInt k = scaled_num / (denominator(value) * 2);
  return Dyadic(k.convert_to<std::uint64_t>(), level);
}

Dyadic dyadic_from_rational(const Rational& value) {
  if (value < 0 || value > 1)
    throw std::invalid_argument("value outside [0,1]");
  BigInt den = denominator(value);
  unsigned level = 0;
  while (den > 1) {
    if ((den & 1) != 0)
      throw std::invalid_argument("rational is not dyadic");
    den >>= 1;
    ++level;
  }
  if (level > Dyadic::kMaxLevel)
    throw std::invalid_argument("dyadic level exceeds 62");
  return Dyadic(numerator(value).convert_to<std::uint64_t>(), level);
}

}  // namespace gambler
