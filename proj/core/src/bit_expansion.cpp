#include "gambler/bit_expansion.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gambler {

namespace {

void check_bits(const std::vector<int>& bits) {
  for (int b : bits) {
    if (b != 0 && b != 1) throw std::invalid_argument("bits must be 0 or 1");
  }
}

bool all_of_bit(const std::vector<int>& bits, int b) {
  return std::all_of(bits.begin(), bits.end(), [b](int x) { return x == b; });
}

}  // namespace

BitExpansion::BitExpansion(std::vector<int> prefix, std::vector<int> period)
    : prefix_(std::move(prefix)), period_(std::move(period)) {
  check_bits(prefix_);
  check_bits(period_);
  if (!period_.empty() && all_of_bit(period_, 0)) period_.clear();
  if (!period_.empty() && all_of_bit(period_, 1)) {
    // 0.b1..bm 111... = 0.b1..bm + 2^-m: carry into the terminating form.
    period_.clear();
    std::size_t i = prefix_.size();
    while (i > 0 && prefix_[i - 1] == 1) {
      prefix_[--i] = 0;
    }
    if (i == 0) {
      prefix_.clear();
      one_ = true;
    } else {
      prefix_[i - 1] = 1;
    }
  }
  if (period_.empty()) {
    while (!prefix_.empty() && prefix_.back() == 0) prefix_.pop_back();
  }
}

BitExpansion BitExpansion::unit() {
  BitExpansion e;
  e.one_ = true;
  return e;
}

BitExpansion BitExpansion::from_dyadic(const Dyadic& d) {
  if (d.is_one()) return unit();
  return BitExpansion(d.bits());
}

Rational BitExpansion::to_rational() const {
  if (one_) return Rational(1);
  BigInt prefix_num{0};
  for (int b : prefix_) prefix_num = (prefix_num << 1) + b;
  BigInt prefix_den = BigInt(1) << prefix_.size();
  Rational value(prefix_num, prefix_den);
  if (!period_.empty()) {
    BigInt period_num{0};
    for (int b : period_) period_num = (period_num << 1) + b;
    BigInt period_den = (BigInt(1) << period_.size()) - 1;
    value += Rational(period_num, period_den * prefix_den);
  }
  return value;
}

BitExpansion expand_binary(const Rational& value, unsigned depth) {
  if (depth == 0) throw std::invalid_argument("depth must be positive");
  if (value < 0 || value > 1)
    throw std::invalid_argument("expansion argument outside [0,1]");
  if (value == 1) return BitExpansion::unit();

  const BigInt den = denominator(value);
  BigInt rem = numerator(value);
  std::vector<int> bits;
  std::map<BigInt, std::size_t> seen;
  while (rem != 0 && bits.size() < depth) {
    auto [it, inserted] = seen.emplace(rem, bits.size());
    if (!inserted) {
      std::vector<int> prefix(bits.begin(),
                              bits.begin() + static_cast<long>(it->second));
      std::vector<int> period(bits.begin() + static_cast<long>(it->second),
                              bits.end());
      return BitExpansion(std::move(prefix), std::move(period));
    }
    rem <<= 1;
    if (rem >= den) {
      bits.push_back(1);
      rem -= den;
    } else {
      bits.push_back(0);
    }
  }
  if (rem != 0) {
    // keep the raw bits: trailing zeros still document the truncation depth
    BitExpansion result;
    result.prefix_ = std::move(bits);
    result.truncated_ = true;
    return result;
  }
  return BitExpansion(std::move(bits));
}

BitExpansion expand_binary(std::int64_t num, std::int64_t den, unsigned depth) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (num < 0 || den < 0 || num > den)
    throw std::invalid_argument("expansion argument outside [0,1]");
  return expand_binary(Rational(BigInt(num), BigInt(den)), depth);
}

}  // namespace gambler
