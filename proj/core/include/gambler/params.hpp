#pragma once

#include "gambler/rational.hpp"

namespace gambler {

/// Problem parameters shared by every evaluation: p is the probability of
/// losing a round (0.5 <= p < 1) and gamma the discount factor (0 <= gamma
/// <= 1). Both are stored exactly so that rational inputs keep rational
/// arithmetic exact; doubles are cached for the floating-point paths.
class Params {
 public:
  Params(Rational p, Rational gamma);

  static Params from_strings(std::string_view p, std::string_view gamma) {
    return Params(parse_rational(p), parse_rational(gamma));
  }

  const Rational& p() const { return p_; }
  const Rational& gamma() const { return gamma_; }
  Rational loss() const { return p_; }
  Rational win() const { return 1 - p_; }

  double p_d() const { return p_double_; }
  double gamma_d() const { return gamma_double_; }
  double win_d() const { return 1.0 - p_double_; }

  bool undiscounted() const { return gamma_ == 1; }

 private:
  Rational p_;
  Rational gamma_;
  double p_double_;
  double gamma_double_;
};

}  // namespace gambler
