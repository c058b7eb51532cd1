#include "gambler/params.hpp"

#include <stdexcept>

namespace gambler {

Params::Params(Rational p, Rational gamma)
    : p_(std::move(p)), gamma_(std::move(gamma)) {
  if (p_ < Rational(1, 2) || p_ >= 1)
    throw std::invalid_argument("p must satisfy 0.5 <= p < 1");
  if (gamma_ < 0 || gamma_ > 1)
    throw std::invalid_argument("gamma must satisfy 0 <= gamma <= 1");
  p_double_ = to_double(p_);
  gamma_double_ = to_double(gamma_);
}

}  // namespace gambler
