#pragma once

#include <optional>
#include <vector>

#include "gambler/params.hpp"
#include "gambler/value.hpp"

namespace gambler {

struct BinError {
  Dyadic lo;
  Dyadic hi;
  double median_value;  // v at the bin midpoint, the optimal constant
  double bin_error;     // L1 error of that constant over the bin
};

struct ApproxReport {
  double exact_error = 0;
  std::optional<double> brute_error;
  double paper_leading_bound = 0;  // (1/N)(2-gamma)(1-p)gamma/(1-p gamma),
                                   // reported for comparison, not asserted
  std::vector<BinError> per_bin;
};

/// Exact L1 error of the best piecewise-constant fit on N equal bins
/// (N >= 4, a power of two). Each bin's optimal constant is the value at the
/// bin midpoint (the median of the monotone restriction); the per-bin error
/// follows from the self-similar decomposition and the exact mean of v.
ApproxReport pc_error_exact(unsigned n_bins, const Params& params);
Rational pc_error_exact_rational(unsigned n_bins, const Params& params);

/// Independent oracle: midpoint Riemann sum of |v - per-bin median| over the
/// dyadic grid at `depth` (depth >= 2 log2 N + 8).
double pc_error_brute(unsigned n_bins, const Params& params, unsigned depth);

struct LipschitzBound {
  double h;           // jump of v at 1/2: (1-p)gamma(1-gamma)/(1-p gamma)
  double bound;       // h^2 / (4L)
  double ramp_start;  // 1/2 - h/(2L): optimal clamped-ramp fit breakpoints
  double ramp_end;    // 1/2 + h/(2L)
  double ramp_low;    // value 0 left of the ramp
  double ramp_high;   // value h right of the ramp
};

/// Lower bound on the L1 error of any L-Lipschitz fit, driven by the jump at
/// 1/2; rejects lipschitz constants below h (the bound's own precondition).
LipschitzBound lipschitz_bound(double lipschitz, const Params& params);
Rational lipschitz_h_exact(const Params& params);

}  // namespace gambler
