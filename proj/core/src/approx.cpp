#include "gambler/approx.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace gambler {

namespace {

unsigned log2_exact(unsigned n) {
  if (n < 4 || !std::has_single_bit(n))
    throw std::invalid_argument("bin count must be a power of two >= 4");
  return static_cast<unsigned>(std::countr_zero(n));
}

/// Half-gap of the mean: integral of v over [1/2, 1] minus over [0, 1/2],
/// from the self-similar halves. The per-bin L1 error of the median fit is
/// bin_width * scale * this quantity.
Rational median_gap(const Params& params) {
  const Rational wg = params.win() * params.gamma();
  const Rational mean = value_mean(params);
  return (wg + params.gamma() * mean * (2 * params.p() - 1)) / 2;
}

}  // namespace

Rational pc_error_exact_rational(unsigned n_bins, const Params& params) {
  const unsigned level = log2_exact(n_bins);
  const Rational gap = median_gap(params);
  // sum of the self-similar scales over all level-bit prefixes is gamma^level
  return rational_pow(params.gamma(), level) * gap /
         Rational(BigInt(1) << level);
}

ApproxReport pc_error_exact(unsigned n_bins, const Params& params) {
  const unsigned level = log2_exact(n_bins);
  const Rational gap = median_gap(params);
  const Rational width(BigInt(1), BigInt(1) << level);
  const Rational wg = params.win() * params.gamma();

  ApproxReport report;
  report.per_bin.reserve(n_bins);
  std::vector<Rational> lattice = value_lattice_exact(level, params);
  Rational total{0};
  for (unsigned k = 0; k < n_bins; ++k) {
    const Dyadic lo(k, level);
    const Dyadic hi(k + 1, level);
    // scale of the bin: gamma^level prod_j w(b_j) over the prefix bits of lo
    Rational scale{1};
    {
      Dyadic site(k, level);
      if (level > 0) {
        for (int b : site.bits_at(level))
          scale *= params.gamma() * (b != 0 ? params.p() : params.win());
      }
    }
    const Rational median = lattice[k] + scale * wg;
    const Rational err = width * scale * gap;
    total += err;
    report.per_bin.push_back(
        {lo, hi, to_double(median), to_double(err)});
  }
  report.exact_error = to_double(total);
  report.paper_leading_bound =
      to_double((2 - params.gamma()) * params.win() * params.gamma() /
                ((1 - params.p() * params.gamma()) * n_bins));
  return report;
}

double pc_error_brute(unsigned n_bins, const Params& params, unsigned depth) {
  const unsigned level = log2_exact(n_bins);
  if (depth < 2 * level + 8)
    throw std::invalid_argument("depth must be at least 2 log2(bins) + 8");
  if (depth > 26) throw std::invalid_argument("brute depth above 26");

  // Medians: v at the bin midpoints (2m+1) / (2 n_bins).
  std::vector<double> medians(n_bins);
  for (unsigned m = 0; m < n_bins; ++m)
    medians[m] = value_dyadic(Dyadic(2 * m + 1, level + 1), params);

  const double wg = params.win_d() * params.gamma_d();
  const double pg = params.p_d() * params.gamma_d();
  const unsigned bin_shift = depth - level;
  std::vector<long double> bin_sums(n_bins, 0.0L);

  // Depth-first walk over all depth-bit prefixes carrying (value, scale);
  // the cell midpoint appends one extra 1 bit.
  struct Frame {
    double value;
    double scale;
    unsigned depth;
  };
  std::vector<Frame> stack;
  stack.reserve(depth + 2);
  stack.push_back({0.0, 1.0, 0});
  std::uint64_t leaf = 0;
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.depth == depth) {
      const double mid = f.value + f.scale * wg;
      bin_sums[leaf >> bin_shift] += std::fabs(mid - medians[leaf >> bin_shift]);
      ++leaf;
      continue;
    }
    // push the 1-child first so the 0-child is visited first (ascending s)
    stack.push_back({f.value + f.scale * wg, f.scale * pg, f.depth + 1});
    stack.push_back({f.value, f.scale * wg, f.depth + 1});
  }

  long double total = 0.0L;
  for (long double s : bin_sums) total += s;
  return static_cast<double>(total / static_cast<long double>(
                                         std::uint64_t{1} << depth));
}

Rational lipschitz_h_exact(const Params& params) {
  return params.win() * params.gamma() * (1 - params.gamma()) /
         (1 - params.p() * params.gamma());
}

LipschitzBound lipschitz_bound(double lipschitz, const Params& params) {
  const double h = to_double(lipschitz_h_exact(params));
  if (!(lipschitz > 0) || lipschitz < h)
    throw std::invalid_argument(
        "lipschitz constant must be positive and at least the jump h");
  LipschitzBound out;
  out.h = h;
  out.bound = h * h / (4.0 * lipschitz);
  out.ramp_start = 0.5 - h / (2.0 * lipschitz);
  out.ramp_end = 0.5 + h / (2.0 * lipschitz);
  out.ramp_low = 0.0;
  out.ramp_high = h;
  return out;
}

}  // namespace gambler
