#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gambler/bit_expansion.hpp"
#include "gambler/dyadic.hpp"
#include "gambler/params.hpp"

namespace gambler {

/// Optimal value at a dyadic state: finite sum over the terminating expansion,
/// with v(0) = 0 and v(1) = 1 by the boundary convention.
double value_dyadic(const Dyadic& d, const Params& params);
Rational value_dyadic_exact(const Dyadic& d, const Params& params);

/// Optimal value of an eventually-periodic expansion. Terminating expansions
/// are summed exactly; periodic ones use the geometric closed form over whole
/// periods (exact up to rounding in the double version). For a truncated
/// expansion the result is the finite sum; if its tail bound exceeds `tol` the
/// call throws, since the contract |result - v(s)| <= tol cannot be met.
double value_expansion(const BitExpansion& bits, const Params& params,
                       double tol = 1e-12);
Rational value_expansion_exact(const BitExpansion& bits, const Params& params);

/// v at an exact rational in [0,1] via its eventually-periodic expansion.
Rational value_rational_exact(const Rational& s, const Params& params);

/// v tabulated on the lattice {k 2^-level}, k = 0..2^level. Levels above 22
/// are rejected (memory); use the streaming evaluators for deeper sweeps.
std::vector<double> value_lattice(unsigned level, const Params& params);
std::vector<Rational> value_lattice_exact(unsigned level, const Params& params);

/// One-step action value p*gamma*v(s-a) + (1-p)*gamma*v(s+a). The action must
/// satisfy 0 < a <= min{s, 1-s}.
double q_value(const Dyadic& s, const Dyadic& a, const Params& params);
double q_value(const BitExpansion& s, const BitExpansion& a,
               const Params& params);
Rational q_value_exact(const Rational& s, const Rational& a,
                       const Params& params);

/// v(s + 2^-(level+1)) - v(s) in closed form for s in G_level or s = 0;
/// equals the direct subtraction exactly. Rejects s = 1.
double forward_diff(const Dyadic& s, unsigned level, const Params& params);
Rational forward_diff_exact(const Dyadic& s, unsigned level,
                            const Params& params);

/// One-sided difference report at a lattice site.
struct DiffReport {
  Dyadic site;
  unsigned level = 0;
  std::optional<double> forward;  // v(s + 2^-(level+1)) - v(s); absent at s=1
  double backward = 0;            // v(s) - v(s - 2^-(level+1))
  double bound = 0;               // lower bound; equality iff gamma = 1
};

/// Backward difference v(s) - v(s - 2^-(level+1)) in closed form together
/// with its lower bound p^(level-k+1)(1-p)gamma^(level+1) prod_{j<k} w(b_j)
/// (or (p*gamma)^(level+1) for s = 1). Rejects s = 0.
DiffReport backward_diff(const Dyadic& s, unsigned level, const Params& params);
std::pair<Rational, Rational> backward_diff_exact(const Dyadic& s,
                                                  unsigned level,
                                                  const Params& params);

/// Evaluates v(sbar + 2^-level * tail) through the self-similar decomposition
/// v(sbar) + scale(sbar, level) * v(tail). For tail = 1 under gamma < 1 this
/// is the left limit at the interval's right endpoint, which differs from
/// v(sbar + 2^-level) by the jump there.
double self_similar_value(const Dyadic& sbar, unsigned level,
                          const BitExpansion& tail, const Params& params,
                          double tol = 1e-12);
Rational self_similar_value_exact(const Dyadic& sbar, unsigned level,
                                  const BitExpansion& tail,
                                  const Params& params);

struct LeftLimit {
  double left_limit;  // lim of v from the left at s
  double jump;        // v(s) - left_limit; zero iff gamma = 1
};

/// Left limit and jump of v at a dyadic s > 0 (or s = 1). The jump is
/// scale_{k-1} * gamma^k * (1-p)(1-gamma)/(1-gamma p) at the last 1-bit k.
LeftLimit left_limit_and_jump(const Dyadic& s, const Params& params);
std::pair<Rational, Rational> left_limit_and_jump_exact(const Dyadic& s,
                                                        const Params& params);

/// Exact mean of v over [0,1]: (1-p)gamma/(2-gamma). Equals v(1/2) = (1-p)gamma
/// when gamma = 1; strictly below it when gamma < 1.
Rational value_mean(const Params& params);

/// Exact integral of v over [lo, hi], both dyadic, by decomposing the range
/// into maximal dyadic intervals and applying the self-similar scaling on
/// each: the integral over [sbar, sbar + 2^-l] is 2^-l (v(sbar) + scale * M)
/// with M the mean of v over [0,1].
double integral(const Dyadic& lo, const Dyadic& hi, const Params& params);
Rational integral_exact(const Dyadic& lo, const Dyadic& hi,
                        const Params& params);

enum class DerivSide { zero, infinite };

struct DerivativeReport {
  std::optional<DerivSide> left;   // absent at s = 0 (no left neighborhood)
  std::optional<DerivSide> right;  // absent at s = 1
  // Difference quotients (v(s) - v(s - 2^-L)) / 2^-L and
  // (v(s + 2^-L) - v(s)) / 2^-L, as (L, quotient) pairs for L = 1..depth
  // where the shifted point stays inside [0, 1].
  std::vector<std::pair<unsigned, double>> left_witness;
  std::vector<std::pair<unsigned, double>> right_witness;
};

/// One-sided derivative classification: the right derivative is zero
/// everywhere it exists; the left derivative is infinite exactly on the
/// dyadic rationals (and at s = 1) and zero elsewhere. Witness quotients are
/// computed exactly and must diverge/vanish monotonically.
DerivativeReport derivative_class(const Dyadic& s, const Params& params,
                                  unsigned depth);
DerivativeReport derivative_class(const BitExpansion& s, const Params& params,
                                  unsigned depth);

struct ArcLength {
  double euclidean;  // sum of sqrt(ds^2 + dv^2) over lattice segments
  double manhattan;  // sum of (ds + |dv|); exactly 2 for the monotone chain
};

/// Polygonal lengths of the chain through {(k 2^-level, v(k 2^-level))}.
/// Levels up to 16 run the manhattan sum in exact arithmetic.
ArcLength arc_length(unsigned level, const Params& params);

/// Grid minimizer of v(s) - s over the interior lattice points of G_level,
/// smallest s on ties.
Dyadic gap_argmin(unsigned level, const Params& params);

/// Geometric tail bound (1-p) gamma^(L+1) p^L / (1 - gamma p) on the error of
/// truncating the defining series after L bits.
double tail_bound(unsigned depth, const Params& params);

/// Smallest truncation depth whose tail bound is <= tol, capped at 4096.
unsigned depth_for_tol(double tol, const Params& params);

}  // namespace gambler
