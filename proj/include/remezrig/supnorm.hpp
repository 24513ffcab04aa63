// Certified sup-norm enclosures over the unit ball and Markov-type derivative
// bounds.
//
// Certification: for a degree-d polynomial on B^n, Kellogg's inequality bounds
// the gradient by d^2 * sup|P|. The sampling lattice of step eps covers the
// ball with radius eps*sqrt(n), so
//     sup |P| <= grid_max + eps*sqrt(n)*d^2*sup |P|,
// giving certified_max = grid_max / (1 - eps*sqrt(n)*d^2) when the step is
// admissible (eps < 1/(sqrt(n) d^2)).
#ifndef REMEZRIG_SUPNORM_HPP
#define REMEZRIG_SUPNORM_HPP

#include <algorithm>
#include <cmath>
#include <string>

#include "remezrig/core.hpp"
#include "remezrig/polynomial.hpp"

namespace remezrig {

struct SupNormEnclosure {
  double grid_max = 0.0;       // max |P| over the sampling lattice
  double certified_max = 0.0;  // >= true sup over the closed ball
  double grid_step = 0.0;
  double inflation = 1.0;      // certified_max = grid_max * inflation
};

inline double max_admissible_step(int n, int d) {
  if (d == 0) return kInf;  // constants need no inflation
  return 1.0 / (std::sqrt(static_cast<double>(n)) * d * d);
}

inline SupNormEnclosure sup_norm_ball(const MultiPoly& p, double grid_step) {
  const int n = p.dimension();
  const int d = p.degree();
  const double limit = max_admissible_step(n, d);
  if (!(grid_step > 0.0) || !(grid_step < limit))
    throw PreconditionError("sup_norm_ball: grid_step " + std::to_string(grid_step) +
                            " is not admissible; need 0 < step < " + std::to_string(limit) +
                            " = 1/(sqrt(n) d^2)");
  SupNormEnclosure enc;
  enc.grid_step = grid_step;
  for (const Vec& x : ball_samples(n, grid_step)) {
    const double v = std::abs(p.eval(x));
    if (v > enc.grid_max) enc.grid_max = v;
  }
  const double shrink = 1.0 - grid_step * std::sqrt(static_cast<double>(n)) * d * d;
  enc.inflation = (d == 0) ? 1.0 : 1.0 / shrink;
  enc.certified_max = enc.grid_max * enc.inflation;
  return enc;
}

/// A grid step for internal certified sup-norms: comfortably admissible and
/// cheap at desk scale.
inline double default_supnorm_step(int n, int d) {
  const double adm = max_admissible_step(n, d);
  const double cap = n <= 2 ? 0.02 : 0.03;
  return std::min(cap, 0.45 * adm);
}

/// P divided by its certified sup at the given step, so the certified sup of
/// the result (at the same step) is 1 up to rounding.
inline MultiPoly normalize_certified(const MultiPoly& p, double grid_step) {
  const auto enc = sup_norm_ball(p, grid_step);
  if (!(enc.certified_max > 0.0))
    throw PreconditionError("normalize_certified: polynomial is identically zero on the grid");
  MultiPoly out = p;
  for (double& c : out.coeffs()) c /= enc.certified_max;
  return out;
}

/// Explicit constant Cbar_k(n,d) with M_k(P) <= Cbar_k(n,d) * M_0(P) for every
/// degree-d polynomial on B^n, by iterating Kellogg's inequality:
/// Cbar_k = prod_{i=0}^{k-1} n*(d-i)^2. Loose but always valid.
inline double markov_derivative_bound(int n, int d, int k) {
  if (k < 0 || k > d)
    throw PreconditionError("markov_derivative_bound: need 0 <= k <= d");
  double c = 1.0;
  for (int i = 0; i < k; ++i) c *= static_cast<double>(n) * (d - i) * (d - i);
  return c;
}

}  // namespace remezrig

#endif  // REMEZRIG_SUPNORM_HPP
