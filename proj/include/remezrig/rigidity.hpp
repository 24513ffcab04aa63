// Lower bounds on the rigidity constant RG_d(Z): conversion from Remez
// enclosures, one-dimensional point counts, interior sets, density of finite
// sets, topological domain families, and divided-difference estimates.
#ifndef REMEZRIG_RIGIDITY_HPP
#define REMEZRIG_RIGIDITY_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "remezrig/core.hpp"
#include "remezrig/pointset.hpp"
#include "remezrig/remez.hpp"

namespace remezrig {

struct RigidityBound {
  int degree = 0;
  double lower = 0.0;
  std::string source;          // from_remez | one_dim_points | interior | density |
                               // topological | divided_diff
  std::string inputs_digest;   // provenance of the inputs the bound came from
  bool estimate = false;       // divided_diff reports an order estimate, not a bound
  bool applicable = true;      // density bound can be inapplicable (lower = 0)
  std::string note;
};

inline void check_desk_degree(int d) {
  if (d < 0) throw PreconditionError("rigidity: degree must be >= 0");
  if (d > 12)
    throw PreconditionError("rigidity: degree " + std::to_string(d) +
                            " exceeds the desk-scale cap 12 (floating-point factorials)");
}

/// RG_d(Z) >= ((d+1)!/2) / R_d(Z); a non-norming set gives 0.
inline RigidityBound rigidity_from_remez(const RemezReport& report) {
  check_desk_degree(report.degree);
  RigidityBound out;
  out.degree = report.degree;
  out.source = "from_remez";
  out.inputs_digest = "remez(method=" + report.method +
                      ", upper=" + (std::isfinite(report.upper) ? std::to_string(report.upper)
                                                                : std::string("inf")) +
                      ", d=" + std::to_string(report.degree) + ")";
  if (!std::isfinite(report.upper)) {
    out.lower = 0.0;
    out.note = "set is not norming at this degree";
    return out;
  }
  out.lower = factorial(report.degree + 1) / 2.0 / report.upper;
  return out;
}

/// (d+1)!/2^{d+1} when Z in B^1 has at least d+1 points, else 0.
inline RigidityBound rigidity_1d_points(int count, int d) {
  check_desk_degree(d);
  if (count < 0) throw PreconditionError("rigidity_1d_points: count must be >= 0");
  RigidityBound out;
  out.degree = d;
  out.source = "one_dim_points";
  out.inputs_digest = "count=" + std::to_string(count);
  out.lower = count >= d + 1 ? factorial(d + 1) / std::pow(2.0, d + 1) : 0.0;
  if (count < d + 1) out.note = "fewer than d+1 points: rigidity constant is 0";
  return out;
}

/// Z with non-empty interior (caller-asserted): (d+1)!/2^{d+1}.
inline RigidityBound rigidity_interior(int d) {
  check_desk_degree(d);
  RigidityBound out;
  out.degree = d;
  out.source = "interior";
  out.inputs_digest = "interior point set (caller-asserted)";
  out.lower = factorial(d + 1) / std::pow(2.0, d + 1);
  return out;
}

/// Density bound for finite sets: with M = |Z| and separation rho,
/// RG_d >= ((d+1)!/2) ((M rho^n - (4d)^n rho)/(4n))^d, applicable when
/// M > (4d)^n (1/rho)^{n-1}.
inline RigidityBound rigidity_density(int n, int M, double rho, int d) {
  check_desk_degree(d);
  if (n < 1 || M < 1 || !(rho > 0.0))
    throw PreconditionError("rigidity_density: need n >= 1, M >= 1, rho > 0");
  RigidityBound out;
  out.degree = d;
  out.source = "density";
  out.inputs_digest =
      "n=" + std::to_string(n) + ", M=" + std::to_string(M) + ", rho=" + std::to_string(rho);
  const double threshold = std::pow(4.0 * d, n) * std::pow(1.0 / rho, n - 1);
  if (!(static_cast<double>(M) > threshold)) {
    out.lower = 0.0;
    out.applicable = false;
    out.note = "inapplicable: M = " + std::to_string(M) +
               " does not exceed (4d)^n (1/rho)^(n-1) = " + std::to_string(threshold);
    return out;
  }
  const double inner = (M * std::pow(rho, n) - std::pow(4.0 * d, n) * rho) / (4.0 * n);
  out.lower = factorial(d + 1) / 2.0 * std::pow(inner, d);
  return out;
}

inline RigidityBound rigidity_density(const PointSet& Z, int d) {
  return rigidity_density(Z.dimension(), static_cast<int>(Z.size()), Z.rho(), d);
}

/// Topological rigidity bound: ((d+1)!/2)(lambda_{j_d}/(4n))^d with the
/// normalized volume, matching the Remez-module convention.
inline RigidityBound rigidity_topological(const DomainFamily& F, int d) {
  check_desk_degree(d);
  const int jd = F.j_d(d);
  if (d < 1 || jd > F.count())
    throw PreconditionError("rigidity_topological: degree " + std::to_string(d) +
                            " needs at least (d-1)^n + 1 = " + std::to_string(jd) +
                            " domains, family has " + std::to_string(F.count()));
  RigidityBound out;
  out.degree = d;
  out.source = "topological";
  const double lambda = F.lambda_sorted(jd - 1);
  out.inputs_digest = "n=" + std::to_string(F.dimension()) + ", N=" + std::to_string(F.count()) +
                      ", lambda_jd=" + std::to_string(lambda);
  out.lower =
      factorial(d + 1) / 2.0 * std::pow(lambda / (4.0 * F.dimension()), d);
  return out;
}

/// Leading coefficient of Newton's recursive divided-difference table.
inline double divided_difference(const std::vector<double>& nodes,
                                 const std::vector<double>& values) {
  if (nodes.empty() || nodes.size() != values.size())
    throw PreconditionError("divided_difference: need equally many nodes and values, >= 1");
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (std::abs(nodes[i] - nodes[j]) < 1e-12)
        throw PreconditionError("divided_difference: duplicate nodes at indices " +
                                std::to_string(i) + " and " + std::to_string(j));
  std::vector<double> table = values;
  const std::size_t k = nodes.size();
  for (std::size_t level = 1; level < k; ++level)
    for (std::size_t i = 0; i + level < k; ++i)
      table[i] = (table[i + 1] - table[i]) / (nodes[i + level] - nodes[i]);
  return table[0];
}

/// One-dimensional Whitney-style estimate: the infimum over probe points z0 in
/// [-1,1] (off Z) and (d+1)-subsets of Z of |Delta_{d+1}| for the data 1 at z0
/// and 0 on the subset, via the closed form 1/prod(z0 - z_i). For fixed z0 the
/// minimizing subset takes the d+1 farthest points, so no enumeration is
/// needed. Reported as an order estimate, not a certified bound.
inline RigidityBound rigidity_1d_whitney(const PointSet& Z, int d, int probe_grid) {
  check_desk_degree(d);
  if (Z.dimension() != 1)
    throw PreconditionError("rigidity_1d_whitney: point set must be one-dimensional");
  if (static_cast<int>(Z.size()) < d + 1)
    throw PreconditionError("rigidity_1d_whitney: need at least d+1 = " + std::to_string(d + 1) +
                            " points, have " + std::to_string(Z.size()));
  if (probe_grid < 10) throw PreconditionError("rigidity_1d_whitney: probe_grid must be >= 10");

  std::vector<double> zs;
  zs.reserve(Z.size());
  for (const Vec& p : Z.points()) zs.push_back(p[0]);

  double best = kInf;
  std::vector<double> gaps(zs.size());
  for (int g = 0; g < probe_grid; ++g) {
    const double z0 = -1.0 + 2.0 * g / (probe_grid - 1);
    for (std::size_t i = 0; i < zs.size(); ++i) gaps[i] = std::abs(z0 - zs[i]);
    if (*std::min_element(gaps.begin(), gaps.end()) < 1e-9) continue;  // z0 on Z
    std::sort(gaps.begin(), gaps.end(), std::greater<double>());
    double prod = 1.0;
    for (int i = 0; i <= d; ++i) prod *= gaps[i];
    best = std::min(best, 1.0 / prod);
  }
  RigidityBound out;
  out.degree = d;
  out.source = "divided_diff";
  out.estimate = true;
  out.inputs_digest = "|Z|=" + std::to_string(Z.size()) + ", probe_grid=" +
                      std::to_string(probe_grid);
  out.note = "order-of-magnitude estimate via divided differences, not a certified bound";
  out.lower = best;
  return out;
}

}  // namespace remezrig

#endif  // REMEZRIG_RIGIDITY_HPP
