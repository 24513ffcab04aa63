// Remez (norming) constants of subsets of the unit ball: exact-to-tolerance
// enclosures for finite sets via per-grid-point linear programs, the classical
// measure bound, the topological bound from domain families, and detection of
// non-norming sets with a kernel certificate.
#ifndef REMEZRIG_REMEZ_HPP
#define REMEZRIG_REMEZ_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "remezrig/core.hpp"
#include "remezrig/domains.hpp"
#include "remezrig/linprog.hpp"
#include "remezrig/pointset.hpp"
#include "remezrig/polynomial.hpp"
#include "remezrig/rng.hpp"
#include "remezrig/supnorm.hpp"

namespace remezrig {

/// Values of every basis monomial at x (one LP row / objective per point).
inline Vec monomial_row(const MonomialBasis& basis, const Vec& x) {
  const int n = basis.dimension();
  const int d = basis.degree();
  std::vector<Vec> pw(n, Vec(d + 1, 1.0));
  for (int i = 0; i < n; ++i)
    for (int k = 1; k <= d; ++k) pw[i][k] = pw[i][k - 1] * x[i];
  Vec row(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto& e = basis.exponents(j);
    double mono = 1.0;
    for (int i = 0; i < n; ++i) mono *= pw[i][e[i]];
    row[j] = mono;
  }
  return row;
}

struct NormingCheck {
  bool norming = false;
  int rank = 0;
  int needed = 0;  // binom(n+d, n)
  /// Degree-d polynomial vanishing on Z (certified sup over the ball ~1),
  /// present when the set is not norming.
  std::optional<MultiPoly> certificate;
  double certificate_max_on_Z = 0.0;
  double certificate_ball_sup = 0.0;  // certified
};

namespace detail {

// Householder QR with column pivoting; returns rank and, when rank < cols, a
// unit kernel direction of the input matrix (in original column order).
inline int cpqr_rank_kernel(std::vector<Vec> A /*rows*/, int cols, double rel_tol,
                            Vec* kernel_out) {
  const int m = static_cast<int>(A.size());
  std::vector<int> perm(cols);
  for (int j = 0; j < cols; ++j) perm[j] = j;
  const int kmax = std::min(m, cols);
  double first_norm = -1.0;
  int rank = kmax;
  for (int k = 0; k < kmax; ++k) {
    // pivot: column with largest remaining norm
    int best = k;
    double best_norm = -1.0;
    for (int j = k; j < cols; ++j) {
      double s = 0.0;
      for (int i = k; i < m; ++i) s += A[i][j] * A[i][j];
      if (s > best_norm) {
        best_norm = s;
        best = j;
      }
    }
    best_norm = std::sqrt(std::max(best_norm, 0.0));
    if (first_norm < 0.0) first_norm = best_norm;
    if (best_norm <= rel_tol * first_norm) {
      rank = k;
      break;
    }
    if (best != k) {
      for (int i = 0; i < m; ++i) std::swap(A[i][best], A[i][k]);
      std::swap(perm[best], perm[k]);
    }
    // Householder vector for column k
    double alpha = 0.0;
    for (int i = k; i < m; ++i) alpha += A[i][k] * A[i][k];
    alpha = std::sqrt(alpha);
    if (A[k][k] > 0) alpha = -alpha;
    Vec v(m, 0.0);
    for (int i = k; i < m; ++i) v[i] = A[i][k];
    v[k] -= alpha;
    double vnorm2 = 0.0;
    for (int i = k; i < m; ++i) vnorm2 += v[i] * v[i];
    if (vnorm2 > 0.0) {
      for (int j = k; j < cols; ++j) {
        double dotv = 0.0;
        for (int i = k; i < m; ++i) dotv += v[i] * A[i][j];
        const double f = 2.0 * dotv / vnorm2;
        for (int i = k; i < m; ++i) A[i][j] -= f * v[i];
      }
    }
    A[k][k] = alpha;
    for (int i = k + 1; i < m; ++i) A[i][k] = 0.0;
  }
  if (rank < cols && kernel_out) {
    // solve R[0:r,0:r] w = R[0:r, r] for the first non-pivot column
    Vec w(rank, 0.0);
    for (int i = rank - 1; i >= 0; --i) {
      double s = A[i][rank];
      for (int j = i + 1; j < rank; ++j) s -= A[i][j] * w[j];
      w[i] = s / A[i][i];
    }
    Vec v(cols, 0.0);
    for (int i = 0; i < rank; ++i) v[perm[i]] = -w[i];
    v[perm[rank]] = 1.0;
    const double nv = norm2(v);
    for (double& t : v) t /= nv;
    *kernel_out = std::move(v);
  }
  return rank;
}

}  // namespace detail

/// Full-column-rank test of the evaluation matrix of Z at degree d. A rank
/// deficit certifies R_d(Z) = infinity; the kernel polynomial (vanishing on Z)
/// is returned normalized to certified ball sup 1.
inline NormingCheck norming_check(const PointSet& Z, int d) {
  const int n = Z.dimension();
  const auto& basis = MonomialBasis::get(n, d);
  const int D = static_cast<int>(basis.size());
  std::vector<Vec> E;
  E.reserve(Z.size());
  for (const Vec& z : Z.points()) E.push_back(monomial_row(basis, z));
  Vec kernel;
  const int rank = detail::cpqr_rank_kernel(E, D, 1e-10, &kernel);
  NormingCheck out;
  out.rank = rank;
  out.needed = D;
  out.norming = rank == D;
  if (!out.norming) {
    MultiPoly cert(n, d, kernel);
    const auto enc = sup_norm_ball(cert, default_supnorm_step(n, d));
    if (enc.certified_max > 0.0) cert = poly_scale(cert, 1.0 / enc.certified_max);
    double mz = 0.0;
    for (const Vec& z : Z.points()) mz = std::max(mz, std::abs(cert.eval(z)));
    out.certificate_max_on_Z = mz;
    out.certificate_ball_sup = sup_norm_ball(cert, default_supnorm_step(n, d)).certified_max;
    out.certificate = std::move(cert);
  }
  return out;
}

struct RemezReport {
  int degree = 0;
  double lower = 1.0;  // certified lower bound for R_d(Z)
  double upper = kInf; // certified upper bound; +inf iff not norming
  bool norming = false;
  std::string method;  // finite-lp | topological
  std::optional<MultiPoly> witness;
  double witness_ratio = 0.0;  // certified ball sup / max over Z
  double grid_step = 0.0;      // finite-lp only
};

/// R_d(Z) enclosure for a finite set by maximizing P(x) over the norming
/// polytope {|P(z_j)| <= 1} at every ball-grid point x; the grid maximum is
/// inflated to a certified upper bound exactly as in sup_norm_ball.
inline RemezReport remez_finite(const PointSet& Z, int d, double grid_step) {
  const int n = Z.dimension();
  const double limit = max_admissible_step(n, d);
  if (!(grid_step > 0.0) || !(grid_step < limit))
    throw PreconditionError("remez_finite: grid_step " + std::to_string(grid_step) +
                            " is not admissible; need 0 < step < " + std::to_string(limit));
  RemezReport rep;
  rep.degree = d;
  rep.method = "finite-lp";
  rep.grid_step = grid_step;

  const NormingCheck nc = norming_check(Z, d);
  if (!nc.norming) {
    rep.norming = false;
    rep.upper = kInf;
    rep.witness = nc.certificate;
    const double mz = std::max(nc.certificate_max_on_Z, 1e-300);
    rep.witness_ratio = nc.certificate_ball_sup / mz;
    rep.lower = rep.witness_ratio;
    return rep;
  }

  const auto& basis = MonomialBasis::get(n, d);
  const int D = static_cast<int>(basis.size());
  std::vector<LinearProgram::Row> rows;
  rows.reserve(Z.size());
  for (const Vec& z : Z.points()) {
    LinearProgram::Row r;
    r.a = monomial_row(basis, z);
    r.lower = -1.0;
    r.upper = 1.0;
    rows.push_back(std::move(r));
  }
  RowPolytopeSimplex solver(D, rows);
  double best = -kInf;
  Vec best_coeffs;
  for (const Vec& x : ball_samples(n, grid_step)) {
    const Vec c = monomial_row(basis, x);
    const LpOutcome out = solver.maximize(c);
    if (out.status != LpStatus::Optimal)
      throw InternalError(
          "remez_finite: norming-polytope LP did not reach an optimum despite full column "
          "rank (status " + std::string(to_string(out.status)) + ")");
    if (out.optimum > best) {
      best = out.optimum;
      best_coeffs = out.solution;
    }
  }
  rep.norming = true;
  rep.lower = best;
  const double shrink = 1.0 - grid_step * std::sqrt(static_cast<double>(n)) * d * d;
  rep.upper = best / shrink;
  MultiPoly witness(n, d, best_coeffs);
  double mz = 0.0;
  for (const Vec& z : Z.points()) mz = std::max(mz, std::abs(witness.eval(z)));
  rep.witness_ratio = sup_norm_ball(witness, grid_step).certified_max / std::max(mz, 1e-300);
  rep.witness = std::move(witness);
  return rep;
}

struct MeasureBound {
  double chebyshev_bound = 0.0;  // T_d((1+s)/(1-s)), s = (1-lambda)^(1/n)
  double simple_bound = 0.0;     // (4n/lambda)^d
};

inline MeasureBound measure_remez_bound(double lambda, int n, int d) {
  if (!(lambda > 0.0) || lambda > 1.0)
    throw PreconditionError("measure_remez_bound: lambda must lie in (0, 1]");
  if (n < 1 || d < 0) throw PreconditionError("measure_remez_bound: need n >= 1, d >= 0");
  const double s = std::pow(1.0 - lambda, 1.0 / n);
  const double arg = (1.0 + s) / (1.0 - s);
  MeasureBound out;
  out.chebyshev_bound = chebyshev_T(d, arg);
  out.simple_bound = std::pow(4.0 * n / lambda, d);
  if (out.chebyshev_bound > out.simple_bound * (1.0 + 1e-12))
    throw InternalError("measure_remez_bound: Chebyshev bound exceeded the simple bound");
  return out;
}

struct TopologicalBound {
  int degree = 0;
  int n = 0;
  int j_d = 0;                 // (d-1)^n + 1
  int binding_domain = 0;      // original index of the j_d-th largest domain
  double lambda_jd = 0.0;      // normalized volume used in the certified bound
  double mu_raw_jd = 0.0;      // raw volume (comparison output only)
  double bound = 0.0;          // (4n/lambda_jd)^d, certified
  double bound_raw_mu = 0.0;   // (4n/mu_raw_jd)^d, for comparison with quoted raw-volume figures

  RemezReport as_report() const {
    RemezReport r;
    r.degree = degree;
    r.lower = 1.0;
    r.upper = bound;
    r.norming = true;
    r.method = "topological";
    return r;
  }
};

inline TopologicalBound topological_remez_bound(const DomainFamily& F, int d) {
  if (d < 1) throw PreconditionError("topological_remez_bound: degree must be >= 1");
  const int jd = F.j_d(d);
  if (jd > F.count())
    throw PreconditionError("topological_remez_bound: degree " + std::to_string(d) +
                            " needs at least (d-1)^n + 1 = " + std::to_string(jd) +
                            " domains, family has " + std::to_string(F.count()));
  TopologicalBound out;
  out.degree = d;
  out.n = F.dimension();
  out.j_d = jd;
  out.binding_domain = F.original_index(jd - 1);
  out.lambda_jd = F.lambda_sorted(jd - 1);
  out.mu_raw_jd = F.mu_sorted(jd - 1);
  out.bound = std::pow(4.0 * F.dimension() / out.lambda_jd, d);
  out.bound_raw_mu = std::pow(4.0 * F.dimension() / out.mu_raw_jd, d);
  return out;
}

// --- property sweep behind the topological bound -----------------------------

struct WitnessTestReport {
  int trials_requested = 0;
  int trials_run = 0;
  int violations = 0;
  bool hypothesis_satisfied = true;
  int j_eff = 0;
  double kappa = 0.0;             // (lambda_{j_eff}/(4n))^d
  double min_boundary_max = kInf; // smallest max_Z |P| observed
  std::string note;
  struct Violation {
    MultiPoly poly;
    double boundary_max;
  };
  std::vector<Violation> detail;  // capped
};

namespace detail {

// Shared core: evaluate normalized polynomials against kappa on explicit
// boundary sample sets. Used by the primitive-shape sweep and by gallery
// constructions with implicit domains.
inline void witness_margin_check(const std::vector<std::vector<Vec>>& boundaries, double kappa,
                                 const std::vector<MultiPoly>& polys, WitnessTestReport& rep) {
  for (const MultiPoly& p : polys) {
    double mz = 0.0;
    for (const auto& bd : boundaries)
      for (const Vec& z : bd) mz = std::max(mz, std::abs(p.eval(z)));
    rep.min_boundary_max = std::min(rep.min_boundary_max, mz);
    ++rep.trials_run;
    if (mz < kappa) {
      ++rep.violations;
      if (rep.detail.size() < 8) rep.detail.push_back({p, mz});
    }
  }
}

}  // namespace detail

/// Samples the boundaries of the first j_d domains and checks, for random
/// degree-d polynomials with certified sup 1, that max_Z |P| >= kappa_d.
/// Violations are report content: counterexamples when the domain-count
/// hypothesis holds, sharpness demonstrations when it does not.
inline WitnessTestReport topological_bound_witness_test(
    const DomainFamily& F, int d, int trials, Rng& rng, int boundary_samples = 256,
    const std::vector<MultiPoly>& extra_polys = {}) {
  if (trials < 1) throw PreconditionError("topological_bound_witness_test: trials must be >= 1");
  if (d < 1) throw PreconditionError("topological_bound_witness_test: degree must be >= 1");
  const int n = F.dimension();
  WitnessTestReport rep;
  rep.trials_requested = trials;
  const int jd = F.j_d(d);
  rep.hypothesis_satisfied = jd <= F.count();
  rep.j_eff = std::min(jd, F.count());
  rep.kappa = std::pow(F.lambda_sorted(rep.j_eff - 1) / (4.0 * n), d);

  std::vector<std::vector<Vec>> boundaries;
  for (int j = 0; j < rep.j_eff; ++j)
    boundaries.push_back(F.sorted_domain(j).boundary_samples(boundary_samples));

  std::vector<MultiPoly> polys = extra_polys;
  if (rep.hypothesis_satisfied) {
    const double step = default_supnorm_step(n, d);
    for (int t = 0; t < trials; ++t) {
      MultiPoly p = rng.poly(n, d);
      const auto enc = sup_norm_ball(p, step);
      if (enc.certified_max < 1e-12) {
        --t;
        continue;
      }
      polys.push_back(poly_scale(p, 1.0 / enc.certified_max));
    }
  } else {
    rep.note = "domain count " + std::to_string(F.count()) + " is below (d-1)^n + 1 = " +
               std::to_string(jd) +
               "; random sweep skipped, supplied polynomials evaluated as demonstrations";
  }
  detail::witness_margin_check(boundaries, rep.kappa, polys, rep);
  return rep;
}

}  // namespace remezrig

#endif  // REMEZRIG_REMEZ_HPP
