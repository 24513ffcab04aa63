// Critical points of multivariate polynomials: grid-seeded Newton iteration on
// the gradient system, Hessian classification, the Bezout count check, and the
// interior-extremum mechanism behind the topological Remez bound.
#ifndef REMEZRIG_EXTREMA_HPP
#define REMEZRIG_EXTREMA_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "remezrig/core.hpp"
#include "remezrig/domains.hpp"
#include "remezrig/polynomial.hpp"
#include "remezrig/remez.hpp"
#include "remezrig/supnorm.hpp"

namespace remezrig {

enum class CriticalKind { Max, Min, Saddle, Degenerate };

inline const char* to_string(CriticalKind k) {
  switch (k) {
    case CriticalKind::Max: return "Max";
    case CriticalKind::Min: return "Min";
    case CriticalKind::Saddle: return "Saddle";
    default: return "Degenerate";
  }
}

struct CriticalPoint {
  Vec location;
  CriticalKind kind = CriticalKind::Degenerate;
  double value = 0.0;
  double gradient_norm = 0.0;       // residual after Newton polishing
  std::vector<int> hessian_signs;   // eigenvalue signs (+1/-1/0), sorted ascending by value
};

namespace detail {

/// Eigenvalues of a small symmetric matrix by cyclic Jacobi rotations.
inline Vec symmetric_eigenvalues(std::vector<Vec> A) {
  const int n = static_cast<int>(A.size());
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += A[i][j] * A[i][j];
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(A[p][q]) < 1e-18) continue;
        const double theta = (A[q][q] - A[p][p]) / (2.0 * A[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = A[k][p], akq = A[k][q];
          A[k][p] = c * akp - s * akq;
          A[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = A[p][k], aqk = A[q][k];
          A[p][k] = c * apk - s * aqk;
          A[q][k] = s * apk + c * aqk;
        }
      }
  }
  Vec eig(n);
  for (int i = 0; i < n; ++i) eig[i] = A[i][i];
  std::sort(eig.begin(), eig.end());
  return eig;
}

inline bool solve_small(std::vector<Vec> A, Vec b, Vec& out) {
  const int n = static_cast<int>(b.size());
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(A[i][k]) > std::abs(A[piv][k])) piv = i;
    if (std::abs(A[piv][k]) < 1e-14) return false;
    std::swap(A[piv], A[k]);
    std::swap(b[piv], b[k]);
    for (int i = k + 1; i < n; ++i) {
      const double f = A[i][k] / A[k][k];
      if (f == 0.0) continue;
      for (int j = k; j < n; ++j) A[i][j] -= f * A[k][j];
      b[i] -= f * b[k];
    }
  }
  out.assign(n, 0.0);
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    for (int j = i + 1; j < n; ++j) s -= A[i][j] * out[j];
    out[i] = s / A[i][i];
  }
  return true;
}

struct GradientSystem {
  std::vector<MultiPoly> grad;
  std::vector<std::vector<MultiPoly>> hess;

  explicit GradientSystem(const MultiPoly& p) {
    grad = gradient(p);
    hess.resize(p.dimension());
    for (int i = 0; i < p.dimension(); ++i) hess[i] = gradient(grad[i]);
  }

  Vec grad_at(const Vec& x) const {
    Vec g(grad.size());
    for (std::size_t i = 0; i < grad.size(); ++i) g[i] = grad[i].eval(x);
    return g;
  }

  std::vector<Vec> hess_at(const Vec& x) const {
    const int n = static_cast<int>(grad.size());
    std::vector<Vec> H(n, Vec(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) H[i][j] = hess[i][j].eval(x);
    // enforce symmetry against rounding in the coefficient shuffles
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const double m = 0.5 * (H[i][j] + H[j][i]);
        H[i][j] = H[j][i] = m;
      }
    return H;
  }

  /// Newton iteration on grad = 0; nullopt when diverged or singular.
  std::optional<Vec> newton(Vec x, int max_iter = 60) const {
    for (int it = 0; it < max_iter; ++it) {
      const Vec g = grad_at(x);
      if (norm2(g) <= 1e-12) return x;
      Vec step;
      if (!solve_small(hess_at(x), g, step)) return std::nullopt;
      for (std::size_t i = 0; i < x.size(); ++i) x[i] -= step[i];
      if (norm2(x) > 1.5) return std::nullopt;
    }
    return std::nullopt;
  }
};

}  // namespace detail

/// Newton iteration on grad P = 0 from every ball-grid seed. Returned points
/// are certified by their gradient residual (<= 1e-8); completeness is
/// heuristic in the seeding density. Diverged seeds are dropped silently.
/// Deduplication radius is seed_grid_step/10, so counts are reproducible for a
/// fixed seeding step.
inline std::vector<CriticalPoint> find_critical_points(const MultiPoly& p,
                                                       double seed_grid_step) {
  if (p.degree() < 2)
    throw PreconditionError("find_critical_points: polynomial degree must be >= 2");
  if (!(seed_grid_step > 0.0) || seed_grid_step > 0.2)
    throw PreconditionError("find_critical_points: seed_grid_step must lie in (0, 0.2]");
  const int n = p.dimension();
  const detail::GradientSystem sys(p);
  const double dedup = seed_grid_step / 10.0;

  std::vector<Vec> found;
  for (const Vec& seed : ball_samples(n, seed_grid_step)) {
    const auto root = sys.newton(seed);
    if (!root) continue;
    if (norm2(*root) > 1.0 + 1e-9) continue;
    if (norm2(sys.grad_at(*root)) > 1e-10) continue;
    bool dup = false;
    for (const Vec& q : found) {
      double d2 = 0.0;
      for (int i = 0; i < n; ++i) d2 += (q[i] - (*root)[i]) * (q[i] - (*root)[i]);
      if (std::sqrt(d2) < dedup) {
        dup = true;
        break;
      }
    }
    if (!dup) found.push_back(*root);
  }
  std::sort(found.begin(), found.end());

  double coeff_scale = 0.0;
  for (double c : p.coeffs()) coeff_scale = std::max(coeff_scale, std::abs(c));

  std::vector<CriticalPoint> out;
  for (const Vec& x : found) {
    CriticalPoint cp;
    cp.location = x;
    cp.value = p.eval(x);
    cp.gradient_norm = norm2(sys.grad_at(x));
    const Vec eig = detail::symmetric_eigenvalues(sys.hess_at(x));
    double rad = 0.0;
    for (double e : eig) rad = std::max(rad, std::abs(e));
    // relative test against the spectral radius, plus an absolute floor: at
    // the Newton residual tolerance the polished point can sit ~1e-4 from a
    // degenerate critical point, so Hessians below ~1e-6 of coefficient scale
    // carry no trustworthy signs
    bool degenerate = rad <= 1e-6 * coeff_scale;
    int pos = 0, neg = 0;
    for (double e : eig) {
      if (std::abs(e) < 1e-8 * rad) {
        degenerate = true;
        cp.hessian_signs.push_back(0);
      } else if (e > 0) {
        ++pos;
        cp.hessian_signs.push_back(1);
      } else {
        ++neg;
        cp.hessian_signs.push_back(-1);
      }
    }
    if (degenerate)
      cp.kind = CriticalKind::Degenerate;
    else if (neg == n)
      cp.kind = CriticalKind::Max;
    else if (pos == n)
      cp.kind = CriticalKind::Min;
    else
      cp.kind = CriticalKind::Saddle;
    out.push_back(std::move(cp));
  }
  return out;
}

struct BezoutReport {
  bool checked = false;         // false when degenerate points forced a skip
  int bound = 0;                // (d-1)^n
  int critical_count = 0;
  int extrema_count = 0;        // Max + Min
  bool count_ok = true;
  bool extrema_ok = true;
  std::string note;
};

/// Asserts the Bezout ceiling (d-1)^n on nondegenerate critical points (and a
/// fortiori on extrema). A violation flags an internal inconsistency in the
/// caller's point list (typically duplicate detection failure).
inline BezoutReport bezout_extrema_check(const MultiPoly& p,
                                         const std::vector<CriticalPoint>& points) {
  BezoutReport rep;
  double bound = 1.0;
  for (int i = 0; i < p.dimension(); ++i) bound *= p.degree() - 1;
  rep.bound = static_cast<int>(bound);
  for (const auto& cp : points)
    if (cp.kind == CriticalKind::Degenerate) {
      rep.note = "degenerate critical points present; Bezout count check skipped";
      return rep;
    }
  rep.checked = true;
  rep.critical_count = static_cast<int>(points.size());
  for (const auto& cp : points)
    if (cp.kind == CriticalKind::Max || cp.kind == CriticalKind::Min) ++rep.extrema_count;
  rep.count_ok = rep.critical_count <= rep.bound;
  rep.extrema_ok = rep.extrema_count <= rep.bound;
  if (!rep.count_ok || !rep.extrema_ok)
    rep.note = "count exceeds the Bezout bound: internal inconsistency "
               "(suspect duplicate critical points)";
  return rep;
}

struct InteriorExtremumReport {
  struct DomainRow {
    int sorted_index = 0;
    int original_index = 0;
    double boundary_max = 0.0;
    double interior_max = 0.0;
    bool interior_exceeds = false;
    bool critical_point_found = false;
    std::optional<CriticalPoint> critical_point;
  };
  int j_d = 0;
  double kappa = 0.0;
  double max_on_sampled_Z = 0.0;  // over the first j_d boundaries
  bool hypothesis_triggered = false;  // max_Z < kappa
  std::vector<DomainRow> rows;
};

/// For each of the first j_d domains, compares |P| on the sampled boundary
/// with the sampled interior; when the interior wins, polishes the interior
/// argmax to a critical point of P and reports it. This is the concrete
/// mechanism behind the topological Remez bound.
inline InteriorExtremumReport interior_extremum_witness(const MultiPoly& p,
                                                        const DomainFamily& F, int d,
                                                        int boundary_samples = 256,
                                                        double interior_step = 0.02) {
  if (p.degree() != d)
    throw PreconditionError("interior_extremum_witness: polynomial degree mismatch");
  const auto enc = sup_norm_ball(p, default_supnorm_step(p.dimension(), p.degree()));
  if (std::abs(enc.certified_max - 1.0) > 1e-6)
    throw PreconditionError(
        "interior_extremum_witness: polynomial must be normalized to certified sup 1 "
        "(got " + std::to_string(enc.certified_max) + ")");
  // inspect the first j_d domains, or all of them when the family is smaller
  const int jd = std::min(F.j_d(d), F.count());
  InteriorExtremumReport rep;
  rep.j_d = jd;
  rep.kappa = std::pow(F.lambda_sorted(jd - 1) / (4.0 * F.dimension()), d);

  const detail::GradientSystem sys(p);
  for (int j = 0; j < jd; ++j) {
    const DomainSpec& U = F.sorted_domain(j);
    InteriorExtremumReport::DomainRow row;
    row.sorted_index = j;
    row.original_index = F.original_index(j);
    for (const Vec& z : U.boundary_samples(boundary_samples))
      row.boundary_max = std::max(row.boundary_max, std::abs(p.eval(z)));
    rep.max_on_sampled_Z = std::max(rep.max_on_sampled_Z, row.boundary_max);
    Vec argmax;
    for (const Vec& x : U.interior_samples(interior_step)) {
      const double v = std::abs(p.eval(x));
      if (v > row.interior_max) {
        row.interior_max = v;
        argmax = x;
      }
    }
    row.interior_exceeds = row.interior_max > row.boundary_max;
    if (row.interior_exceeds && p.degree() >= 2) {
      const auto root = sys.newton(argmax);
      if (root && U.contains(*root, 1e-9) && norm2(sys.grad_at(*root)) <= 1e-8) {
        CriticalPoint cp;
        cp.location = *root;
        cp.value = p.eval(*root);
        cp.gradient_norm = norm2(sys.grad_at(*root));
        const Vec eig = detail::symmetric_eigenvalues(sys.hess_at(*root));
        double rad = 0.0;
        for (double e : eig) rad = std::max(rad, std::abs(e));
        int pos = 0, neg = 0;
        for (double e : eig) {
          if (std::abs(e) < 1e-8 * rad)
            cp.hessian_signs.push_back(0);
          else if (e > 0) {
            ++pos;
            cp.hessian_signs.push_back(1);
          } else {
            ++neg;
            cp.hessian_signs.push_back(-1);
          }
        }
        const int n = p.dimension();
        cp.kind = (rad == 0.0 || pos + neg < n) ? CriticalKind::Degenerate
                  : neg == n                    ? CriticalKind::Max
                  : pos == n                    ? CriticalKind::Min
                                                : CriticalKind::Saddle;
        row.critical_point_found = true;
        row.critical_point = std::move(cp);
      }
    }
    rep.rows.push_back(std::move(row));
  }
  rep.hypothesis_triggered = rep.max_on_sampled_Z < rep.kappa;
  return rep;
}

}  // namespace remezrig

#endif  // REMEZRIG_EXTREMA_HPP
