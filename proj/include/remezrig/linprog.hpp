// Self-contained dense linear programming engine.
//
// Problem shape: maximize c.x over x in R^D subject to rows
// lower_i <= a_i.x <= upper_i (either side may be infinite). Designed for
// many rows and few variables, which is the shape of norming polytopes: the
// solver walks vertices of the row polytope directly, keeping only a DxD
// working-set factorization. Two-sided rows are kept native (no slack
// doubling). Bland's rule (smallest row index on both the dropping and the
// blocking choice) guarantees termination.
#ifndef REMEZRIG_LINPROG_HPP
#define REMEZRIG_LINPROG_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "remezrig/core.hpp"

namespace remezrig {

struct LinearProgram {
  struct Row {
    Vec a;
    double lower = -kInf;
    double upper = kInf;
  };
  Vec objective;  // maximized
  std::vector<Row> rows;
};

enum class LpStatus { Optimal, Unbounded, Infeasible };

inline const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "Optimal";
    case LpStatus::Unbounded: return "Unbounded";
    default: return "Infeasible";
  }
}

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  double optimum = 0.0;  // meaningful when Optimal
  Vec solution;          // vertex when Optimal
  Vec ray;               // feasible improving direction when Unbounded
  int iterations = 0;
};

/// Single-use-per-problem simplex engine; `maximize` may be called repeatedly
/// with different objectives over the same rows and warm-starts from the last
/// vertex. Not thread-safe; run one instance per thread.
class RowPolytopeSimplex {
 public:
  RowPolytopeSimplex(int dim, std::vector<LinearProgram::Row> rows)
      : dim_(dim), rows_(std::move(rows)) {
    if (dim_ < 1) throw PreconditionError("linprog: dimension must be >= 1");
    if (dim_ > 64) throw PreconditionError("linprog: dimension exceeds desk-scale cap 64");
    if (rows_.size() > 10000)
      throw PreconditionError("linprog: row count exceeds desk-scale cap 10000");
    for (const auto& r : rows_) {
      if (static_cast<int>(r.a.size()) != dim_)
        throw PreconditionError("linprog: row length does not match dimension");
      for (double v : r.a)
        if (!std::isfinite(v)) throw PreconditionError("linprog: non-finite row entry");
      if (std::isnan(r.lower) || std::isnan(r.upper) || r.lower > r.upper)
        throw PreconditionError("linprog: row bounds must satisfy lower <= upper");
    }
    x_.assign(dim_, 0.0);
  }

  LpOutcome maximize(const Vec& c) {
    if (static_cast<int>(c.size()) != dim_)
      throw PreconditionError("linprog: objective length does not match dimension");
    for (double v : c)
      if (!std::isfinite(v)) throw PreconditionError("linprog: non-finite objective entry");

    // Structurally infeasible zero rows.
    for (const auto& r : rows_) {
      if (is_zero_row(r.a) && (r.lower > 0.0 || r.upper < 0.0)) {
        return LpOutcome{LpStatus::Infeasible, 0.0, {}, {}, 0};
      }
    }

    // Pins from a previous objective constrain directions that were flat for
    // that objective only; drop them and rebuild the vertex.
    if (pin_count_ > 0) {
      rows_.resize(rows_.size() - pin_count_);
      pin_count_ = 0;
      hot_ = false;
      working_.clear();
    }

    LpOutcome out;
    if (!hot_) {
      x_.assign(dim_, 0.0);
      if (max_violation(x_) > kFeasTol) {
        if (!phase_one()) {
          out.status = LpStatus::Infeasible;
          return out;
        }
      }
      Vec ray;
      if (!crash(c, ray)) {
        out.status = LpStatus::Unbounded;
        out.ray = std::move(ray);
        return out;
      }
      hot_ = true;
    }
    return run_simplex(c);
  }

  const Vec& point() const { return x_; }

 private:
  static constexpr double kFeasTol = 1e-9;
  static constexpr double kOptTol = 1e-9;
  static constexpr double kDirTol = 1e-11;
  static constexpr double kPivTol = 1e-12;

  struct Active {
    int row;
    int side;  // -1 lower bound active, +1 upper bound active
  };

  static bool is_zero_row(const Vec& a) {
    for (double v : a)
      if (v != 0.0) return false;
    return true;
  }

  double row_value(int i) const { return dot(rows_[i].a, x_); }

  double max_violation(const Vec& x) const {
    double worst = 0.0;
    for (const auto& r : rows_) {
      const double v = dot(r.a, x);
      if (r.lower > -kInf) worst = std::max(worst, r.lower - v);
      if (r.upper < kInf) worst = std::max(worst, v - r.upper);
    }
    return worst;
  }

  // --- dense DxD LU with partial pivoting over the working-set rows ---------

  void factorize() {
    const int D = dim_;
    lu_.assign(static_cast<std::size_t>(D) * D, 0.0);
    perm_.resize(D);
    for (int i = 0; i < D; ++i) {
      const Vec& a = rows_[working_[i].row].a;
      for (int j = 0; j < D; ++j) lu_[static_cast<std::size_t>(i) * D + j] = a[j];
    }
    for (int i = 0; i < D; ++i) perm_[i] = i;
    for (int k = 0; k < D; ++k) {
      int piv = k;
      double best = std::abs(lu_[static_cast<std::size_t>(k) * D + k]);
      for (int i = k + 1; i < D; ++i) {
        const double v = std::abs(lu_[static_cast<std::size_t>(i) * D + k]);
        if (v > best) {
          best = v;
          piv = i;
        }
      }
      if (best < kPivTol)
        throw InternalError("linprog: working-set basis numerically singular (pivot " +
                            std::to_string(best) + " at elimination step " + std::to_string(k) +
                            ")");
      if (piv != k) {
        for (int j = 0; j < D; ++j)
          std::swap(lu_[static_cast<std::size_t>(piv) * D + j],
                    lu_[static_cast<std::size_t>(k) * D + j]);
        std::swap(perm_[piv], perm_[k]);
      }
      const double inv = 1.0 / lu_[static_cast<std::size_t>(k) * D + k];
      for (int i = k + 1; i < D; ++i) {
        const double f = lu_[static_cast<std::size_t>(i) * D + k] * inv;
        lu_[static_cast<std::size_t>(i) * D + k] = f;
        if (f != 0.0)
          for (int j = k + 1; j < D; ++j)
            lu_[static_cast<std::size_t>(i) * D + j] -= f * lu_[static_cast<std::size_t>(k) * D + j];
      }
    }
  }

  // Solve B p = rhs where B rows are the working-set rows (PA = LU layout).
  Vec solve_B(const Vec& rhs) const {
    const int D = dim_;
    Vec y(D);
    for (int i = 0; i < D; ++i) {
      double s = rhs[perm_[i]];
      for (int j = 0; j < i; ++j) s -= lu_[static_cast<std::size_t>(i) * D + j] * y[j];
      y[i] = s;
    }
    for (int i = D - 1; i >= 0; --i) {
      double s = y[i];
      for (int j = i + 1; j < D; ++j) s -= lu_[static_cast<std::size_t>(i) * D + j] * y[j];
      y[i] = s / lu_[static_cast<std::size_t>(i) * D + i];
    }
    return y;
  }

  // --- geometry steps --------------------------------------------------------

  struct RatioHit {
    double alpha = kInf;
    int row = -1;
    int side = 0;
  };

  // Max feasible step from x_ along p over rows outside the working set.
  // `flip_row` (>=0) additionally tests the opposite bound of the row being
  // dropped. Bland: among blockers within tolerance of the best step, the
  // smallest row index wins.
  RatioHit ratio_test(const Vec& p, int flip_row) const {
    RatioHit hit;
    in_working_.assign(rows_.size(), 0);
    for (const auto& w : working_) in_working_[w.row] = 1;
    for (int i = 0; i < static_cast<int>(rows_.size()); ++i) {
      if (in_working_[i] && i != flip_row) continue;
      const auto& r = rows_[i];
      const double g = dot(r.a, p);
      double lim = kInf;
      int side = 0;
      if (g > kDirTol && r.upper < kInf) {
        lim = (r.upper - row_value(i)) / g;
        side = +1;
      } else if (g < -kDirTol && r.lower > -kInf) {
        lim = (r.lower - row_value(i)) / g;
        side = -1;
      } else {
        continue;
      }
      if (lim < 0.0) lim = 0.0;
      const double slack =
          1e-12 * (1.0 + (std::isfinite(hit.alpha) ? std::abs(hit.alpha) : 0.0));
      if (hit.row < 0 || lim < hit.alpha - slack) {
        hit = {lim, i, side};
      } else if (lim <= hit.alpha + slack && i < hit.row) {
        hit = {std::min(lim, hit.alpha), i, side};
      }
    }
    return hit;
  }

  void take_step(double alpha, const Vec& p) {
    for (int j = 0; j < dim_; ++j) x_[j] += alpha * p[j];
  }

  // Nonzero direction in the null space of the current working-set rows.
  // Gaussian elimination with partial pivoting; the first free column becomes
  // the unit coordinate. Requires |working_| < dim_.
  Vec null_direction() const {
    const int k = static_cast<int>(working_.size());
    const int D = dim_;
    std::vector<double> M(static_cast<std::size_t>(k) * D, 0.0);
    for (int i = 0; i < k; ++i) {
      const Vec& a = rows_[working_[i].row].a;
      for (int j = 0; j < D; ++j) M[static_cast<std::size_t>(i) * D + j] = a[j];
    }
    std::vector<int> pivcol;
    int row = 0;
    for (int col = 0; col < D && row < k; ++col) {
      int piv = -1;
      double best = 1e-12;
      for (int i = row; i < k; ++i) {
        const double v = std::abs(M[static_cast<std::size_t>(i) * D + col]);
        if (v > best) {
          best = v;
          piv = i;
        }
      }
      if (piv < 0) continue;
      if (piv != row)
        for (int j = 0; j < D; ++j)
          std::swap(M[static_cast<std::size_t>(piv) * D + j],
                    M[static_cast<std::size_t>(row) * D + j]);
      const double inv = 1.0 / M[static_cast<std::size_t>(row) * D + col];
      for (int i = 0; i < k; ++i) {
        if (i == row) continue;
        const double f = M[static_cast<std::size_t>(i) * D + col] * inv;
        if (f != 0.0)
          for (int j = col; j < D; ++j)
            M[static_cast<std::size_t>(i) * D + j] -= f * M[static_cast<std::size_t>(row) * D + j];
      }
      pivcol.push_back(col);
      ++row;
    }
    // first non-pivot column
    int free_col = -1;
    {
      std::vector<char> isp(D, 0);
      for (int c : pivcol) isp[c] = 1;
      for (int j = 0; j < D; ++j)
        if (!isp[j]) {
          free_col = j;
          break;
        }
    }
    if (free_col < 0)
      throw InternalError("linprog: no null direction available (working set already full)");
    Vec p(D, 0.0);
    p[free_col] = 1.0;
    for (int i = static_cast<int>(pivcol.size()) - 1; i >= 0; --i) {
      const int pc = pivcol[i];
      double s = M[static_cast<std::size_t>(i) * D + free_col] * p[free_col];
      for (int j = pc + 1; j < D; ++j)
        if (j != free_col) s += M[static_cast<std::size_t>(i) * D + j] * p[j];
      p[pc] = -s / M[static_cast<std::size_t>(i) * D + pc];
    }
    return p;
  }

  // Build a vertex from the current feasible point. Returns false (with the
  // improving ray) when the problem is unbounded. Directions that no finite
  // bound blocks and that are objective-flat get pinned by a synthetic
  // equality row on their largest coordinate.
  bool crash(const Vec& c, Vec& ray_out) {
    working_.clear();
    int guard = 0;
    while (static_cast<int>(working_.size()) < dim_) {
      if (++guard > 4 * dim_ + 16)
        throw InternalError("linprog: crash failed to assemble a vertex");
      Vec p = null_direction();
      double s = dot(c, p);
      if (s < 0.0) {
        for (double& v : p) v = -v;
        s = -s;
      }
      RatioHit hit = ratio_test(p, -1);
      if (hit.row >= 0) {
        take_step(hit.alpha, p);
        working_.push_back({hit.row, hit.side});
        continue;
      }
      if (s > kOptTol) {
        ray_out = p;
        return false;
      }
      for (double& v : p) v = -v;
      hit = ratio_test(p, -1);
      if (hit.row >= 0) {
        take_step(hit.alpha, p);
        working_.push_back({hit.row, hit.side});
        continue;
      }
      // Full feasible line, flat for the objective: pin it.
      int k = 0;
      for (int j = 1; j < dim_; ++j)
        if (std::abs(p[j]) > std::abs(p[k])) k = j;
      LinearProgram::Row pin;
      pin.a.assign(dim_, 0.0);
      pin.a[k] = 1.0;
      pin.lower = pin.upper = x_[k];
      rows_.push_back(std::move(pin));
      ++pin_count_;
      working_.push_back({static_cast<int>(rows_.size()) - 1, +1});
    }
    return true;
  }

  LpOutcome run_simplex(const Vec& c) {
    LpOutcome out;
    const int max_iter = 2000 + 200 * static_cast<int>(rows_.size() + dim_);
    for (int iter = 0; iter < max_iter; ++iter) {
      factorize();
      const Vec lambda = solve_BT_objective(c);
      int drop = -1;
      int drop_row_id = rows_.size();
      for (int idx = 0; idx < dim_; ++idx) {
        const auto& w = working_[idx];
        const auto& r = rows_[w.row];
        if (r.lower == r.upper) continue;  // equality or pin: free multiplier
        const bool bad = (w.side == +1 && lambda[idx] < -kOptTol) ||
                         (w.side == -1 && lambda[idx] > kOptTol);
        if (bad && w.row < drop_row_id) {
          drop = idx;
          drop_row_id = w.row;
        }
      }
      if (drop < 0) {
        out.status = LpStatus::Optimal;
        out.solution = x_;
        out.optimum = dot(c, x_);
        out.iterations = iter;
        verify_feasible();
        return out;
      }
      Vec rhs(dim_, 0.0);
      rhs[drop] = -working_[drop].side;  // move off the active bound inward
      const Vec p = solve_B(rhs);
      const RatioHit hit = ratio_test(p, working_[drop].row);
      if (hit.row < 0) {
        out.status = LpStatus::Unbounded;
        out.ray = p;
        out.iterations = iter;
        hot_ = false;
        return out;
      }
      take_step(hit.alpha, p);
      working_[drop] = {hit.row, hit.side};
    }
    throw InternalError("linprog: simplex iteration cap exceeded");
  }

  // Multipliers solving B^T lambda = c, indexed by working-set position.
  // With PB = LU: B^T = U^T L^T P, so solve U^T y = c, L^T z = y, lambda = P^-1 z.
  Vec solve_BT_objective(const Vec& c) const {
    const int D = dim_;
    // forward: U^T y = c
    Vec y(D);
    for (int i = 0; i < D; ++i) {
      double s = c[i];
      for (int j = 0; j < i; ++j) s -= lu_[static_cast<std::size_t>(j) * D + i] * y[j];
      y[i] = s / lu_[static_cast<std::size_t>(i) * D + i];
    }
    // backward: L^T z = y
    Vec z(D);
    for (int i = D - 1; i >= 0; --i) {
      double s = y[i];
      for (int j = i + 1; j < D; ++j) s -= lu_[static_cast<std::size_t>(j) * D + i] * z[j];
      z[i] = s;
    }
    // undo permutation: row i of B sits at position perm-inverse; lambda for
    // working row w equals z at the permuted slot.
    Vec lambda(D);
    for (int i = 0; i < D; ++i) lambda[perm_[i]] = z[i];
    return lambda;
  }

  void verify_feasible() const {
    const int real_rows = static_cast<int>(rows_.size()) - pin_count_;
    for (int i = 0; i < real_rows; ++i) {
      const auto& r = rows_[i];
      const double v = dot(r.a, x_);
      const double tol = 1e-8 * (1.0 + std::max(std::abs(r.lower) == kInf ? 0.0 : std::abs(r.lower),
                                                std::abs(r.upper) == kInf ? 0.0 : std::abs(r.upper)));
      if ((r.lower > -kInf && v < r.lower - tol) || (r.upper < kInf && v > r.upper + tol))
        throw InternalError("linprog: post-hoc feasibility check failed on row " +
                            std::to_string(i) + " (value " + std::to_string(v) + ")");
    }
  }

  // Phase 1: minimize a single relaxation variable t >= 0 with every finite
  // bound widened by t. (0, t0) is feasible for the relaxed rows by
  // construction, and the relaxed problem is bounded below by t = 0.
  bool phase_one() {
    const int D = dim_ + 1;
    std::vector<LinearProgram::Row> rrows;
    for (const auto& r : rows_) {
      if (is_zero_row(r.a)) continue;  // zero rows validated in maximize()
      if (r.lower > -kInf) {
        LinearProgram::Row rr;
        rr.a = r.a;
        rr.a.push_back(1.0);
        rr.lower = r.lower;
        rr.upper = kInf;
        rrows.push_back(std::move(rr));
      }
      if (r.upper < kInf) {
        LinearProgram::Row rr;
        rr.a = r.a;
        rr.a.push_back(-1.0);
        rr.lower = -kInf;
        rr.upper = r.upper;
        rrows.push_back(std::move(rr));
      }
    }
    LinearProgram::Row tnn;
    tnn.a.assign(D, 0.0);
    tnn.a[D - 1] = 1.0;
    tnn.lower = 0.0;
    rrows.push_back(std::move(tnn));

    RowPolytopeSimplex aux(D, std::move(rrows));
    aux.x_.assign(D, 0.0);
    aux.x_[D - 1] = max_violation(Vec(dim_, 0.0)) + 1.0;
    Vec c(D, 0.0);
    c[D - 1] = -1.0;
    Vec ray;
    if (!aux.crash(c, ray))
      throw InternalError("linprog: phase-1 relaxation reported unbounded");
    aux.hot_ = true;
    const LpOutcome r = aux.run_simplex(c);
    if (r.status != LpStatus::Optimal)
      throw InternalError("linprog: phase-1 relaxation did not reach an optimum");
    if (aux.x_[D - 1] > kFeasTol) return false;
    for (int j = 0; j < dim_; ++j) x_[j] = aux.x_[j];
    return true;
  }

  int dim_;
  std::vector<LinearProgram::Row> rows_;
  int pin_count_ = 0;
  Vec x_;
  std::vector<Active> working_;
  bool hot_ = false;

  // scratch
  std::vector<double> lu_;
  std::vector<int> perm_;
  mutable std::vector<char> in_working_;
};

inline LpOutcome solve(const LinearProgram& lp) {
  RowPolytopeSimplex solver(static_cast<int>(lp.objective.size()), lp.rows);
  return solver.maximize(lp.objective);
}

}  // namespace remezrig

#endif  // REMEZRIG_LINPROG_HPP
