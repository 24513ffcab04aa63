// Dense multivariate polynomials in the graded-lexicographic monomial basis,
// exact differentiation, Chebyshev polynomials.
#ifndef REMEZRIG_POLYNOMIAL_HPP
#define REMEZRIG_POLYNOMIAL_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "remezrig/core.hpp"

namespace remezrig {

/// Monomial exponent table for fixed (n, d): all exponent vectors of total
/// degree <= d, ordered by total degree and, within a degree, lexicographically
/// descending (x1^t first, xn^t last). Shared and immutable.
class MonomialBasis {
 public:
  static const MonomialBasis& get(int n, int d) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<MonomialBasis>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{n, d}];
    if (!slot) slot.reset(new MonomialBasis(n, d));
    return *slot;
  }

  int dimension() const { return n_; }
  int degree() const { return d_; }
  std::size_t size() const { return exps_.size(); }
  const std::vector<int>& exponents(std::size_t i) const { return exps_[i]; }

  std::size_t index_of(const std::vector<int>& e) const {
    auto it = index_.find(e);
    if (it == index_.end())
      throw PreconditionError("MonomialBasis: exponent vector outside basis");
    return it->second;
  }

 private:
  MonomialBasis(int n, int d) : n_(n), d_(d) {
    if (n < 1) throw PreconditionError("MonomialBasis: dimension must be >= 1");
    if (d < 0) throw PreconditionError("MonomialBasis: degree must be >= 0");
    std::vector<int> cur(n, 0);
    for (int t = 0; t <= d; ++t) emit(cur, 0, t);
    for (std::size_t i = 0; i < exps_.size(); ++i) index_[exps_[i]] = i;
  }

  void emit(std::vector<int>& cur, int pos, int remaining) {
    if (pos == n_ - 1) {
      cur[pos] = remaining;
      exps_.push_back(cur);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      cur[pos] = e;
      emit(cur, pos + 1, remaining - e);
    }
    cur[pos] = 0;
  }

  int n_;
  int d_;
  std::vector<std::vector<int>> exps_;
  std::map<std::vector<int>, std::size_t> index_;
};

/// Real polynomial in n variables of degree <= d, dense coefficient vector in
/// graded-lex order. Value type; evaluation is linear in the coefficients.
class MultiPoly {
 public:
  MultiPoly() : n_(1), d_(0), basis_(&MonomialBasis::get(1, 0)), coeffs_(1, 0.0) {}

  MultiPoly(int n, int d)
      : n_(n), d_(d), basis_(&MonomialBasis::get(n, d)), coeffs_(basis_->size(), 0.0) {}

  MultiPoly(int n, int d, Vec coeffs)
      : n_(n), d_(d), basis_(&MonomialBasis::get(n, d)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != basis_->size())
      throw PreconditionError(
          "MultiPoly: coefficient vector has length " + std::to_string(coeffs_.size()) +
          ", expected binom(n+d,n) = " + std::to_string(basis_->size()));
  }

  int dimension() const { return n_; }
  int degree() const { return d_; }
  const Vec& coeffs() const { return coeffs_; }
  Vec& coeffs() { return coeffs_; }
  const MonomialBasis& basis() const { return *basis_; }

  double& at(const std::vector<int>& exponents) { return coeffs_[basis_->index_of(exponents)]; }

  /// Value at x by monomial accumulation with compensated summation.
  double eval(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != n_)
      throw PreconditionError("MultiPoly::eval: point dimension " + std::to_string(x.size()) +
                              " does not match polynomial dimension " + std::to_string(n_));
    // Precompute coordinate powers up to d.
    double pw[8][16];  // n <= 6 by contract, d <= 12 desk scale
    if (n_ > 6 || d_ > 12)
      return eval_general(x);
    for (int i = 0; i < n_; ++i) {
      pw[i][0] = 1.0;
      for (int k = 1; k <= d_; ++k) pw[i][k] = pw[i][k - 1] * x[i];
    }
    CompensatedSum acc;
    const std::size_t m = coeffs_.size();
    for (std::size_t j = 0; j < m; ++j) {
      const double c = coeffs_[j];
      if (c == 0.0) continue;
      const auto& e = basis_->exponents(j);
      double mono = 1.0;
      for (int i = 0; i < n_; ++i) mono *= pw[i][e[i]];
      acc.add(c * mono);
    }
    return acc.value();
  }

  double eval(const Vec& x) const { return eval(std::span<const double>(x.data(), x.size())); }

 private:
  double eval_general(std::span<const double> x) const {
    std::vector<std::vector<double>> pw(n_, std::vector<double>(d_ + 1, 1.0));
    for (int i = 0; i < n_; ++i)
      for (int k = 1; k <= d_; ++k) pw[i][k] = pw[i][k - 1] * x[i];
    CompensatedSum acc;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      const double c = coeffs_[j];
      if (c == 0.0) continue;
      const auto& e = basis_->exponents(j);
      double mono = 1.0;
      for (int i = 0; i < n_; ++i) mono *= pw[i][e[i]];
      acc.add(c * mono);
    }
    return acc.value();
  }

  int n_;
  int d_;
  const MonomialBasis* basis_;
  Vec coeffs_;
};

/// Exact partial derivative with respect to coordinate `axis`, as a coefficient
/// shuffle into the degree-(d-1) basis. For d = 0 returns the zero polynomial.
inline MultiPoly partial_derivative(const MultiPoly& p, int axis) {
  if (axis < 0 || axis >= p.dimension())
    throw PreconditionError("partial_derivative: axis out of range");
  if (p.degree() == 0) return MultiPoly(p.dimension(), 0);
  MultiPoly out(p.dimension(), p.degree() - 1);
  const auto& basis = p.basis();
  for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
    const double c = p.coeffs()[j];
    if (c == 0.0) continue;
    std::vector<int> e = basis.exponents(j);
    if (e[axis] == 0) continue;
    const int k = e[axis];
    e[axis] -= 1;
    out.coeffs()[out.basis().index_of(e)] += k * c;
  }
  return out;
}

/// All n first partials, each of degree d-1.
inline std::vector<MultiPoly> gradient(const MultiPoly& p) {
  std::vector<MultiPoly> g;
  g.reserve(p.dimension());
  for (int i = 0; i < p.dimension(); ++i) g.push_back(partial_derivative(p, i));
  return g;
}

/// Chebyshev polynomial T_d(t) by three-term recurrence (valid for all t).
inline double chebyshev_T(int d, double t) {
  if (d < 0) throw PreconditionError("chebyshev_T: degree must be >= 0");
  if (d == 0) return 1.0;
  if (d == 1) return t;
  double prev = 1.0, cur = t;
  for (int k = 2; k <= d; ++k) {
    const double next = 2.0 * t * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// -- small coefficient-space arithmetic (used by galleries and tests) --------

inline MultiPoly poly_sum(const MultiPoly& a, const MultiPoly& b, double alpha = 1.0,
                          double beta = 1.0) {
  if (a.dimension() != b.dimension())
    throw PreconditionError("poly_sum: dimension mismatch");
  const int d = std::max(a.degree(), b.degree());
  MultiPoly out(a.dimension(), d);
  for (std::size_t j = 0; j < a.coeffs().size(); ++j)
    out.coeffs()[out.basis().index_of(a.basis().exponents(j))] += alpha * a.coeffs()[j];
  for (std::size_t j = 0; j < b.coeffs().size(); ++j)
    out.coeffs()[out.basis().index_of(b.basis().exponents(j))] += beta * b.coeffs()[j];
  return out;
}

inline MultiPoly poly_product(const MultiPoly& a, const MultiPoly& b) {
  if (a.dimension() != b.dimension())
    throw PreconditionError("poly_product: dimension mismatch");
  MultiPoly out(a.dimension(), a.degree() + b.degree());
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0.0) continue;
    const auto& ea = a.basis().exponents(i);
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      if (b.coeffs()[j] == 0.0) continue;
      const auto& eb = b.basis().exponents(j);
      std::vector<int> e(ea.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.coeffs()[out.basis().index_of(e)] += a.coeffs()[i] * b.coeffs()[j];
    }
  }
  return out;
}

inline MultiPoly poly_scale(const MultiPoly& a, double s) {
  MultiPoly out = a;
  for (double& c : out.coeffs()) c *= s;
  return out;
}

inline MultiPoly poly_shift_const(const MultiPoly& a, double c0) {
  MultiPoly out = a;
  out.coeffs()[0] += c0;
  return out;
}

/// Univariate polynomial with the given roots, embedded along coordinate
/// `axis` of an n-variate basis: prod_i (x_axis - r_i).
inline MultiPoly poly_from_roots_1d(int n, int axis, const std::vector<double>& roots) {
  MultiPoly acc(n, 0);
  acc.coeffs()[0] = 1.0;
  for (double r : roots) {
    MultiPoly lin(n, 1);
    lin.coeffs()[0] = -r;
    std::vector<int> e(n, 0);
    e[axis] = 1;
    lin.at(e) = 1.0;
    acc = poly_product(acc, lin);
  }
  return acc;
}

}  // namespace remezrig

#endif  // REMEZRIG_POLYNOMIAL_HPP
