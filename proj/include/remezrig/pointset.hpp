#ifndef REMEZRIG_POINTSET_HPP
#define REMEZRIG_POINTSET_HPP

#include <string>
#include <utility>
#include <vector>

#include "remezrig/core.hpp"

namespace remezrig {

/// Finite candidate zero set Z inside the closed unit ball, with the minimal
/// pairwise separation rho computed once and cached.
class PointSet {
 public:
  PointSet(int n, std::vector<Vec> points) : n_(n), points_(std::move(points)) {
    if (n_ < 1) throw PreconditionError("PointSet: dimension must be >= 1");
    if (points_.empty()) throw PreconditionError("PointSet: at least one point required");
    for (const Vec& p : points_) {
      if (static_cast<int>(p.size()) != n_)
        throw PreconditionError("PointSet: point dimension mismatch");
      if (norm2(p) > 1.0 + 1e-12)
        throw PreconditionError("PointSet: point outside the closed unit ball");
    }
    rho_ = kInf;
    for (std::size_t i = 0; i < points_.size(); ++i)
      for (std::size_t j = i + 1; j < points_.size(); ++j) {
        Vec diff(n_);
        for (int k = 0; k < n_; ++k) diff[k] = points_[i][k] - points_[j][k];
        const double dist = norm2(diff);
        if (dist < 1e-14)
          throw PreconditionError("PointSet: duplicate points at indices " + std::to_string(i) +
                                  " and " + std::to_string(j));
        if (dist < rho_) rho_ = dist;
      }
  }

  int dimension() const { return n_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<Vec>& points() const { return points_; }
  const Vec& operator[](std::size_t i) const { return points_[i]; }
  /// Minimal pairwise distance; +inf for a singleton.
  double rho() const { return rho_; }

 private:
  int n_;
  std::vector<Vec> points_;
  double rho_;
};

}  // namespace remezrig

#endif  // REMEZRIG_POINTSET_HPP
