// Families of disjoint compact domains inside the unit ball, restricted to
// primitive shapes with closed-form volumes. Disjointness and containment are
// certified by conservative shape-pair tests; borderline-tangent inputs are
// rejected rather than guessed about.
#ifndef REMEZRIG_DOMAINS_HPP
#define REMEZRIG_DOMAINS_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "remezrig/core.hpp"

namespace remezrig {

struct DomainSpec {
  enum class Shape { Ball, Box, Ellipse };

  Shape shape = Shape::Ball;
  Vec center;    // Ball, Ellipse
  double radius = 0.0;  // Ball
  Vec lo, hi;    // Box
  Vec semiaxes;  // Ellipse

  static DomainSpec ball(Vec c, double r) {
    DomainSpec s;
    s.shape = Shape::Ball;
    s.center = std::move(c);
    s.radius = r;
    return s;
  }
  static DomainSpec box(Vec lo, Vec hi) {
    DomainSpec s;
    s.shape = Shape::Box;
    s.lo = std::move(lo);
    s.hi = std::move(hi);
    return s;
  }
  static DomainSpec ellipse(Vec c, Vec semi) {
    DomainSpec s;
    s.shape = Shape::Ellipse;
    s.center = std::move(c);
    s.semiaxes = std::move(semi);
    return s;
  }

  int dimension() const {
    switch (shape) {
      case Shape::Ball: return static_cast<int>(center.size());
      case Shape::Box: return static_cast<int>(lo.size());
      default: return static_cast<int>(center.size());
    }
  }

  void validate() const {
    const int n = dimension();
    if (n < 1) throw PreconditionError("DomainSpec: empty shape");
    switch (shape) {
      case Shape::Ball:
        if (!(radius > 0.0)) throw PreconditionError("DomainSpec: ball radius must be positive");
        break;
      case Shape::Box:
        if (static_cast<int>(hi.size()) != n)
          throw PreconditionError("DomainSpec: box corner dimension mismatch");
        for (int i = 0; i < n; ++i)
          if (!(hi[i] > lo[i]))
            throw PreconditionError("DomainSpec: box needs hi > lo on every axis");
        break;
      case Shape::Ellipse:
        if (static_cast<int>(semiaxes.size()) != n)
          throw PreconditionError("DomainSpec: ellipse semiaxes dimension mismatch");
        for (double s : semiaxes)
          if (!(s > 0.0)) throw PreconditionError("DomainSpec: ellipse semiaxes must be positive");
        break;
    }
  }

  double volume() const {
    const int n = dimension();
    switch (shape) {
      case Shape::Ball:
        return ball_volume(n) * std::pow(radius, n);
      case Shape::Box: {
        double v = 1.0;
        for (int i = 0; i < n; ++i) v *= hi[i] - lo[i];
        return v;
      }
      default: {
        double v = ball_volume(n);
        for (double s : semiaxes) v *= s;
        return v;
      }
    }
  }

  bool inside_unit_ball() const {
    const int n = dimension();
    switch (shape) {
      case Shape::Ball:
        return norm2(center) + radius <= 1.0 + 1e-12;
      case Shape::Box: {
        // corners are the extreme points of a box
        for (int mask = 0; mask < (1 << n); ++mask) {
          Vec c(n);
          for (int i = 0; i < n; ++i) c[i] = (mask >> i & 1) ? hi[i] : lo[i];
          if (norm2(c) > 1.0 + 1e-12) return false;
        }
        return true;
      }
      default:
        return norm2(center) + *std::max_element(semiaxes.begin(), semiaxes.end()) <=
               1.0 + 1e-12;
    }
  }

  bool contains(const Vec& x, double tol = 0.0) const {
    const int n = dimension();
    switch (shape) {
      case Shape::Ball: {
        Vec d(n);
        for (int i = 0; i < n; ++i) d[i] = x[i] - center[i];
        return norm2(d) <= radius + tol;
      }
      case Shape::Box:
        for (int i = 0; i < n; ++i)
          if (x[i] < lo[i] - tol || x[i] > hi[i] + tol) return false;
        return true;
      default: {
        double q = 0.0;
        for (int i = 0; i < n; ++i) {
          const double t = (x[i] - center[i]) / semiaxes[i];
          q += t * t;
        }
        return q <= 1.0 + tol;
      }
    }
  }

  /// Deterministic samples on the boundary; `count` controls resolution.
  std::vector<Vec> boundary_samples(int count) const {
    const int n = dimension();
    std::vector<Vec> out;
    auto push_sphere = [&](const Vec& c, const Vec& semi) {
      if (n == 1) {
        out.push_back({c[0] - semi[0]});
        out.push_back({c[0] + semi[0]});
      } else if (n == 2) {
        for (int i = 0; i < count; ++i) {
          const double th = 2.0 * M_PI * i / count;
          out.push_back({c[0] + semi[0] * std::cos(th), c[1] + semi[1] * std::sin(th)});
        }
      } else {
        const int K = std::max(4, static_cast<int>(std::sqrt(static_cast<double>(count))));
        for (int i = 0; i <= K; ++i)
          for (int j = 0; j < 2 * K; ++j) {
            const double ph = M_PI * i / K, th = M_PI * j / K;
            out.push_back({c[0] + semi[0] * std::sin(ph) * std::cos(th),
                           c[1] + semi[1] * std::sin(ph) * std::sin(th),
                           c[2] + semi[2] * std::cos(ph)});
          }
      }
    };
    switch (shape) {
      case Shape::Ball:
        push_sphere(center, Vec(n, radius));
        break;
      case Shape::Ellipse:
        push_sphere(center, semiaxes);
        break;
      case Shape::Box: {
        if (n == 1) {
          out.push_back({lo[0]});
          out.push_back({hi[0]});
        } else if (n == 2) {
          const int K = std::max(2, count / 4);
          for (int i = 0; i <= K; ++i) {
            const double tx = lo[0] + (hi[0] - lo[0]) * i / K;
            const double ty = lo[1] + (hi[1] - lo[1]) * i / K;
            out.push_back({tx, lo[1]});
            out.push_back({tx, hi[1]});
            out.push_back({lo[0], ty});
            out.push_back({hi[0], ty});
          }
        } else {
          const int K = std::max(2, static_cast<int>(std::sqrt(count / 6.0)));
          for (int axis = 0; axis < 3; ++axis)
            for (int side = 0; side < 2; ++side)
              for (int i = 0; i <= K; ++i)
                for (int j = 0; j <= K; ++j) {
                  Vec p(3);
                  p[axis] = side ? hi[axis] : lo[axis];
                  const int a1 = (axis + 1) % 3, a2 = (axis + 2) % 3;
                  p[a1] = lo[a1] + (hi[a1] - lo[a1]) * i / K;
                  p[a2] = lo[a2] + (hi[a2] - lo[a2]) * j / K;
                  out.push_back(p);
                }
        }
        break;
      }
    }
    return out;
  }

  /// Lattice samples of the interior at the given step.
  std::vector<Vec> interior_samples(double step) const {
    const int n = dimension();
    Vec blo(n), bhi(n);
    switch (shape) {
      case Shape::Ball:
        for (int i = 0; i < n; ++i) {
          blo[i] = center[i] - radius;
          bhi[i] = center[i] + radius;
        }
        break;
      case Shape::Box:
        blo = lo;
        bhi = hi;
        break;
      case Shape::Ellipse:
        for (int i = 0; i < n; ++i) {
          blo[i] = center[i] - semiaxes[i];
          bhi[i] = center[i] + semiaxes[i];
        }
        break;
    }
    std::vector<Vec> out;
    std::vector<int> steps(n), k(n, 0);
    for (int i = 0; i < n; ++i) steps[i] = std::max(1, static_cast<int>((bhi[i] - blo[i]) / step));
    while (true) {
      Vec x(n);
      for (int i = 0; i < n; ++i) x[i] = blo[i] + (bhi[i] - blo[i]) * k[i] / steps[i];
      if (contains(x, -1e-12)) out.push_back(x);
      int pos = n - 1;
      while (pos >= 0 && k[pos] == steps[pos]) {
        k[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++k[pos];
    }
    return out;
  }

  /// Conservative pairwise disjointness; tangent or undecidable pairs fail.
  static bool disjoint(const DomainSpec& a, const DomainSpec& b) {
    const int n = a.dimension();
    auto dist = [&](const Vec& p, const Vec& q) {
      Vec d(n);
      for (int i = 0; i < n; ++i) d[i] = p[i] - q[i];
      return norm2(d);
    };
    using S = Shape;
    if (a.shape == S::Ball && b.shape == S::Ball)
      return dist(a.center, b.center) > a.radius + b.radius + 1e-12;
    if (a.shape == S::Box && b.shape == S::Box) {
      for (int i = 0; i < n; ++i)
        if (a.hi[i] < b.lo[i] - 1e-12 || b.hi[i] < a.lo[i] - 1e-12) return true;
      return false;
    }
    if (a.shape == S::Ball && b.shape == S::Box) {
      double d2 = 0.0;
      for (int i = 0; i < n; ++i) {
        const double c = std::clamp(a.center[i], b.lo[i], b.hi[i]);
        d2 += (a.center[i] - c) * (a.center[i] - c);
      }
      return std::sqrt(d2) > a.radius + 1e-12;
    }
    if (a.shape == S::Box && b.shape == S::Ball) return disjoint(b, a);
    if (a.shape == S::Ellipse && b.shape == S::Box) {
      // axis-aligned: the ellipse quadratic is separable, so its minimum over
      // the box is at the clamped center
      double q = 0.0;
      for (int i = 0; i < n; ++i) {
        const double c = std::clamp(a.center[i], b.lo[i], b.hi[i]);
        const double t = (a.center[i] - c) / a.semiaxes[i];
        q += t * t;
      }
      return q > 1.0 + 1e-12;
    }
    if (a.shape == S::Box && b.shape == S::Ellipse) return disjoint(b, a);
    // remaining pairs involving ellipses: bound the ellipse by its
    // circumscribed ball
    const double ra = a.shape == S::Ellipse
                          ? *std::max_element(a.semiaxes.begin(), a.semiaxes.end())
                          : a.radius;
    const double rb = b.shape == S::Ellipse
                          ? *std::max_element(b.semiaxes.begin(), b.semiaxes.end())
                          : b.radius;
    return dist(a.center, b.center) > ra + rb + 1e-12;
  }
};

/// Disjoint compact domains in B^n with volumes sorted descending; lambda_j is
/// the volume normalized by the unit-ball volume.
class DomainFamily {
 public:
  DomainFamily(int n, std::vector<DomainSpec> domains)
      : n_(n), domains_(std::move(domains)) {
    if (n_ < 1) throw PreconditionError("DomainFamily: dimension must be >= 1");
    if (domains_.empty()) throw PreconditionError("DomainFamily: at least one domain required");
    for (std::size_t i = 0; i < domains_.size(); ++i) {
      const auto& d = domains_[i];
      d.validate();
      if (d.dimension() != n_)
        throw PreconditionError("DomainFamily: domain " + std::to_string(i) +
                                " has wrong dimension");
      if (!d.inside_unit_ball())
        throw PreconditionError("DomainFamily: domain " + std::to_string(i) +
                                " is not certified inside the unit ball");
    }
    for (std::size_t i = 0; i < domains_.size(); ++i)
      for (std::size_t j = i + 1; j < domains_.size(); ++j)
        if (!DomainSpec::disjoint(domains_[i], domains_[j]))
          throw PreconditionError("DomainFamily: domains " + std::to_string(i) + " and " +
                                  std::to_string(j) +
                                  " are not certified disjoint (tangent or overlapping)");
    order_.resize(domains_.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::vector<double> vol(domains_.size());
    for (std::size_t i = 0; i < domains_.size(); ++i) vol[i] = domains_[i].volume();
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return vol[a] > vol[b]; });
    for (int idx : order_) {
      mu_sorted_.push_back(vol[idx]);
      lambda_sorted_.push_back(vol[idx] / ball_volume(n_));
    }
  }

  int dimension() const { return n_; }
  int count() const { return static_cast<int>(domains_.size()); }
  const std::vector<DomainSpec>& domains() const { return domains_; }
  /// j-th largest domain (0-based).
  const DomainSpec& sorted_domain(int j) const { return domains_[order_[j]]; }
  int original_index(int j) const { return order_[j]; }
  double mu_sorted(int j) const { return mu_sorted_[j]; }
  double lambda_sorted(int j) const { return lambda_sorted_[j]; }

  /// (d-1)^n + 1, the number of domains degree d consumes.
  int j_d(int d) const {
    double v = 1.0;
    for (int i = 0; i < n_; ++i) v *= d - 1;
    return static_cast<int>(v) + 1;
  }

  /// Largest degree the family supports: (d-1)^n + 1 <= N.
  int d_bar() const {
    int d = 1;
    while (j_d(d + 1) <= count()) ++d;
    return d;
  }

 private:
  int n_;
  std::vector<DomainSpec> domains_;
  std::vector<int> order_;
  std::vector<double> mu_sorted_;
  std::vector<double> lambda_sorted_;
};

}  // namespace remezrig

#endif  // REMEZRIG_DOMAINS_HPP
