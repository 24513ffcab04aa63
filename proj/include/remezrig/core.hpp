// Shared basics: error types, compensated summation, small vector helpers,
// ball sampling lattices.
#ifndef REMEZRIG_CORE_HPP
#define REMEZRIG_CORE_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace remezrig {

using Vec = std::vector<double>;

/// Violated caller contract (bad input, inadmissible parameter). CLI exit 2.
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A condition that is mathematically impossible given validated inputs,
/// or a numerical breakdown the engine refuses to mask. CLI exit 3.
struct InternalError : std::runtime_error {
  explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
};

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Neumaier-compensated accumulator.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      carry += (sum - t) + x;
    else
      carry += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + carry; }
};

inline double dot(const Vec& a, const Vec& b) {
  CompensatedSum s;
  for (std::size_t i = 0; i < a.size(); ++i) s.add(a[i] * b[i]);
  return s.value();
}

inline double norm2_sq(const Vec& a) {
  double s = 0.0;
  for (double v : a) s += v * v;
  return s;
}

inline double norm2(const Vec& a) { return std::sqrt(norm2_sq(a)); }

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

/// Exact in double up to 13! (desk scale caps d at 12).
inline double factorial(int k) {
  if (k < 0) throw PreconditionError("factorial: negative argument");
  if (k > 13) throw PreconditionError("factorial: argument " + std::to_string(k) +
                                      " exceeds the supported desk-scale cap 13");
  double r = 1.0;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

inline double ball_volume(int n) {
  // pi^(n/2) / Gamma(n/2 + 1)
  return std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

/// Sample points covering the closed unit ball: the cubic lattice of the given
/// step intersected with the ball, plus the just-outside lattice shell
/// normalized onto the sphere. Every ball point is within step*sqrt(n) of a
/// sample, which is what the Markov-based sup-norm certification consumes.
inline std::vector<Vec> ball_samples(int n, double step) {
  if (n < 1) throw PreconditionError("ball_samples: dimension must be >= 1");
  if (!(step > 0.0)) throw PreconditionError("ball_samples: step must be positive");
  const int K = static_cast<int>(std::ceil(1.0 / step - 1e-12));
  const double shell = 1.0 + 0.5 * step * std::sqrt(static_cast<double>(n)) + 1e-12;
  std::vector<Vec> out;
  std::vector<int> k(n, -K);
  Vec x(n);
  while (true) {
    double r2 = 0.0;
    for (int i = 0; i < n; ++i) {
      x[i] = k[i] * step;
      r2 += x[i] * x[i];
    }
    const double r = std::sqrt(r2);
    if (r <= 1.0) {
      out.push_back(x);
    } else if (r <= shell) {
      Vec y(n);
      for (int i = 0; i < n; ++i) y[i] = x[i] / r;
      out.push_back(std::move(y));
    }
    int pos = n - 1;
    while (pos >= 0 && k[pos] == K) {
      k[pos] = -K;
      --pos;
    }
    if (pos < 0) break;
    ++k[pos];
  }
  return out;
}

}  // namespace remezrig

#endif  // REMEZRIG_CORE_HPP
