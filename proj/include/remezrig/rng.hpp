// Deterministic random source for all randomized sweeps. Doubles are derived
// from raw engine bits so a seed pins the byte stream independent of the
// standard library's distribution implementations.
#ifndef REMEZRIG_RNG_HPP
#define REMEZRIG_RNG_HPP

#include <cstdint>
#include <random>

#include "remezrig/core.hpp"
#include "remezrig/polynomial.hpp"

namespace remezrig {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform in [0, 1).
  double unit() { return (eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  /// Uniform in [-1, 1].
  double sym() { return uniform(-1.0, 1.0); }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Vec point_in_ball(int n) {
    while (true) {
      Vec x(n);
      double r2 = 0.0;
      for (int i = 0; i < n; ++i) {
        x[i] = sym();
        r2 += x[i] * x[i];
      }
      if (r2 <= 1.0) return x;
    }
  }

  /// Dense polynomial with iid uniform[-1,1] coefficients.
  MultiPoly poly(int n, int d) {
    MultiPoly p(n, d);
    for (double& c : p.coeffs()) c = sym();
    return p;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace remezrig

#endif  // REMEZRIG_RNG_HPP
