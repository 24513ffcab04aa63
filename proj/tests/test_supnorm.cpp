#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "oracles.hpp"
#include "remezrig/rng.hpp"
#include "remezrig/supnorm.hpp"

using namespace remezrig;

TEST_CASE("sup_norm_ball: P = x on [-1,1]") {
  MultiPoly p(1, 1, Vec{0.0, 1.0});
  const auto enc = sup_norm_ball(p, 0.01);
  REQUIRE(enc.grid_max == 1.0);
  REQUIRE(enc.certified_max >= 1.0);
  REQUIRE(enc.certified_max <= 1.02);
}

TEST_CASE("sup_norm_ball: T_3 equioscillates at 1") {
  MultiPoly t3(1, 3, Vec{0.0, -3.0, 0.0, 4.0});
  const auto enc = sup_norm_ball(t3, 0.01);
  REQUIRE(enc.grid_max == Catch::Approx(1.0).margin(1e-12));
  REQUIRE(enc.certified_max >= 1.0);
  REQUIRE(enc.certified_max <= 1.1);
}

TEST_CASE("sup_norm_ball: ellipse polynomial, oracle-verified enclosure") {
  const double h = 0.2;
  MultiPoly p(2, 2);
  p.at({0, 0}) = -h * h / 4.0;
  p.at({2, 0}) = h * h;
  p.at({0, 2}) = 1.0;
  const auto enc = sup_norm_ball(p, 0.01);
  // true sup = 1 - h^2/4 = 0.99, attained at (0, +-1)
  const double oracle = oracles::dense_sup_ball(p, 1e-3);
  REQUIRE(oracle == Catch::Approx(0.99).margin(1e-6));
  REQUIRE(enc.grid_max <= oracle + 1e-12);
  REQUIRE(enc.certified_max >= oracle);
  REQUIRE(enc.certified_max >= 0.99);
  REQUIRE(enc.certified_max <= 1.05);
}

TEST_CASE("sup_norm_ball: inadmissible step is rejected with the limit named") {
  MultiPoly p(2, 3);
  p.at({3, 0}) = 1.0;
  REQUIRE_THROWS_MATCHES(sup_norm_ball(p, 0.2), PreconditionError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("not admissible")));
}

TEST_CASE("sup_norm_ball sandwich: certified >= dense oracle >= grid max") {
  Rng rng(97);
  struct Cfg {
    int n;
    int count;
    double impl_step;
    double oracle_step;
  };
  const Cfg cfgs[] = {{1, 40, 0.004, 0.002}, {2, 40, 0.02, 0.01}, {3, 20, 0.03, 0.02}};
  for (const auto& cfg : cfgs) {
    for (int t = 0; t < cfg.count; ++t) {
      const int d = 1 + t % 4;
      MultiPoly p = rng.poly(cfg.n, d);
      const double step = std::min(cfg.impl_step, 0.9 * max_admissible_step(cfg.n, d));
      const auto enc = sup_norm_ball(p, step);
      const double oracle = oracles::polished_sup_ball(p, cfg.oracle_step);
      REQUIRE(enc.grid_max <= oracle + 1e-8 * (1.0 + oracle));
      REQUIRE(enc.certified_max >= oracle - 1e-9);
    }
  }
}

TEST_CASE("markov_derivative_bound closed forms") {
  REQUIRE(markov_derivative_bound(2, 2, 0) == 1.0);
  REQUIRE(markov_derivative_bound(1, 1, 1) == 1.0);
  REQUIRE(markov_derivative_bound(2, 2, 2) == 16.0);
  REQUIRE(markov_derivative_bound(3, 4, 1) == 48.0);
  REQUIRE_THROWS_AS(markov_derivative_bound(2, 2, 3), PreconditionError);
}

TEST_CASE("markov bound dominates sampled M_k on normalized random polynomials") {
  Rng rng(101);
  for (int t = 0; t < 400; ++t) {
    const int d = 1 + t % 3;
    MultiPoly p = rng.poly(2, d);
    const auto enc = sup_norm_ball(p, 0.04);
    if (enc.certified_max < 1e-9) continue;
    for (double& c : p.coeffs()) c /= enc.certified_max;
    for (int k = 1; k <= std::min(2, d); ++k) {
      const double mk = oracles::sampled_Mk(p, k, 0.1);
      REQUIRE(mk <= markov_derivative_bound(2, d, k) + 1e-9);
    }
  }
}
