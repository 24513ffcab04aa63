#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "oracles.hpp"
#include "remezrig/polynomial.hpp"
#include "remezrig/rng.hpp"

using namespace remezrig;

namespace {

MultiPoly ellipse_poly(double h) {
  // h^2 x^2 + y^2 - h^2/4
  MultiPoly p(2, 2);
  p.at({0, 0}) = -h * h / 4.0;
  p.at({2, 0}) = h * h;
  p.at({0, 2}) = 1.0;
  return p;
}

}  // namespace

TEST_CASE("graded-lex basis ordering for n=2, d=2") {
  const auto& b = MonomialBasis::get(2, 2);
  REQUIRE(b.size() == 6);
  const std::vector<std::vector<int>> expected = {{0, 0}, {1, 0}, {0, 1},
                                                  {2, 0}, {1, 1}, {0, 2}};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    REQUIRE(b.exponents(i) == expected[i]);
    REQUIRE(b.index_of(expected[i]) == i);
  }
}

TEST_CASE("coefficient vector length is validated") {
  REQUIRE_THROWS_AS(MultiPoly(2, 2, Vec{1.0, 2.0}), PreconditionError);
  REQUIRE_NOTHROW(MultiPoly(2, 2, Vec(6, 0.0)));
  REQUIRE(MultiPoly(3, 4).coeffs().size() == binomial(7, 3));
}

TEST_CASE("eval: constant term at the origin") {
  MultiPoly p(2, 2);
  p.at({0, 0}) = -1.0;
  p.at({2, 0}) = 1.0;
  p.at({0, 2}) = 1.0;
  REQUIRE(p.eval(Vec{0.0, 0.0}) == -1.0);
}

TEST_CASE("eval: ellipse polynomial vanishes at (0, h/2)") {
  const double h = 0.2;
  REQUIRE(ellipse_poly(h).eval(Vec{0.0, h / 2.0}) == 0.0);
}

TEST_CASE("eval: dimension mismatch is rejected") {
  MultiPoly p(2, 1, Vec{0.0, 1.0, 0.0});
  REQUIRE_THROWS_AS(p.eval(Vec{1.0}), PreconditionError);
}

TEST_CASE("eval matches the naive monomial-expansion oracle") {
  Rng rng(17);
  MultiPoly p = rng.poly(2, 3);
  for (int t = 0; t < 100; ++t) {
    const Vec x = rng.point_in_ball(2);
    REQUIRE(std::abs(p.eval(x) - oracles::naive_eval(p, x)) < 1e-12);
  }
}

TEST_CASE("eval is linear in the coefficients") {
  Rng rng(29);
  const MultiPoly p = rng.poly(3, 3);
  const MultiPoly q = rng.poly(3, 3);
  for (int t = 0; t < 50; ++t) {
    const double a = rng.sym(), b = rng.sym();
    const MultiPoly combo = poly_sum(p, q, a, b);
    const Vec x = rng.point_in_ball(3);
    REQUIRE(std::abs(combo.eval(x) - (a * p.eval(x) + b * q.eval(x))) < 1e-13);
  }
}

TEST_CASE("gradient: x^2+y^2 and the ellipse polynomial") {
  MultiPoly p(2, 2);
  p.at({2, 0}) = 1.0;
  p.at({0, 2}) = 1.0;
  auto g = gradient(p);
  REQUIRE(g.size() == 2);
  REQUIRE(g[0].degree() == 1);
  REQUIRE(g[0].at({1, 0}) == 2.0);
  REQUIRE(g[0].at({0, 1}) == 0.0);
  REQUIRE(g[1].at({0, 1}) == 2.0);

  const double h = 0.2;
  auto gh = gradient(ellipse_poly(h));
  REQUIRE(gh[0].at({1, 0}) == Catch::Approx(2.0 * h * h));
  REQUIRE(gh[1].at({0, 1}) == 2.0);
}

TEST_CASE("gradient of degree-0 polynomial is the zero polynomial") {
  MultiPoly c(2, 0, Vec{3.0});
  auto g = gradient(c);
  REQUIRE(g.size() == 2);
  REQUIRE(g[0].coeffs() == Vec{0.0});
}

TEST_CASE("gradient matches central finite differences") {
  Rng rng(31);
  const MultiPoly p = rng.poly(2, 4);
  const auto g = gradient(p);
  for (int t = 0; t < 20; ++t) {
    Vec x = rng.point_in_ball(2);
    for (double& v : x) v *= 0.9;  // keep the FD stencil inside the ball
    const Vec fd = oracles::fd_gradient(p, x);
    for (int i = 0; i < 2; ++i) {
      const double scale = std::max(1.0, std::abs(fd[i]));
      REQUIRE(std::abs(g[i].eval(x) - fd[i]) < 1e-6 * scale);
    }
  }
}

TEST_CASE("chebyshev_T values") {
  REQUIRE(chebyshev_T(2, 3.0) == 17.0);
  REQUIRE(chebyshev_T(1, 7.0) == 7.0);
  REQUIRE(std::abs(chebyshev_T(5, 0.3) - std::cos(5.0 * std::acos(0.3))) < 1e-12);
  REQUIRE(chebyshev_T(0, -2.5) == 1.0);
}

TEST_CASE("chebyshev_T stays within [-1,1] on [-1,1]") {
  Rng rng(41);
  for (int d = 0; d <= 10; ++d) {
    for (int t = 0; t < 1000; ++t) {
      const double x = rng.sym();
      REQUIRE(std::abs(chebyshev_T(d, x)) <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("product/sum helpers agree with pointwise arithmetic") {
  Rng rng(53);
  const MultiPoly a = rng.poly(2, 2);
  const MultiPoly b = rng.poly(2, 3);
  const MultiPoly prod = poly_product(a, b);
  REQUIRE(prod.degree() == 5);
  for (int t = 0; t < 25; ++t) {
    const Vec x = rng.point_in_ball(2);
    REQUIRE(prod.eval(x) == Catch::Approx(a.eval(x) * b.eval(x)).margin(1e-12));
  }
  const MultiPoly q = poly_from_roots_1d(2, 0, {-0.4, 0.0, 0.4});
  REQUIRE(q.eval(Vec{0.4, 0.9}) == Catch::Approx(0.0).margin(1e-15));
  REQUIRE(q.eval(Vec{0.5, 0.0}) == Catch::Approx(0.5 * 0.1 * 0.9).margin(1e-15));
}
