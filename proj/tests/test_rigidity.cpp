#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "oracles.hpp"
#include "remezrig/rigidity.hpp"
#include "remezrig/rng.hpp"

using namespace remezrig;

TEST_CASE("rigidity_from_remez: finite and infinite Remez constants") {
  RemezReport rep;
  rep.degree = 2;
  rep.upper = 3.0;
  rep.norming = true;
  REQUIRE(rigidity_from_remez(rep).lower == Catch::Approx(1.0).margin(1e-15));

  RemezReport inf_rep;
  inf_rep.degree = 2;
  inf_rep.upper = kInf;
  inf_rep.norming = false;
  const auto rb = rigidity_from_remez(inf_rep);
  REQUIRE(rb.lower == 0.0);
  REQUIRE(rb.source == "from_remez");
}

TEST_CASE("rigidity_from_remez on the triangle set") {
  PointSet Z(2, {{-0.5, 0.0}, {0.0, 0.5}, {0.5, 0.0}});
  const auto rep = remez_finite(Z, 1, 0.02);
  REQUIRE(rep.lower >= 5.0 - 1e-9);  // witness 1 - 2y/h at h = 0.5
  const auto rb = rigidity_from_remez(rep);
  // (d+1)!/2 / upper with upper slightly above 5
  REQUIRE(rb.lower > 0.15);
  REQUIRE(rb.lower <= 1.0 / rep.lower + 1e-9);
}

TEST_CASE("rigidity_1d_points closed forms") {
  REQUIRE(rigidity_1d_points(3, 2).lower == Catch::Approx(0.75));
  REQUIRE(rigidity_1d_points(2, 2).lower == 0.0);
  REQUIRE(rigidity_1d_points(1, 0).lower == Catch::Approx(0.5));
}

TEST_CASE("rigidity_interior closed forms") {
  REQUIRE(rigidity_interior(1).lower == Catch::Approx(0.5));
  REQUIRE(rigidity_interior(2).lower == Catch::Approx(0.75));
  REQUIRE(rigidity_interior(3).lower == Catch::Approx(1.5));
}

TEST_CASE("rigidity_density formula and applicability") {
  const auto a = rigidity_density(1, 100, 0.1, 1);
  REQUIRE(a.applicable);
  REQUIRE(a.lower == Catch::Approx(2.4).margin(1e-12));

  const auto b = rigidity_density(1, 3, 0.1, 1);
  REQUIRE_FALSE(b.applicable);
  REQUIRE(b.lower == 0.0);

  const auto c = rigidity_density(2, 5000, 0.05, 1);
  REQUIRE(c.applicable);
  REQUIRE(c.lower == Catch::Approx(1.4625).margin(1e-12));

  PointSet Z(1, {{-0.4}, {0.0}, {0.4}});
  const auto d = rigidity_density(Z, 1);
  REQUIRE_FALSE(d.applicable);  // M = 3 <= 4
}

TEST_CASE("rigidity_topological closed forms") {
  DomainFamily F(2, {DomainSpec::ball({-0.4, 0.0}, 0.5), DomainSpec::ball({0.55, 0.0}, 0.3)});
  const auto rb = rigidity_topological(F, 2);
  REQUIRE(rb.lower == Catch::Approx(3.0 * std::pow(0.09 / 8.0, 2)).epsilon(1e-14));

  DomainFamily quarter(2, {DomainSpec::ball({0.0, 0.0}, 0.5)});
  REQUIRE(rigidity_topological(quarter, 1).lower ==
          Catch::Approx(0.25 / 8.0).epsilon(1e-14));

  REQUIRE_THROWS_AS(rigidity_topological(quarter, 2), PreconditionError);
}

TEST_CASE("rigidity_topological equals from_remez of the topological bound") {
  Rng rng(421);
  int built = 0;
  while (built < 50) {
    const int count = rng.uniform_int(2, 5);
    std::vector<DomainSpec> domains;
    for (int i = 0; i < count; ++i) {
      const double r = rng.uniform(0.05, 0.25);
      Vec c{rng.sym() * (1.0 - r - 0.02), rng.sym() * (1.0 - r - 0.02)};
      domains.push_back(DomainSpec::ball(c, r));
    }
    try {
      DomainFamily F(2, domains);
      for (int d = 1; d <= std::min(2, F.d_bar()); ++d) {
        const auto direct = rigidity_topological(F, d);
        const auto viaRemez = rigidity_from_remez(topological_remez_bound(F, d).as_report());
        REQUIRE(direct.lower == Catch::Approx(viaRemez.lower).epsilon(1e-12));
      }
      ++built;
    } catch (const PreconditionError&) {
      // overlapping random placement; draw again
    }
  }
}

TEST_CASE("divided_difference: closed form, constants, polynomial exactness") {
  REQUIRE(divided_difference({0.0, 1.0, -1.0}, {1.0, 0.0, 0.0}) ==
          Catch::Approx(-1.0).margin(1e-14));
  REQUIRE(divided_difference({-0.7, 0.1, 0.6, 0.9}, {3.0, 3.0, 3.0, 3.0}) ==
          Catch::Approx(0.0).margin(1e-14));
  // leading coefficient of x^3 over 4 nodes
  std::vector<double> nodes{0.0, 1.0, 2.0, 3.0};
  std::vector<double> vals;
  for (double t : nodes) vals.push_back(t * t * t);
  REQUIRE(divided_difference(nodes, vals) == Catch::Approx(1.0).margin(1e-12));
  REQUIRE_THROWS_AS(divided_difference({0.1, 0.1}, {0.0, 1.0}), PreconditionError);
}

TEST_CASE("divided_difference is symmetric under node permutations") {
  Rng rng(433);
  for (int t = 0; t < 200; ++t) {
    const int k = rng.uniform_int(2, 6);
    std::vector<double> nodes, vals;
    while (static_cast<int>(nodes.size()) < k) {
      const double z = rng.sym();
      bool ok = true;
      for (double u : nodes) ok = ok && std::abs(u - z) > 0.05;
      if (ok) {
        nodes.push_back(z);
        vals.push_back(rng.sym());
      }
    }
    const double base = divided_difference(nodes, vals);
    for (int s = 0; s < 5; ++s) {
      const int i = rng.uniform_int(0, k - 1), j = rng.uniform_int(0, k - 1);
      std::swap(nodes[i], nodes[j]);
      std::swap(vals[i], vals[j]);
      REQUIRE(divided_difference(nodes, vals) ==
              Catch::Approx(base).margin(1e-10 * (1.0 + std::abs(base))));
    }
  }
}

TEST_CASE("divided differences of degree-k data over k+2 nodes vanish") {
  Rng rng(439);
  for (int t = 0; t < 100; ++t) {
    const int k = rng.uniform_int(1, 4);
    std::vector<double> nodes;
    while (static_cast<int>(nodes.size()) < k + 2) {
      const double z = rng.sym();
      bool ok = true;
      for (double u : nodes) ok = ok && std::abs(u - z) > 0.1;
      if (ok) nodes.push_back(z);
    }
    Vec coeffs(k + 1);
    for (double& c : coeffs) c = rng.sym();
    std::vector<double> vals;
    for (double z : nodes) {
      double v = 0.0;
      for (int i = k; i >= 0; --i) v = v * z + coeffs[i];
      vals.push_back(v);
    }
    REQUIRE(divided_difference(nodes, vals) == Catch::Approx(0.0).margin(1e-9));
  }
}

TEST_CASE("rigidity_1d_whitney: two endpoints give estimate 1 at the midpoint") {
  PointSet Z(1, {{-1.0}, {1.0}});
  const auto rb = rigidity_1d_whitney(Z, 1, 201);
  REQUIRE(rb.estimate);
  REQUIRE(rb.lower == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("rigidity_1d_whitney matches an explicit subset-enumeration sweep") {
  PointSet Z(1, {{-0.3}, {-0.1}, {0.1}, {0.3}});
  const int d = 1;
  const int probes = 101;
  const auto rb = rigidity_1d_whitney(Z, d, probes);

  double best = kInf;
  const auto& pts = Z.points();
  for (int g = 0; g < probes; ++g) {
    const double z0 = -1.0 + 2.0 * g / (probes - 1);
    bool onZ = false;
    for (const Vec& p : pts) onZ = onZ || std::abs(z0 - p[0]) < 1e-9;
    if (onZ) continue;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        const double prod = std::abs((z0 - pts[i][0]) * (z0 - pts[j][0]));
        best = std::min(best, 1.0 / prod);
      }
  }
  REQUIRE(rb.lower == Catch::Approx(best).epsilon(1e-13));
}

TEST_CASE("rigidity_1d_whitney on clustered nodes matches the brute-force sweep") {
  // The infimum over probe points is dominated by probes far from a tight
  // cluster, so the estimate stays near (cluster diameter ~ 0)/(probe reach 1)
  // regardless of spacing. Verified against the full enumeration sweep.
  const int d = 2;
  for (double s : {0.05, 0.1}) {
    std::vector<Vec> pts;
    for (int i = 0; i <= d; ++i) pts.push_back({(i - 1.0) * s});
    const PointSet Z(1, pts);
    const int probes = 501;
    const auto rb = rigidity_1d_whitney(Z, d, probes);

    double best = kInf;
    for (int g = 0; g < probes; ++g) {
      const double z0 = -1.0 + 2.0 * g / (probes - 1);
      bool onZ = false;
      for (const Vec& p : pts) onZ = onZ || std::abs(z0 - p[0]) < 1e-9;
      if (onZ) continue;
      double prod = 1.0;
      for (const Vec& p : pts) prod *= std::abs(z0 - p[0]);
      best = std::min(best, 1.0 / prod);
    }
    REQUIRE(rb.lower == Catch::Approx(best).epsilon(1e-13));
    REQUIRE(rb.lower == Catch::Approx(1.0).epsilon(0.1));
  }
}

TEST_CASE("rigidity_1d_whitney preconditions") {
  PointSet Z(1, {{-0.5}, {0.5}});
  REQUIRE_THROWS_AS(rigidity_1d_whitney(Z, 2, 100), PreconditionError);  // |Z| = d
  REQUIRE_THROWS_AS(rigidity_1d_whitney(Z, 1, 5), PreconditionError);
  PointSet Z2(2, {{0.0, 0.0}, {0.5, 0.0}});
  REQUIRE_THROWS_AS(rigidity_1d_whitney(Z2, 1, 100), PreconditionError);
}

TEST_CASE("degree cap for floating-point factorials") {
  REQUIRE_THROWS_AS(rigidity_interior(13), PreconditionError);
  REQUIRE_NOTHROW(rigidity_interior(12));
}
