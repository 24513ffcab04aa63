// Acceptance suite: one self-contained criterion per function, one pass/fail
// line per criterion on stdout. Exit code is the number of failed criteria.
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "remezrig/extrema.hpp"
#include "remezrig/gallery.hpp"
#include "remezrig/levelset.hpp"
#include "remezrig/remez.hpp"
#include "remezrig/rigidity.hpp"
#include "remezrig/rng.hpp"

using namespace remezrig;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Check {
  std::string name;
  std::function<Outcome()> run;
};

bool nearly(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// ---------------------------------------------------------------------------
Outcome c1_measure_bound_dominance() {
  int combos = 0;
  for (int i = 0; i < 50; ++i) {
    const double lambda = 0.02 + i * 0.02;
    for (int n = 1; n <= 3; ++n)
      for (int d = 1; d <= 5; ++d) {
        const MeasureBound b = measure_remez_bound(lambda, n, d);
        if (b.chebyshev_bound > b.simple_bound * (1.0 + 1e-12))
          return {false, "dominance violated at lambda=" + std::to_string(lambda)};
        if (i == 49) {  // lambda = 1.0 exactly
          if (b.chebyshev_bound != 1.0)
            return {false, "chebyshev bound at lambda=1 is not 1"};
          if (!nearly(b.simple_bound, std::pow(4.0 * n, d), 1e-9 * std::pow(4.0 * n, d)))
            return {false, "simple bound at lambda=1 is not (4n)^d"};
        }
        ++combos;
      }
  }
  return {true, std::to_string(combos) + " combos, 0 violations"};
}

// ---------------------------------------------------------------------------
Outcome c2_finite_remez_oracle() {
  Rng rng(20240201);
  struct Cfg {
    int n, d, count, sets;
    double step;
  };
  const Cfg cfgs[] = {{1, 1, 8, 8, 0.04}, {1, 2, 10, 4, 0.01}, {2, 1, 10, 4, 0.03},
                      {2, 2, 10, 4, 0.008}};
  int done = 0;
  double worst_gap = 0.0;
  for (const Cfg& cfg : cfgs) {
    for (int s = 0; s < cfg.sets; ++s) {
      std::vector<Vec> pts;
      const int count = cfg.count + (s % 3);
      for (int i = 0; i < count; ++i) pts.push_back(rng.point_in_ball(cfg.n));
      const PointSet Z(cfg.n, pts);
      const RemezReport rep = remez_finite(Z, cfg.d, cfg.step);
      const double oracle = oracles::vertex_sweep_remez(Z, cfg.d);
      if (rep.lower > oracle * (1.0 + 1e-7))
        return {false, "lower bound exceeds oracle: " + std::to_string(rep.lower) + " vs " +
                           std::to_string(oracle)};
      if (rep.upper < oracle * (1.0 - 1e-7))
        return {false, "upper bound below oracle: " + std::to_string(rep.upper) + " vs " +
                           std::to_string(oracle)};
      const double gap = (rep.upper - rep.lower) / oracle;
      worst_gap = std::max(worst_gap, gap);
      if (gap > 0.05)
        return {false, "enclosure gap " + std::to_string(gap) + " exceeds 5%"};
      ++done;
    }
  }
  std::ostringstream os;
  os << done << " point sets, enclosures contain the oracle, worst gap "
     << static_cast<int>(worst_gap * 1000) / 10.0 << "%";
  return {true, os.str()};
}

// ---------------------------------------------------------------------------
Outcome c3_triangle_gallery() {
  for (double h : {0.1, 0.25, 0.5, 1.0}) {
    const GalleryReport g = gallery_triangle(h);
    double lower = 0.0;
    bool discrepancy_recorded = false;
    for (const auto& r : g.rows) {
      if (r.quantity == "remez_lower") lower = r.measured;
      if (r.flag == "discrepancy") discrepancy_recorded = true;
      if (r.flag == "fail") return {false, "row " + r.quantity + " failed at h=" + std::to_string(h)};
    }
    if (lower < 1.0 + 2.0 / h - 1e-9)
      return {false, "lower bound below 1 + 2/h at h=" + std::to_string(h)};
    if (lower < 2.0 / h - 1e-9)
      return {false, "lower bound below the quoted comparator 2/h at h=" + std::to_string(h)};
    if (!discrepancy_recorded) return {false, "discrepancy flag missing at h=" + std::to_string(h)};
  }
  return {true, "h in {0.1, 0.25, 0.5, 1.0}: lower >= 1 + 2/h, discrepancy recorded"};
}

// ---------------------------------------------------------------------------
Outcome c4_ellipse_rectangle_gallery() {
  for (double h : {0.1, 0.2}) {
    const GalleryReport g = gallery_ellipse_rectangle(h);
    const double expect_witness = (1.0 - h * h / 4.0) / (h * h);
    bool witness_ok = false, sandwich_ok = false;
    for (const auto& r : g.rows) {
      if (r.quantity == "witness_lower") {
        if (!nearly(r.expected, expect_witness, 1e-9))
          return {false, "witness arithmetic off at h=" + std::to_string(h)};
        witness_ok = r.flag == "pass" && r.measured >= expect_witness - 1e-9;
      }
      if (r.quantity == "topological_bound")
        sandwich_ok = r.flag == "pass" && r.measured >= expect_witness;
    }
    if (!witness_ok) return {false, "witness lower bound failed at h=" + std::to_string(h)};
    if (!sandwich_ok) return {false, "topological sandwich failed at h=" + std::to_string(h)};
  }
  return {true, "witness lower bounds 99.75 / 24.75 reproduced; topological bound dominates"};
}

// ---------------------------------------------------------------------------
Outcome c5_witness_sweep() {
  Rng rng(20240305);
  int families = 0, total_trials = 0, violations = 0;
  while (families < 20) {
    const double r1 = rng.uniform(0.15, 0.45);
    const double r2 = rng.uniform(0.15, 0.45);
    Vec c1{rng.sym() * (1.0 - r1 - 0.02), rng.sym() * (1.0 - r1 - 0.02)};
    Vec c2{rng.sym() * (1.0 - r2 - 0.02), rng.sym() * (1.0 - r2 - 0.02)};
    try {
      DomainFamily F(2, {DomainSpec::ball(c1, r1), DomainSpec::ball(c2, r2)});
      const WitnessTestReport rep = topological_bound_witness_test(F, 2, 25, rng);
      violations += rep.violations;
      total_trials += rep.trials_run;
      ++families;
    } catch (const PreconditionError&) {
      // overlapping placement, draw again
    }
  }
  if (violations != 0) return {false, std::to_string(violations) + " violations"};
  return {true, std::to_string(total_trials) + " random degree-2 polynomials on 20 families, 0 violations"};
}

// ---------------------------------------------------------------------------
Outcome c6_bezout_extrema() {
  const MultiPoly q2x = poly_from_roots_1d(2, 0, {-0.25, 0.25});
  const MultiPoly q2y = poly_from_roots_1d(2, 1, {-0.25, 0.25});
  const auto quad_pts = find_critical_points(poly_product(q2x, q2y), 0.05);
  int quad_extrema = 0;
  for (const auto& p : quad_pts)
    if (p.kind == CriticalKind::Max || p.kind == CriticalKind::Min) ++quad_extrema;
  if (quad_pts.size() != 5 || quad_extrema != 1)
    return {false, "product quadratic: expected 5 critical points / 1 extremum, got " +
                       std::to_string(quad_pts.size()) + "/" + std::to_string(quad_extrema)};

  const MultiPoly q3x = poly_from_roots_1d(2, 0, {-0.4, 0.0, 0.4});
  const MultiPoly q3y = poly_from_roots_1d(2, 1, {-0.4, 0.0, 0.4});
  const auto cub_pts = find_critical_points(poly_product(q3x, q3y), 0.05);
  int cub_max = 0, cub_min = 0;
  for (const auto& p : cub_pts) {
    if (p.kind == CriticalKind::Max) ++cub_max;
    if (p.kind == CriticalKind::Min) ++cub_min;
  }
  if (cub_pts.size() != 13 || cub_max != 2 || cub_min != 2)
    return {false, "product cubic: expected 13 points with 2 Max / 2 Min, got " +
                       std::to_string(cub_pts.size()) + " with " + std::to_string(cub_max) +
                       "/" + std::to_string(cub_min)};

  Rng rng(20240406);
  for (int t = 0; t < 200; ++t) {
    const MultiPoly p = rng.poly(2, 3);
    const auto pts = find_critical_points(p, 0.1);
    int nondeg = 0;
    for (const auto& cp : pts)
      if (cp.kind != CriticalKind::Degenerate) ++nondeg;
    if (nondeg > 4)
      return {false, "random cubic #" + std::to_string(t) + " produced " +
                         std::to_string(nondeg) + " > 4 nondegenerate critical points"};
  }
  return {true, "5/1 and 13/4 (2 Max, 2 Min) reproduced; 200 random cubics within (d-1)^2 = 4"};
}

// ---------------------------------------------------------------------------
Outcome c7_non_norming_detection() {
  const PointSet collinear(2, {{-0.6, -0.3}, {0.0, 0.0}, {0.6, 0.3}});
  const PointSet undersized(1, {{-0.5}, {0.5}});
  struct Case {
    const PointSet* z;
    int d;
    double step;
  };
  for (const Case& c : {Case{&collinear, 1, 0.05}, Case{&undersized, 2, 0.01}}) {
    const RemezReport rep = remez_finite(*c.z, c.d, c.step);
    if (!std::isinf(rep.upper) || rep.norming) return {false, "set not flagged non-norming"};
    if (!rep.witness) return {false, "kernel certificate missing"};
    double mz = 0.0;
    for (const Vec& z : c.z->points()) mz = std::max(mz, std::abs(rep.witness->eval(z)));
    if (mz > 1e-9) return {false, "certificate max on Z = " + std::to_string(mz) + " > 1e-9"};
    const double sup = oracles::dense_sup_ball(*rep.witness, 0.01);
    if (sup < 0.1) return {false, "certificate ball sup " + std::to_string(sup) + " < 0.1"};
  }
  return {true, "collinear and undersized sets: R = inf with vanishing certificates"};
}

// ---------------------------------------------------------------------------
Outcome c8_rigidity_identities() {
  Rng rng(20240507);
  int built = 0;
  while (built < 50) {
    const int count = rng.uniform_int(2, 5);
    std::vector<DomainSpec> domains;
    for (int i = 0; i < count; ++i) {
      const double r = rng.uniform(0.05, 0.25);
      domains.push_back(
          DomainSpec::ball({rng.sym() * (1.0 - r - 0.02), rng.sym() * (1.0 - r - 0.02)}, r));
    }
    try {
      const DomainFamily F(2, domains);
      for (int d = 1; d <= std::min(2, F.d_bar()); ++d) {
        const double direct = rigidity_topological(F, d).lower;
        const double via = rigidity_from_remez(topological_remez_bound(F, d).as_report()).lower;
        if (std::abs(direct - via) > 1e-12 * std::max({direct, via, 1e-300}))
          return {false, "identity broke: " + std::to_string(direct) + " vs " +
                             std::to_string(via)};
      }
      ++built;
    } catch (const PreconditionError&) {
    }
  }
  if (rigidity_1d_points(3, 2).lower != 0.75) return {false, "points-1d 0.75 not reproduced"};
  if (!nearly(rigidity_density(1, 100, 0.1, 1).lower, 2.4, 1e-12))
    return {false, "density bound 2.4 not reproduced"};
  return {true, "50 families: from_remez(topological) == topological to 1e-12; 0.75 and 2.4 exact"};
}

// ---------------------------------------------------------------------------
Outcome c9_divided_differences() {
  Rng rng(20240608);
  for (int t = 0; t < 1000; ++t) {
    const int d = rng.uniform_int(1, 4);
    std::vector<double> nodes;
    while (static_cast<int>(nodes.size()) < d + 2) {
      const double z = rng.sym();
      bool ok = true;
      for (double u : nodes) ok = ok && std::abs(u - z) > 0.05;
      if (ok) nodes.push_back(z);
    }
    std::vector<double> values(nodes.size(), 0.0);
    values[0] = 1.0;
    double closed = 1.0;
    for (std::size_t i = 1; i < nodes.size(); ++i) closed *= nodes[0] - nodes[i];
    closed = 1.0 / closed;
    const double table = divided_difference(nodes, values);
    if (std::abs(table - closed) > 1e-10 * std::max(1.0, std::abs(closed)))
      return {false, "closed form vs table mismatch at trial " + std::to_string(t)};
  }
  for (int t = 0; t < 200; ++t) {
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
    std::vector<double> values;
    for (double z : nodes) {
      double v = 0.0;
      for (int i = k; i >= 0; --i) v = v * z + coeffs[i];
      values.push_back(v);
    }
    if (std::abs(divided_difference(nodes, values)) > 1e-9)
      return {false, "polynomial exactness failed at trial " + std::to_string(t)};
  }
  return {true, "1000 closed-form matches to 1e-10; 200 polynomial-exactness checks to 1e-9"};
}

// ---------------------------------------------------------------------------
MultiPoly ellipse_poly(double h) {
  MultiPoly p(2, 2);
  p.at({0, 0}) = -h * h / 4.0;
  p.at({2, 0}) = h * h;
  p.at({0, 2}) = 1.0;
  return p;
}

Outcome c10_isotopy_checker() {
  // (a) exact polynomial model
  const JetModel exact = JetModel::exact(ellipse_poly(0.2));
  const IsotopyVerdict va = isotopy_check(exact, 0.001);
  if (va.status != IsotopyVerdict::Status::Verified)
    return {false, "(a) exact model not Verified"};
  for (const auto& c : va.components)
    if (std::abs(c.t_min) > 1e-8 || std::abs(c.t_max) > 1e-8)
      return {false, "(a) t(y) not identically 0 (|t| up to " +
                         std::to_string(std::max(std::abs(c.t_min), std::abs(c.t_max))) + ")"};

  // (b) perturbed ellipse with remainder below the threshold
  const double eps = 1e-7;
  MultiPoly s(2, 6);
  s.at({3, 3}) = eps;
  s.at({4, 2}) = 0.3 * eps;
  FieldSpec fs;
  fs.poly = poly_sum(ellipse_poly(0.2), s);
  const JetModel perturbed = JetModel::make(ellipse_poly(0.2), 64.8 * eps, fs);
  const IsotopyVerdict vb = isotopy_check(perturbed, 0.001);
  if (perturbed.remainder_bound() > vb.constants.T)
    return {false, "(b) remainder bound exceeds T; the case is miswired"};
  if (vb.status != IsotopyVerdict::Status::Verified)
    return {false, "(b) perturbed model not Verified"};
  if (vb.pairing.size() != 1) return {false, "(b) expected a single component pair"};
  for (const auto& c : vb.components) {
    if (c.dpdt_min < 0.5 || c.dpdt_max > 1.5)
      return {false, "(b) derivative band violated"};
    if (c.flow_residual_max > 1e-6)
      return {false, "(b) flow identity residual " + std::to_string(c.flow_residual_max)};
  }

  // (c) two nested ovals cannot be Verified at degree 2
  const MultiPoly f = [&] {
    MultiPoly c1(2, 2), c2(2, 2);
    c1.at({0, 0}) = -0.09;
    c1.at({2, 0}) = 1.0;
    c1.at({0, 2}) = 1.0;
    c2.at({0, 0}) = -0.16;
    c2.at({2, 0}) = 1.0;
    c2.at({0, 2}) = 1.0;
    return poly_product(c1, c2);
  }();
  MultiPoly taylor(2, 2);
  taylor.at({0, 0}) = 0.0144;
  taylor.at({2, 0}) = -0.25;
  taylor.at({0, 2}) = -0.25;
  FieldSpec nested;
  nested.poly = f;
  const JetModel mc = JetModel::make(taylor, 46.0, nested);
  for (double cell : {0.001, 0.0005}) {
    const IsotopyVerdict vc = isotopy_check(mc, cell);
    if (vc.status == IsotopyVerdict::Status::Verified)
      return {false, "(c) nested ovals wrongly Verified at cell " + std::to_string(cell)};
  }
  return {true, "exact: Verified with t = 0; perturbed: Verified in-band; nested ovals: never Verified"};
}

// ---------------------------------------------------------------------------
Outcome c11_flow_map_closed_form() {
  MultiPoly circle(2, 2);
  circle.at({0, 0}) = -0.16;
  circle.at({2, 0}) = 1.0;
  circle.at({0, 2}) = 1.0;
  const JetModel m = JetModel::exact(circle);
  const Point2 fwd = flow_map(m, {0.4, 0.0}, 0.01, 0.5, 0.01);
  const Point2 bwd = flow_map(m, {0.4, 0.0}, -0.01, 0.5, 0.01);
  const double efwd = std::abs(fwd[0] - std::sqrt(0.17)) + std::abs(fwd[1]);
  const double ebwd = std::abs(bwd[0] - std::sqrt(0.15)) + std::abs(bwd[1]);
  if (efwd > 1e-7) return {false, "forward endpoint error " + std::to_string(efwd)};
  if (ebwd > 1e-7) return {false, "backward endpoint error " + std::to_string(ebwd)};
  std::ostringstream os;
  os.precision(2);
  os << std::scientific << "r(t) = sqrt(0.16 + t) reproduced (errors " << efwd << ", " << ebwd
     << ")";
  return {true, os.str()};
}

// ---------------------------------------------------------------------------
Outcome c12_markov_safety() {
  Rng rng(20240709);
  int checked = 0;
  for (int n = 1; n <= 2; ++n)
    for (int d = 1; d <= 4; ++d) {
      const double norm_step = n == 1 ? 0.01 : 0.04;
      const double sample_step = n == 1 ? 0.01 : 0.1;
      for (int t = 0; t < 1250; ++t) {
        MultiPoly p = rng.poly(n, d);
        const auto enc = sup_norm_ball(p, std::min(norm_step, 0.9 * max_admissible_step(n, d)));
        if (enc.certified_max < 1e-12) continue;
        for (double& c : p.coeffs()) c /= enc.certified_max;
        for (int k = 1; k <= std::min(2, d); ++k) {
          const double mk = oracles::sampled_Mk(p, k, sample_step);
          const double bound = markov_derivative_bound(n, d, k);
          if (mk > bound + 1e-9)
            return {false, "M_" + std::to_string(k) + " = " + std::to_string(mk) +
                               " exceeded Cbar = " + std::to_string(bound) + " (n=" +
                               std::to_string(n) + ", d=" + std::to_string(d) + ")"};
        }
        ++checked;
      }
    }
  return {true, std::to_string(checked) + " normalized polynomials, no M_k above Cbar_k(n,d)"};
}

}  // namespace

int main() {
  const std::vector<Check> checks = {
      {"chebyshev/measure bound dominance", c1_measure_bound_dominance},
      {"finite Remez oracle equivalence", c2_finite_remez_oracle},
      {"triangle gallery", c3_triangle_gallery},
      {"ellipse-rectangle gallery", c4_ellipse_rectangle_gallery},
      {"topological-bound witness sweep", c5_witness_sweep},
      {"Bezout/extrema counts", c6_bezout_extrema},
      {"non-norming detection", c7_non_norming_detection},
      {"rigidity identities", c8_rigidity_identities},
      {"divided differences", c9_divided_differences},
      {"isotopy checker", c10_isotopy_checker},
      {"flow-map closed form", c11_flow_map_closed_form},
      {"Markov bound safety", c12_markov_safety},
  };
  int failures = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    Outcome out;
    try {
      out = checks[i].run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    if (!out.pass) ++failures;
    std::printf("[%2zu] %s  %s: %s\n", i + 1, out.pass ? "PASS" : "FAIL",
                checks[i].name.c_str(), out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("ACCEPTANCE %d/%zu criteria passed\n", static_cast<int>(checks.size()) - failures,
              checks.size());
  return failures;
}
