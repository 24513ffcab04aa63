// Level-set machinery in the plane: zero-set extraction by marching squares,
// regularity estimation, explicit threshold constants, the gradient-flow
// normal-bundle map, per-trajectory zero location, and the isotopy verdict
// between the zero set of a smooth field and the zero set of its degree-d
// Taylor polynomial.
#ifndef REMEZRIG_LEVELSET_HPP
#define REMEZRIG_LEVELSET_HPP

#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "remezrig/core.hpp"
#include "remezrig/polynomial.hpp"
#include "remezrig/rng.hpp"
#include "remezrig/supnorm.hpp"

namespace remezrig {

using Point2 = std::array<double, 2>;

/// Raised when a flow trajectory leaves the certified gradient neighborhood.
struct TrajectoryEscape : std::runtime_error {
  explicit TrajectoryEscape(const std::string& msg) : std::runtime_error(msg) {}
};

struct ScalarField {
  std::function<double(double, double)> value;
  std::function<Point2(double, double)> grad;
};

/// Serializable evaluator registry: a plain polynomial field, or a polynomial
/// plus a named smooth perturbation with parameters.
struct FieldSpec {
  std::string builtin = "poly";  // poly | poly_plus_sine
  MultiPoly poly;                // any degree (n = 2)
  double amp = 0.0, kx = 0.0, ky = 0.0;  // poly_plus_sine: amp*sin(kx x)*sin(ky y)

  ScalarField make() const {
    if (poly.dimension() != 2)
      throw PreconditionError("FieldSpec: the polynomial part must be two-dimensional");
    auto grads = gradient(poly);
    const MultiPoly p = poly;
    const MultiPoly gx = grads[0], gy = grads[1];
    if (builtin == "poly") {
      return ScalarField{
          [p](double x, double y) { return p.eval(Vec{x, y}); },
          [gx, gy](double x, double y) {
            return Point2{gx.eval(Vec{x, y}), gy.eval(Vec{x, y})};
          }};
    }
    if (builtin == "poly_plus_sine") {
      const double a = amp, k1 = kx, k2 = ky;
      return ScalarField{
          [p, a, k1, k2](double x, double y) {
            return p.eval(Vec{x, y}) + a * std::sin(k1 * x) * std::sin(k2 * y);
          },
          [gx, gy, a, k1, k2](double x, double y) {
            return Point2{gx.eval(Vec{x, y}) + a * k1 * std::cos(k1 * x) * std::sin(k2 * y),
                          gy.eval(Vec{x, y}) + a * k2 * std::sin(k1 * x) * std::cos(k2 * y)};
          }};
    }
    throw PreconditionError("FieldSpec: unknown builtin evaluator '" + builtin + "'");
  }
};

/// Degree-d Taylor data of a smooth f at the origin plus a caller-supplied
/// bound on M_{d+1}(f). The Taylor-remainder invariant is spot-verified on
/// 1000 ball samples at construction. The support assumption (f nonzero
/// outside the half ball) stays caller-asserted.
class JetModel {
 public:
  static JetModel make(MultiPoly taylor, double remainder_bound, FieldSpec field,
                       bool spot_check = true) {
    JetModel m(std::move(taylor), remainder_bound, std::move(field));
    if (spot_check) m.verify_remainder();
    return m;
  }

  /// Exact-polynomial model: f == taylor, remainder 0.
  static JetModel exact(MultiPoly taylor) {
    FieldSpec fs;
    fs.poly = taylor;
    return make(std::move(taylor), 0.0, std::move(fs), false);
  }

  int degree() const { return taylor_.degree(); }
  const MultiPoly& taylor() const { return taylor_; }
  double remainder_bound() const { return remainder_bound_; }
  const FieldSpec& field_spec() const { return field_; }

  double f(double x, double y) const { return fld_.value(x, y); }
  Point2 grad(double x, double y) const { return fld_.grad(x, y); }
  const ScalarField& field() const { return fld_; }

 private:
  JetModel(MultiPoly taylor, double remainder_bound, FieldSpec field)
      : taylor_(std::move(taylor)), remainder_bound_(remainder_bound), field_(std::move(field)) {
    if (taylor_.dimension() != 2)
      throw PreconditionError("JetModel: only n = 2 is supported");
    if (remainder_bound_ < 0.0)
      throw PreconditionError("JetModel: remainder bound must be >= 0");
    fld_ = field_.make();
  }

  void verify_remainder() const {
    Rng rng(0x6a657431);  // fixed: the check is part of the model contract
    const double allow = remainder_bound_ / factorial(taylor_.degree() + 1) + 1e-12;
    for (int i = 0; i < 1000; ++i) {
      const Vec x = rng.point_in_ball(2);
      const double err = std::abs(fld_.value(x[0], x[1]) - taylor_.eval(x));
      if (err > allow)
        throw PreconditionError(
            "JetModel: Taylor remainder invariant violated: |f - P| = " + std::to_string(err) +
            " > M_{d+1}/(d+1)! = " + std::to_string(allow) + " at (" + std::to_string(x[0]) +
            ", " + std::to_string(x[1]) + ")");
    }
  }

  MultiPoly taylor_;
  double remainder_bound_;
  FieldSpec field_;
  ScalarField fld_;
};

struct Rect {
  double x0 = -0.7, y0 = -0.7, x1 = 0.7, y1 = 0.7;
};

struct LevelCurve {
  std::vector<std::vector<Point2>> components;  // vertex loops (closed unless flagged)
  std::vector<bool> closed;
  double cell_size = 0.0;
  double max_residual = 0.0;  // max |g| over polished vertices
};

/// Marching-squares contour of g = 0 with linear interpolation, component
/// labeling via shared edge vertices, and Newton polishing of the vertices
/// onto the zero set. Ambiguous saddle cells are resolved by the cell-center
/// sign. Grid nodes with g >= 0 count as positive.
inline LevelCurve extract_zero_set(const ScalarField& g, double cell_size,
                                   const Rect& window = Rect{}) {
  if (!(cell_size > 0.0) || cell_size > 0.05)
    throw PreconditionError("extract_zero_set: cell_size must lie in (0, 0.05]");
  const int nx = std::max(2, static_cast<int>(std::ceil((window.x1 - window.x0) / cell_size)));
  const int ny = std::max(2, static_cast<int>(std::ceil((window.y1 - window.y0) / cell_size)));
  const double hx = (window.x1 - window.x0) / nx;
  const double hy = (window.y1 - window.y0) / ny;
  auto X = [&](int i) { return window.x0 + i * hx; };
  auto Y = [&](int j) { return window.y0 + j * hy; };

  std::vector<double> val(static_cast<std::size_t>(nx + 1) * (ny + 1));
  for (int i = 0; i <= nx; ++i)
    for (int j = 0; j <= ny; ++j)
      val[static_cast<std::size_t>(i) * (ny + 1) + j] = g.value(X(i), Y(j));
  auto V = [&](int i, int j) { return val[static_cast<std::size_t>(i) * (ny + 1) + j]; };

  // Interpolated vertex on a grid edge; edges are keyed so that shared edges
  // dedupe exactly. key = (i, j, orient): orient 0 = from (i,j) to (i+1,j),
  // orient 1 = from (i,j) to (i,j+1).
  std::map<std::array<int, 3>, int> edge_vertex;
  std::vector<Point2> verts;
  auto vertex_on = [&](int i, int j, int orient) {
    const std::array<int, 3> key{i, j, orient};
    auto it = edge_vertex.find(key);
    if (it != edge_vertex.end()) return it->second;
    const double a = V(i, j);
    const double b = orient == 0 ? V(i + 1, j) : V(i, j + 1);
    double t = a / (a - b);
    if (!std::isfinite(t)) t = 0.5;
    t = std::clamp(t, 0.0, 1.0);
    Point2 p = orient == 0 ? Point2{X(i) + t * hx, Y(j)} : Point2{X(i), Y(j) + t * hy};
    verts.push_back(p);
    edge_vertex[key] = static_cast<int>(verts.size()) - 1;
    return static_cast<int>(verts.size()) - 1;
  };

  std::vector<std::pair<int, int>> segments;
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      const bool bl = V(i, j) >= 0.0, br = V(i + 1, j) >= 0.0;
      const bool tr = V(i + 1, j + 1) >= 0.0, tl = V(i, j + 1) >= 0.0;
      const int mask = (bl ? 1 : 0) | (br ? 2 : 0) | (tr ? 4 : 0) | (tl ? 8 : 0);
      if (mask == 0 || mask == 15) continue;
      const auto B = [&] { return vertex_on(i, j, 0); };
      const auto R = [&] { return vertex_on(i + 1, j, 1); };
      const auto T = [&] { return vertex_on(i, j + 1, 0); };
      const auto L = [&] { return vertex_on(i, j, 1); };
      auto seg = [&](int a, int b) { segments.push_back({a, b}); };
      switch (mask) {
        case 1: seg(L(), B()); break;
        case 2: seg(B(), R()); break;
        case 3: seg(L(), R()); break;
        case 4: seg(T(), R()); break;
        case 5: {
          const bool center = g.value(X(i) + 0.5 * hx, Y(j) + 0.5 * hy) >= 0.0;
          if (center) {
            seg(L(), T());
            seg(B(), R());
          } else {
            seg(L(), B());
            seg(T(), R());
          }
          break;
        }
        case 6: seg(B(), T()); break;
        case 7: seg(L(), T()); break;
        case 8: seg(L(), T()); break;
        case 9: seg(B(), T()); break;
        case 10: {
          const bool center = g.value(X(i) + 0.5 * hx, Y(j) + 0.5 * hy) >= 0.0;
          if (center) {
            seg(L(), B());
            seg(T(), R());
          } else {
            seg(L(), T());
            seg(B(), R());
          }
          break;
        }
        case 11: seg(T(), R()); break;
        case 12: seg(L(), R()); break;
        case 13: seg(B(), R()); break;
        case 14: seg(L(), B()); break;
        default: break;
      }
    }

  // adjacency and chain walking
  std::vector<std::vector<int>> adj(verts.size());
  for (const auto& [a, b] : segments) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  LevelCurve out;
  out.cell_size = cell_size;
  std::vector<char> used(verts.size(), 0);
  auto walk = [&](int start) {
    std::vector<int> chain{start};
    used[start] = 1;
    int cur = start, prev = -1;
    while (true) {
      int next = -1;
      for (int nb : adj[cur])
        if (nb != prev && !used[nb]) {
          next = nb;
          break;
        }
      if (next < 0) {
        // either closed back to start or an open end
        bool closes = false;
        for (int nb : adj[cur]) closes = closes || (nb == start && chain.size() > 2);
        return std::make_pair(chain, closes);
      }
      used[next] = 1;
      chain.push_back(next);
      prev = cur;
      cur = next;
    }
  };
  // open chains first (degree-1 endpoints), then cycles
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t v = 0; v < verts.size(); ++v) {
      if (used[v]) continue;
      if (pass == 0 && adj[v].size() != 1) continue;
      if (adj[v].empty()) continue;
      auto [chain, closes] = walk(static_cast<int>(v));
      std::vector<Point2> poly;
      for (int id : chain) poly.push_back(verts[id]);
      out.components.push_back(std::move(poly));
      out.closed.push_back(pass == 0 ? false : closes);
    }

  // Newton polish onto g = 0 along the gradient
  for (auto& comp : out.components)
    for (Point2& p : comp) {
      for (int it = 0; it < 30; ++it) {
        const double v = g.value(p[0], p[1]);
        if (std::abs(v) <= 1e-13) break;
        const Point2 gr = g.grad(p[0], p[1]);
        const double gn2 = gr[0] * gr[0] + gr[1] * gr[1];
        if (gn2 < 1e-18) break;
        double sx = -v * gr[0] / gn2, sy = -v * gr[1] / gn2;
        const double sl = std::sqrt(sx * sx + sy * sy);
        if (sl > cell_size) {
          sx *= cell_size / sl;
          sy *= cell_size / sl;
        }
        p[0] += sx;
        p[1] += sy;
      }
      out.max_residual = std::max(out.max_residual, std::abs(g.value(p[0], p[1])));
    }
  return out;
}

/// Conservative regularity estimate: the smallest gradient norm over the
/// polished vertices minus a Lipschitz slack M_2 * cell_size, with M_2 bounded
/// through the Markov constant of the Taylor polynomial plus the remainder
/// contribution.
inline double estimate_gamma(const JetModel& model, const LevelCurve& curve) {
  if (curve.components.empty())
    throw PreconditionError("estimate_gamma: empty level curve");
  const int d = model.degree();
  if (d < 2) throw PreconditionError("estimate_gamma: degree must be >= 2");
  double min_grad = kInf;
  for (const auto& comp : curve.components)
    for (const Point2& p : comp) {
      const Point2 gr = model.grad(p[0], p[1]);
      min_grad = std::min(min_grad, std::sqrt(gr[0] * gr[0] + gr[1] * gr[1]));
    }
  const double m0p = sup_norm_ball(model.taylor(), default_supnorm_step(2, d)).certified_max;
  const double m2 = markov_derivative_bound(2, d, 2) * m0p +
                    model.remainder_bound() / factorial(d - 1);
  const double gamma = min_grad - m2 * curve.cell_size;
  if (!(gamma > 0.0))
    throw PreconditionError(
        "estimate_gamma: cannot certify regularity at this resolution (min gradient " +
        std::to_string(min_grad) + ", Lipschitz slack " +
        std::to_string(m2 * curve.cell_size) + "); refine cell_size");
  return gamma;
}

struct ThresholdSet {
  double cbar2 = 0.0;  // Markov constant for M_2
  double C3 = 0.0;
  double delta = 0.0;
  double eta = 0.0;    // delta*gamma/2
  double T = 0.0;      // min(1, d! gamma^2 / (4 C3))
};

inline ThresholdSet thresholds(const JetModel& model, double gamma) {
  const int d = model.degree();
  if (d < 2) throw PreconditionError("thresholds: degree must be >= 2");
  if (!(gamma > 0.0) || !(gamma < 1.0))
    throw PreconditionError("thresholds: gamma must lie in (0, 1)");
  ThresholdSet t;
  t.cbar2 = markov_derivative_bound(2, d, 2);
  t.C3 = t.cbar2 + t.cbar2 / factorial(d + 1) + 1.0 / factorial(d - 1);
  t.delta = gamma / (3.0 * t.C3);
  t.eta = t.delta * gamma / 2.0;
  t.T = std::min(1.0, factorial(d) * gamma * gamma / (4.0 * t.C3));
  return t;
}

namespace detail {

inline Point2 flow_velocity(const JetModel& m, double x, double y, double gamma) {
  const Point2 g = m.grad(x, y);
  const double gn2 = g[0] * g[0] + g[1] * g[1];
  if (gn2 < 0.25 * gamma * gamma)
    throw TrajectoryEscape("gradient dropped below gamma/2 at (" + std::to_string(x) + ", " +
                           std::to_string(y) + ")");
  return Point2{g[0] / gn2, g[1] / gn2};
}

inline Point2 rk4_step(const JetModel& m, const Point2& p, double h, double gamma) {
  const Point2 k1 = flow_velocity(m, p[0], p[1], gamma);
  const Point2 k2 = flow_velocity(m, p[0] + 0.5 * h * k1[0], p[1] + 0.5 * h * k1[1], gamma);
  const Point2 k3 = flow_velocity(m, p[0] + 0.5 * h * k2[0], p[1] + 0.5 * h * k2[1], gamma);
  const Point2 k4 = flow_velocity(m, p[0] + h * k3[0], p[1] + h * k3[1], gamma);
  return Point2{p[0] + h / 6.0 * (k1[0] + 2.0 * (k2[0] + k3[0]) + k4[0]),
                p[1] + h / 6.0 * (k1[1] + 2.0 * (k2[1] + k3[1]) + k4[1])};
}

}  // namespace detail

/// Normal-bundle map: integrates dx/dt = grad f / |grad f|^2 from y by
/// fixed-step RK4 (step eta/50) and returns the point at level t_target.
/// Satisfies f(Psi(y,t)) = t up to integrator tolerance. Throws
/// TrajectoryEscape when the gradient falls below gamma/2 along the way.
inline Point2 flow_map(const JetModel& model, const Point2& y, double t_target, double gamma,
                       double eta) {
  if (!(eta > 0.0)) throw PreconditionError("flow_map: eta must be positive");
  if (std::abs(t_target) > eta * (1.0 + 1e-12))
    throw PreconditionError("flow_map: |t_target| exceeds eta");
  {
    const Point2 g = model.grad(y[0], y[1]);
    if (g[0] * g[0] + g[1] * g[1] < 0.25 * gamma * gamma)
      throw TrajectoryEscape("flow_map: gradient below gamma/2 at the start point");
  }
  if (t_target == 0.0) return y;
  const double base = eta / 50.0;
  const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(t_target) / base)));
  const double h = t_target / steps;
  Point2 p = y;
  for (int s = 0; s < steps; ++s) p = detail::rk4_step(model, p, h, gamma);
  return p;
}

struct TrajectoryResult {
  bool ok = false;
  bool escaped = false;
  std::string reason;
  double t_zero = 0.0;
  Point2 endpoint{0.0, 0.0};
  double dpdt_min = kInf, dpdt_max = -kInf;  // finite differences of P along the flow
  int sign_changes = 0;
  double flow_residual_max = 0.0;  // max |f(Psi(y,t)) - t| over the samples
};

/// Samples P(Psi(y,t)) over [-eta, eta], verifies the derivative band
/// |dP/dt - 1| <= 1/2 and a single sign change, then locates t(y) by bisection
/// to 1e-10.
inline TrajectoryResult zero_on_trajectory(const JetModel& model, const Point2& y, double gamma,
                                           double eta) {
  TrajectoryResult res;
  const int K = 50;
  const double h = eta / K;
  std::vector<Point2> pts(2 * K + 1);
  std::vector<double> pval(2 * K + 1);
  try {
    pts[K] = y;
    for (int s = 1; s <= K; ++s)
      pts[K + s] = detail::rk4_step(model, pts[K + s - 1], h, gamma);
    for (int s = 1; s <= K; ++s)
      pts[K - s] = detail::rk4_step(model, pts[K - s + 1], -h, gamma);
  } catch (const TrajectoryEscape& e) {
    res.escaped = true;
    res.reason = e.what();
    return res;
  }
  for (int i = 0; i <= 2 * K; ++i) {
    const double t = (i - K) * h;
    pval[i] = model.taylor().eval(Vec{pts[i][0], pts[i][1]});
    res.flow_residual_max =
        std::max(res.flow_residual_max, std::abs(model.f(pts[i][0], pts[i][1]) - t));
  }
  for (int i = 0; i < 2 * K; ++i) {
    const double dp = (pval[i + 1] - pval[i]) / h;
    res.dpdt_min = std::min(res.dpdt_min, dp);
    res.dpdt_max = std::max(res.dpdt_max, dp);
  }
  if (res.dpdt_min < 0.5 - 1e-9 || res.dpdt_max > 1.5 + 1e-9) {
    res.reason = "derivative band |dP/dt - 1| <= 1/2 violated (range [" +
                 std::to_string(res.dpdt_min) + ", " + std::to_string(res.dpdt_max) + "])";
    return res;
  }
  int bracket = -1;
  for (int i = 0; i < 2 * K; ++i) {
    if (pval[i] == 0.0 || pval[i] * pval[i + 1] < 0.0) {
      ++res.sign_changes;
      if (bracket < 0) bracket = i;
    }
  }
  if (pval[2 * K] == 0.0) ++res.sign_changes;
  if (res.sign_changes != 1) {
    res.reason = "expected exactly one sign change of P on [-eta, eta], found " +
                 std::to_string(res.sign_changes);
    return res;
  }
  // bisection inside the bracketing step, integrating from the stored state
  double t_lo = (bracket - K) * h, t_hi = (bracket + 1 - K) * h;
  Point2 x_lo = pts[bracket];
  double p_lo = pval[bracket];
  try {
    while (t_hi - t_lo > 1e-10) {
      const double t_mid = 0.5 * (t_lo + t_hi);
      if (p_lo == 0.0) {
        t_hi = t_lo;
        break;
      }
      const Point2 x_mid = detail::rk4_step(model, x_lo, t_mid - t_lo, gamma);
      const double p_mid = model.taylor().eval(Vec{x_mid[0], x_mid[1]});
      if ((p_lo < 0.0) == (p_mid < 0.0)) {
        t_lo = t_mid;
        x_lo = x_mid;
        p_lo = p_mid;
      } else {
        t_hi = t_mid;
      }
    }
  } catch (const TrajectoryEscape& e) {
    res.escaped = true;
    res.reason = e.what();
    return res;
  }
  res.t_zero = 0.5 * (t_lo + t_hi);
  res.endpoint = detail::rk4_step(model, x_lo, res.t_zero - t_lo, gamma);
  res.ok = true;
  return res;
}

struct IsotopyVerdict {
  enum class Status { Verified, Failed, Inconclusive };
  Status status = Status::Inconclusive;
  std::vector<std::pair<int, int>> pairing;  // component of Y0(f) -> component of Y0(P)
  double gamma = 0.0;
  ThresholdSet constants;
  struct ComponentDiag {
    int vertices = 0;
    double t_min = 0.0, t_max = 0.0;
    double dpdt_min = 0.0, dpdt_max = 0.0;
    double flow_residual_max = 0.0;
    int failures = 0;
  };
  std::vector<ComponentDiag> components;
  std::vector<std::string> reasons;
  int trajectories_ok = 0, trajectories_failed = 0, trajectories_escaped = 0;
  LevelCurve curve_f, curve_p;
};

inline const char* to_string(IsotopyVerdict::Status s) {
  switch (s) {
    case IsotopyVerdict::Status::Verified: return "Verified";
    case IsotopyVerdict::Status::Failed: return "Failed";
    default: return "Inconclusive";
  }
}

namespace detail {

inline double point_polyline_distance(const Point2& p, const std::vector<Point2>& poly,
                                      bool closed) {
  double best = kInf;
  const std::size_t m = poly.size();
  for (std::size_t i = 0; i + 1 < m + (closed ? 1 : 0); ++i) {
    const Point2& a = poly[i % m];
    const Point2& b = poly[(i + 1) % m];
    const double vx = b[0] - a[0], vy = b[1] - a[1];
    const double wx = p[0] - a[0], wy = p[1] - a[1];
    const double vv = vx * vx + vy * vy;
    double t = vv > 0.0 ? (wx * vx + wy * vy) / vv : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    const double dx = p[0] - (a[0] + t * vx), dy = p[1] - (a[1] + t * vy);
    best = std::min(best, std::sqrt(dx * dx + dy * dy));
  }
  return best;
}

}  // namespace detail

/// Full pipeline: extract Y0(f), certify regularity, compute thresholds, run a
/// trajectory from every component vertex, and pair components of Y0(f) with
/// components of Y0(P). All failures become verdict states rather than errors.
inline IsotopyVerdict isotopy_check(const JetModel& model, double cell_size) {
  IsotopyVerdict v;
  auto note = [&](const std::string& r) {
    if (v.reasons.size() < 16) v.reasons.push_back(r);
  };
  v.curve_f = extract_zero_set(model.field(), cell_size);
  const ScalarField pfield = [&] {
    FieldSpec fs;
    fs.poly = model.taylor();
    return fs.make();
  }();
  if (v.curve_f.components.empty()) {
    v.curve_p = extract_zero_set(pfield, cell_size);
    if (v.curve_p.components.empty()) {
      v.status = IsotopyVerdict::Status::Verified;
      note("both zero sets are empty in the extraction window");
    } else {
      v.status = IsotopyVerdict::Status::Inconclusive;
      note("Y0(f) is empty in the window but Y0(P) is not; nothing to certify");
    }
    return v;
  }
  for (bool c : v.curve_f.closed)
    if (!c) {
      v.status = IsotopyVerdict::Status::Inconclusive;
      note("Y0(f) has an open contour at the extraction window boundary; "
           "the compact-support assumption looks violated");
      return v;
    }
  try {
    v.gamma = estimate_gamma(model, v.curve_f);
    v.constants = thresholds(model, v.gamma);
  } catch (const PreconditionError& e) {
    v.status = IsotopyVerdict::Status::Inconclusive;
    note(e.what());
    return v;
  }
  if (model.remainder_bound() > v.constants.T) {
    v.status = IsotopyVerdict::Status::Inconclusive;
    note("threshold exceeded: remainder bound M_{d+1} = " +
         std::to_string(model.remainder_bound()) + " > T = " + std::to_string(v.constants.T) +
         "; the isotopy hypothesis is not triggered");
    return v;
  }
  v.curve_p = extract_zero_set(pfield, cell_size);

  const double match_tol = 3.0 * cell_size;
  std::vector<int> target(v.curve_f.components.size(), -1);
  bool failed = false, escaped = false;
  for (std::size_t ci = 0; ci < v.curve_f.components.size(); ++ci) {
    IsotopyVerdict::ComponentDiag diag;
    diag.t_min = kInf;
    diag.t_max = -kInf;
    diag.dpdt_min = kInf;
    diag.dpdt_max = -kInf;
    for (const Point2& y : v.curve_f.components[ci]) {
      ++diag.vertices;
      const TrajectoryResult r = zero_on_trajectory(model, y, v.gamma, v.constants.eta);
      if (r.escaped) {
        escaped = true;
        ++v.trajectories_escaped;
        ++diag.failures;
        note("component " + std::to_string(ci) + ": " + r.reason);
        continue;
      }
      if (!r.ok) {
        failed = true;
        ++v.trajectories_failed;
        ++diag.failures;
        note("component " + std::to_string(ci) + ": " + r.reason);
        continue;
      }
      ++v.trajectories_ok;
      diag.t_min = std::min(diag.t_min, r.t_zero);
      diag.t_max = std::max(diag.t_max, r.t_zero);
      diag.dpdt_min = std::min(diag.dpdt_min, r.dpdt_min);
      diag.dpdt_max = std::max(diag.dpdt_max, r.dpdt_max);
      diag.flow_residual_max = std::max(diag.flow_residual_max, r.flow_residual_max);
      if (r.flow_residual_max > 1e-6) {
        escaped = true;
        ++diag.failures;
        note("component " + std::to_string(ci) + ": flow identity residual " +
             std::to_string(r.flow_residual_max) + " exceeds 1e-6");
        continue;
      }
      // locate the endpoint on a component of Y0(P)
      int best = -1;
      double best_dist = kInf;
      for (std::size_t wj = 0; wj < v.curve_p.components.size(); ++wj) {
        const double dist = detail::point_polyline_distance(
            r.endpoint, v.curve_p.components[wj], v.curve_p.closed[wj]);
        if (dist < best_dist) {
          best_dist = dist;
          best = static_cast<int>(wj);
        }
      }
      if (best < 0 || best_dist > match_tol) {
        failed = true;
        ++diag.failures;
        note("component " + std::to_string(ci) +
             ": trajectory endpoint is not on any component of Y0(P) (distance " +
             std::to_string(best_dist) + ")");
        continue;
      }
      if (target[ci] == -1) {
        target[ci] = best;
      } else if (target[ci] != best) {
        failed = true;
        ++diag.failures;
        note("component " + std::to_string(ci) + " maps to multiple components of Y0(P)");
      }
    }
    if (!std::isfinite(diag.t_min)) diag.t_min = diag.t_max = 0.0;
    if (!std::isfinite(diag.dpdt_min)) diag.dpdt_min = diag.dpdt_max = 0.0;
    v.components.push_back(diag);
  }
  // pairing must be total and injective
  if (!failed && !escaped) {
    std::vector<char> taken(v.curve_p.components.size(), 0);
    for (std::size_t ci = 0; ci < target.size(); ++ci) {
      if (target[ci] < 0) {
        failed = true;
        note("component " + std::to_string(ci) + " has no target in Y0(P)");
        break;
      }
      if (taken[target[ci]]) {
        failed = true;
        note("two components map to the same component of Y0(P)");
        break;
      }
      taken[target[ci]] = 1;
    }
  }
  if (!failed && !escaped)
    for (std::size_t ci = 0; ci < target.size(); ++ci)
      v.pairing.push_back({static_cast<int>(ci), target[ci]});
  v.status = escaped  ? IsotopyVerdict::Status::Inconclusive
             : failed ? IsotopyVerdict::Status::Failed
                      : IsotopyVerdict::Status::Verified;
  return v;
}

}  // namespace remezrig

#endif  // REMEZRIG_LEVELSET_HPP
