// JSON schemas for every exchange type. Documents the CLI emits carry a
// top-level {"schema": "remez-rigidity/1"} tag; embedded objects use the bare
// field layout. Infinite Remez constants serialize as the string "inf" so that
// emit -> parse -> emit is byte-stable.
#ifndef REMEZRIG_JSON_IO_HPP
#define REMEZRIG_JSON_IO_HPP

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "remezrig/domains.hpp"
#include "remezrig/extrema.hpp"
#include "remezrig/levelset.hpp"
#include "remezrig/pointset.hpp"
#include "remezrig/remez.hpp"
#include "remezrig/rigidity.hpp"

namespace remezrig {

using json = nlohmann::json;

inline constexpr const char* kSchemaTag = "remez-rigidity/1";

inline json encode_extended(double v) {
  if (std::isinf(v)) return json(v > 0 ? "inf" : "-inf");
  return json(v);
}

inline double decode_extended(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return kInf;
    if (s == "-inf") return -kInf;
    throw PreconditionError("json: expected a number or \"inf\", got \"" + s + "\"");
  }
  return j.get<double>();
}

// --- polynomials -------------------------------------------------------------

inline json to_json(const MultiPoly& p) {
  return json{{"n", p.dimension()}, {"d", p.degree()}, {"coeffs", p.coeffs()},
              {"order", "grlex"}};
}

inline MultiPoly multipoly_from_json(const json& j) {
  if (j.contains("order") && j.at("order") != "grlex")
    throw PreconditionError("MultiPoly json: unsupported monomial order");
  return MultiPoly(j.at("n").get<int>(), j.at("d").get<int>(), j.at("coeffs").get<Vec>());
}

// --- point sets and domain families ------------------------------------------

inline json to_json(const PointSet& z) {
  return json{{"n", z.dimension()}, {"points", z.points()}};
}

inline PointSet pointset_from_json(const json& j) {
  return PointSet(j.at("n").get<int>(), j.at("points").get<std::vector<Vec>>());
}

inline json to_json(const DomainSpec& d) {
  switch (d.shape) {
    case DomainSpec::Shape::Ball:
      return json{{"shape", "ball"}, {"center", d.center}, {"radius", d.radius}};
    case DomainSpec::Shape::Box:
      return json{{"shape", "box"}, {"lo", d.lo}, {"hi", d.hi}};
    default:
      return json{{"shape", "ellipse"}, {"center", d.center}, {"semiaxes", d.semiaxes}};
  }
}

inline DomainSpec domainspec_from_json(const json& j) {
  const std::string shape = j.at("shape").get<std::string>();
  if (shape == "ball") return DomainSpec::ball(j.at("center").get<Vec>(), j.at("radius").get<double>());
  if (shape == "box") return DomainSpec::box(j.at("lo").get<Vec>(), j.at("hi").get<Vec>());
  if (shape == "ellipse")
    return DomainSpec::ellipse(j.at("center").get<Vec>(), j.at("semiaxes").get<Vec>());
  throw PreconditionError("DomainSpec json: unknown shape '" + shape + "'");
}

inline json to_json(const DomainFamily& f) {
  json domains = json::array();
  for (const auto& d : f.domains()) domains.push_back(to_json(d));
  return json{{"n", f.dimension()}, {"domains", domains}};
}

inline DomainFamily family_from_json(const json& j) {
  std::vector<DomainSpec> domains;
  for (const auto& dj : j.at("domains")) domains.push_back(domainspec_from_json(dj));
  return DomainFamily(j.at("n").get<int>(), std::move(domains));
}

// --- reports -------------------------------------------------------------------

inline json to_json(const RemezReport& r) {
  json j{{"schema", kSchemaTag},
         {"degree", r.degree},
         {"lower", r.lower},
         {"upper", encode_extended(r.upper)},
         {"norming", r.norming},
         {"method", r.method},
         {"witness_ratio", r.witness_ratio},
         {"grid_step", r.grid_step}};
  j["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
  return j;
}

inline RemezReport remez_report_from_json(const json& j) {
  RemezReport r;
  r.degree = j.at("degree").get<int>();
  r.lower = j.at("lower").get<double>();
  r.upper = decode_extended(j.at("upper"));
  r.norming = j.at("norming").get<bool>();
  r.method = j.value("method", std::string());
  r.witness_ratio = j.value("witness_ratio", 0.0);
  r.grid_step = j.value("grid_step", 0.0);
  if (j.contains("witness") && !j.at("witness").is_null())
    r.witness = multipoly_from_json(j.at("witness"));
  return r;
}

inline json to_json(const NormingCheck& n) {
  json j{{"schema", kSchemaTag},
         {"norming", n.norming},
         {"rank", n.rank},
         {"needed", n.needed},
         {"certificate_max_on_Z", n.certificate_max_on_Z},
         {"certificate_ball_sup", n.certificate_ball_sup}};
  j["certificate"] = n.certificate ? to_json(*n.certificate) : json(nullptr);
  return j;
}

inline json to_json(const TopologicalBound& t) {
  return json{{"schema", kSchemaTag},
              {"degree", t.degree},
              {"n", t.n},
              {"j_d", t.j_d},
              {"binding_domain", t.binding_domain},
              {"lambda_jd", t.lambda_jd},
              {"mu_raw_jd", t.mu_raw_jd},
              {"bound", t.bound},
              {"bound_raw_mu", t.bound_raw_mu}};
}

inline json to_json(const WitnessTestReport& w) {
  json detail = json::array();
  for (const auto& v : w.detail)
    detail.push_back(json{{"poly", to_json(v.poly)}, {"boundary_max", v.boundary_max}});
  return json{{"schema", kSchemaTag},
              {"trials_requested", w.trials_requested},
              {"trials_run", w.trials_run},
              {"violations", w.violations},
              {"hypothesis_satisfied", w.hypothesis_satisfied},
              {"j_eff", w.j_eff},
              {"kappa", w.kappa},
              {"min_boundary_max", encode_extended(w.min_boundary_max)},
              {"note", w.note},
              {"detail", detail}};
}

inline json to_json(const RigidityBound& r) {
  return json{{"schema", kSchemaTag},
              {"degree", r.degree},
              {"lower", r.lower},
              {"source", r.source},
              {"inputs_digest", r.inputs_digest},
              {"estimate", r.estimate},
              {"applicable", r.applicable},
              {"note", r.note}};
}

inline json to_json(const CriticalPoint& c) {
  return json{{"location", c.location},
              {"kind", std::string(to_string(c.kind))},
              {"value", c.value},
              {"gradient_norm", c.gradient_norm},
              {"hessian_signs", c.hessian_signs}};
}

inline json to_json(const std::vector<CriticalPoint>& pts) {
  json arr = json::array();
  for (const auto& p : pts) arr.push_back(to_json(p));
  return arr;
}

inline json to_json(const BezoutReport& b) {
  return json{{"schema", kSchemaTag},
              {"checked", b.checked},
              {"bound", b.bound},
              {"critical_count", b.critical_count},
              {"extrema_count", b.extrema_count},
              {"count_ok", b.count_ok},
              {"extrema_ok", b.extrema_ok},
              {"note", b.note}};
}

// --- level sets ----------------------------------------------------------------

inline json to_json(const FieldSpec& f) {
  json j{{"builtin", f.builtin}, {"poly", to_json(f.poly)}};
  if (f.builtin == "poly_plus_sine") {
    j["amp"] = f.amp;
    j["kx"] = f.kx;
    j["ky"] = f.ky;
  }
  return j;
}

inline FieldSpec fieldspec_from_json(const json& j) {
  FieldSpec f;
  f.builtin = j.value("builtin", std::string("poly"));
  f.poly = multipoly_from_json(j.at("poly"));
  f.amp = j.value("amp", 0.0);
  f.kx = j.value("kx", 0.0);
  f.ky = j.value("ky", 0.0);
  return f;
}

inline json to_json(const JetModel& m) {
  return json{{"schema", kSchemaTag},
              {"n", 2},
              {"d", m.degree()},
              {"taylor", to_json(m.taylor())},
              {"remainder_bound", m.remainder_bound()},
              {"field", to_json(m.field_spec())}};
}

inline JetModel jetmodel_from_json(const json& j) {
  if (j.contains("n") && j.at("n").get<int>() != 2)
    throw PreconditionError("JetModel json: only n = 2 is supported");
  MultiPoly taylor = multipoly_from_json(j.at("taylor"));
  if (j.contains("d") && j.at("d").get<int>() != taylor.degree())
    throw PreconditionError("JetModel json: d does not match the Taylor polynomial degree");
  FieldSpec field;
  if (j.contains("field") && !j.at("field").is_null())
    field = fieldspec_from_json(j.at("field"));
  else
    field.poly = taylor;
  return JetModel::make(std::move(taylor), j.at("remainder_bound").get<double>(),
                        std::move(field));
}

inline json to_json(const LevelCurve& c) {
  json comps = json::array();
  for (const auto& comp : c.components) {
    json poly = json::array();
    for (const Point2& p : comp) poly.push_back(json::array({p[0], p[1]}));
    comps.push_back(poly);
  }
  return json{{"components", comps},
              {"closed", c.closed},
              {"cell_size", c.cell_size},
              {"max_residual", c.max_residual}};
}

inline json to_json(const IsotopyVerdict& v) {
  json comps = json::array();
  for (const auto& c : v.components)
    comps.push_back(json{{"vertices", c.vertices},
                         {"t_min", c.t_min},
                         {"t_max", c.t_max},
                         {"dpdt_min", c.dpdt_min},
                         {"dpdt_max", c.dpdt_max},
                         {"flow_residual_max", c.flow_residual_max},
                         {"failures", c.failures}});
  json pairing = json::array();
  for (const auto& [a, b] : v.pairing) pairing.push_back(json::array({a, b}));
  return json{{"schema", kSchemaTag},
              {"status", std::string(to_string(v.status))},
              {"pairing", pairing},
              {"gamma", v.gamma},
              {"constants",
               json{{"cbar2", v.constants.cbar2},
                    {"C3", v.constants.C3},
                    {"delta", v.constants.delta},
                    {"eta", v.constants.eta},
                    {"T", v.constants.T}}},
              {"components", comps},
              {"reasons", v.reasons},
              {"trajectories",
               json{{"ok", v.trajectories_ok},
                    {"failed", v.trajectories_failed},
                    {"escaped", v.trajectories_escaped}}},
              {"curve_f_components", static_cast<int>(v.curve_f.components.size())},
              {"curve_p_components", static_cast<int>(v.curve_p.components.size())}};
}

// --- files ----------------------------------------------------------------------

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw PreconditionError("cannot parse " + path + ": " + e.what());
  }
  return j;
}

inline void save_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write file: " + path);
  out << text;
}

}  // namespace remezrig

#endif  // REMEZRIG_JSON_IO_HPP
