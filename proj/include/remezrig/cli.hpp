// Command-line surface. Subcommands mirror the library operations; every
// command emits one JSON (or CSV) document on stdout and can drop plot data
// into an SVG file. Randomized sweeps take --seed and are byte-reproducible.
//
// Exit codes: 0 success, 2 precondition violation, 3 internal-consistency
// failure, 64 usage error.
#ifndef REMEZRIG_CLI_HPP
#define REMEZRIG_CLI_HPP

#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "remezrig/gallery.hpp"
#include "remezrig/json_io.hpp"
#include "remezrig/svg.hpp"

namespace remezrig {

namespace cli_detail {

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

inline std::string scalar_to_string(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

inline void flatten_json(const json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      flatten_json(v, prefix.empty() ? k : prefix + "." + k, os);
  } else if (j.is_array()) {
    int i = 0;
    for (const auto& v : j) flatten_json(v, prefix + "[" + std::to_string(i++) + "]", os);
  } else {
    os << csv_escape(prefix) << "," << csv_escape(scalar_to_string(j)) << "\n";
  }
}

inline std::string to_csv(const json& doc) {
  std::ostringstream os;
  if (doc.contains("rows") && doc.at("rows").is_array()) {
    os << "quantity,measured,expected,provenance,flag,note\n";
    for (const auto& r : doc.at("rows")) {
      os << csv_escape(scalar_to_string(r.at("quantity"))) << ","
         << scalar_to_string(r.at("measured")) << "," << scalar_to_string(r.at("expected"))
         << "," << csv_escape(scalar_to_string(r.at("provenance"))) << ","
         << csv_escape(scalar_to_string(r.at("flag"))) << ","
         << csv_escape(scalar_to_string(r.at("note"))) << "\n";
    }
  } else {
    os << "key,value\n";
    flatten_json(doc, "", os);
  }
  return os.str();
}

struct Emitter {
  std::string emit = "json";
  std::string svg_path;

  void document(const json& doc, const std::function<void(SvgCanvas&)>& draw = {}) const {
    if (emit == "csv")
      std::cout << to_csv(doc);
    else
      std::cout << doc.dump(2) << "\n";
    if (!svg_path.empty()) {
      SvgCanvas canvas;
      canvas.circle(0.0, 0.0, 1.0, "#888888");
      if (draw) draw(canvas);
      save_text_file(svg_path, canvas.str());
    }
  }
};

inline void draw_curves(SvgCanvas& c, const std::vector<std::vector<Point2>>& curves,
                        const std::string& color) {
  for (const auto& poly : curves) c.polyline(poly, true, color);
}

inline void draw_heat_poly(SvgCanvas& c, const MultiPoly& p) {
  double vmax = 0.0;
  for (const Vec& x : ball_samples(2, 0.05)) vmax = std::max(vmax, std::abs(p.eval(x)));
  c.heat([&](double x, double y) { return p.eval(Vec{x, y}); }, 90, vmax);
}

}  // namespace cli_detail

inline int cli_main(int argc, char** argv) {
  using cli_detail::Emitter;
  CLI::App app{"remezrig: polynomial norming constants, rigidity bounds, and level-set "
               "isotopy checks on the unit ball"};
  app.require_subcommand(1);
  app.footer(
      "Output: --emit json (default) prints one JSON document; --emit csv prints either\n"
      "a quantity,measured,expected,provenance,flag,note table (gallery reports) or\n"
      "key,value rows (all other reports). --svg FILE writes plot data (zero-set\n"
      "polylines, witness heatmaps, input geometry). --seed drives every randomized\n"
      "sweep; identical seeds give byte-identical output.");

  Emitter emitter;
  std::uint64_t seed = 20240101;
  app.add_option("--emit", emitter.emit, "Output format: json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--svg", emitter.svg_path, "Write plot data to this SVG file");
  app.add_option("--seed", seed, "Seed for randomized sweeps");

  std::function<void()> action;

  // ---- remez ----------------------------------------------------------------
  auto* remez_cmd = app.add_subcommand("remez", "Remez (norming) constants");
  remez_cmd->require_subcommand(1);
  {
    auto* finite = remez_cmd->add_subcommand("finite", "Certified enclosure for a finite set");
    auto points_file = std::make_shared<std::string>();
    auto d = std::make_shared<int>(1);
    auto step = std::make_shared<double>(0.0);
    finite->add_option("--points", *points_file, "PointSet JSON file")->required();
    finite->add_option("--d", *d, "Polynomial degree")->required();
    finite->add_option("--grid-step", *step,
                       "Ball grid step (default: admissible step for (n,d))");
    finite->callback([&, points_file, d, step] {
      action = [&, points_file, d, step] {
        const PointSet Z = pointset_from_json(load_json_file(*points_file));
        const double gs = *step > 0.0 ? *step : default_supnorm_step(Z.dimension(), *d);
        const RemezReport rep = remez_finite(Z, *d, gs);
        emitter.document(to_json(rep), [&](SvgCanvas& c) {
          if (rep.witness && Z.dimension() == 2) {
            cli_detail::draw_heat_poly(c, *rep.witness);
            for (const Vec& z : Z.points()) c.dot(z[0], z[1], "black");
          }
        });
      };
    });

    auto* measure = remez_cmd->add_subcommand("measure-bound", "Measure-based upper bound");
    auto lambda = std::make_shared<double>(1.0);
    auto mn = std::make_shared<int>(1);
    auto md = std::make_shared<int>(1);
    measure->add_option("--lambda", *lambda, "Normalized measure in (0,1]")->required();
    measure->add_option("--n", *mn, "Dimension")->required();
    measure->add_option("--d", *md, "Degree")->required();
    measure->callback([&, lambda, mn, md] {
      action = [&, lambda, mn, md] {
        const MeasureBound b = measure_remez_bound(*lambda, *mn, *md);
        emitter.document(json{{"schema", kSchemaTag},
                              {"lambda", *lambda},
                              {"n", *mn},
                              {"d", *md},
                              {"chebyshev_bound", b.chebyshev_bound},
                              {"simple_bound", b.simple_bound}});
      };
    });

    auto* topo = remez_cmd->add_subcommand("topology-bound",
                                           "Upper bound from a disjoint domain family");
    auto family_file = std::make_shared<std::string>();
    auto td = std::make_shared<int>(1);
    topo->add_option("--family", *family_file, "DomainFamily JSON file")->required();
    topo->add_option("--d", *td, "Degree")->required();
    topo->callback([&, family_file, td] {
      action = [&, family_file, td] {
        const DomainFamily F = family_from_json(load_json_file(*family_file));
        emitter.document(to_json(topological_remez_bound(F, *td)));
      };
    });

    auto* witness = remez_cmd->add_subcommand(
        "witness-test", "Random-polynomial sweep behind the topological bound");
    auto wfamily = std::make_shared<std::string>();
    auto wd = std::make_shared<int>(1);
    auto trials = std::make_shared<int>(100);
    auto bsamples = std::make_shared<int>(256);
    witness->add_option("--family", *wfamily, "DomainFamily JSON file")->required();
    witness->add_option("--d", *wd, "Degree")->required();
    witness->add_option("--trials", *trials, "Number of random polynomials");
    witness->add_option("--boundary-samples", *bsamples, "Samples per domain boundary");
    witness->callback([&, wfamily, wd, trials, bsamples] {
      action = [&, wfamily, wd, trials, bsamples] {
        const DomainFamily F = family_from_json(load_json_file(*wfamily));
        Rng rng(seed);
        emitter.document(
            to_json(topological_bound_witness_test(F, *wd, *trials, rng, *bsamples)));
      };
    });
  }

  // ---- rigidity ---------------------------------------------------------------
  auto* rig_cmd = app.add_subcommand("rigidity", "Rigidity-constant lower bounds");
  rig_cmd->require_subcommand(1);
  {
    auto* fromremez = rig_cmd->add_subcommand("from-remez", "Convert a Remez report");
    auto report_file = std::make_shared<std::string>();
    fromremez->add_option("--report", *report_file, "RemezReport JSON file")->required();
    fromremez->callback([&, report_file] {
      action = [&, report_file] {
        emitter.document(
            to_json(rigidity_from_remez(remez_report_from_json(load_json_file(*report_file)))));
      };
    });

    auto* pts1d = rig_cmd->add_subcommand("points-1d", "One-dimensional point-count bound");
    auto count = std::make_shared<int>(0);
    auto pd = std::make_shared<int>(1);
    pts1d->add_option("--count", *count, "Number of points")->required();
    pts1d->add_option("--d", *pd, "Degree")->required();
    pts1d->callback([&, count, pd] {
      action = [&, count, pd] { emitter.document(to_json(rigidity_1d_points(*count, *pd))); };
    });

    auto* interior = rig_cmd->add_subcommand("interior", "Non-empty-interior bound");
    auto id = std::make_shared<int>(1);
    interior->add_option("--d", *id, "Degree")->required();
    interior->callback([&, id] {
      action = [&, id] { emitter.document(to_json(rigidity_interior(*id))); };
    });

    auto* density = rig_cmd->add_subcommand("density", "Density bound for finite sets");
    auto dpoints = std::make_shared<std::string>();
    auto dn = std::make_shared<int>(0);
    auto dcount = std::make_shared<int>(0);
    auto drho = std::make_shared<double>(0.0);
    auto dd = std::make_shared<int>(1);
    density->add_option("--points", *dpoints, "PointSet JSON file (M and rho are computed)");
    density->add_option("--n", *dn, "Dimension (with --count/--rho)");
    density->add_option("--count", *dcount, "Point count M");
    density->add_option("--rho", *drho, "Minimal separation rho");
    density->add_option("--d", *dd, "Degree")->required();
    density->callback([&, dpoints, dn, dcount, drho, dd] {
      action = [&, dpoints, dn, dcount, drho, dd] {
        if (!dpoints->empty()) {
          const PointSet Z = pointset_from_json(load_json_file(*dpoints));
          emitter.document(to_json(rigidity_density(Z, *dd)));
        } else if (*dn > 0 && *dcount > 0 && *drho > 0.0) {
          emitter.document(to_json(rigidity_density(*dn, *dcount, *drho, *dd)));
        } else {
          throw PreconditionError("rigidity density: pass --points or all of --n/--count/--rho");
        }
      };
    });

    auto* whitney = rig_cmd->add_subcommand("whitney-1d", "Divided-difference estimate");
    auto wpoints = std::make_shared<std::string>();
    auto wd2 = std::make_shared<int>(1);
    auto probe = std::make_shared<int>(200);
    whitney->add_option("--points", *wpoints, "PointSet JSON file (n = 1)")->required();
    whitney->add_option("--d", *wd2, "Degree")->required();
    whitney->add_option("--probe-grid", *probe, "Probe grid size on [-1,1]");
    whitney->callback([&, wpoints, wd2, probe] {
      action = [&, wpoints, wd2, probe] {
        const PointSet Z = pointset_from_json(load_json_file(*wpoints));
        emitter.document(to_json(rigidity_1d_whitney(Z, *wd2, *probe)));
      };
    });
  }

  // ---- extrema ---------------------------------------------------------------
  auto* ext_cmd = app.add_subcommand("extrema", "Critical points of polynomials");
  ext_cmd->require_subcommand(1);
  {
    auto* find = ext_cmd->add_subcommand("find", "Grid-seeded Newton search");
    auto poly_file = std::make_shared<std::string>();
    auto sstep = std::make_shared<double>(0.05);
    find->add_option("--poly", *poly_file, "MultiPoly JSON file")->required();
    find->add_option("--seed-step", *sstep, "Seeding grid step in (0, 0.2]");
    find->callback([&, poly_file, sstep] {
      action = [&, poly_file, sstep] {
        const MultiPoly p = multipoly_from_json(load_json_file(*poly_file));
        const auto pts = find_critical_points(p, *sstep);
        json doc{{"schema", kSchemaTag},
                 {"count", pts.size()},
                 {"critical_points", to_json(pts)}};
        emitter.document(doc, [&](SvgCanvas& c) {
          if (p.dimension() == 2) {
            cli_detail::draw_heat_poly(c, p);
            for (const auto& cp : pts)
              c.dot(cp.location[0], cp.location[1],
                    cp.kind == CriticalKind::Max   ? "red"
                    : cp.kind == CriticalKind::Min ? "blue"
                                                   : "black");
          }
        });
      };
    });

    auto* bez = ext_cmd->add_subcommand("bezout", "Critical-point count vs (d-1)^n");
    auto bpoly = std::make_shared<std::string>();
    auto bstep = std::make_shared<double>(0.05);
    bez->add_option("--poly", *bpoly, "MultiPoly JSON file")->required();
    bez->add_option("--seed-step", *bstep, "Seeding grid step in (0, 0.2]");
    bez->callback([&, bpoly, bstep] {
      action = [&, bpoly, bstep] {
        const MultiPoly p = multipoly_from_json(load_json_file(*bpoly));
        const auto pts = find_critical_points(p, *bstep);
        json doc = to_json(bezout_extrema_check(p, pts));
        doc["critical_points"] = to_json(pts);
        emitter.document(doc);
      };
    });
  }

  // ---- isotopy ---------------------------------------------------------------
  auto* iso_cmd = app.add_subcommand("isotopy", "Level-set isotopy checking");
  iso_cmd->require_subcommand(1);
  {
    auto* check = iso_cmd->add_subcommand("check", "Zero-set isotopy verdict");
    auto jet_file = std::make_shared<std::string>();
    auto cell = std::make_shared<double>(0.005);
    check->add_option("--jet", *jet_file, "JetModel JSON file")->required();
    check->add_option("--cell", *cell, "Marching-squares cell size in (0, 0.05]");
    check->callback([&, jet_file, cell] {
      action = [&, jet_file, cell] {
        const JetModel model = jetmodel_from_json(load_json_file(*jet_file));
        const IsotopyVerdict v = isotopy_check(model, *cell);
        emitter.document(to_json(v), [&](SvgCanvas& c) {
          for (std::size_t i = 0; i < v.curve_f.components.size(); ++i)
            c.polyline(v.curve_f.components[i], v.curve_f.closed[i], "blue");
          for (std::size_t i = 0; i < v.curve_p.components.size(); ++i)
            c.polyline(v.curve_p.components[i], v.curve_p.closed[i], "red");
        });
      };
    });
  }

  // ---- gallery ---------------------------------------------------------------
  auto* gal_cmd = app.add_subcommand("gallery", "Example constructions with expected values");
  gal_cmd->require_subcommand(1);
  {
    auto add_gallery_emit = [&](const GalleryReport& rep) {
      emitter.document(to_json(rep), [&](SvgCanvas& c) {
        if (rep.heat_poly) cli_detail::draw_heat_poly(c, *rep.heat_poly);
        cli_detail::draw_curves(c, rep.curves, "blue");
        for (const Vec& p : rep.points) c.dot(p[0], p[1], "black");
      });
    };

    auto* tri = gal_cmd->add_subcommand("triangle", "Triangle point set at degree 1");
    tri->set_help_flag("--help", "Print help");  // frees --h for the parameter
    auto th = std::make_shared<double>(0.5);
    tri->add_option("--h", *th, "Triangle height in (0, 1]")->required();
    tri->callback([&, th, add_gallery_emit] {
      action = [&, th, add_gallery_emit] { add_gallery_emit(gallery_triangle(*th)); };
    });

    auto* er = gal_cmd->add_subcommand("ellipse-rectangle",
                                       "Thin ellipse plus rectangle at degree 2");
    er->set_help_flag("--help", "Print help");
    auto eh = std::make_shared<double>(0.2);
    er->add_option("--h", *eh, "Scale h in (0, 0.5]")->required();
    er->callback([&, eh, add_gallery_emit] {
      action = [&, eh, add_gallery_emit] { add_gallery_emit(gallery_ellipse_rectangle(*eh)); };
    });

    auto* pp = gal_cmd->add_subcommand("product-poly",
                                       "Product polynomial with non-norming level set");
    auto pd2 = std::make_shared<int>(3);
    auto roots_csv = std::make_shared<std::string>();
    auto zeta = std::make_shared<double>(0.0);
    auto pcell = std::make_shared<double>(0.004);
    pp->add_option("--d", *pd2, "Per-axis degree (= number of roots)")->required();
    pp->add_option("--roots", *roots_csv, "Comma-separated roots in (-1/sqrt(2), 1/sqrt(2))")
        ->required();
    pp->add_option("--zeta", *zeta, "Regular value (default: auto-selected)");
    pp->add_option("--cell", *pcell, "Extraction cell size");
    pp->callback([&, pd2, roots_csv, zeta, pcell, add_gallery_emit] {
      action = [&, pd2, roots_csv, zeta, pcell, add_gallery_emit] {
        std::vector<double> roots;
        std::stringstream ss(*roots_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
          if (!tok.empty()) roots.push_back(std::stod(tok));
        }
        std::optional<double> z;
        if (*zeta != 0.0) z = *zeta;
        add_gallery_emit(gallery_product_poly(*pd2, roots, z, *pcell));
      };
    });
  }

  // let global flags (--emit/--svg/--seed) appear after subcommand arguments
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
    for (CLI::App* sub : cmd->get_subcommands({})) {
      sub->fallthrough();
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n(run with --help for usage)\n";
    return 64;
  }
  try {
    if (action) action();
  } catch (const PreconditionError& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal-consistency error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace remezrig

#endif  // REMEZRIG_CLI_HPP
