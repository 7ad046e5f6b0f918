#include "avd_cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>

#include <fmt/core.h>

#include "avd_cli/scenarios.hpp"
#include "avd_cli/svg.hpp"

namespace avd::cli {
namespace {

using nlohmann::json;

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error(fmt::format("cannot write '{}'", path));
  f << text;
  if (!f) throw std::runtime_error(fmt::format("failed writing '{}'", path));
}

void emit(const json& j, const std::optional<std::string>& path, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (path) {
    write_file(*path, text);
  } else {
    out << text;
  }
}

}  // namespace

int run_guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    err << "avd: malformed configuration: " << e.what() << "\n";
    return kMalformedConfig;
  } catch (const IdenticalSegments& e) {
    err << "avd: identical segments: " << e.what() << "\n";
    return kIdenticalSegments;
  } catch (const ZeroPolynomial& e) {
    err << "avd: identical segments: " << e.what() << "\n";
    return kIdenticalSegments;
  } catch (const DegreeOneAnomaly& e) {
    err << "avd: internal degree-one edge: " << e.what() << "\n";
    return kDegreeOneAnomaly;
  } catch (const std::exception& e) {
    err << "avd: " << e.what() << "\n";
    return kFailure;
  }
}

namespace {

GridSpec edge_window(const SceneConfig& scene, const CanonicalConfig& config) {
  return scene.grid ? *scene.grid : default_world_window(config, 512);
}

PolyLineSet or_empty(const std::function<PolyLineSet()>& f) {
  try {
    return f();
  } catch (const EmptyResult&) {
    return {};
  }
}

}  // namespace

ClassificationReport analyze_edge(const SceneConfig& scene) {
  const CanonicalConfig config = scene.canonical_pair();
  const auto [s1, s2] = scene.pair();
  const EdgeCurve curve = build_edge(config);
  const ClassifyOptions& opts = scene.tolerances.classify;

  ClassificationReport r;
  r.canonical = {config.a, config.b, config.l, config.sin_alpha, config.cos_alpha};
  const SimilarityTransform& t = config.to_world;
  r.to_world = {t.cos_rotation(), t.sin_rotation(), t.scale(), t.translation().x,
                t.translation().y};
  r.polynomial = normalize(curve.poly).coefficients();
  r.companion = normalize(curve.companion).coefficients();
  r.world_polynomial = normalize(curve.world_poly).coefficients();
  r.classification = classify_edge(curve, opts);
  r.companion_classification = classify_branch(curve.companion, edge_search_box(config), opts);
  r.degeneracies = detect_geometric_degeneracy(s1, s2);

  ValidationOptions vopts = scene.tolerances.validation;
  vopts.frame = Frame::World;
  try {
    r.validation = validate_curve(curve, edge_window(scene, config), vopts);
  } catch (const EmptyResult&) {
    r.validation.reset();
  }
  return r;
}

GridSpec default_diagram_grid(const std::vector<Segment>& sites, int n) {
  double x_min = INFINITY, x_max = -INFINITY, y_min = INFINITY, y_max = -INFINITY;
  for (const Segment& s : sites) {
    for (const Point p : {s.e0(), s.e1()}) {
      x_min = std::min(x_min, p.x);
      x_max = std::max(x_max, p.x);
      y_min = std::min(y_min, p.y);
      y_max = std::max(y_max, p.y);
    }
  }
  const double pad = 0.5 * std::max(x_max - x_min, y_max - y_min);
  return {x_min - pad, x_max + pad, y_min - pad, y_max + pad, n, n};
}

int cmd_edge(const EdgeArgs& args, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&] {
    SceneConfig scene = load_scene(args.config);
    if (args.tol) {
      if (!(*args.tol > 0.0)) throw ConfigError("--tol must be positive");
      scene.tolerances.classify.factor_tol = *args.tol;
      scene.tolerances.classify.singular_tol = *args.tol;
    }
    const ClassificationReport report = analyze_edge(scene);
    emit(to_json(report), args.out, out);

    if (args.svg) {
      const CanonicalConfig config = scene.canonical_pair();
      const EdgeCurve curve = build_edge(config);
      const auto [s1, s2] = scene.pair();
      EdgeDrawing d{s1, s2, edge_window(scene, config), {}, {}, {}, {}};
      d.curve = extract_zero_set(curve.world_poly, d.window);
      d.companion = extract_zero_set(curve.world_companion, d.window);
      d.oracle = or_empty([&] { return extract_bisector(s1, s2, d.window); });
      for (const SingularPoint& s : report.classification.singularities) {
        d.singularities.push_back({config.to_world.apply(s.location), s.kind});
      }
      write_file(*args.svg, render_edge_svg(d));
    }
    return kOk;
  });
}

int cmd_diagram(const DiagramArgs& args, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&] {
    const SceneConfig scene = load_scene(args.config);
    std::vector<Segment> sites = scene.segments;
    if (scene.canonical) {
      const auto [s1, s2] = scene.pair();
      sites = {s1, s2};
    }
    if (sites.size() < 2) {
      throw ConfigError(fmt::format("a diagram needs at least 2 segments, got {}", sites.size()));
    }
    const GridSpec grid = scene.grid ? *scene.grid : default_diagram_grid(sites);
    const LabeledRaster raster = rasterize_diagram(sites, grid);

    std::map<int, std::size_t> counts;
    for (const int label : raster.labels) ++counts[label];
    json regions = json::array();
    std::size_t boundary = 0;
    for (const auto& [label, n] : counts) {
      if (label == LabeledRaster::kBoundary) {
        boundary = n;
      } else {
        regions.push_back({{"site", label}, {"nodes", n}});
      }
    }
    const json summary{{"sites", sites.size()},
                       {"grid",
                        {{"xmin", grid.x_min},
                         {"xmax", grid.x_max},
                         {"ymin", grid.y_min},
                         {"ymax", grid.y_max},
                         {"nx", grid.nx},
                         {"ny", grid.ny}}},
                       {"regions", regions},
                       {"labels_present", regions.size()},
                       {"tie_nodes", boundary}};
    write_file(args.svg, render_diagram_svg(sites, raster));
    emit(summary, args.out, out);
    return kOk;
  });
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&] {
    const auto results = run_scenarios(args.only, args.seed);
    out << format_scenarios(results);
    const bool all = std::all_of(results.begin(), results.end(),
                                 [](const ScenarioResult& r) { return r.pass; });
    return all ? kOk : kFailure;
  });
}

}  // namespace avd::cli
