#include "avd_cli/scene.hpp"

#include <fstream>

#include <fmt/core.h>

namespace avd::cli {
namespace {

using nlohmann::json;

double number(const json& j, const char* key) {
  if (!j.contains(key)) throw ConfigError(fmt::format("missing field '{}'", key));
  const json& v = j.at(key);
  if (!v.is_number()) throw ConfigError(fmt::format("field '{}' must be a number", key));
  return v.get<double>();
}

Point point(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ConfigError("a point must be a [x, y] pair of numbers");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

template <typename T>
void maybe(const json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  if (!j.at(key).is_number()) throw ConfigError(fmt::format("field '{}' must be a number", key));
  out = j.at(key).get<T>();
}

GridSpec parse_grid(const json& j) {
  if (!j.is_object()) throw ConfigError("'grid' must be an object");
  GridSpec g;
  g.x_min = number(j, "xmin");
  g.x_max = number(j, "xmax");
  g.y_min = number(j, "ymin");
  g.y_max = number(j, "ymax");
  maybe(j, "nx", g.nx);
  maybe(j, "ny", g.ny);
  g.validate();
  return g;
}

Tolerances parse_tolerances(const json& j) {
  if (!j.is_object()) throw ConfigError("'tolerances' must be an object");
  Tolerances t;
  maybe(j, "degree", t.classify.degree_tol);
  maybe(j, "factor", t.classify.factor_tol);
  maybe(j, "singular", t.classify.singular_tol);
  maybe(j, "cusp_band", t.classify.cusp_band);
  maybe(j, "quadratic", t.classify.quad_tol);
  maybe(j, "seed_grid", t.classify.seed_grid);
  maybe(j, "residual", t.validation.residual_tol);
  maybe(j, "gap", t.validation.gap_tol);
  for (const double v : {t.classify.degree_tol, t.classify.factor_tol, t.classify.singular_tol,
                         t.classify.cusp_band, t.classify.quad_tol, t.validation.residual_tol,
                         t.validation.gap_tol}) {
    if (!(v >= 0.0)) throw ConfigError("tolerances must be non-negative");
  }
  if (t.classify.seed_grid < 2) throw ConfigError("seed_grid must be at least 2");
  return t;
}

}  // namespace

std::pair<Segment, Segment> SceneConfig::pair() const {
  if (canonical) return {CanonicalConfig::canonical_s1(), canonical->canonical_s2()};
  if (segments.size() != 2) {
    throw ConfigError(fmt::format("an edge needs exactly 2 segments, got {}", segments.size()));
  }
  return {segments[0], segments[1]};
}

CanonicalConfig SceneConfig::canonical_pair() const {
  if (canonical) {
    if (segments_coincide(CanonicalConfig::canonical_s1(), canonical->canonical_s2())) {
      throw IdenticalSegments("the two segments coincide as point sets");
    }
    return *canonical;
  }
  const auto [s1, s2] = pair();
  return canonicalize(s1, s2);
}

SceneConfig parse_scene(const json& j) {
  if (!j.is_object()) throw ConfigError("configuration must be a JSON object");
  SceneConfig scene;
  try {
    if (j.contains("segments")) {
      const json& segs = j.at("segments");
      if (!segs.is_array()) throw ConfigError("'segments' must be an array");
      for (const json& s : segs) {
        if (!s.is_array() || s.size() != 2) throw ConfigError("a segment must be [[x,y],[x,y]]");
        scene.segments.emplace_back(point(s[0]), point(s[1]));
      }
    }
    if (j.contains("canonical")) {
      if (!scene.segments.empty()) {
        throw ConfigError("give either 'segments' or 'canonical', not both");
      }
      const json& c = j.at("canonical");
      if (!c.is_object()) throw ConfigError("'canonical' must be an object");
      const double a = number(c, "a");
      const double b = number(c, "b");
      const double l = number(c, "l");
      if (c.contains("alpha")) {
        scene.canonical = CanonicalConfig::from_angle(a, b, l, number(c, "alpha"));
      } else {
        scene.canonical =
            CanonicalConfig::make(a, b, l, number(c, "sin_alpha"), number(c, "cos_alpha"));
      }
    }
    if (scene.segments.empty() && !scene.canonical) {
      throw ConfigError("configuration needs 'segments' or 'canonical'");
    }
    if (j.contains("grid")) scene.grid = parse_grid(j.at("grid"));
    if (j.contains("tolerances")) scene.tolerances = parse_tolerances(j.at("tolerances"));
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(e.what());
  }
  return scene;
}

SceneConfig load_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot open '{}'", path));
  json j;
  try {
    j = json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(fmt::format("'{}' is not valid JSON: {}", path, e.what()));
  }
  return parse_scene(j);
}

}  // namespace avd::cli
