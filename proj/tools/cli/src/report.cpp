#include "avd_cli/report.hpp"

#include <stdexcept>
#include <string>

namespace avd::cli {
namespace {

using nlohmann::json;

json point_json(Point p) { return json::array({p.x, p.y}); }
Point point_from(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

json line_json(const Line& l) { return {{"u", l.u}, {"v", l.v}, {"w", l.w}}; }
// Already normalized on output, so no re-normalization on input.
Line line_from(const json& j) {
  Line l;
  l.u = j.at("u").get<double>();
  l.v = j.at("v").get<double>();
  l.w = j.at("w").get<double>();
  return l;
}

template <typename E, typename F>
E enum_from(const json& j, F parse) {
  const auto s = j.get<std::string>();
  const auto v = parse(s);
  if (!v) throw std::invalid_argument("unknown tag '" + s + "'");
  return *v;
}

json coefficients_json(const BivariatePoly::Coefficients& c) {
  return json(std::vector<double>(c.begin(), c.end()));
}
BivariatePoly::Coefficients coefficients_from(const json& j) {
  BivariatePoly::Coefficients c{};
  if (j.size() != c.size()) throw std::invalid_argument("expected 10 coefficients");
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = j.at(k).get<double>();
  return c;
}

json validation_json(const ValidationReport& v) {
  return {{"oracle_vertices", v.oracle_vertices},
          {"primary_residual", v.primary_residual},
          {"branch_residual", v.branch_residual},
          {"primary_fraction", v.primary_fraction},
          {"curve_samples", v.curve_samples},
          {"curve_on_locus_fraction", v.curve_on_locus_fraction},
          {"supplementary_fraction", v.supplementary_fraction},
          {"carrier_line_nodes", v.carrier_line_nodes},
          {"primary_contains", v.primary_contains},
          {"pass", v.pass}};
}

ValidationReport validation_from(const json& j) {
  ValidationReport v;
  v.oracle_vertices = j.at("oracle_vertices").get<std::size_t>();
  v.primary_residual = j.at("primary_residual").get<double>();
  v.branch_residual = j.at("branch_residual").get<double>();
  v.primary_fraction = j.at("primary_fraction").get<double>();
  v.curve_samples = j.at("curve_samples").get<std::size_t>();
  v.curve_on_locus_fraction = j.at("curve_on_locus_fraction").get<double>();
  v.supplementary_fraction = j.at("supplementary_fraction").get<double>();
  v.carrier_line_nodes = j.at("carrier_line_nodes").get<std::size_t>();
  v.primary_contains = j.at("primary_contains").get<bool>();
  v.pass = j.at("pass").get<bool>();
  return v;
}

}  // namespace

json to_json(const EdgeClass& c) {
  json j{{"tag", to_string(c.tag)}, {"degree", c.degree}};
  json sing = json::array();
  for (const auto& s : c.singularities) {
    sing.push_back({{"location", point_json(s.location)}, {"kind", to_string(s.kind)}});
  }
  j["singularities"] = std::move(sing);
  if (c.factors) {
    j["factors"] = {{"circle",
                     {{"center", point_json(c.factors->circle.center)},
                      {"radius_sq", c.factors->circle.radius_sq}}},
                    {"line", line_json(c.factors->line)}};
  }
  if (c.lines) j["lines"] = json::array({line_json(c.lines->first), line_json(c.lines->second)});
  if (c.hyperbola) {
    j["hyperbola"] = {{"center", point_json(c.hyperbola->center)},
                      {"asymptotes", json::array({point_json(c.hyperbola->asymptote1),
                                                  point_json(c.hyperbola->asymptote2)})}};
  }
  return j;
}

EdgeClass edge_class_from_json(const json& j) {
  EdgeClass c;
  c.tag = enum_from<EdgeTag>(j.at("tag"), edge_tag_from_string);
  c.degree = j.at("degree").get<int>();
  for (const json& s : j.at("singularities")) {
    c.singularities.push_back({point_from(s.at("location")),
                               enum_from<SingularKind>(s.at("kind"), singular_kind_from_string)});
  }
  if (j.contains("factors")) {
    const json& f = j.at("factors");
    c.factors = CircleLine{{point_from(f.at("circle").at("center")),
                            f.at("circle").at("radius_sq").get<double>()},
                           line_from(f.at("line"))};
  }
  if (j.contains("lines")) {
    c.lines = LinePair{line_from(j.at("lines").at(0)), line_from(j.at("lines").at(1))};
  }
  if (j.contains("hyperbola")) {
    const json& h = j.at("hyperbola");
    c.hyperbola = Hyperbola{point_from(h.at("center")), point_from(h.at("asymptotes").at(0)),
                            point_from(h.at("asymptotes").at(1))};
  }
  return c;
}

json to_json(const ClassificationReport& r) {
  json j;
  j["canonical"] = {{"a", r.canonical.a},
                    {"b", r.canonical.b},
                    {"l", r.canonical.l},
                    {"sin_alpha", r.canonical.sin_alpha},
                    {"cos_alpha", r.canonical.cos_alpha}};
  j["to_world"] = {{"cos", r.to_world[0]},
                   {"sin", r.to_world[1]},
                   {"scale", r.to_world[2]},
                   {"translation", json::array({r.to_world[3], r.to_world[4]})}};
  j["polynomial"] = coefficients_json(r.polynomial);
  j["companion_polynomial"] = coefficients_json(r.companion);
  j["world_polynomial"] = coefficients_json(r.world_polynomial);
  j["classification"] = to_json(r.classification);
  j["companion_classification"] = to_json(r.companion_classification);
  json preds = json::array();
  for (const auto& p : r.degeneracies) {
    preds.push_back({{"tag", to_string(p.tag)}, {"witness", p.witness}});
  }
  j["degeneracies"] = std::move(preds);
  j["validation"] = r.validation ? validation_json(*r.validation) : json(nullptr);
  return j;
}

ClassificationReport report_from_json(const json& j) {
  ClassificationReport r;
  const json& c = j.at("canonical");
  r.canonical = {c.at("a").get<double>(), c.at("b").get<double>(), c.at("l").get<double>(),
                 c.at("sin_alpha").get<double>(), c.at("cos_alpha").get<double>()};
  const json& t = j.at("to_world");
  r.to_world = {t.at("cos").get<double>(), t.at("sin").get<double>(),
                t.at("scale").get<double>(), t.at("translation").at(0).get<double>(),
                t.at("translation").at(1).get<double>()};
  r.polynomial = coefficients_from(j.at("polynomial"));
  r.companion = coefficients_from(j.at("companion_polynomial"));
  r.world_polynomial = coefficients_from(j.at("world_polynomial"));
  r.classification = edge_class_from_json(j.at("classification"));
  r.companion_classification = edge_class_from_json(j.at("companion_classification"));
  for (const json& p : j.at("degeneracies")) {
    r.degeneracies.push_back({enum_from<DegeneracyTag>(p.at("tag"), degeneracy_tag_from_string),
                              p.at("witness").get<std::map<std::string, double>>()});
  }
  if (!j.at("validation").is_null()) r.validation = validation_from(j.at("validation"));
  return r;
}

}  // namespace avd::cli
