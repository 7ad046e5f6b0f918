#include "avd_cli/scenarios.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iterator>
#include <numbers>
#include <random>
#include <stdexcept>

#include <fmt/core.h>

#include "avd/classify.hpp"
#include "avd/edge.hpp"

namespace avd::cli {
namespace {

constexpr double kPi = std::numbers::pi;
using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Factored edge of a degenerate configuration, in whichever frame `closed` is given.
struct FactorCase {
  EdgeCurve curve;
  BivariatePoly closed;
  bool world = false;
};

struct Tally {
  int hits = 0;
  int total = 0;
  double residual = 0.0;
  std::string first_failure;
};

void check_factored(Tally& t, const FactorCase& c) {
  ++t.total;
  const EdgeClass cls = classify_edge(c.curve);
  if (cls.tag != EdgeTag::CubicCircleTimesLine || !cls.factors) {
    if (t.first_failure.empty()) t.first_failure = std::string(to_string(cls.tag));
    t.residual = INFINITY;
    return;
  }
  BivariatePoly got = circle_line_product(*cls.factors);
  if (c.world) got = pull_back(got, c.curve.config.to_world);
  t.residual = std::max(t.residual, coefficient_distance(normalize(got), normalize(c.closed)));
  ++t.hits;
}

ScenarioResult factor_family(const std::string& name, const std::string& label, Rng& rng,
                             const std::function<FactorCase(Rng&, int)>& make) {
  Tally t;
  for (int i = 0; i < 50; ++i) check_factored(t, make(rng, i));
  ScenarioResult r;
  r.name = name;
  r.expected = fmt::format("{} x50 ({})", to_string(EdgeTag::CubicCircleTimesLine), label);
  r.observed = t.first_failure.empty()
                   ? fmt::format("{} {}/{}", to_string(EdgeTag::CubicCircleTimesLine), t.hits,
                                 t.total)
                   : fmt::format("{}/{} factored, first miss {}", t.hits, t.total,
                                 t.first_failure);
  r.residual = t.residual;
  r.pass = t.hits == t.total && t.residual <= 1e-8;
  return r;
}

BivariatePoly product(const BivariatePoly& f, const BivariatePoly& g) { return multiply(f, g); }

// Concyclic equal-length pair; instance 0 is theta = 0, h = 1.
FactorCase concyclic(Rng& rng, int i) {
  double t = i == 0 ? 0.0 : uniform(rng, -kPi, kPi);
  if (std::abs(t + kPi / 2) < 0.2) t += 0.5;
  const double h = i == 0 ? 1.0 : uniform(rng, 0.3, 3.0);
  const auto config =
      CanonicalConfig::make(h * std::cos(t), h + h * std::sin(t), 1.0, -std::cos(t), std::sin(t));
  return {build_edge(config),
          product({{2, 0, 1.0}, {0, 2, 1.0}, {0, 1, -2.0 * h}, {0, 0, -1.0}},
                  {{0, 1, 1.0 + std::sin(t)},
                   {1, 0, std::cos(t)},
                   {0, 0, -h * (1.0 + std::sin(t))}})};
}

// Orthogonal cross, A = (2, 0), B = (0, -2 tan t1), C = (-2, 0), D = (0, 2 tan t2).
FactorCase orthogonal_cross(Rng& rng, int) {
  const double t1 = uniform(rng, -1.2, 1.2);
  double t2 = uniform(rng, -1.2, 1.2);
  if (std::abs(t1 - t2) < 0.15) t2 = t1 + (t2 < t1 ? -0.3 : 0.3);
  const Segment s1{{2.0, 0.0}, {0.0, -2.0 * std::tan(t1)}};
  const Segment s2{{-2.0, 0.0}, {0.0, 2.0 * std::tan(t2)}};
  const double s = std::sin(t1 - t2);
  const double c = std::cos(t1 - t2);
  return {build_edge(canonicalize(s1, s2)),
          BivariatePoly{{3, 0, s}, {1, 2, s}, {1, 0, -4.0 * s}, {1, 1, -4.0 * c}}, true};
}

// Collinear segments under a random similarity.
FactorCase collinear(Rng& rng, int) {
  const double a = uniform(rng, -4.0, 4.0);
  double l = uniform(rng, 0.2, 3.0);
  if (std::abs(l - 1.0) < 0.05) l += 0.2;
  const SimilarityTransform t(uniform(rng, -kPi, kPi), uniform(rng, 0.2, 5.0),
                              {uniform(rng, -10.0, 10.0), uniform(rng, -10.0, 10.0)});
  const CanonicalConfig config =
      canonicalize(t.apply(CanonicalConfig::canonical_s1()), t.apply(Segment{{a - l, 0.0}, {a + l, 0.0}}));
  const double sign = config.cos_alpha > 0 ? 1.0 : -1.0;
  const double k = sign * l + 1.0;
  return {build_edge(config),
          BivariatePoly{{2, 1, k}, {0, 3, k}, {1, 1, -2.0 * a}, {0, 1, a * a - l * l - sign * l}}};
}

// s2 leaves the shared endpoint (-1, 0) in direction t and is oriented into it.
FactorCase shared_endpoint(Rng& rng, int) {
  const double t = uniform(rng, -kPi, kPi);
  double l = uniform(rng, 0.3, 3.0);
  if (std::abs(l - 1.0) < 0.05 && std::abs(t) < 0.05) l = 2.0;
  const auto config = CanonicalConfig::make(l * std::cos(t) - 1.0, l * std::sin(t), l,
                                            -std::sin(t), -std::cos(t));
  return {build_edge(config),
          product({{0, 2, 1.0}, {2, 0, 1.0}, {1, 0, 2.0}, {0, 0, 1.0}},
                  {{0, 1, l * std::cos(t) - 1.0},
                   {1, 0, -l * std::sin(t)},
                   {0, 0, l * std::sin(t)}})};
}

ScenarioResult taxonomy(Rng& rng) {
  const auto kind_at_origin = [](double a, double& residual) -> std::string {
    const BivariatePoly f{{0, 2, 1.0}, {3, 0, -1.0}, {2, 0, -a}};
    const auto found = find_singularities(f, SearchBox{{0.0, 0.0}, 4.0});
    if (found.size() != 1) return fmt::format("{} points", found.size());
    residual = std::max(residual, norm(found[0].location));
    return std::string(to_string(found[0].kind));
  };
  ScenarioResult r;
  r.name = "taxonomy";
  r.expected = "Node, IsolatedPoint, Cusp; sign(a) x20";
  const std::string k1 = kind_at_origin(1.0, r.residual);
  const std::string k2 = kind_at_origin(-1.0, r.residual);
  const std::string k3 = kind_at_origin(0.0, r.residual);
  int agree = 0;
  for (int i = 0; i < 20; ++i) {
    const double a = (i % 2 == 0 ? 1.0 : -1.0) * uniform(rng, 0.05, 5.0);
    if (kind_at_origin(a, r.residual) == (a > 0 ? "Node" : "IsolatedPoint")) ++agree;
  }
  r.observed = fmt::format("{}, {}, {}; {}/20", k1, k2, k3, agree);
  r.pass = k1 == "Node" && k2 == "IsolatedPoint" && k3 == "Cusp" && agree == 20 &&
           r.residual <= 1e-8;
  return r;
}

ScenarioResult node(Rng&) {
  const auto config = CanonicalConfig::make(2.0, 4.0 / 3.0, 5.0 / 3.0, -0.8, 0.6);
  const EdgeCurve curve = build_edge(config);
  const BivariatePoly expected{{0, 3, 2.0},        {1, 2, 4.0 / 3.0}, {2, 1, 2.0},
                               {3, 0, 4.0 / 3.0},  {0, 2, -20.0 / 3.0}, {1, 1, -4.0},
                               {2, 0, -4.0},       {0, 1, 2.0},       {1, 0, -4.0 / 3.0},
                               {0, 0, 4.0}};
  const EdgeClass cls = classify_edge(curve);
  ScenarioResult r;
  r.name = "node";
  r.expected = "CubicIrreducibleSingular, Node at (-1, 2)";
  r.residual = coefficient_distance(curve.poly, expected);
  if (cls.singularities.size() == 1) {
    const SingularPoint& s = cls.singularities[0];
    r.residual = std::max(r.residual, distance(s.location, {-1.0, 2.0}));
    r.observed = fmt::format("{}, {} at ({:.6f}, {:.6f})", to_string(cls.tag), to_string(s.kind),
                             s.location.x, s.location.y);
    r.pass = cls.tag == EdgeTag::CubicIrreducibleSingular && s.kind == SingularKind::Node &&
             r.residual <= 1e-8;
  } else {
    r.observed = fmt::format("{}, {} singular points", to_string(cls.tag), cls.singularities.size());
  }
  return r;
}

ScenarioResult hyperbola(Rng&) {
  const EdgeCurve curve = build_edge(CanonicalConfig::make(1.0, 1.0, 1.0, 0.0, -1.0));
  const BivariatePoly expected{{0, 2, -1.0}, {1, 1, -2.0}, {2, 0, 1.0}, {0, 1, 2.0}, {0, 0, -1.0}};
  const EdgeClass cls = classify_edge(curve);
  ScenarioResult r;
  r.name = "hyperbola";
  r.expected = "QuadIrreducibleHyperbola, orthogonal asymptotes";
  r.residual = coefficient_distance(normalize(curve.poly), normalize(expected));
  r.observed = std::string(to_string(cls.tag));
  if (cls.hyperbola) {
    const double d = std::abs(dot(cls.hyperbola->asymptote1, cls.hyperbola->asymptote2));
    r.residual = std::max(r.residual, d);
    r.observed += fmt::format(", center ({:.6f}, {:.6f})", cls.hyperbola->center.x,
                              cls.hyperbola->center.y);
  }
  r.pass = cls.tag == EdgeTag::QuadIrreducibleHyperbola && cls.hyperbola && r.residual <= 1e-9;
  return r;
}

ScenarioResult two_lines(Rng&) {
  const EdgeCurve curve = build_edge(CanonicalConfig::make(2.0, 0.0, 1.0, 0.0, -1.0));
  const EdgeClass cls = classify_edge(curve);
  ScenarioResult r;
  r.name = "two-lines";
  r.expected = "QuadTwoOrthogonalLines {y = 0, x = 1}";
  r.observed = std::string(to_string(cls.tag));
  r.residual = INFINITY;
  if (cls.lines) {
    const Line want_y = Line::make(1.0, 0.0, 0.0);
    const Line want_x = Line::make(0.0, 1.0, -1.0);
    const auto gap = [](const Line& p, const Line& q) {
      return std::max({std::abs(p.u - q.u), std::abs(p.v - q.v), std::abs(p.w - q.w)});
    };
    const Line& f = cls.lines->first;
    const Line& s = cls.lines->second;
    r.residual = std::min(std::max(gap(f, want_y), gap(s, want_x)),
                          std::max(gap(f, want_x), gap(s, want_y)));
    r.residual = std::max(r.residual, std::abs(dot(f.direction(), s.direction())));
    r.observed += fmt::format(" {{{:.3g}y + {:.3g}x + {:.3g} = 0, {:.3g}y + {:.3g}x + {:.3g} = 0}}",
                              f.u, f.v, f.w, s.u, s.v, s.w);
  }
  r.pass = cls.tag == EdgeTag::QuadTwoOrthogonalLines && r.residual <= 1e-9;
  return r;
}

ScenarioResult degree1(Rng& rng) {
  int histogram[4] = {0, 0, 0, 0};
  int checked = 0;
  for (int i = 0; checked < 10000; ++i) {
    const double a = uniform(rng, -3.0, 3.0);
    const double b = uniform(rng, -3.0, 3.0);
    // Every fourth sample lies on the degree-2 stratum l = 1, alpha = pi.
    const CanonicalConfig config =
        i % 4 == 0 ? CanonicalConfig::make(a, b, 1.0, 0.0, -1.0)
                   : CanonicalConfig::from_angle(a, b, uniform(rng, 0.2, 2.0), uniform(rng, -kPi, kPi));
    if (segments_coincide(CanonicalConfig::canonical_s1(), config.canonical_s2())) continue;
    ++checked;
    ++histogram[effective_degree(build_edge(config).poly)];
  }
  ScenarioResult r;
  r.name = "degree1";
  r.expected = "degree in {2, 3} for 10000 samples";
  r.observed = fmt::format("0:{} 1:{} 2:{} 3:{}", histogram[0], histogram[1], histogram[2],
                           histogram[3]);
  r.pass = histogram[0] == 0 && histogram[1] == 0;
  return r;
}

using Runner = std::function<ScenarioResult(Rng&)>;

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> runners{
      {"taxonomy", taxonomy},
      {"example1",
       [](Rng& rng) { return factor_family("example1", "concyclic, equal length", rng, concyclic); }},
      {"example2",
       [](Rng& rng) {
         return factor_family("example2", "orthogonal cross, |AO| = |CO|", rng, orthogonal_cross);
       }},
      {"example3",
       [](Rng& rng) { return factor_family("example3", "collinear", rng, collinear); }},
      {"example4",
       [](Rng& rng) {
         return factor_family("example4", "shared endpoint", rng, shared_endpoint);
       }},
      {"node", node},
      {"hyperbola", hyperbola},
      {"two-lines", two_lines},
      {"degree1", degree1},
  };
  return runners;
}

}  // namespace

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, run] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<ScenarioResult> run_scenarios(const std::optional<std::string>& only,
                                          std::uint64_t seed) {
  if (only && std::find(scenario_names().begin(), scenario_names().end(), *only) ==
                  scenario_names().end()) {
    throw std::invalid_argument("unknown scenario '" + *only + "'");
  }
  std::vector<ScenarioResult> out;
  for (std::size_t k = 0; k < registry().size(); ++k) {
    const auto& [name, run] = registry()[k];
    if (only && name != *only) continue;
    // Each scenario gets its own stream so --only reproduces the full run.
    Rng rng(seed + k);
    const auto start = std::chrono::steady_clock::now();
    ScenarioResult r;
    try {
      r = run(rng);
    } catch (const std::exception& e) {
      r.name = name;
      r.observed = fmt::format("threw: {}", e.what());
      r.pass = false;
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_scenarios(const std::vector<ScenarioResult>& results) {
  std::string out = fmt::format("{:<10} {:<6} {:<10} {:>8}  {}\n", "scenario", "status",
                                "residual", "time", "expected / observed");
  int passed = 0;
  for (const auto& r : results) {
    if (r.pass) ++passed;
    fmt::format_to(std::back_inserter(out), "{:<10} {:<6} {:<10.2e} {:>7.3f}s  {}\n{:>38}{}\n",
                   r.name, r.pass ? "PASS" : "FAIL", r.residual, r.seconds, r.expected, "",
                   r.observed);
  }
  fmt::format_to(std::back_inserter(out), "{}/{} scenarios passed\n", passed, results.size());
  return out;
}

}  // namespace avd::cli
