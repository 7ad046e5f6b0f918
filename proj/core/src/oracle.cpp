#include "avd/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "parallel.hpp"

namespace avd {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool cell_contains(const GridSpec& grid, int i, int j, Point p) {
  return p.x >= grid.x(i) && p.x <= grid.x(i + 1) && p.y >= grid.y(j) && p.y <= grid.y(j + 1);
}

bool on_carrier_line(Point p, const Segment& s) {
  return cross(s.direction(), p - s.e0()) == 0.0;
}

}  // namespace

GridSpec default_canonical_window(const CanonicalConfig& config, int n) {
  const double half =
      6.0 * std::max(1.0, (std::max(std::abs(config.a), std::abs(config.b)) + config.l) / 3.0);
  return {-half, half, -half, half, n, n};
}

GridSpec default_world_window(const CanonicalConfig& config, int n) {
  const GridSpec c = default_canonical_window(config, n);
  double x_min = INFINITY, x_max = -INFINITY, y_min = INFINITY, y_max = -INFINITY;
  for (const Point corner : {Point{c.x_min, c.y_min}, Point{c.x_max, c.y_min},
                             Point{c.x_min, c.y_max}, Point{c.x_max, c.y_max}}) {
    const Point w = config.to_world.apply(corner);
    x_min = std::min(x_min, w.x);
    x_max = std::max(x_max, w.x);
    y_min = std::min(y_min, w.y);
    y_max = std::max(y_max, w.y);
  }
  return {x_min, x_max, y_min, y_max, n, n};
}

double angle_gap(Point p, const Segment& s1, const Segment& s2) {
  return visual_angle(p, s1) - visual_angle(p, s2);
}

PolyLineSet extract_bisector(const Segment& s1, const Segment& s2, const GridSpec& grid) {
  if (segments_coincide(s1, s2)) throw IdenticalSegments("bisector of a segment with itself");
  const std::array<Point, 4> endpoints{s1.e0(), s1.e1(), s2.e0(), s2.e1()};
  auto field = [&](Point p) {
    try {
      return angle_gap(p, s1, s2);
    } catch (const EndpointQuery&) {
      return kNaN;
    }
  };
  auto skip = [&](int i, int j) {
    return std::any_of(endpoints.begin(), endpoints.end(),
                       [&](Point e) { return cell_contains(grid, i, j, e); });
  };
  PolyLineSet out = trace_zero_set(field, grid, skip);
  if (out.lines.empty()) {
    throw EmptyResult("the visual-angle gap does not change sign inside the window");
  }
  return out;
}

PolyLineSet extract_zero_set(const BivariatePoly& f, const GridSpec& grid) {
  const BivariatePoly g = normalize(f);
  return trace_zero_set([&g](Point p) { return evaluate(g, p); }, grid);
}

LabeledRaster rasterize_diagram(const std::vector<Segment>& sites, const GridSpec& grid) {
  grid.validate();
  if (sites.size() < 2) throw InvalidArgument("a diagram needs at least two sites");
  for (std::size_t i = 0; i < sites.size(); ++i) {
    for (std::size_t j = i + 1; j < sites.size(); ++j) {
      if (segments_coincide(sites[i], sites[j])) {
        throw IdenticalSegments("diagram sites must be pairwise distinct");
      }
    }
  }
  LabeledRaster raster{grid, std::vector<int>(static_cast<std::size_t>(grid.nx) * grid.ny)};
  detail::parallel_rows(grid.ny, [&](int j) {
    for (int i = 0; i < grid.nx; ++i) {
      const Point p = grid.node(i, j);
      int label = LabeledRaster::kBoundary;
      try {
        double best = INFINITY;
        double second = INFINITY;
        int arg = 0;
        for (std::size_t k = 0; k < sites.size(); ++k) {
          const double theta = visual_angle(p, sites[k]);
          if (theta < best) {
            second = best;
            best = theta;
            arg = static_cast<int>(k);
          } else if (theta < second) {
            second = theta;
          }
        }
        if (second - best > 1e-12) label = arg;
      } catch (const EndpointQuery&) {
        label = LabeledRaster::kBoundary;
      }
      raster.labels[static_cast<std::size_t>(j) * grid.nx + i] = label;
    }
  });
  return raster;
}

ValidationReport validate_curve(const EdgeCurve& curve, const GridSpec& grid,
                                const ValidationOptions& options) {
  const bool world = options.frame == Frame::World;
  const Segment s1 = world ? curve.config.world_s1() : CanonicalConfig::canonical_s1();
  const Segment s2 = world ? curve.config.world_s2() : curve.config.canonical_s2();
  const BivariatePoly primary = normalize(world ? curve.world_poly : curve.poly);
  const BivariatePoly companion = normalize(world ? curve.world_companion : curve.companion);
  const SimilarityTransform to_canonical =
      world ? curve.config.to_world.inverse() : SimilarityTransform{};

  std::vector<Point> oracle;
  try {
    oracle = extract_bisector(s1, s2, grid).vertices();
  } catch (const EmptyResult&) {
  }
  const std::vector<Point> samples = extract_zero_set(primary, grid).vertices();
  if (oracle.empty() && samples.empty()) {
    throw EmptyResult("neither the equal-angle locus nor the curve meets the window");
  }

  ValidationReport report;
  report.oracle_vertices = oracle.size();
  std::size_t primary_side = 0;
  for (const Point p : oracle) {
    const double rp = std::abs(evaluate(primary, p));
    const double rc = std::abs(evaluate(companion, p));
    report.primary_residual = std::max(report.primary_residual, rp);
    report.branch_residual = std::max(report.branch_residual, std::min(rp, rc));
    if (on_primary_side(curve.config, to_canonical.apply(p))) ++primary_side;
  }
  if (!oracle.empty()) {
    report.primary_fraction = static_cast<double>(primary_side) / oracle.size();
  }

  std::size_t on_locus = 0;
  std::size_t supplementary = 0;
  for (const Point p : samples) {
    try {
      const double t1 = visual_angle(p, s1);
      const double t2 = visual_angle(p, s2);
      ++report.curve_samples;
      if (std::abs(t1 - t2) <= options.gap_tol) {
        ++on_locus;
      } else if (std::abs(t1 + t2 - std::numbers::pi) <= options.gap_tol) {
        ++supplementary;
      }
    } catch (const EndpointQuery&) {
    }
  }
  if (report.curve_samples > 0) {
    report.curve_on_locus_fraction = static_cast<double>(on_locus) / report.curve_samples;
    report.supplementary_fraction = static_cast<double>(supplementary) / report.curve_samples;
  }

  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const Point p = grid.node(i, j);
      if (on_carrier_line(p, s1) || on_carrier_line(p, s2)) ++report.carrier_line_nodes;
    }
  }

  report.primary_contains = report.primary_residual <= options.residual_tol;
  report.pass = report.branch_residual <= options.residual_tol;
  return report;
}

}  // namespace avd
