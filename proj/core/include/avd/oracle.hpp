#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "avd/edge.hpp"
#include "avd/geometry.hpp"
#include "avd/poly2.hpp"

namespace avd {

/// Regular grid of nx * ny sample nodes over [x_min, x_max] x [y_min, y_max].
struct GridSpec {
  double x_min = -6.0;
  double x_max = 6.0;
  double y_min = -6.0;
  double y_max = 6.0;
  int nx = 512;
  int ny = 512;

  /// Throws InvalidArgument unless x_min < x_max, y_min < y_max, nx, ny >= 2.
  void validate() const;
  double x(int i) const { return x_min + (x_max - x_min) * i / (nx - 1); }
  double y(int j) const { return y_min + (y_max - y_min) * j / (ny - 1); }
  Point node(int i, int j) const { return {x(i), y(j)}; }
  double cell_diagonal() const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Canonical-frame window sized to the configuration (at least [-6, 6]^2).
GridSpec default_canonical_window(const CanonicalConfig& config, int n = 512);
/// Axis-aligned world-frame box covering the canonical window's image.
GridSpec default_world_window(const CanonicalConfig& config, int n = 512);

using Polyline = std::vector<Point>;

struct PolyLineSet {
  std::vector<Polyline> lines;
  std::size_t vertex_count() const;
  std::vector<Point> vertices() const;
};

struct LabeledRaster {
  static constexpr int kBoundary = -1;
  GridSpec grid;
  /// Row-major, labels[j * nx + i].
  std::vector<int> labels;
  int at(int i, int j) const { return labels[static_cast<std::size_t>(j) * grid.nx + i]; }
};

/// theta_p(s1) - theta_p(s2).
double angle_gap(Point p, const Segment& s1, const Segment& s2);

/// Marching squares over a scalar field sampled on the grid. Nodes where the
/// field is NaN, and cells for which skip_cell(i, j) holds, produce no
/// vertices. Crossings are refined by bisection along the cell edge.
PolyLineSet trace_zero_set(const std::function<double(Point)>& field, const GridSpec& grid,
                           const std::function<bool(int, int)>& skip_cell = {});

/// Equal-visual-angle locus of two segments. Cells containing a segment
/// endpoint are skipped. Throws EmptyResult when the gap never changes sign.
PolyLineSet extract_bisector(const Segment& s1, const Segment& s2, const GridSpec& grid);

/// Zero set of a polynomial on the grid (may be empty).
PolyLineSet extract_zero_set(const BivariatePoly& f, const GridSpec& grid);

/// Label each node with the index of the site of smallest visual angle.
/// Ties within 1e-12 and nodes on a site endpoint get kBoundary.
LabeledRaster rasterize_diagram(const std::vector<Segment>& sites, const GridSpec& grid);

enum class Frame { Canonical, World };

struct ValidationOptions {
  /// Bound on the max-normalized polynomial at oracle vertices.
  double residual_tol = 1e-5;
  /// |angle gap| under which an algebraic-curve sample counts as on the locus.
  double gap_tol = 1e-6;
  Frame frame = Frame::Canonical;
};

struct ValidationReport {
  std::size_t oracle_vertices = 0;
  /// max |normalize(poly)| over oracle vertices.
  double primary_residual = 0.0;
  /// max over oracle vertices of min(|normalize(poly)|, |normalize(companion)|).
  double branch_residual = 0.0;
  /// Fraction of oracle vertices on the side where `poly` carries the locus.
  double primary_fraction = 0.0;
  std::size_t curve_samples = 0;
  /// Fraction of zero-set samples of `poly` where |gap| <= gap_tol.
  double curve_on_locus_fraction = 0.0;
  /// Fraction of zero-set samples where the two angles are supplementary instead.
  double supplementary_fraction = 0.0;
  /// Grid nodes lying exactly on a site's carrier line.
  std::size_t carrier_line_nodes = 0;
  bool primary_contains = false;
  bool pass = false;

  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

/// Compares the algebraic curve against the brute-force equal-angle locus.
/// Throws EmptyResult if neither the locus nor the curve meets the window.
ValidationReport validate_curve(const EdgeCurve& curve, const GridSpec& grid,
                                const ValidationOptions& options = {});

/// Number of worker threads for grid evaluation (AVD_THREADS caps it).
int worker_count();

}  // namespace avd
