#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "avd/edge.hpp"
#include "avd/geometry.hpp"
#include "avd/poly2.hpp"

namespace avd {

enum class EdgeTag {
  CubicIrreducibleRegular,
  CubicIrreducibleSingular,
  CubicCircleTimesLine,
  QuadIrreducibleHyperbola,
  QuadTwoOrthogonalLines,
  Unrealizable,
};

enum class SingularKind { Node, Cusp, IsolatedPoint };

enum class DegeneracyTag {
  ConcyclicEqualLength,
  OrthogonalCrossEqualHalf,
  CollinearUnequalLength,
  SharedEndpoint,
  CongruentParallel,
  Collocated,
};

std::string_view to_string(EdgeTag tag);
std::string_view to_string(SingularKind kind);
std::string_view to_string(DegeneracyTag tag);
std::optional<EdgeTag> edge_tag_from_string(std::string_view s);
std::optional<SingularKind> singular_kind_from_string(std::string_view s);
std::optional<DegeneracyTag> degeneracy_tag_from_string(std::string_view s);

struct SingularPoint {
  Point location;
  SingularKind kind;
  friend bool operator==(const SingularPoint&, const SingularPoint&) = default;
};

/// x^2 + y^2 - 2 cx x - 2 cy y + (cx^2 + cy^2 - radius_sq) = 0.
/// radius_sq may be zero (a single real point) or negative (no real points).
struct Circle {
  Point center;
  double radius_sq = 0.0;
  friend bool operator==(const Circle&, const Circle&) = default;
};

/// u*y + v*x + w = 0 with u^2 + v^2 = 1 and the first nonzero of (u, v) positive.
struct Line {
  double u = 1.0;
  double v = 0.0;
  double w = 0.0;

  /// Normalizes; throws InvalidArgument when (u, v) = (0, 0).
  static Line make(double u, double v, double w);
  /// Unit direction vector (x, y) along the line.
  Point direction() const { return {u, -v}; }
  double signed_distance(Point p) const { return u * p.y + v * p.x + w; }
  friend bool operator==(const Line&, const Line&) = default;
};

struct CircleLine {
  Circle circle;
  Line line;
  friend bool operator==(const CircleLine&, const CircleLine&) = default;
};

struct LinePair {
  Line first;
  Line second;
  friend bool operator==(const LinePair&, const LinePair&) = default;
};

/// Orthogonal hyperbola: center plus unit asymptote directions.
struct Hyperbola {
  Point center;
  Point asymptote1;
  Point asymptote2;
  friend bool operator==(const Hyperbola&, const Hyperbola&) = default;
};

struct EdgeClass {
  EdgeTag tag = EdgeTag::Unrealizable;
  int degree = 0;
  std::vector<SingularPoint> singularities;
  std::optional<CircleLine> factors;
  std::optional<LinePair> lines;
  std::optional<Hyperbola> hyperbola;
  friend bool operator==(const EdgeClass&, const EdgeClass&) = default;
};

struct QuadraticClass {
  EdgeTag tag = EdgeTag::QuadIrreducibleHyperbola;
  std::optional<LinePair> lines;
  std::optional<Hyperbola> hyperbola;
  double relative_determinant = 0.0;
};

/// Axis-aligned search window for singular points.
struct SearchBox {
  Point center;
  double half_width = 1.0;
};

struct ClassifyOptions {
  double degree_tol = 1e-10;
  double factor_tol = 1e-8;
  /// Bound on |f|, |f_x|, |f_y| (max-normalized f) for a singular point.
  double singular_tol = 1e-8;
  /// Cusp band on the Hessian discriminant, relative to |H|_F^2.
  double cusp_band = 1e-7;
  double quad_tol = 1e-9;
  int seed_grid = 64;
  double dedup_radius = 1e-6;
};

struct DegeneracyPredicate {
  DegeneracyTag tag;
  std::map<std::string, double> witness;
  friend bool operator==(const DegeneracyPredicate&, const DegeneracyPredicate&) = default;
};

/// Search window used for an edge: centred on s2's midpoint, half-width
/// 4 (1 + |a| + |b| + l).
SearchBox edge_search_box(const CanonicalConfig& config);
/// Window derived from coefficient magnitudes only.
SearchBox coefficient_search_box(const BivariatePoly& f);

/// Full classification of the curve's primary branch.
/// Throws DegreeOneAnomaly if the effective degree is <= 1.
EdgeClass classify_edge(const EdgeCurve& curve, const ClassifyOptions& options = {});
/// Same cascade for either branch polynomial of an edge in the canonical frame.
EdgeClass classify_branch(const BivariatePoly& f, const SearchBox& box,
                          const ClassifyOptions& options = {});

/// Circle x line factorization of a cubic, or nullopt when the cubic does not
/// split that way (or is not of degree 3).
std::optional<CircleLine> factor_circle_line(const BivariatePoly& f, double tol = 1e-8);

/// Real points where f, f_x and f_y all vanish, in row-major seed order.
std::vector<SingularPoint> find_singularities(const BivariatePoly& f, const SearchBox& box,
                                              const ClassifyOptions& options = {},
                                              const std::vector<Point>& extra_seeds = {});
std::vector<SingularPoint> find_singularities(const BivariatePoly& f,
                                              const ClassifyOptions& options = {});

/// Node / IsolatedPoint / Cusp from the sign of f_xy^2 - f_xx f_yy.
/// Throws DegenerateJet if the Hessian vanishes at p.
SingularKind classify_singularity(const BivariatePoly& f, Point p, double cusp_band = 1e-7);

/// Degree-2 edge curve (congruent antiparallel segments): orthogonal
/// hyperbola or a pair of orthogonal lines. Throws NotFromEdge if the
/// conic does not have the bisector's shape.
QuadraticClass classify_quadratic(const BivariatePoly& f, double tol = 1e-9);

std::vector<DegeneracyPredicate> detect_geometric_degeneracy(const Segment& s1,
                                                             const Segment& s2,
                                                             double tol = 1e-9);

/// (x^2 + y^2 - 2 cx x - 2 cy y + cx^2 + cy^2 - r^2) * (u y + v x + w).
BivariatePoly circle_line_product(const CircleLine& factors);

}  // namespace avd
