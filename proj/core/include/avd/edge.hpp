#pragma once

#include <utility>

#include "avd/geometry.hpp"
#include "avd/poly2.hpp"

namespace avd {

/// Implicit cubic carrying the bisector of a segment pair.
///
/// `poly` is the curve for the configured orientation of s2 and `companion`
/// the one for the reversed orientation (alpha + pi). The equal-angle locus
/// lies on their union: points on opposite sides of the two oriented carrier
/// lines are on `poly`, points on the same side are on `companion`.
struct EdgeCurve {
  BivariatePoly poly;
  BivariatePoly companion;
  CanonicalConfig config;
  BivariatePoly world_poly;
  BivariatePoly world_companion;
};

/// Raw (unnormalized) coefficients of
///   y((x-a)^2 + (y-b)^2 - l^2) - l((x-a) sin(alpha) - (y-b) cos(alpha))(x^2 + y^2 - 1).
BivariatePoly::Coefficients edge_coefficients(const CanonicalConfig& config);

/// Throws ZeroPolynomial if every coefficient vanishes.
BivariatePoly edge_polynomial(const CanonicalConfig& config);

EdgeCurve build_edge(const CanonicalConfig& config);

/// Shared cubic coefficients (coeff of y^3 and x^2y, coeff of x^3 and xy^2).
std::pair<double, double> leading_coefficients(const CanonicalConfig& config);

/// Which of the two orientation branches carries the equal-angle locus at p
/// (canonical frame): true for `poly`, false for `companion`. Points on either
/// carrier line belong to both.
bool on_primary_side(const CanonicalConfig& config, Point p);

}  // namespace avd
