#include "avd/edge.hpp"

namespace avd {

BivariatePoly::Coefficients edge_coefficients(const CanonicalConfig& config) {
  const double a = config.a;
  const double b = config.b;
  const double l = config.l;
  const double s = config.sin_alpha;
  const double c = config.cos_alpha;
  const double cubic_even = l * c + 1.0;  // y^3, x^2 y
  const double cubic_odd = -l * s;        // x^3, x y^2
  const double k = l * (a * s - b * c);

  BivariatePoly::Coefficients out{};
  auto at = [&out](int i, int j) -> double& { return out[BivariatePoly::index(i, j)]; };
  at(3, 0) = cubic_odd;
  at(2, 1) = cubic_even;
  at(1, 2) = cubic_odd;
  at(0, 3) = cubic_even;
  at(2, 0) = k;
  at(1, 1) = -2.0 * a;
  at(0, 2) = k - 2.0 * b;
  at(1, 0) = l * s;
  at(0, 1) = a * a + b * b - l * c - l * l;
  at(0, 0) = -k;
  return out;
}

BivariatePoly edge_polynomial(const CanonicalConfig& config) {
  try {
    return BivariatePoly(edge_coefficients(config));
  } catch (const ZeroPolynomial&) {
    throw ZeroPolynomial("edge polynomial vanishes identically (identical segments)");
  }
}

EdgeCurve build_edge(const CanonicalConfig& config) {
  BivariatePoly poly = edge_polynomial(config);
  BivariatePoly companion = edge_polynomial(config.flipped());
  BivariatePoly world = pull_back(poly, config.to_world);
  BivariatePoly world_companion = pull_back(companion, config.to_world);
  return {std::move(poly), std::move(companion), config, std::move(world),
          std::move(world_companion)};
}

std::pair<double, double> leading_coefficients(const CanonicalConfig& config) {
  return {config.l * config.cos_alpha + 1.0, -config.l * config.sin_alpha};
}

bool on_primary_side(const CanonicalConfig& config, Point p) {
  const double side2 = (p.y - config.b) * config.cos_alpha - (p.x - config.a) * config.sin_alpha;
  return p.y * side2 <= 0.0;
}

}  // namespace avd
