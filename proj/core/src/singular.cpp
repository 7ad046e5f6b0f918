#include <algorithm>
#include <cmath>

#include "avd/classify.hpp"

namespace avd {
namespace {

constexpr int kMaxNewtonSteps = 100;

struct NewtonResult {
  Point p;
  bool converged = false;
};

// Newton on grad f = 0 (Jacobian = Hessian of f).
NewtonResult newton_critical_point(const BivariatePoly& f, Point p, double limit) {
  for (int it = 0; it < kMaxNewtonSteps; ++it) {
    const Gradient g = gradient(f, p);
    const Hessian h = hessian(f, p);
    const double det = h.xx * h.yy - h.xy * h.xy;
    if (det == 0.0 || !std::isfinite(det)) break;
    const Point step{(h.yy * g.dx - h.xy * g.dy) / det, (h.xx * g.dy - h.xy * g.dx) / det};
    p = p - step;
    if (!is_finite(p) || std::abs(p.x) > limit || std::abs(p.y) > limit) {
      return {p, false};
    }
    if (norm(step) <= 1e-15 * (1.0 + norm(p))) break;
  }
  return {p, true};
}

}  // namespace

SingularKind classify_singularity(const BivariatePoly& f, Point p, double cusp_band) {
  const Hessian h = hessian(f, p);
  const double norm2 = h.xx * h.xx + 2.0 * h.xy * h.xy + h.yy * h.yy;
  if (std::sqrt(norm2) <= 1e-12 * f.max_abs_coeff()) {
    throw DegenerateJet("all second partials vanish at the singular point");
  }
  const double discriminant = (h.xy * h.xy - h.xx * h.yy) / norm2;
  if (discriminant > cusp_band) return SingularKind::Node;
  if (discriminant < -cusp_band) return SingularKind::IsolatedPoint;
  return SingularKind::Cusp;
}

std::vector<SingularPoint> find_singularities(const BivariatePoly& input, const SearchBox& box,
                                              const ClassifyOptions& options,
                                              const std::vector<Point>& extra_seeds) {
  if (effective_degree(input, options.degree_tol) < 2) {
    throw InvalidArgument("singularity search needs a curve of degree >= 2");
  }
  const BivariatePoly f = normalize(input);
  const int n = std::max(options.seed_grid, 2);
  const double limit = 1e6 * (box.half_width + std::abs(box.center.x) + std::abs(box.center.y));

  std::vector<Point> seeds;
  seeds.reserve(static_cast<std::size_t>(n * n) + extra_seeds.size());
  for (int row = 0; row < n; ++row) {
    const double y = box.center.y - box.half_width + 2.0 * box.half_width * row / (n - 1);
    for (int col = 0; col < n; ++col) {
      const double x = box.center.x - box.half_width + 2.0 * box.half_width * col / (n - 1);
      seeds.push_back({x, y});
    }
  }
  seeds.insert(seeds.end(), extra_seeds.begin(), extra_seeds.end());

  std::vector<SingularPoint> found;
  for (const Point seed : seeds) {
    const NewtonResult r = newton_critical_point(f, seed, limit);
    if (!r.converged) continue;
    const Gradient g = gradient(f, r.p);
    const double residual = std::max({std::abs(evaluate(f, r.p)), std::abs(g.dx), std::abs(g.dy)});
    if (residual > options.singular_tol) continue;
    const bool duplicate = std::any_of(found.begin(), found.end(), [&](const SingularPoint& s) {
      return distance(s.location, r.p) <= options.dedup_radius;
    });
    if (duplicate) continue;
    found.push_back({r.p, classify_singularity(f, r.p, options.cusp_band)});
  }
  return found;
}

std::vector<SingularPoint> find_singularities(const BivariatePoly& f,
                                              const ClassifyOptions& options) {
  return find_singularities(f, coefficient_search_box(f), options);
}

}  // namespace avd
