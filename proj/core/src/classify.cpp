#include "avd/classify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace avd {
namespace {

constexpr std::array<std::pair<EdgeTag, std::string_view>, 6> kEdgeTags = {{
    {EdgeTag::CubicIrreducibleRegular, "CubicIrreducibleRegular"},
    {EdgeTag::CubicIrreducibleSingular, "CubicIrreducibleSingular"},
    {EdgeTag::CubicCircleTimesLine, "CubicCircleTimesLine"},
    {EdgeTag::QuadIrreducibleHyperbola, "QuadIrreducibleHyperbola"},
    {EdgeTag::QuadTwoOrthogonalLines, "QuadTwoOrthogonalLines"},
    {EdgeTag::Unrealizable, "Unrealizable"},
}};

constexpr std::array<std::pair<SingularKind, std::string_view>, 3> kKinds = {{
    {SingularKind::Node, "Node"},
    {SingularKind::Cusp, "Cusp"},
    {SingularKind::IsolatedPoint, "IsolatedPoint"},
}};

constexpr std::array<std::pair<DegeneracyTag, std::string_view>, 6> kDegeneracyTags = {{
    {DegeneracyTag::ConcyclicEqualLength, "ConcyclicEqualLength"},
    {DegeneracyTag::OrthogonalCrossEqualHalf, "OrthogonalCrossEqualHalf"},
    {DegeneracyTag::CollinearUnequalLength, "CollinearUnequalLength"},
    {DegeneracyTag::SharedEndpoint, "SharedEndpoint"},
    {DegeneracyTag::CongruentParallel, "CongruentParallel"},
    {DegeneracyTag::Collocated, "Collocated"},
}};

template <typename Enum, std::size_t N>
std::string_view name_of(const std::array<std::pair<Enum, std::string_view>, N>& table, Enum e) {
  for (const auto& [value, name] : table) {
    if (value == e) return name;
  }
  return "?";
}

template <typename Enum, std::size_t N>
std::optional<Enum> parse(const std::array<std::pair<Enum, std::string_view>, N>& table,
                          std::string_view s) {
  for (const auto& [value, name] : table) {
    if (name == s) return value;
  }
  return std::nullopt;
}

// Gaussian elimination with partial pivoting; false if singular.
bool solve3(std::array<std::array<double, 3>, 3> m, std::array<double, 3> rhs,
            std::array<double, 3>& out) {
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 3; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    }
    if (m[pivot][col] == 0.0) return false;
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (int r = col + 1; r < 3; ++r) {
      const double f = m[r][col] / m[col][col];
      for (int k = col; k < 3; ++k) m[r][k] -= f * m[col][k];
      rhs[r] -= f * rhs[col];
    }
  }
  for (int r = 2; r >= 0; --r) {
    double acc = rhs[r];
    for (int k = r + 1; k < 3; ++k) acc -= m[r][k] * out[k];
    out[r] = acc / m[r][r];
  }
  return true;
}

Line line_through(Point p, Point direction) {
  // normal (n.x, n.y) = (-d.y, d.x); v multiplies x, u multiplies y.
  const double v = -direction.y;
  const double u = direction.x;
  return Line::make(u, v, -(u * p.y + v * p.x));
}

}  // namespace

std::string_view to_string(EdgeTag tag) { return name_of(kEdgeTags, tag); }
std::string_view to_string(SingularKind kind) { return name_of(kKinds, kind); }
std::string_view to_string(DegeneracyTag tag) { return name_of(kDegeneracyTags, tag); }
std::optional<EdgeTag> edge_tag_from_string(std::string_view s) { return parse(kEdgeTags, s); }
std::optional<SingularKind> singular_kind_from_string(std::string_view s) {
  return parse(kKinds, s);
}
std::optional<DegeneracyTag> degeneracy_tag_from_string(std::string_view s) {
  return parse(kDegeneracyTags, s);
}

Line Line::make(double u, double v, double w) {
  const double n = std::hypot(u, v);
  if (!(n > 0.0) || !std::isfinite(n) || !std::isfinite(w)) {
    throw InvalidArgument("line needs a nonzero finite normal");
  }
  u /= n;
  v /= n;
  w /= n;
  const bool flip = u != 0.0 ? u < 0.0 : v < 0.0;
  if (flip) {
    u = -u;
    v = -v;
    w = -w;
  }
  // Avoid -0.0 so equal lines compare equal.
  return {u + 0.0, v + 0.0, w + 0.0};
}

BivariatePoly circle_line_product(const CircleLine& factors) {
  const Point c = factors.circle.center;
  const BivariatePoly circle{{2, 0, 1.0},
                             {0, 2, 1.0},
                             {1, 0, -2.0 * c.x},
                             {0, 1, -2.0 * c.y},
                             {0, 0, c.x * c.x + c.y * c.y - factors.circle.radius_sq}};
  const Line& l = factors.line;
  const BivariatePoly line{{0, 1, l.u}, {1, 0, l.v}, {0, 0, l.w}};
  return multiply(circle, line);
}

std::optional<CircleLine> factor_circle_line(const BivariatePoly& input, double tol) {
  if (effective_degree(input) != 3) return std::nullopt;
  const BivariatePoly f = normalize(input);

  // (x^2 + y^2 + a4 y + a5 x + a6)(b1 y + b2 x + b3): the cubic part is
  // (x^2 + y^2)(b1 y + b2 x), so y^3 and x^2 y share b1, x^3 and x y^2 share b2.
  const double b1 = 0.5 * (f.coeff(0, 3) + f.coeff(2, 1));
  const double b2 = 0.5 * (f.coeff(3, 0) + f.coeff(1, 2));
  if (std::abs(f.coeff(0, 3) - f.coeff(2, 1)) > tol ||
      std::abs(f.coeff(3, 0) - f.coeff(1, 2)) > tol) {
    return std::nullopt;
  }

  // Quadratic terms: y^2 = a4 b1 + b3, x^2 = a5 b2 + b3, xy = a4 b2 + a5 b1.
  // Determinant is -(b1^2 + b2^2), nonzero for a true cubic.
  std::array<double, 3> unknowns{};  // a4, a5, b3
  if (!solve3({{{b1, 0.0, 1.0}, {0.0, b2, 1.0}, {b2, b1, 0.0}}},
              {f.coeff(0, 2), f.coeff(2, 0), f.coeff(1, 1)}, unknowns)) {
    return std::nullopt;
  }
  const auto [a4, a5, b3] = unknowns;

  // a6 from the lower-degree terms in the least-squares sense:
  // y = a6 b1 + a4 b3, x = a6 b2 + a5 b3, 1 = a6 b3.
  const std::array<double, 3> w{b1, b2, b3};
  const std::array<double, 3> r{f.coeff(0, 1) - a4 * b3, f.coeff(1, 0) - a5 * b3, f.coeff(0, 0)};
  double num = 0.0;
  double den = 0.0;
  for (int k = 0; k < 3; ++k) {
    num += w[k] * r[k];
    den += w[k] * w[k];
  }
  const double a6 = num / den;

  const BivariatePoly circle{{2, 0, 1.0}, {0, 2, 1.0}, {0, 1, a4}, {1, 0, a5}, {0, 0, a6}};
  const BivariatePoly line{{0, 1, b1}, {1, 0, b2}, {0, 0, b3}};
  const BivariatePoly product = multiply(circle, line);
  if (coefficient_distance(f, product) > tol) return std::nullopt;

  const Point center{-0.5 * a5, -0.5 * a4};
  return CircleLine{{center, center.x * center.x + center.y * center.y - a6},
                    Line::make(b1, b2, b3)};
}

QuadraticClass classify_quadratic(const BivariatePoly& input, double tol) {
  if (effective_degree(input) != 2) {
    throw NotFromEdge("classify_quadratic expects an effective degree-2 polynomial");
  }
  // Drop the numerically-zero cubic terms.
  BivariatePoly::Coefficients c = normalize(input).coefficients();
  for (int k = 6; k < BivariatePoly::kSize; ++k) c[k] = 0.0;
  const BivariatePoly f(c);

  const double A = f.coeff(2, 0);
  const double B = f.coeff(1, 1);
  const double C = f.coeff(0, 2);
  const double D = f.coeff(1, 0);
  const double E = f.coeff(0, 1);
  const double F = f.coeff(0, 0);
  // Bisector shape: b x^2 - 2a xy - b y^2 + (a^2 + b^2) y - b.
  const double shape_tol = std::max(tol, 1e-9);
  if (std::abs(A + C) > shape_tol || std::abs(D) > shape_tol || std::abs(F + A) > shape_tol) {
    throw NotFromEdge("quadratic does not have the congruent-parallel bisector shape");
  }

  const double det =
      A * (C * F - 0.25 * E * E) - 0.5 * B * (0.5 * B * F - 0.25 * E * D) +
      0.5 * D * (0.25 * B * E - 0.5 * C * D);
  QuadraticClass out;
  out.relative_determinant = det;  // f is max-normalized, so |M| entries are <= 1

  if (std::abs(A) <= tol) {
    // b = 0: y (B x + E) = 0.
    out.tag = EdgeTag::QuadTwoOrthogonalLines;
    out.lines = LinePair{Line::make(1.0, 0.0, 0.0), Line::make(0.0, B, E)};
    return out;
  }

  // Center from the gradient system; 4AC - B^2 = -(4A^2 + B^2) < 0.
  const double jd = 4.0 * A * C - B * B;
  const Point center{(-D * 2.0 * C + B * E) / jd, (-2.0 * A * E + B * D) / jd};
  // Null directions of A x^2 + B xy - A y^2: angle psi/2 +- pi/4.
  const double psi = std::atan2(0.5 * B, A);
  const double phi1 = 0.5 * psi + 0.25 * std::numbers::pi;
  const double phi2 = 0.5 * psi - 0.25 * std::numbers::pi;
  const Point d1{std::cos(phi1), std::sin(phi1)};
  const Point d2{std::cos(phi2), std::sin(phi2)};

  if (std::abs(det) <= tol) {
    out.tag = EdgeTag::QuadTwoOrthogonalLines;
    out.lines = LinePair{line_through(center, d1), line_through(center, d2)};
  } else {
    out.tag = EdgeTag::QuadIrreducibleHyperbola;
    out.hyperbola = Hyperbola{center, d1, d2};
  }
  return out;
}

SearchBox edge_search_box(const CanonicalConfig& config) {
  return {{config.a, config.b},
          4.0 * (1.0 + std::abs(config.a) + std::abs(config.b) + config.l)};
}

SearchBox coefficient_search_box(const BivariatePoly& f) {
  const int degree = effective_degree(f);
  double top = 0.0;
  double rest = 0.0;
  const auto& c = f.coefficients();
  for (int k = 0; k < BivariatePoly::kSize; ++k) {
    const auto [i, j] = BivariatePoly::monomial(k);
    double& bucket = i + j == degree ? top : rest;
    bucket = std::max(bucket, std::abs(c[k]));
  }
  if (top == 0.0) return {{0.0, 0.0}, 1.0};
  return {{0.0, 0.0}, 2.0 * (1.0 + rest / top)};
}

EdgeClass classify_branch(const BivariatePoly& f, const SearchBox& box,
                          const ClassifyOptions& options) {
  EdgeClass out;
  out.degree = effective_degree(f, options.degree_tol);
  if (out.degree <= 1) {
    throw DegreeOneAnomaly("edge polynomial has effective degree " + std::to_string(out.degree) +
                           "; an edge of two distinct segments never does");
  }
  if (out.degree == 2) {
    QuadraticClass q = classify_quadratic(f, options.quad_tol);
    out.tag = q.tag;
    out.lines = q.lines;
    out.hyperbola = q.hyperbola;
    return out;
  }
  if (auto factors = factor_circle_line(f, options.factor_tol)) {
    out.tag = EdgeTag::CubicCircleTimesLine;
    out.factors = *factors;
    return out;
  }
  out.singularities = find_singularities(f, box, options);
  out.tag = out.singularities.empty() ? EdgeTag::CubicIrreducibleRegular
                                      : EdgeTag::CubicIrreducibleSingular;
  return out;
}

EdgeClass classify_edge(const EdgeCurve& curve, const ClassifyOptions& options) {
  return classify_branch(curve.poly, edge_search_box(curve.config), options);
}

}  // namespace avd
