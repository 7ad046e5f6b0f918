#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

#include "avd/classify.hpp"

namespace avd {
namespace {

double det3(const std::array<std::array<double, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// In-circle determinant of four points, after translating q0 to the origin.
double incircle(Point q0, Point q1, Point q2, Point q3) {
  std::array<std::array<double, 3>, 3> m{};
  const std::array<Point, 3> rest{q1 - q0, q2 - q0, q3 - q0};
  for (int r = 0; r < 3; ++r) m[r] = {rest[r].x, rest[r].y, dot(rest[r], rest[r])};
  return det3(m);
}

std::optional<Point> line_intersection(Point p, Point dp, Point q, Point dq) {
  const double den = cross(dp, dq);
  if (den == 0.0) return std::nullopt;
  const double t = cross(q - p, dq) / den;
  return p + t * dp;
}

Point circumcenter(Point a, Point b, Point c) {
  const Point ab = b - a;
  const Point ac = c - a;
  const double d = 2.0 * cross(ab, ac);
  const double ab2 = dot(ab, ab);
  const double ac2 = dot(ac, ac);
  return a + Point{(ac.y * ab2 - ab.y * ac2) / d, (ab.x * ac2 - ac.x * ab2) / d};
}

}  // namespace

std::vector<DegeneracyPredicate> detect_geometric_degeneracy(const Segment& s1,
                                                             const Segment& s2, double tol) {
  const std::array<Point, 4> pts{s1.e0(), s1.e1(), s2.e0(), s2.e1()};
  double diameter = 0.0;
  double min_gap = INFINITY;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const double d = distance(pts[i], pts[j]);
      diameter = std::max(diameter, d);
      min_gap = std::min(min_gap, d);
    }
  }
  const double len1 = s1.length();
  const double len2 = s2.length();
  const bool distinct4 = min_gap > tol * diameter;
  // Three distinct endpoints (one shared) still pin down a unique circle.
  int coincident_pairs = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (distance(pts[i], pts[j]) <= tol * diameter) ++coincident_pairs;
    }
  }
  const bool distinct3 = coincident_pairs <= 1;
  const bool equal_length = std::abs(len1 - len2) <= tol * std::max(len1, len2);
  const Point d1 = s1.direction();
  const Point d2 = s2.direction();
  const bool parallel = std::abs(cross(d1, d2)) <= tol * len1 * len2;
  const bool collinear =
      parallel && std::abs(cross(d1, s2.e0() - s1.e0())) <= tol * len1 * diameter &&
      std::abs(cross(d1, s2.e1() - s1.e0())) <= tol * len1 * diameter;

  std::vector<DegeneracyPredicate> out;
  if (segments_coincide(s1, s2, tol)) {
    out.push_back({DegeneracyTag::Collocated, {}});
    return out;
  }

  if (distinct3 && !collinear && equal_length) {
    const double scale4 = std::pow(diameter, 4);
    const double det = incircle(pts[0], pts[1], pts[2], pts[3]);
    if (std::abs(det) <= tol * scale4) {
      // Circumcircle of three distinct, non-collinear endpoints.
      Point center = circumcenter(pts[0], pts[1], pts[2]);
      if (!is_finite(center) || distance(pts[2], pts[0]) <= tol * diameter ||
          distance(pts[2], pts[1]) <= tol * diameter) {
        center = circumcenter(pts[0], pts[1], pts[3]);
      }
      out.push_back({DegeneracyTag::ConcyclicEqualLength,
                     {{"center_x", center.x},
                      {"center_y", center.y},
                      {"radius", distance(center, pts[0])},
                      {"length", len1},
                      {"incircle_det", det / scale4}}});
    }
  }

  if (distinct4) {
    // A, B from s1; C, D from s2 in both matchings. O = AC x BD.
    for (const auto& [c, d] : {std::pair{s2.e0(), s2.e1()}, std::pair{s2.e1(), s2.e0()}}) {
      const Point a = s1.e0();
      const Point b = s1.e1();
      const Point ac = c - a;
      const Point bd = d - b;
      if (std::abs(dot(ac, bd)) > tol * norm(ac) * norm(bd)) continue;
      const auto o = line_intersection(a, ac, b, bd);
      if (!o) continue;
      const double ao = distance(a, *o);
      const double co = distance(c, *o);
      const double bo = distance(b, *o);
      const double dd = distance(d, *o);
      const double eq = tol * diameter;
      const bool halves_ac = std::abs(ao - co) <= eq && std::abs(bo - dd) > eq;
      const bool halves_bd = std::abs(bo - dd) <= eq && std::abs(ao - co) > eq;
      if (halves_ac || halves_bd) {
        out.push_back({DegeneracyTag::OrthogonalCrossEqualHalf,
                       {{"cross_x", o->x},
                        {"cross_y", o->y},
                        {"AO", ao},
                        {"BO", bo},
                        {"CO", co},
                        {"DO", dd}}});
        break;
      }
    }
  }

  if (collinear && !equal_length) {
    out.push_back({DegeneracyTag::CollinearUnequalLength, {{"length1", len1}, {"length2", len2}}});
  }

  for (const Point p : {s1.e0(), s1.e1()}) {
    for (const Point q : {s2.e0(), s2.e1()}) {
      if (distance(p, q) <= tol * diameter) {
        out.push_back({DegeneracyTag::SharedEndpoint, {{"x", p.x}, {"y", p.y}}});
      }
    }
  }

  if (equal_length && parallel) {
    const Point offset = s2.midpoint() - s1.midpoint();
    out.push_back({DegeneracyTag::CongruentParallel,
                   {{"offset_x", offset.x}, {"offset_y", offset.y}, {"length", len1}}});
  }
  return out;
}

}  // namespace avd
