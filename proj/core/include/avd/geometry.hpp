#pragma once

#include <array>
#include <cmath>

#include "avd/errors.hpp"

namespace avd {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
  friend constexpr bool operator==(Point a, Point b) = default;
};

constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Lexicographic (x, then y) ordering.
constexpr bool lex_less(Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

/// A closed planar segment with distinct, finite endpoints.
class Segment {
 public:
  Segment(Point e0, Point e1);

  Point e0() const { return e0_; }
  Point e1() const { return e1_; }
  Point midpoint() const { return 0.5 * (e0_ + e1_); }
  Point direction() const { return e1_ - e0_; }
  double length() const { return distance(e0_, e1_); }

  /// Same segment with the endpoints swapped.
  Segment reversed() const { return {e1_, e0_}; }

  friend bool operator==(const Segment&, const Segment&) = default;

 private:
  Point e0_;
  Point e1_;
};

/// p -> translation + scale * R(rotation) * p.
///
/// The rotation is stored as its cosine/sine pair so that transforms built
/// from segment directions stay exact for axis-aligned input.
class SimilarityTransform {
 public:
  SimilarityTransform() = default;
  SimilarityTransform(double rotation, double scale, Point translation);

  static SimilarityTransform from_cos_sin(double cos_r, double sin_r, double scale,
                                          Point translation);

  double rotation() const { return std::atan2(sin_r_, cos_r_); }
  double cos_rotation() const { return cos_r_; }
  double sin_rotation() const { return sin_r_; }
  double scale() const { return scale_; }
  Point translation() const { return translation_; }

  Point apply(Point p) const;
  Segment apply(const Segment& s) const { return {apply(s.e0()), apply(s.e1())}; }
  SimilarityTransform inverse() const;
  /// (*this)(other(p)).
  SimilarityTransform compose(const SimilarityTransform& other) const;

 private:
  double cos_r_ = 1.0;
  double sin_r_ = 0.0;
  double scale_ = 1.0;
  Point translation_{};
};

inline Point apply_transform(const SimilarityTransform& t, Point p) { return t.apply(p); }

/// Segment pair expressed in the frame where s1 runs from (-1, 0) to (1, 0).
///
/// s2 has midpoint (a, b), half-length l and direction (cos_alpha, sin_alpha).
/// The sine/cosine pair is the source of truth; alpha() is derived from it, so
/// exact rational directions such as (3/5, -4/5) survive unchanged.
struct CanonicalConfig {
  double a = 0.0;
  double b = 0.0;
  double l = 1.0;
  double sin_alpha = 0.0;
  double cos_alpha = 1.0;
  SimilarityTransform to_world{};

  /// Validates l > 0, finiteness and sin^2 + cos^2 = 1 (to 1e-9).
  static CanonicalConfig make(double a, double b, double l, double sin_alpha,
                              double cos_alpha, SimilarityTransform to_world = {});
  static CanonicalConfig from_angle(double a, double b, double l, double alpha,
                                    SimilarityTransform to_world = {});

  double alpha() const { return std::atan2(sin_alpha, cos_alpha); }

  /// Same segment pair with s2's orientation reversed (alpha + pi).
  CanonicalConfig flipped() const;

  static Segment canonical_s1() { return {{-1.0, 0.0}, {1.0, 0.0}}; }
  /// s2 in the canonical frame, oriented e0 -> e1 along alpha.
  Segment canonical_s2() const;
  Segment world_s1() const { return to_world.apply(canonical_s1()); }
  Segment world_s2() const { return to_world.apply(canonical_s2()); }
};

/// Unsigned angle in [0, pi] subtended at p by the endpoints of s.
/// Throws EndpointQuery when p coincides with an endpoint.
double visual_angle(Point p, const Segment& s);

/// True when the two segments cover the same point set, up to
/// rel_tol * max(|s1|, |s2|).
bool segments_coincide(const Segment& s1, const Segment& s2, double rel_tol = 1e-9);

/// Maps s1 onto (-1,0)-(1,0) (e0 -> (-1,0)) and describes s2 in that frame.
/// s2's endpoints are ordered lexicographically in world coordinates before
/// alpha is measured. Throws IdenticalSegments when the segments coincide.
CanonicalConfig canonicalize(const Segment& s1, const Segment& s2);

}  // namespace avd
