#include "avd/geometry.hpp"

#include <algorithm>

namespace avd {

Segment::Segment(Point e0, Point e1) : e0_(e0), e1_(e1) {
  if (!is_finite(e0) || !is_finite(e1)) {
    throw InvalidArgument("segment endpoints must be finite");
  }
  if (e0 == e1) {
    throw InvalidArgument("segment endpoints must be distinct");
  }
}

SimilarityTransform::SimilarityTransform(double rotation, double scale, Point translation)
    : cos_r_(std::cos(rotation)),
      sin_r_(std::sin(rotation)),
      scale_(scale),
      translation_(translation) {
  if (!(scale > 0.0) || !std::isfinite(scale) || !std::isfinite(rotation) ||
      !is_finite(translation)) {
    throw InvalidArgument("similarity transform needs finite parameters and scale > 0");
  }
}

SimilarityTransform SimilarityTransform::from_cos_sin(double cos_r, double sin_r, double scale,
                                                      Point translation) {
  if (!(scale > 0.0) || !std::isfinite(scale) || !is_finite(translation)) {
    throw InvalidArgument("similarity transform needs finite parameters and scale > 0");
  }
  const double r = std::hypot(cos_r, sin_r);
  if (!(std::abs(r - 1.0) <= 1e-9)) {
    throw InvalidArgument("rotation cosine/sine pair is not on the unit circle");
  }
  SimilarityTransform t;
  t.cos_r_ = cos_r / r;
  t.sin_r_ = sin_r / r;
  t.scale_ = scale;
  t.translation_ = translation;
  return t;
}

Point SimilarityTransform::apply(Point p) const {
  return {translation_.x + scale_ * (cos_r_ * p.x - sin_r_ * p.y),
          translation_.y + scale_ * (sin_r_ * p.x + cos_r_ * p.y)};
}

SimilarityTransform SimilarityTransform::inverse() const {
  const double s = 1.0 / scale_;
  const Point t{-s * (cos_r_ * translation_.x + sin_r_ * translation_.y),
                -s * (-sin_r_ * translation_.x + cos_r_ * translation_.y)};
  SimilarityTransform inv;
  inv.cos_r_ = cos_r_;
  inv.sin_r_ = -sin_r_;
  inv.scale_ = s;
  inv.translation_ = t;
  return inv;
}

SimilarityTransform SimilarityTransform::compose(const SimilarityTransform& other) const {
  SimilarityTransform out;
  out.cos_r_ = cos_r_ * other.cos_r_ - sin_r_ * other.sin_r_;
  out.sin_r_ = sin_r_ * other.cos_r_ + cos_r_ * other.sin_r_;
  out.scale_ = scale_ * other.scale_;
  out.translation_ = apply(other.translation_);
  return out;
}

CanonicalConfig CanonicalConfig::make(double a, double b, double l, double sin_alpha,
                                      double cos_alpha, SimilarityTransform to_world) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(l) ||
      !std::isfinite(sin_alpha) || !std::isfinite(cos_alpha)) {
    throw InvalidArgument("canonical parameters must be finite");
  }
  if (!(l > 0.0)) {
    throw InvalidArgument("canonical half-length l must be positive");
  }
  if (std::abs(sin_alpha * sin_alpha + cos_alpha * cos_alpha - 1.0) > 1e-9) {
    throw InvalidArgument("sin_alpha^2 + cos_alpha^2 must equal 1");
  }
  return {a, b, l, sin_alpha, cos_alpha, to_world};
}

CanonicalConfig CanonicalConfig::from_angle(double a, double b, double l, double alpha,
                                            SimilarityTransform to_world) {
  return make(a, b, l, std::sin(alpha), std::cos(alpha), to_world);
}

CanonicalConfig CanonicalConfig::flipped() const {
  CanonicalConfig c = *this;
  c.sin_alpha = -sin_alpha;
  c.cos_alpha = -cos_alpha;
  return c;
}

Segment CanonicalConfig::canonical_s2() const {
  const Point mid{a, b};
  const Point half{l * cos_alpha, l * sin_alpha};
  return {mid - half, mid + half};
}

double visual_angle(Point p, const Segment& s) {
  const Point v0 = s.e0() - p;
  const Point v1 = s.e1() - p;
  if ((v0.x == 0.0 && v0.y == 0.0) || (v1.x == 0.0 && v1.y == 0.0)) {
    throw EndpointQuery("visual angle is undefined at a segment endpoint");
  }
  return std::atan2(std::abs(cross(v0, v1)), dot(v0, v1));
}

bool segments_coincide(const Segment& s1, const Segment& s2, double rel_tol) {
  const double tol = rel_tol * std::max(s1.length(), s2.length());
  const double same = std::max(distance(s1.e0(), s2.e0()), distance(s1.e1(), s2.e1()));
  const double swapped = std::max(distance(s1.e0(), s2.e1()), distance(s1.e1(), s2.e0()));
  return std::min(same, swapped) <= tol;
}

CanonicalConfig canonicalize(const Segment& s1, const Segment& s2) {
  if (segments_coincide(s1, s2)) {
    throw IdenticalSegments("the two segments coincide as point sets");
  }
  const Point half1 = 0.5 * s1.direction();
  const double scale = norm(half1);
  const auto to_world =
      SimilarityTransform::from_cos_sin(half1.x / scale, half1.y / scale, scale, s1.midpoint());
  const auto to_canonical = to_world.inverse();

  Point q0 = s2.e0();
  Point q1 = s2.e1();
  if (lex_less(q1, q0)) std::swap(q0, q1);
  const Point c0 = to_canonical.apply(q0);
  const Point c1 = to_canonical.apply(q1);
  const Point mid = 0.5 * (c0 + c1);
  const Point half2 = 0.5 * (c1 - c0);
  const double l = norm(half2);
  return CanonicalConfig::make(mid.x, mid.y, l, half2.y / l, half2.x / l, to_world);
}

}  // namespace avd
