#pragma once

#include <optional>
#include <vector>

#include "avd/classify.hpp"
#include "avd/edge.hpp"
#include "avd/oracle.hpp"
#include "json.hpp"

namespace avd::cli {

struct CanonicalParams {
  double a = 0.0;
  double b = 0.0;
  double l = 1.0;
  double sin_alpha = 0.0;
  double cos_alpha = 1.0;
  friend bool operator==(const CanonicalParams&, const CanonicalParams&) = default;
};

/// Everything `avd edge` learns about a segment pair.
struct ClassificationReport {
  CanonicalParams canonical;
  /// to_world as (cos, sin, scale, tx, ty).
  std::array<double, 5> to_world{1.0, 0.0, 1.0, 0.0, 0.0};
  /// Max-normalized coefficients in graded order 1, x, y, x^2, xy, y^2, x^3, x^2y, xy^2, y^3.
  BivariatePoly::Coefficients polynomial{};
  BivariatePoly::Coefficients companion{};
  BivariatePoly::Coefficients world_polynomial{};
  EdgeClass classification;
  EdgeClass companion_classification;
  std::vector<DegeneracyPredicate> degeneracies;
  std::optional<ValidationReport> validation;

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

nlohmann::json to_json(const EdgeClass& c);
EdgeClass edge_class_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ClassificationReport& r);
ClassificationReport report_from_json(const nlohmann::json& j);

}  // namespace avd::cli
