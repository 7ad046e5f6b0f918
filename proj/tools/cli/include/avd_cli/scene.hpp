#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "avd/classify.hpp"
#include "avd/geometry.hpp"
#include "avd/oracle.hpp"
#include "json.hpp"

namespace avd::cli {

/// Malformed or unusable configuration file (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Tolerances {
  ClassifyOptions classify;
  ValidationOptions validation;
};

/// Parsed scene. Either `segments` is non-empty, or `canonical` holds a
/// two-segment pair given directly by its frame parameters.
struct SceneConfig {
  std::vector<Segment> segments;
  std::optional<CanonicalConfig> canonical;
  std::optional<GridSpec> grid;
  Tolerances tolerances;

  /// The two sites of an edge scene; throws ConfigError unless there are exactly two.
  std::pair<Segment, Segment> pair() const;
  /// Canonical form of the pair (given directly or via canonicalize).
  CanonicalConfig canonical_pair() const;
};

SceneConfig parse_scene(const nlohmann::json& j);
SceneConfig load_scene(const std::string& path);

}  // namespace avd::cli
