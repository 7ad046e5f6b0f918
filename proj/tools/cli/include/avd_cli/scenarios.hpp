#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace avd::cli {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct ScenarioResult {
  std::string name;
  std::string expected;
  std::string observed;
  double residual = 0.0;
  bool pass = false;
  double seconds = 0.0;
};

/// taxonomy, example1..example4, node, hyperbola, two-lines, degree1.
const std::vector<std::string>& scenario_names();

/// Runs every built-in scenario, or only `only`. Throws std::invalid_argument
/// for an unknown name.
std::vector<ScenarioResult> run_scenarios(const std::optional<std::string>& only,
                                          std::uint64_t seed = kDefaultSeed);

std::string format_scenarios(const std::vector<ScenarioResult>& results);

}  // namespace avd::cli
