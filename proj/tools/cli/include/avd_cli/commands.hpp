#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

#include "avd_cli/report.hpp"
#include "avd_cli/scene.hpp"

namespace avd::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kMalformedConfig = 2,
  kIdenticalSegments = 3,
  kDegreeOneAnomaly = 4,
};

struct EdgeArgs {
  std::string config;
  std::optional<std::string> svg;
  std::optional<std::string> out;
  /// Overrides the factorization and singular-point tolerances.
  std::optional<double> tol;
};

struct DiagramArgs {
  std::string config;
  std::string svg;
  std::optional<std::string> out;
};

struct VerifyArgs {
  std::optional<std::string> only;
  std::uint64_t seed = 0;
};

/// Full pipeline for a two-segment scene. The oracle comparison runs in the
/// world frame on the configured grid (default: the canonical window's image).
ClassificationReport analyze_edge(const SceneConfig& scene);

/// Default diagram window: the sites' bounding box padded by half its extent.
GridSpec default_diagram_grid(const std::vector<Segment>& sites, int n = 400);

/// Runs body, mapping ConfigError to 2, IdenticalSegments / ZeroPolynomial to 3,
/// DegreeOneAnomaly to 4 and any other exception to 1 (message on err).
int run_guarded(std::ostream& err, const std::function<int()>& body);

int cmd_edge(const EdgeArgs& args, std::ostream& out, std::ostream& err);
int cmd_diagram(const DiagramArgs& args, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);

}  // namespace avd::cli
