#include <iostream>

#include "CLI11.hpp"
#include "avd_cli/commands.hpp"
#include "avd_cli/scenarios.hpp"

int main(int argc, char** argv) {
  using namespace avd::cli;
  CLI::App app{"Angular Voronoi edges between two segments"};
  app.require_subcommand(1);

  EdgeArgs edge;
  auto* edge_cmd = app.add_subcommand("edge", "Build, classify and check the edge of two segments");
  edge_cmd->add_option("config", edge.config, "scene JSON")->required()->check(CLI::ExistingFile);
  edge_cmd->add_option("--svg", edge.svg, "write an SVG overlay");
  edge_cmd->add_option("--out", edge.out, "write the JSON report here instead of stdout");
  edge_cmd->add_option("--tol", edge.tol, "factorization / singular-point tolerance");

  DiagramArgs diagram;
  auto* diagram_cmd = app.add_subcommand("diagram", "Rasterize the diagram of all segments");
  diagram_cmd->add_option("config", diagram.config, "scene JSON")->required()->check(CLI::ExistingFile);
  diagram_cmd->add_option("--svg", diagram.svg, "SVG output")->required();
  diagram_cmd->add_option("--out", diagram.out, "write the JSON summary here instead of stdout");

  VerifyArgs verify;
  verify.seed = kDefaultSeed;
  auto* verify_cmd = app.add_subcommand("verify", "Replay the built-in scenarios");
  verify_cmd->add_option("--only", verify.only, "run a single scenario")
      ->check(CLI::IsMember(scenario_names()));
  verify_cmd->add_option("--seed", verify.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    // Usage errors share the malformed-input exit code.
    return code == 0 ? 0 : kMalformedConfig;
  }

  if (*edge_cmd) return cmd_edge(edge, std::cout, std::cerr);
  if (*diagram_cmd) return cmd_diagram(diagram, std::cout, std::cerr);
  return cmd_verify(verify, std::cout, std::cerr);
}
