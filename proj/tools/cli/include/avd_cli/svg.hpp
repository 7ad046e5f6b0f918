#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "avd/classify.hpp"
#include "avd/oracle.hpp"

namespace avd::cli {

/// Region fill colors, cycled over site indices.
inline constexpr std::array<std::string_view, 8> kPalette{
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1", "#ff9da7"};

/// World-frame content of an edge plot.
struct EdgeDrawing {
  Segment s1;
  Segment s2;
  GridSpec window;
  PolyLineSet curve;
  PolyLineSet companion;
  PolyLineSet oracle;
  std::vector<SingularPoint> singularities;
};

/// Layers, bottom to top: companion curve (thin, grey), edge curve (solid),
/// equal-angle locus (dashed), segments, singular points with kind labels.
std::string render_edge_svg(const EdgeDrawing& drawing, int width_px = 800);

/// One fill per site region (row runs merged). Tie nodes and nodes whose right or
/// upper neighbour carries another label are stroked; sites are drawn on top.
std::string render_diagram_svg(const std::vector<Segment>& sites, const LabeledRaster& raster,
                               int width_px = 800);

}  // namespace avd::cli
