#include "avd_cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

#include <fmt/core.h>

namespace avd::cli {
namespace {

// Maps world coordinates onto the SVG canvas (y pointing down).
struct Canvas {
  GridSpec window;
  double width;
  double height;

  Canvas(const GridSpec& w, int width_px)
      : window(w),
        width(width_px),
        height(std::max(1.0, std::round(width_px * (w.y_max - w.y_min) / (w.x_max - w.x_min)))) {}

  double px(double x) const { return (x - window.x_min) / (window.x_max - window.x_min) * width; }
  double py(double y) const {
    return (window.y_max - y) / (window.y_max - window.y_min) * height;
  }
  double sx() const { return width / (window.x_max - window.x_min); }
  double sy() const { return height / (window.y_max - window.y_min); }
};

void open(std::string& out, const Canvas& c) {
  fmt::format_to(std::back_inserter(out),
                 "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
                 "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{:.0f}\" "
                 "height=\"{:.0f}\" viewBox=\"0 0 {:.0f} {:.0f}\">\n"
                 "<rect x=\"0\" y=\"0\" width=\"{:.0f}\" height=\"{:.0f}\" fill=\"#ffffff\"/>\n",
                 c.width, c.height, c.width, c.height, c.width, c.height);
}

void polylines(std::string& out, const Canvas& c, const PolyLineSet& set, std::string_view id,
               std::string_view style) {
  fmt::format_to(std::back_inserter(out), "<g id=\"{}\" fill=\"none\" {}>\n", id, style);
  for (const Polyline& line : set.lines) {
    if (line.size() < 2) continue;
    out += "<polyline points=\"";
    for (std::size_t k = 0; k < line.size(); ++k) {
      fmt::format_to(std::back_inserter(out), "{}{:.3f},{:.3f}", k ? " " : "", c.px(line[k].x),
                     c.py(line[k].y));
    }
    out += "\"/>\n";
  }
  out += "</g>\n";
}

void segments(std::string& out, const Canvas& c, const std::vector<Segment>& sites) {
  out += "<g id=\"segments\" stroke-width=\"3\" stroke-linecap=\"round\">\n";
  for (std::size_t k = 0; k < sites.size(); ++k) {
    const Segment& s = sites[k];
    fmt::format_to(std::back_inserter(out),
                   "<line x1=\"{:.3f}\" y1=\"{:.3f}\" x2=\"{:.3f}\" y2=\"{:.3f}\" stroke=\"#000000\"/>\n"
                   "<text x=\"{:.3f}\" y=\"{:.3f}\" font-size=\"12\" font-family=\"sans-serif\">s{}</text>\n",
                   c.px(s.e0().x), c.py(s.e0().y), c.px(s.e1().x), c.py(s.e1().y),
                   c.px(s.midpoint().x) + 4.0, c.py(s.midpoint().y) - 4.0, k + 1);
  }
  out += "</g>\n";
}

}  // namespace

std::string render_edge_svg(const EdgeDrawing& d, int width_px) {
  const Canvas c(d.window, width_px);
  std::string out;
  open(out, c);
  polylines(out, c, d.companion, "companion", "stroke=\"#bbbbbb\" stroke-width=\"1\"");
  polylines(out, c, d.curve, "curve", "stroke=\"#4e79a7\" stroke-width=\"2\"");
  polylines(out, c, d.oracle, "oracle",
            "stroke=\"#e15759\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"");
  segments(out, c, {d.s1, d.s2});
  out += "<g id=\"singularities\" font-size=\"12\" font-family=\"sans-serif\">\n";
  for (const SingularPoint& s : d.singularities) {
    fmt::format_to(std::back_inserter(out),
                   "<circle cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"5\" fill=\"none\" stroke=\"#000000\" "
                   "stroke-width=\"2\"/>\n<text x=\"{:.3f}\" y=\"{:.3f}\">{}</text>\n",
                   c.px(s.location.x), c.py(s.location.y), c.px(s.location.x) + 7.0,
                   c.py(s.location.y) + 14.0, to_string(s.kind));
  }
  out += "</g>\n</svg>\n";
  return out;
}

std::string render_diagram_svg(const std::vector<Segment>& sites, const LabeledRaster& raster,
                               int width_px) {
  const GridSpec& g = raster.grid;
  // Each node owns the cell centred on it.
  const double hx = (g.x_max - g.x_min) / (g.nx - 1);
  const double hy = (g.y_max - g.y_min) / (g.ny - 1);
  const GridSpec frame{g.x_min - hx / 2, g.x_max + hx / 2, g.y_min - hy / 2, g.y_max + hy / 2,
                       g.nx, g.ny};
  const Canvas c(frame, width_px);
  const double w = hx * c.sx();
  const double h = hy * c.sy();
  std::string out;
  open(out, c);
  out += "<g id=\"regions\" shape-rendering=\"crispEdges\">\n";
  for (int j = 0; j < g.ny; ++j) {
    int i = 0;
    while (i < g.nx) {
      const int label = raster.at(i, j);
      int end = i + 1;
      while (end < g.nx && raster.at(end, j) == label) ++end;
      if (label != LabeledRaster::kBoundary) {
        fmt::format_to(std::back_inserter(out),
                       "<rect x=\"{:.3f}\" y=\"{:.3f}\" width=\"{:.3f}\" height=\"{:.3f}\" "
                       "fill=\"{}\"/>\n",
                       c.px(g.x(i) - hx / 2), c.py(g.y(j) + hy / 2), w * (end - i), h,
                       kPalette[static_cast<std::size_t>(label) % kPalette.size()]);
      }
      i = end;
    }
  }
  out += "</g>\n<g id=\"boundary\" fill=\"none\" stroke=\"#000000\" stroke-width=\"0.5\">\n";
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const int label = raster.at(i, j);
      const bool transition = (i + 1 < g.nx && raster.at(i + 1, j) != label) ||
                              (j + 1 < g.ny && raster.at(i, j + 1) != label);
      if (label != LabeledRaster::kBoundary && !transition) continue;
      fmt::format_to(std::back_inserter(out),
                     "<rect x=\"{:.3f}\" y=\"{:.3f}\" width=\"{:.3f}\" height=\"{:.3f}\"/>\n",
                     c.px(g.x(i) - hx / 2), c.py(g.y(j) + hy / 2), w, h);
    }
  }
  out += "</g>\n";
  segments(out, c, sites);
  out += "</svg>\n";
  return out;
}

}  // namespace avd::cli
