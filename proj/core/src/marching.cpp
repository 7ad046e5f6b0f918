#include <cmath>
#include <cstdlib>
#include <thread>

#include "avd/oracle.hpp"
#include "parallel.hpp"

namespace avd {
namespace {

bool inside(double v) { return v > 0.0; }

// Bisection along the segment p -> q where the field changes sign.
Point refine_crossing(const std::function<double(Point)>& field, Point p, double fp, Point q) {
  double lo = 0.0;
  double hi = 1.0;
  double flo = fp;
  Point best = p;
  double best_abs = INFINITY;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const Point m = p + mid * (q - p);
    const double fm = field(m);
    if (!std::isfinite(fm)) break;
    if (std::abs(fm) < best_abs) {
      best_abs = std::abs(fm);
      best = m;
    }
    if (fm == 0.0) break;
    if (inside(fm) == inside(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  if (!std::isfinite(best_abs)) best = p + 0.5 * (q - p);
  return best;
}

}  // namespace

int worker_count() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n <= 0) n = 1;
  if (const char* env = std::getenv("AVD_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) n = std::min(n, cap);
  }
  return n;
}

void GridSpec::validate() const {
  if (!(x_min < x_max) || !(y_min < y_max) || !std::isfinite(x_min) || !std::isfinite(x_max) ||
      !std::isfinite(y_min) || !std::isfinite(y_max)) {
    throw InvalidArgument("grid bounds must be finite with min < max");
  }
  if (nx < 2 || ny < 2) throw InvalidArgument("grid needs at least 2 nodes per axis");
}

double GridSpec::cell_diagonal() const {
  return std::hypot((x_max - x_min) / (nx - 1), (y_max - y_min) / (ny - 1));
}

std::size_t PolyLineSet::vertex_count() const {
  std::size_t n = 0;
  for (const auto& line : lines) n += line.size();
  return n;
}

std::vector<Point> PolyLineSet::vertices() const {
  std::vector<Point> out;
  out.reserve(vertex_count());
  for (const auto& line : lines) out.insert(out.end(), line.begin(), line.end());
  return out;
}

PolyLineSet trace_zero_set(const std::function<double(Point)>& field, const GridSpec& grid,
                           const std::function<bool(int, int)>& skip_cell) {
  grid.validate();
  const int nx = grid.nx;
  const int ny = grid.ny;
  std::vector<double> values(static_cast<std::size_t>(nx) * ny);
  detail::parallel_rows(ny, [&](int j) {
    for (int i = 0; i < nx; ++i) values[static_cast<std::size_t>(j) * nx + i] = field(grid.node(i, j));
  });
  auto value = [&](int i, int j) { return values[static_cast<std::size_t>(j) * nx + i]; };

  // Edge ids: horizontal (i,j)-(i+1,j) first, then vertical (i,j)-(i,j+1).
  const int horizontal = ny * (nx - 1);
  const int edge_total = horizontal + nx * (ny - 1);
  auto h_edge = [&](int i, int j) { return j * (nx - 1) + i; };
  auto v_edge = [&](int i, int j) { return horizontal + j * nx + i; };

  std::vector<int> vertex_of_edge(static_cast<std::size_t>(edge_total), -1);
  std::vector<Point> vertices;
  auto crossing = [&](int i0, int j0, int i1, int j1) {
    const double a = value(i0, j0);
    const double b = value(i1, j1);
    return std::isfinite(a) && std::isfinite(b) && inside(a) != inside(b);
  };
  for (int e = 0; e < edge_total; ++e) {
    int i0, j0, i1, j1;
    if (e < horizontal) {
      j0 = j1 = e / (nx - 1);
      i0 = e % (nx - 1);
      i1 = i0 + 1;
    } else {
      j0 = (e - horizontal) / nx;
      i0 = i1 = (e - horizontal) % nx;
      j1 = j0 + 1;
    }
    if (!crossing(i0, j0, i1, j1)) continue;
    vertex_of_edge[static_cast<std::size_t>(e)] = static_cast<int>(vertices.size());
    vertices.push_back(refine_crossing(field, grid.node(i0, j0), value(i0, j0), grid.node(i1, j1)));
  }

  std::vector<std::vector<int>> adjacency(vertices.size());
  auto link = [&](int ea, int eb) {
    const int a = vertex_of_edge[static_cast<std::size_t>(ea)];
    const int b = vertex_of_edge[static_cast<std::size_t>(eb)];
    if (a < 0 || b < 0) return;
    adjacency[static_cast<std::size_t>(a)].push_back(b);
    adjacency[static_cast<std::size_t>(b)].push_back(a);
  };

  for (int j = 0; j + 1 < ny; ++j) {
    for (int i = 0; i + 1 < nx; ++i) {
      const double v00 = value(i, j);
      const double v10 = value(i + 1, j);
      const double v11 = value(i + 1, j + 1);
      const double v01 = value(i, j + 1);
      if (!std::isfinite(v00) || !std::isfinite(v10) || !std::isfinite(v11) ||
          !std::isfinite(v01)) {
        continue;
      }
      if (skip_cell && skip_cell(i, j)) continue;
      const int bottom = h_edge(i, j);
      const int right = v_edge(i + 1, j);
      const int top = h_edge(i, j + 1);
      const int left = v_edge(i, j);
      std::vector<int> cut;
      for (int e : {bottom, right, top, left}) {
        if (vertex_of_edge[static_cast<std::size_t>(e)] >= 0) cut.push_back(e);
      }
      if (cut.size() == 2) {
        link(cut[0], cut[1]);
      } else if (cut.size() == 4) {
        const Point center{0.5 * (grid.x(i) + grid.x(i + 1)), 0.5 * (grid.y(j) + grid.y(j + 1))};
        double fc = field(center);
        if (!std::isfinite(fc)) fc = 0.25 * (v00 + v10 + v11 + v01);
        if (inside(fc) == inside(v00)) {
          // v10 and v01 are cut off.
          link(bottom, right);
          link(top, left);
        } else {
          link(bottom, left);
          link(right, top);
        }
      }
    }
  }

  PolyLineSet out;
  std::vector<char> used(vertices.size(), 0);
  auto walk = [&](int start) {
    Polyline line;
    int prev = -1;
    int cur = start;
    while (cur >= 0 && !used[static_cast<std::size_t>(cur)]) {
      used[static_cast<std::size_t>(cur)] = 1;
      line.push_back(vertices[static_cast<std::size_t>(cur)]);
      int next = -1;
      for (int n : adjacency[static_cast<std::size_t>(cur)]) {
        if (n != prev && !used[static_cast<std::size_t>(n)]) {
          next = n;
          break;
        }
      }
      prev = cur;
      cur = next;
    }
    // Close cycles explicitly.
    if (line.size() > 2) {
      for (int n : adjacency[static_cast<std::size_t>(prev)]) {
        if (n == start) {
          line.push_back(line.front());
          break;
        }
      }
    }
    out.lines.push_back(std::move(line));
  };
  // Crossings touched only by skipped cells have no neighbours and are dropped.
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (!used[v] && adjacency[v].size() == 1) walk(static_cast<int>(v));
  }
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (!used[v] && !adjacency[v].empty()) walk(static_cast<int>(v));
  }
  return out;
}

}  // namespace avd
