#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <set>

#include "avd/oracle.hpp"
#include "reference.hpp"

namespace avd {
namespace {

const Segment kS1{{-1, 0}, {1, 0}};

double nearest(Point p, const std::vector<Point>& pts) {
  double best = INFINITY;
  for (const Point q : pts) best = std::min(best, distance(p, q));
  return best;
}

TEST(AngleGap, Examples) {
  const Segment s2{{3, 0}, {5, 0}};
  EXPECT_NEAR(angle_gap({2, 7}, kS1, s2), 0.0, 1e-15);
  EXPECT_GT(angle_gap({0, 1}, kS1, s2), 0.0);
  const auto node = CanonicalConfig::make(2, 4.0 / 3, 5.0 / 3, -0.8, 0.6);
  EXPECT_NEAR(angle_gap({-1, 2}, kS1, node.canonical_s2()), 0.0, 1e-9);
  EXPECT_THROW(angle_gap({1, 0}, kS1, s2), EndpointQuery);
}

TEST(GridSpec, Validation) {
  EXPECT_NO_THROW((GridSpec{}.validate()));
  EXPECT_THROW((GridSpec{1, 0, 0, 1, 4, 4}.validate()), InvalidArgument);
  EXPECT_THROW((GridSpec{0, 1, 0, 1, 1, 4}.validate()), InvalidArgument);
  const GridSpec g{0, 2, 0, 1, 3, 2};
  EXPECT_DOUBLE_EQ(g.x(2), 2.0);
  EXPECT_DOUBLE_EQ(g.y(1), 1.0);
  EXPECT_DOUBLE_EQ(g.cell_diagonal(), std::sqrt(2.0));
}

TEST(TraceZeroSet, CircleVerticesOnCircle) {
  const GridSpec g{-2, 2, -2, 2, 101, 101};
  const PolyLineSet set = trace_zero_set([](Point p) { return p.x * p.x + p.y * p.y - 1; }, g);
  ASSERT_EQ(set.lines.size(), 1u);
  EXPECT_EQ(set.lines[0].front(), set.lines[0].back());
  for (const Point p : set.vertices()) EXPECT_NEAR(norm(p), 1.0, 1e-12);
}

TEST(ExtractBisector, MirrorSymmetricPair) {
  const Segment s2{{3, 0}, {5, 0}};
  const PolyLineSet set = extract_bisector(kS1, s2, {-4, 8, -6, 6, 241, 241});
  ASSERT_FALSE(set.lines.empty());
  std::size_t off_axis = 0;
  for (const Point p : set.vertices()) {
    // On the shared carrier line outside both segments, both angles are 0.
    if (std::abs(p.y) < 1e-9) {
      EXPECT_NEAR(angle_gap(p, kS1, s2), 0.0, 1e-12);
      continue;
    }
    ++off_axis;
    EXPECT_NEAR(p.x, 2.0, 1e-9);
  }
  EXPECT_GT(off_axis, 100u);
}

TEST(ExtractBisector, VerticesAreEqualAngle) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 10; ++i) {
    const CanonicalConfig c = ref::random_config(rng);
    const Segment s2 = c.canonical_s2();
    PolyLineSet set;
    try {
      set = extract_bisector(kS1, s2, default_canonical_window(c, 256));
    } catch (const EmptyResult&) {
      continue;
    }
    for (const Point p : set.vertices()) EXPECT_LE(std::abs(angle_gap(p, kS1, s2)), 1e-10);
  }
}

TEST(ExtractBisector, EmptyAndIdentical) {
  // s2 nested inside s1 is everywhere seen under a smaller angle.
  EXPECT_THROW(extract_bisector(kS1, {{0, 0}, {1, 0}}, {-6, 6, -6, 6, 128, 128}), EmptyResult);
  EXPECT_THROW(extract_bisector(kS1, {{1, 0}, {-1, 0}}, {-6, 6, -6, 6, 128, 128}),
               IdenticalSegments);
}

// The congruent antiparallel pair: vertices outside the strip between the two
// carrier lines lie on the degree-2 curve, those inside on the cubic of the
// other orientation.
TEST(ExtractBisector, CongruentParallelBranches) {
  const auto config = CanonicalConfig::make(1, 1, 1, 0, -1);
  const EdgeCurve e = build_edge(config);
  const BivariatePoly hyperbola = normalize(e.poly);
  const BivariatePoly cubic = normalize(e.companion);
  const PolyLineSet set = extract_bisector(kS1, config.canonical_s2(), {-4, 4, -4, 4, 512, 512});
  std::size_t outside = 0;
  for (const Point p : set.vertices()) {
    const bool in_strip = p.y > 0 && p.y < 1;
    if (!in_strip) ++outside;
    EXPECT_LE(std::abs(evaluate(in_strip ? cubic : hyperbola, p)), 1e-5);
  }
  EXPECT_GT(outside, 100u);
}

TEST(ExtractBisector, SwapLeavesVertexSet) {
  const Segment s2{{0.5, 1.5}, {2.5, 0.7}};
  const GridSpec g{-5, 5, -5, 5, 200, 200};
  const auto a = extract_bisector(kS1, s2, g).vertices();
  const auto b = extract_bisector(s2, kS1, g).vertices();
  ASSERT_EQ(a.size(), b.size());
  for (const Point p : a) EXPECT_LE(nearest(p, b), 1e-9);
  for (const Point p : {Point{0.3, 2}, Point{-3, -1}}) {
    EXPECT_DOUBLE_EQ(angle_gap(p, kS1, s2), -angle_gap(p, s2, kS1));
  }
}

TEST(ExtractBisector, GridRefinementIsStable) {
  const Segment s2{{0.5, 1.5}, {2.5, 0.7}};
  const GridSpec coarse{-5, 5, -5, 5, 128, 128};
  const GridSpec fine{-5, 5, -5, 5, 255, 255};
  const auto c = extract_bisector(kS1, s2, coarse).vertices();
  const auto f = extract_bisector(kS1, s2, fine).vertices();
  for (const Point p : c) EXPECT_LE(nearest(p, f), coarse.cell_diagonal());
}

TEST(RasterizeDiagram, Preconditions) {
  EXPECT_THROW(rasterize_diagram({kS1}, {}), InvalidArgument);
  EXPECT_THROW(rasterize_diagram({kS1, kS1.reversed()}, {}), IdenticalSegments);
}

TEST(RasterizeDiagram, TwoSitesSplitAlongBisector) {
  const Segment s2{{0.5, 1.5}, {2.5, 0.7}};
  const GridSpec g{-5, 5, -5, 5, 161, 161};
  const LabeledRaster r = rasterize_diagram({kS1, s2}, g);
  const auto bisector = extract_bisector(kS1, s2, g).vertices();
  std::set<int> labels(r.labels.begin(), r.labels.end());
  EXPECT_TRUE(labels.count(0) && labels.count(1));
  for (int j = 0; j + 1 < g.ny; ++j) {
    for (int i = 0; i + 1 < g.nx; ++i) {
      const int here = r.at(i, j);
      if (here != r.at(i + 1, j) || here != r.at(i, j + 1)) {
        EXPECT_LE(nearest(g.node(i, j), bisector), 2 * g.cell_diagonal())
            << "node " << i << ", " << j;
      }
    }
  }
}

TEST(RasterizeDiagram, ThreeSitesThreeLabelsAndThreadIndependent) {
  const std::vector<Segment> sites{kS1, {{2, 1}, {3, 3}}, {{-2, 2}, {-1, 4}}};
  const GridSpec g{-6, 7, -4, 8, 150, 150};
  const LabeledRaster r = rasterize_diagram(sites, g);
  const std::set<int> labels(r.labels.begin(), r.labels.end());
  EXPECT_GE(labels.size(), 3u);
  ::setenv("AVD_THREADS", "1", 1);
  EXPECT_EQ(worker_count(), 1);
  const LabeledRaster serial = rasterize_diagram(sites, g);
  ::unsetenv("AVD_THREADS");
  EXPECT_EQ(serial.labels, r.labels);
}

TEST(ValidateCurve, NodeExample) {
  const auto config = CanonicalConfig::make(2, 4.0 / 3, 5.0 / 3, -0.8, 0.6);
  const ValidationReport rep = validate_curve(build_edge(config), {-4, 4, -4, 4, 512, 512});
  EXPECT_TRUE(rep.pass);
  EXPECT_LE(rep.branch_residual, 1e-5);
  EXPECT_GT(rep.oracle_vertices, 0u);
  EXPECT_GT(rep.primary_fraction, 0.0);
  EXPECT_LT(rep.primary_fraction, 1.0);
  EXPECT_GT(rep.curve_on_locus_fraction, 0.0);
  EXPECT_NEAR(rep.curve_on_locus_fraction + rep.supplementary_fraction, 1.0, 0.05);
}

TEST(ValidateCurve, CongruentParallel) {
  const auto config = CanonicalConfig::make(1, 1, 1, 0, -1);
  const ValidationReport rep = validate_curve(build_edge(config), {-4, 4, -4, 4, 512, 512});
  EXPECT_TRUE(rep.pass);
  EXPECT_LE(rep.branch_residual, 1e-6);
}

TEST(ValidateCurve, WorldFrameMatchesCanonical) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int i = 0; i < 5; ++i) {
    const CanonicalConfig base = ref::random_config(rng);
    const SimilarityTransform t(u(rng), 0.5 + std::abs(u(rng)), {u(rng), u(rng)});
    const CanonicalConfig moved = canonicalize(t.apply(base.world_s1()), t.apply(base.world_s2()));
    const EdgeCurve e = build_edge(moved);
    const ValidationReport canon = validate_curve(e, default_canonical_window(moved, 256));
    ValidationOptions world;
    world.frame = Frame::World;
    const ValidationReport w = validate_curve(e, default_world_window(moved, 256), world);
    EXPECT_EQ(canon.pass, w.pass);
    EXPECT_TRUE(w.pass);
  }
}

}  // namespace
}  // namespace avd
