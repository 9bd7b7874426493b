// Copyright 2026 The dilation Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "dilation/dilation.hpp"
#include "oracles.hpp"

namespace dilation {
namespace {

template <class F>
ErrorKind error_of(F &&f) {
  try {
    f();
  } catch (const GeometryError &e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::ParseError;
}

EmbeddedGraph circle_loop(std::size_t n) {
  EmbeddedGraph g;
  std::vector<Point2> poly;
  for (std::size_t k = 0; k <= n; ++k) {
    const double a = 2 * kPi * static_cast<double>(k % n) / static_cast<double>(n);
    poly.push_back({std::cos(a), std::sin(a)});
  }
  const std::size_t v = g.add_vertex(poly.front());
  g.add_edge(v, v, poly);
  return g;
}

TEST(HexGrid, SingleHexagon) {
  const EmbeddedGraph g = hex_grid(1, 1, 1.0);
  EXPECT_EQ(g.vertices().size(), 6u);
  EXPECT_EQ(g.edges().size(), 6u);
  for (const GraphEdge &e : g.edges()) EXPECT_NEAR(e.length, 1.0, 1e-15);
}

TEST(HexGrid, EulerCharacteristic) {
  for (auto [r, c] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}, {5, 5}, {2, 7}}) {
    const EmbeddedGraph g = hex_grid(r, c, 1.0);
    const long v = static_cast<long>(g.vertices().size()), e = static_cast<long>(g.edges().size());
    EXPECT_EQ(v - e + (r * c + 1), 2) << r << "x" << c;
    EXPECT_TRUE(g.connected());
  }
}

TEST(HexGrid, TotalEdgeLength) {
  const EmbeddedGraph g = hex_grid(3, 3, 1.0);
  EXPECT_NEAR(g.total_edge_length(), static_cast<double>(g.edges().size()), 1e-12);
  for (const GraphEdge &e : g.edges()) EXPECT_NEAR(e.length, 1.0, 1e-12);
}

TEST(HexGrid, Errors) {
  EXPECT_EQ(error_of([] { hex_grid(0, 1, 1.0); }), ErrorKind::InvalidDimension);
  EXPECT_EQ(error_of([] { hex_grid(1, 1, 0.0); }), ErrorKind::InvalidDimension);
}

TEST(EmbeddedGraphEdges, Validation) {
  EmbeddedGraph g;
  const std::size_t a = g.add_vertex({0, 0}), b = g.add_vertex({1, 0});
  g.add_edge(a, b);
  EXPECT_EQ(error_of([&] { g.add_edge(a, b); }), ErrorKind::DegenerateEdge);
  EXPECT_EQ(error_of([&] { g.add_edge(a, a, {{0, 0}, {0, 0}}); }), ErrorKind::DegenerateEdge);
  EXPECT_EQ(error_of([&] { g.add_edge(a, b, {{0, 0}, {0.5, 1}, {2, 0}}); }), ErrorKind::InvalidLocator);
  EXPECT_EQ(error_of([&] { g.add_edge(a, 7); }), ErrorKind::InvalidLocator);
}

TEST(ShortestPath, Examples) {
  EmbeddedGraph g;
  const std::size_t a = g.add_vertex({0, 0}), b = g.add_vertex({1, 0});
  g.add_edge(a, b);
  EXPECT_DOUBLE_EQ(shortest_path_length(g, {0, 0.0}, {0, 1.0}, 0.1), 1.0);
  EXPECT_NEAR(shortest_path_length(g, {0, 0.3}, {0, 0.35}, 0.1), 0.05, 1e-15);

  const EmbeddedGraph hex = hex_grid(1, 1, 1.0);
  // Opposite edges of a hexagon are k and k+3 in boundary order.
  EXPECT_NEAR(shortest_path_length(hex, {0, 0.5}, {3, 0.5}, 0.05), 3.0, 1e-12);

  EmbeddedGraph two;
  two.add_vertex({0, 0});
  two.add_vertex({1, 0});
  two.add_vertex({5, 0});
  two.add_vertex({6, 0});
  two.add_edge(0, 1);
  two.add_edge(2, 3);
  EXPECT_EQ(error_of([&] { shortest_path_length(two, {0, 0.5}, {1, 0.5}, 0.1); }), ErrorKind::Unreachable);
  EXPECT_EQ(error_of([&] { shortest_path_length(two, {0, 1.5}, {1, 0.5}, 0.1); }), ErrorKind::InvalidLocator);
  EXPECT_EQ(error_of([&] { shortest_path_length(two, {4, 0.5}, {1, 0.5}, 0.1); }), ErrorKind::InvalidLocator);
}

TEST(ShortestPath, MatchesFloydWarshallOnHexGrid) {
  const EmbeddedGraph g = hex_grid(2, 3, 1.0);
  std::vector<std::tuple<std::size_t, std::size_t, double>> edges;
  for (const GraphEdge &e : g.edges()) edges.emplace_back(e.a, e.b, e.length);
  const auto d = oracle::floyd_warshall(g.vertices().size(), edges);
  for (std::size_t i = 0; i < g.edges().size(); i += 3) {
    for (std::size_t j = 0; j < g.edges().size(); j += 2) {
      const GraphEdge &ei = g.edges()[i], &ej = g.edges()[j];
      const double sp = shortest_path_length(g, {i, 0.0}, {j, ej.length}, 0.25);
      EXPECT_NEAR(sp, d[ei.a][ej.b], 1e-12);
      // Interior points: best of leaving through either end.
      const double x = 0.3, y = 0.6;
      const double via = std::min({x + d[ei.a][ej.a] + y, x + d[ei.a][ej.b] + (1 - y),
                                   (1 - x) + d[ei.b][ej.a] + y, (1 - x) + d[ei.b][ej.b] + (1 - y)});
      const double direct = i == j ? std::abs(x - y) : via;
      EXPECT_NEAR(shortest_path_length(g, {i, x}, {j, y}, 0.25), std::min(via, direct), 1e-12);
    }
  }
}

TEST(GraphDilation, SingleHexagon) {
  const GraphDilationResult r = graph_dilation(hex_grid(1, 1, 1.0), 0.02);
  EXPECT_NEAR(r.delta_lower, std::sqrt(3.0), 0.02);
  EXPECT_NEAR(distance(r.p, r.q), std::sqrt(3.0), 0.05);  // opposite edge midpoints
  EXPECT_EQ(r.sample_eps, 0.02);
}

TEST(GraphDilation, FiveByFiveGrid) {
  const GraphDilationResult r = graph_dilation(hex_grid(5, 5, 1.0), 0.05);
  EXPECT_NEAR(r.delta_lower, std::sqrt(3.0), 0.03);
  EXPECT_GE(r.delta_lower, 1.0);
}

TEST(GraphDilation, CircleLoop) {
  const EmbeddedGraph g = circle_loop(512);
  const GraphDilationResult r = graph_dilation(g, 0.01);
  EXPECT_NEAR(r.delta_lower, kPi / 2, 0.01);
  const ClosedCurve c = primitive(shape::Circle{1.0}, 512);
  EXPECT_NEAR(r.delta_lower, dilation(c, 512).delta, 2 * 0.01);
  EXPECT_GE(r.delta_lower, kPi / 2 - 2 * 0.01);
}

TEST(GraphDilation, MonotoneUnderRefinement) {
  const EmbeddedGraph g = hex_grid(2, 2, 1.0);
  double prev = 0.0;
  for (double eps : {0.4, 0.2, 0.1, 0.05}) {
    const double d = graph_dilation(g, eps).delta_lower;
    EXPECT_GE(d, prev - 1e-12) << eps;
    prev = d;
  }
}

TEST(GraphDilation, DeterministicAcrossThreadCounts) {
  const EmbeddedGraph g = hex_grid(2, 3, 1.0);
  const GraphDilationResult a = graph_dilation(g, 0.1, 1), b = graph_dilation(g, 0.1, 4);
  EXPECT_EQ(a.delta_lower, b.delta_lower);
  EXPECT_EQ(a.p, b.p);
  EXPECT_EQ(a.q, b.q);
}

TEST(GraphDilation, SharpCornerVertexLimit) {
  EmbeddedGraph g;
  g.add_vertex({0, 0});
  g.add_vertex({1, 0});
  g.add_vertex({1, 0.1});
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  const GraphDilationResult r = graph_dilation(g, 0.05);
  const double theta = std::atan2(0.1, 1.0);
  EXPECT_NEAR(r.delta_lower, 1 / std::sin(theta / 2), 1e-9);
  EXPECT_TRUE(r.attained_at_vertex_limit);
}

TEST(GraphDilation, Errors) {
  EmbeddedGraph two;
  two.add_vertex({0, 0});
  two.add_vertex({1, 0});
  two.add_vertex({5, 0});
  two.add_vertex({6, 0});
  two.add_edge(0, 1);
  two.add_edge(2, 3);
  EXPECT_EQ(error_of([&] { graph_dilation(two, 0.1); }), ErrorKind::Disconnected);
  EXPECT_EQ(error_of([] { graph_dilation(hex_grid(1, 1, 1), 0.0); }), ErrorKind::InvalidSampleSpacing);
}

TEST(GraphDilation, SampledPathsSatisfyTriangleInequality) {
  const EmbeddedGraph g = hex_grid(2, 2, 1.0);
  const double ab = shortest_path_length(g, {0, 0.2}, {5, 0.7}, 0.1);
  const double bc = shortest_path_length(g, {5, 0.7}, {9, 0.4}, 0.1);
  const double ac = shortest_path_length(g, {0, 0.2}, {9, 0.4}, 0.1);
  EXPECT_LE(ac, ab + bc + 1e-12);
}

TEST(EmbedPointSet, LatticePointsAreCovered) {
  const double r3 = std::sqrt(3.0);
  const std::vector<Point2> pts{{0.0, 0.0}, {2.0, r3}, {-1.5, 1.5 * r3}};
  const Embedding e = embed_point_set(pts, 1.0);
  ASSERT_EQ(e.cover.size(), 3u);
  for (const CoverEntry &c : e.cover) {
    ASSERT_TRUE(c.covered) << c.point;
    const GraphEdge &ge = e.graph.edges()[*c.edge];
    EXPECT_LE(point_segment_distance(pts[c.point], ge.polyline.front(), ge.polyline.back()), 1e-9 * e.edge);
  }
}

TEST(EmbedPointSet, IntegerGridFlagsOffLatticePoints) {
  std::vector<Point2> pts;
  for (int y = -9; y <= 9; ++y) {
    for (int x = -9; x <= 9; ++x) pts.push_back({double(x), double(y)});
  }
  const Embedding e = embed_point_set(pts, 1.0);
  std::size_t covered = 0;
  for (const CoverEntry &c : e.cover) covered += c.covered ? 1 : 0;
  EXPECT_EQ(covered, 19u);  // one row of the grid lies on a lattice level
  EXPECT_LT(covered, pts.size());
}

TEST(EmbedPointSet, SinglePoint) {
  const std::vector<Point2> pts{{0.3, -2.0}};
  const Embedding e = embed_point_set(pts, 1.0);
  EXPECT_EQ(e.graph.vertices().size(), 6u);
  EXPECT_EQ(e.graph.edges().size(), 6u);
  ASSERT_TRUE(e.cover[0].covered);
}

}  // namespace
}  // namespace dilation
