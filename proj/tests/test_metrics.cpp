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
#include <random>

#include "dilation/dilation.hpp"
#include "oracles.hpp"

namespace dilation {
namespace {

std::vector<Point2> to_vector(const ClosedCurve &c) { return {c.vertices().begin(), c.vertices().end()}; }

ClosedCurve unit_square() { return ClosedCurve::from_vertices({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

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

TEST(SignedArea, Examples) {
  const std::vector<Point2> ccw{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const std::vector<Point2> cw{{0, 0}, {0, 1}, {1, 1}, {1, 0}};
  EXPECT_DOUBLE_EQ(signed_area(ccw), 1.0);
  EXPECT_DOUBLE_EQ(signed_area(cw), -1.0);
  const std::vector<Point2> eight{{-1, 0.5}, {-1, -0.5}, {1, 0.5}, {1, -0.5}};
  EXPECT_DOUBLE_EQ(signed_area(eight), 0.0);
  const std::vector<Point2> two{{0, 0}, {1, 0}};
  EXPECT_EQ(error_of([&] { signed_area(two); }), ErrorKind::TooFewVertices);
}

TEST(Diameter, Examples) {
  EXPECT_DOUBLE_EQ(diameter(unit_square()), std::sqrt(2.0));
  EXPECT_NEAR(diameter(primitive(shape::Triangle{1, 1, 1})), 1.0, 1e-15);
  // The bulge at phi = 0 faces the dent at phi = pi, so the diameter is
  // below 2(1 + s); compare with all pairs of the analytic curve.
  double analytic = 0.0;
  std::vector<Point2> dense;
  for (int k = 0; k < 6000; ++k) {
    const double phi = 2 * kPi * k / 6000.0, s = 0.1;
    const double r = 1 + s * std::cos(3 * phi), t = -(s / 3) * std::sin(3 * phi);
    dense.push_back({r * std::cos(phi) - t * std::sin(phi), r * std::sin(phi) + t * std::cos(phi)});
  }
  for (Point2 a : dense) {
    for (Point2 b : dense) analytic = std::max(analytic, distance(a, b));
  }
  EXPECT_NEAR(diameter(moon_orbit(0.1, 4096)), analytic, 1e-5);
  EXPECT_LT(diameter(moon_orbit(0.1, 4096)), 2.2);
}

TEST(Diameter, MatchesAllPairs) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ClosedCurve c = random_simple_polygon(seed, 15);
    double best = 0.0;
    for (Point2 a : c.vertices()) {
      for (Point2 b : c.vertices()) best = std::max(best, distance(a, b));
    }
    EXPECT_DOUBLE_EQ(diameter(c), best);
  }
}

TEST(Width, Examples) {
  EXPECT_NEAR(width(unit_square()), 1.0, 1e-15);
  EXPECT_NEAR(width(primitive(shape::Triangle{1, 1, 1})), std::sqrt(3.0) / 2.0, 1e-15);
  EXPECT_NEAR(width(isosceles_triangle(1.0, 10.0 * kPi / 180.0)), std::sin(10.0 * kPi / 180.0), 1e-15);
  EXPECT_EQ(error_of([] { width(random_simple_polygon(1, 10)); }), ErrorKind::NotConvex);
}

TEST(Width, MatchesDirectionScan) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ClosedCurve c = random_convex_polygon(seed, 12);
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 200000; ++k) {
      const double a = kPi * k / 200000.0;
      const Point2 u{std::cos(a), std::sin(a)};
      double lo = 1e300, hi = -1e300;
      for (Point2 p : c.vertices()) {
        lo = std::min(lo, dot(p, u));
        hi = std::max(hi, dot(p, u));
      }
      best = std::min(best, hi - lo);
    }
    // The width function has a kink at its minimum; refine the scan.
    auto width_at = [&](double a) {
      const Point2 u{std::cos(a), std::sin(a)};
      double lo = 1e300, hi = -1e300;
      for (Point2 p : c.vertices()) {
        lo = std::min(lo, dot(p, u));
        hi = std::max(hi, dot(p, u));
      }
      return hi - lo;
    };
    for (int k = 0; k < 200000; ++k) {
      const double a = kPi * k / 200000.0;
      if (width_at(a) <= best + 1e-4) best = std::min(best, oracle::golden(width_at, a - 2e-5, a + 2e-5, false));
    }
    EXPECT_LE(width(c), best + 1e-12);
    EXPECT_NEAR(width(c), best, 1e-6);
  }
}

TEST(MinEnclosingCircle, Examples) {
  const std::vector<Point2> two{{0, 0}, {2, 0}};
  const Circle c2 = min_enclosing_circle(two);
  EXPECT_NEAR(c2.center.x, 1.0, 1e-15);
  EXPECT_NEAR(c2.center.y, 0.0, 1e-15);
  EXPECT_NEAR(c2.radius, 1.0, 1e-15);

  const auto tri = to_vector(primitive(shape::Triangle{1, 1, 1}));
  const Circle ct = min_enclosing_circle(tri);
  EXPECT_NEAR(ct.radius, 1.0 / std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(ct.radius, oracle::exhaustive_enclosing_circle(tri).second, 1e-12);

  const auto sq = to_vector(unit_square());
  const Circle cs = min_enclosing_circle(sq);
  EXPECT_NEAR(cs.center.x, 0.5, 1e-12);
  EXPECT_NEAR(cs.center.y, 0.5, 1e-12);
  EXPECT_NEAR(cs.radius, std::sqrt(2.0) / 2.0, 1e-12);

  const std::vector<Point2> one{{3, 4}};
  EXPECT_EQ(min_enclosing_circle(one).radius, 0.0);
}

TEST(MinEnclosingCircle, MatchesGridOracleOnRandomClouds) {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Point2> pts(5 + trial);
    for (Point2 &p : pts) p = {g(rng), 0.5 * g(rng)};
    const Circle c = min_enclosing_circle(pts);
    for (Point2 p : pts) EXPECT_LE(distance(p, c.center), c.radius * (1 + 1e-12));
    EXPECT_NEAR(c.radius, oracle::exhaustive_enclosing_circle(pts).second, 1e-12);
    EXPECT_EQ(min_enclosing_circle(pts).radius, c.radius);
  }
}

TEST(MinEnclosingCircle, QuarterPerimeterBound) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const ClosedCurve c = random_simple_polygon(seed, 20);
    EXPECT_LE(min_enclosing_circle(c.vertices()).radius, c.total_length() / 4.0 + 1e-12);
  }
}

TEST(Detour, Examples) {
  const ClosedCurve circ = primitive(shape::Circle{1.0}, 4096);
  EXPECT_NEAR(detour(circ, 0.0, 0.5 * circ.total_length()), kPi / 2, 1e-6);
  EXPECT_DOUBLE_EQ(detour(unit_square(), 0.0, 2.0), std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(detour(unit_square(), 0.0, 1.0), 1.0);
  EXPECT_EQ(error_of([] { detour(unit_square(), 1.0, 5.0); }), ErrorKind::CoincidentPoints);
}

TEST(Dilation, Examples) {
  EXPECT_NEAR(dilation(primitive(shape::Circle{1.0}, 4096), 512).delta, kPi / 2, 1e-4);
  EXPECT_NEAR(dilation(primitive(shape::Triangle{1, 1, 1}), 512).delta, 2.0, 1e-12);
  EXPECT_NEAR(dilation(rounded_triangle(1.0, 256), 512).delta, 1.5 * std::log(3.0), 2e-3);
}

TEST(Dilation, Errors) {
  const ClosedCurve bow = ClosedCurve::from_vertices({{0, 0}, {1, 1}, {1, 0}, {0, 1}});
  EXPECT_EQ(error_of([&] { dilation(bow, 512); }), ErrorKind::NotSimple);
  EXPECT_EQ(error_of([] { dilation(random_simple_polygon(0, 8), 32); }), ErrorKind::InvalidSampleCount);
}

TEST(Dilation, ConvexFastPathIsHalfPerimeterOverH) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ClosedCurve c = random_convex_polygon(seed, 10);
    const DilationResult r = dilation(c, 512);
    EXPECT_NEAR(r.delta, c.total_length() / (2.0 * halving_extrema(c).h), 1e-9);
    EXPECT_GE(r.delta, 1.0);
  }
}

TEST(Dilation, BruteForceAgreesWithFastPathOnConvex) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const ClosedCurve c = random_convex_polygon(seed, 8 + seed);
    EXPECT_NEAR(dilation_sampled(c, 2048).delta, dilation(c, 2048).delta, 1e-3) << seed;
  }
  const ClosedCurve e = primitive(shape::Ellipse{2.0, 1.0}, 512);
  EXPECT_NEAR(dilation_sampled(e, 2048).delta, dilation(e, 2048).delta, 1e-3);
}

TEST(Dilation, GeneralPathDominatesOracleAndHalvingBound) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const ClosedCurve c = random_simple_polygon(seed, 10);
    const DilationResult r = dilation(c, 512);
    const double lower = c.total_length() / (2.0 * halving_extrema(c).h);
    EXPECT_GE(r.delta, lower);
    // Dense sampling without refinement can only undershoot the supremum,
    // apart from sampled pairs that straddle a sharp vertex.
    const double sampled = oracle::sampled_dilation(to_vector(c), 1500);
    EXPECT_GE(r.delta, sampled - 1e-3) << seed;
    EXPECT_GE(r.delta, kPi / 2);
  }
}

TEST(Dilation, VertexLimitOfReflexNotch) {
  // A thin notch: the sharp reflex corner forces the detour limit.
  const ClosedCurve c = ClosedCurve::from_vertices(
      {{0, 0}, {1, 0}, {1, 1}, {0.56, 1}, {0.51, 0.7}, {0.5, 0.5}, {0.49, 0.7}, {0.44, 1}, {0, 1}});
  const DilationResult r = dilation(c, 512);
  const Point2 a{0.51, 0.7}, v{0.5, 0.5}, b{0.49, 0.7};
  EXPECT_GE(r.delta, detail::vertex_limit(a, v, b) - 1e-9);
  EXPECT_TRUE(r.attained_at_vertex_limit);
}

TEST(Dilation, DeterministicOnRepeat) {
  const ClosedCurve c = random_simple_polygon(9, 12);
  const DilationResult a = dilation(c, 256), b = dilation(c, 256);
  EXPECT_EQ(a.delta, b.delta);
  EXPECT_EQ(a.s1, b.s1);
  EXPECT_EQ(a.s2, b.s2);
}

TEST(MinAreaHalvingDistance, Examples) {
  EXPECT_NEAR(min_area_halving_distance(primitive(shape::Circle{1.0}, 4096)), 2.0, 1e-3);
  const ClosedCurve tri = primitive(shape::Triangle{1, 1, 1});
  const double ha = min_area_halving_distance(tri);
  EXPECT_NEAR(area(tri) / (ha * ha), std::sqrt(3.0) / 2.0, 1e-6);
  EXPECT_NEAR(min_area_halving_distance(rounded_triangle(1.0, 256)), 1.0, 1e-3);
  EXPECT_EQ(error_of([] { min_area_halving_distance(random_simple_polygon(2, 9)); }), ErrorKind::NotConvex);
}

TEST(MinAreaHalvingDistance, TriangleMatchesClippingOracle) {
  // Oracle: the area-halving chord cutting off a corner of angle 60 deg with
  // legs x,y has xy = 1/2 (half the area of the unit triangle times 2/sin60),
  // minimal at x = y = 1/sqrt(2).
  const double ha = min_area_halving_distance(primitive(shape::Triangle{1, 1, 1}));
  EXPECT_NEAR(ha, 1.0 / std::sqrt(2.0), 1e-6);
}

TEST(CentralSymmetrization, Examples) {
  const ClosedCurve hex = central_symmetrization(primitive(shape::Triangle{1, 1, 1}));
  ASSERT_EQ(hex.size(), 6u);
  EXPECT_NEAR(hex.total_length(), 3.0, 1e-12);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(hex.edge_length(i), 0.5, 1e-12);

  const ClosedCurve sq = central_symmetrization(unit_square());
  ASSERT_EQ(sq.size(), 4u);
  EXPECT_NEAR(sq.total_length(), 4.0, 1e-12);
  EXPECT_NEAR(area(sq), 1.0, 1e-12);

  EXPECT_EQ(error_of([] { central_symmetrization(random_simple_polygon(4, 9)); }), ErrorKind::NotConvex);
}

TEST(CentralSymmetrization, MatchesMinkowskiOracle) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const ClosedCurve c = random_convex_polygon(seed, 5 + seed);
    const ClosedCurve s = central_symmetrization(c);
    const std::vector<Point2> ref = oracle::minkowski_symmetral(to_vector(c));
    EXPECT_NEAR(s.total_length(), c.total_length(), 1e-9);
    EXPECT_NEAR(s.total_length(), oracle::perimeter(ref), 1e-9);
    EXPECT_NEAR(area(s), oracle::area(ref), 1e-9);
    // Central symmetry: every vertex has its reflection among the vertices.
    for (Point2 v : s.vertices()) {
      double nearest = 1e300;
      for (Point2 w : s.vertices()) nearest = std::min(nearest, distance(v, -w));
      EXPECT_LE(nearest, 1e-9);
    }
    EXPECT_LE(s.size(), 2 * c.size());
    EXPECT_LE(dilation(s, 512).delta, dilation(c, 512).delta + 1e-12);
  }
}

TEST(ComputeMetrics, ConvexAndNonConvexFields) {
  const CurveMetrics tri = compute_metrics(primitive(shape::Triangle{1, 1, 1}));
  EXPECT_TRUE(tri.convex);
  ASSERT_TRUE(tri.width.has_value());
  ASSERT_TRUE(tri.h_area.has_value());
  EXPECT_LE(tri.h, *tri.width);
  EXPECT_LE(tri.h, tri.H);

  const CurveMetrics star = compute_metrics(random_simple_polygon(3, 12));
  EXPECT_FALSE(star.convex);
  EXPECT_FALSE(star.width.has_value());
  EXPECT_FALSE(star.h_area.has_value());
  EXPECT_GE(star.dilation, kPi / 2 - 1e-9);
}

}  // namespace
}  // namespace dilation
