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

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "dilation/error.hpp"
#include "dilation/point.hpp"

namespace dilation {

/// A closed polyline with an arc-length table. The last vertex connects back
/// to the first. Immutable after construction.
class ClosedCurve {
 public:
  /// Builds the curve; rejects fewer than three vertices, non-finite
  /// coordinates and zero-length edges (including the closing edge).
  static ClosedCurve from_vertices(std::vector<Point2> points) {
    if (points.size() < 3) {
      throw GeometryError(ErrorKind::TooFewVertices,
                          "closed curve needs at least 3 vertices, got " +
                              std::to_string(points.size()));
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (!is_finite(points[i])) {
        throw GeometryError(ErrorKind::NonFinite, "vertex " + std::to_string(i));
      }
    }
    ClosedCurve c;
    c.cum_.resize(points.size() + 1);
    c.cum_[0] = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const Point2 next = points[(i + 1) % points.size()];
      const double len = distance(points[i], next);
      if (!(len > 0.0)) {
        throw GeometryError(ErrorKind::DegenerateEdge,
                            "vertices " + std::to_string(i) + " and " +
                                std::to_string((i + 1) % points.size()) + " coincide");
      }
      c.cum_[i + 1] = c.cum_[i] + len;
    }
    c.vertices_ = std::move(points);
    return c;
  }

  std::span<const Point2> vertices() const { return vertices_; }
  /// cum_length()[k] is the arc length up to vertex k; the final entry is the
  /// total length.
  std::span<const double> cum_length() const { return cum_; }
  double total_length() const { return cum_.back(); }
  std::size_t size() const { return vertices_.size(); }

  Point2 vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  double edge_length(std::size_t i) const { return cum_[i + 1] - cum_[i]; }

  /// Reduces an arbitrary arc parameter to [0, L).
  double normalize(double s) const {
    const double len = total_length();
    double r = std::fmod(s, len);
    if (r < 0.0) r += len;
    if (r >= len) r = 0.0;
    return r;
  }

  /// Index of the edge containing normalized parameter `s`.
  std::size_t edge_at(double s) const {
    const double t = normalize(s);
    auto it = std::upper_bound(cum_.begin(), cum_.end(), t);
    std::size_t i = static_cast<std::size_t>(it - cum_.begin()) - 1;
    return std::min(i, vertices_.size() - 1);
  }

  Point2 point_at(double s) const {
    const double t = normalize(s);
    const std::size_t i = edge_at(t);
    const double f = (t - cum_[i]) / edge_length(i);
    return lerp(vertices_[i], vertex(i + 1), f);
  }

  /// Unit direction of edge `i`.
  Point2 edge_direction(std::size_t i) const {
    return (vertex(i + 1) - vertices_[i]) / edge_length(i);
  }

 private:
  ClosedCurve() = default;

  std::vector<Point2> vertices_;
  std::vector<double> cum_;
};

/// Shortest distance along the curve between two parameters, in [0, L/2].
inline double arc_distance(const ClosedCurve &curve, double s1, double s2) {
  const double len = curve.total_length();
  const double d = std::abs(curve.normalize(s1) - curve.normalize(s2));
  return std::min(d, len - d);
}

/// Samples `n` points at arc lengths start + k*L/n.
inline ClosedCurve resample(const ClosedCurve &curve, std::size_t n, double start = 0.0) {
  if (n < 3) {
    throw GeometryError(ErrorKind::TooFewVertices, "resample needs n >= 3");
  }
  std::vector<Point2> pts(n);
  const double step = curve.total_length() / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    pts[k] = curve.point_at(start + step * static_cast<double>(k));
  }
  return ClosedCurve::from_vertices(std::move(pts));
}

namespace detail {

inline double shoelace(std::span<const Point2> pts) {
  double acc = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    acc += cross(pts[i], pts[(i + 1) % pts.size()]);
  }
  return 0.5 * acc;
}

inline int orient_sign(Point2 a, Point2 b, Point2 c) {
  const double v = cross(b - a, c - a);
  return (v > 0.0) - (v < 0.0);
}

inline bool on_segment(Point2 a, Point2 b, Point2 p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

/// Closed-segment intersection test (touching counts).
inline bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d) {
  const int o1 = orient_sign(a, b, c), o2 = orient_sign(a, b, d);
  const int o3 = orient_sign(c, d, a), o4 = orient_sign(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

/// True when no two non-adjacent edges meet and no adjacent pair folds back.
inline bool is_simple_polygon(std::span<const Point2> v) {
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 e1 = v[(i + 1) % n] - v[i];
    const Point2 e2 = v[(i + 2) % n] - v[(i + 1) % n];
    if (cross(e1, e2) == 0.0 && dot(e1, e2) < 0.0) return false;
  }
  if (n == 3) return true;
  // Sweep over x-extents so that only overlapping boxes are tested.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto min_x = [&](std::size_t i) { return std::min(v[i].x, v[(i + 1) % n].x); };
  auto max_x = [&](std::size_t i) { return std::max(v[i].x, v[(i + 1) % n].x); };
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return min_x(a) < min_x(b); });
  for (std::size_t oi = 0; oi < n; ++oi) {
    const std::size_t i = order[oi];
    const double hi = max_x(i);
    const double ylo = std::min(v[i].y, v[(i + 1) % n].y);
    const double yhi = std::max(v[i].y, v[(i + 1) % n].y);
    for (std::size_t oj = oi + 1; oj < n && min_x(order[oj]) <= hi; ++oj) {
      const std::size_t j = order[oj];
      const std::size_t d = i > j ? i - j : j - i;
      if (d == 1 || d == n - 1) continue;
      if (std::max(v[j].y, v[(j + 1) % n].y) < ylo ||
          std::min(v[j].y, v[(j + 1) % n].y) > yhi) {
        continue;
      }
      if (segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n])) return false;
    }
  }
  return true;
}

}  // namespace detail

enum class Orientation { CounterClockwise, Clockwise };

struct CurveClass {
  bool convex = false;
  bool simple = false;
  Orientation orientation = Orientation::CounterClockwise;
};

/// Relative cross-product threshold below which consecutive edges count as
/// collinear.
inline constexpr double kCollinearTolerance = 1e-12;

/// Convexity requires consistent turn signs and a total turning of one full
/// revolution, so star polygons with same-sign turns are rejected.
inline CurveClass classify(const ClosedCurve &curve) {
  CurveClass out;
  const auto v = curve.vertices();
  const std::size_t n = v.size();
  out.orientation = detail::shoelace(v) >= 0.0 ? Orientation::CounterClockwise
                                                : Orientation::Clockwise;
  out.simple = detail::is_simple_polygon(v);

  int sign = 0;
  bool mixed = false;
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 e1 = v[(i + 1) % n] - v[i];
    const Point2 e2 = v[(i + 2) % n] - v[(i + 1) % n];
    const double c = cross(e1, e2);
    turning += std::atan2(c, dot(e1, e2));
    if (std::abs(c) < kCollinearTolerance * curve.edge_length(i) *
                          curve.edge_length((i + 1) % n)) {
      if (dot(e1, e2) < 0.0) mixed = true;  // fold-back
      continue;
    }
    const int s = c > 0.0 ? 1 : -1;
    if (sign == 0) sign = s;
    else if (s != sign) mixed = true;
  }
  out.convex = !mixed && sign != 0 && std::abs(std::abs(turning) - 2.0 * kPi) < 1e-6;
  return out;
}

/// Indices of vertices where the curve actually turns (collinear vertices
/// dropped), using the same tolerance as `classify`.
inline std::vector<std::size_t> corner_indices(const ClosedCurve &curve) {
  std::vector<std::size_t> out;
  const std::size_t n = curve.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t prev = (i + n - 1) % n;
    const Point2 e1 = curve.vertex(i) - curve.vertex(prev);
    const Point2 e2 = curve.vertex(i + 1) - curve.vertex(i);
    const double c = cross(e1, e2);
    if (std::abs(c) >= kCollinearTolerance * curve.edge_length(prev) * curve.edge_length(i) ||
        dot(e1, e2) < 0.0) {
      out.push_back(i);
    }
  }
  return out;
}

/// Returns a counter-clockwise copy (vertex 0 kept first).
inline ClosedCurve make_ccw(const ClosedCurve &curve) {
  if (detail::shoelace(curve.vertices()) >= 0.0) return curve;
  std::vector<Point2> pts(curve.vertices().begin(), curve.vertices().end());
  std::reverse(pts.begin() + 1, pts.end());
  return ClosedCurve::from_vertices(std::move(pts));
}

}  // namespace dilation
