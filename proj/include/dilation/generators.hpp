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

// Curve factories: classical primitives, the rounded triangle of constant
// halving distance, the moon orbit, cap curves, Zindler curves with a
// three-cusped midpoint curve, and the Auerbach constant-width companion.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "dilation/closed_curve.hpp"
#include "dilation/halving.hpp"
#include "dilation/metrics.hpp"

namespace dilation {

namespace shape {
struct Circle {
  double radius = 1.0;
};
struct Ellipse {
  double a = 1.0;  // semi-axis along x
  double b = 1.0;  // semi-axis along y
};
struct RegularPolygon {
  std::size_t sides = 3;
  double circumradius = 1.0;
};
/// Side lengths; `c` lies on the x-axis.
struct Triangle {
  double a = 1.0;
  double b = 1.0;
  double c = 1.0;
};
struct Rectangle {
  double a = 1.0;
  double b = 1.0;
};
}  // namespace shape

using Primitive = std::variant<shape::Circle, shape::Ellipse, shape::RegularPolygon,
                               shape::Triangle, shape::Rectangle>;

namespace detail {

inline void require_positive(double v, const char *what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw GeometryError(ErrorKind::InvalidDimension, std::string(what) + " must be positive");
  }
}

inline void require_samples(std::size_t n, std::size_t min) {
  if (n < min) {
    throw GeometryError(ErrorKind::InvalidSampleCount,
                        "need at least " + std::to_string(min) + " samples");
  }
}

template <class F>
std::vector<Point2> sample_parametric(F &&f, std::size_t n) {
  std::vector<Point2> pts(n);
  for (std::size_t k = 0; k < n; ++k) {
    pts[k] = f(2.0 * kPi * static_cast<double>(k) / static_cast<double>(n));
  }
  return pts;
}

}  // namespace detail

/// Counter-clockwise convex test curve; smooth kinds are sampled at `n`
/// equal parameter steps, polygons ignore `n`.
inline ClosedCurve primitive(const Primitive &kind, std::size_t n = 1024) {
  struct Visitor {
    std::size_t n;
    ClosedCurve operator()(const shape::Circle &c) const {
      detail::require_positive(c.radius, "radius");
      detail::require_samples(n, 3);
      return ClosedCurve::from_vertices(detail::sample_parametric(
          [&](double t) { return Point2{c.radius * std::cos(t), c.radius * std::sin(t)}; }, n));
    }
    ClosedCurve operator()(const shape::Ellipse &e) const {
      detail::require_positive(e.a, "semi-axis a");
      detail::require_positive(e.b, "semi-axis b");
      detail::require_samples(n, 3);
      return ClosedCurve::from_vertices(detail::sample_parametric(
          [&](double t) { return Point2{e.a * std::cos(t), e.b * std::sin(t)}; }, n));
    }
    ClosedCurve operator()(const shape::RegularPolygon &p) const {
      detail::require_positive(p.circumradius, "circumradius");
      if (p.sides < 3) {
        throw GeometryError(ErrorKind::InvalidDimension, "regular polygon needs >= 3 sides");
      }
      return ClosedCurve::from_vertices(detail::sample_parametric(
          [&](double t) {
            return Point2{p.circumradius * std::cos(t), p.circumradius * std::sin(t)};
          },
          p.sides));
    }
    ClosedCurve operator()(const shape::Triangle &t) const {
      detail::require_positive(t.a, "side a");
      detail::require_positive(t.b, "side b");
      detail::require_positive(t.c, "side c");
      if (t.a >= t.b + t.c || t.b >= t.a + t.c || t.c >= t.a + t.b) {
        throw GeometryError(ErrorKind::TriangleInequalityViolated, "sides cannot form a triangle");
      }
      const double x = (t.b * t.b + t.c * t.c - t.a * t.a) / (2.0 * t.c);
      const double y = std::sqrt(std::max(0.0, t.b * t.b - x * x));
      return ClosedCurve::from_vertices({{0.0, 0.0}, {t.c, 0.0}, {x, y}});
    }
    ClosedCurve operator()(const shape::Rectangle &r) const {
      detail::require_positive(r.a, "side a");
      detail::require_positive(r.b, "side b");
      return ClosedCurve::from_vertices({{0.0, 0.0}, {r.a, 0.0}, {r.a, r.b}, {0.0, r.b}});
    }
  };
  return std::visit(Visitor{n}, kind);
}

/// Isosceles triangle with legs of length `leg` meeting at `apex_angle`.
inline ClosedCurve isosceles_triangle(double leg, double apex_angle) {
  detail::require_positive(leg, "leg");
  if (!(apex_angle > 0.0 && apex_angle < kPi)) {
    throw GeometryError(ErrorKind::InvalidDimension, "apex angle must lie in (0, pi)");
  }
  return primitive(shape::Triangle{leg, leg, 2.0 * leg * std::sin(0.5 * apex_angle)});
}

namespace detail {

/// Arc-length parameterized half piece of the rounded triangle for h = 1:
/// the partner point runs along y = 1/2 at x = t.
inline Point2 rounded_triangle_arc(double t) {
  const double e4 = std::exp(4.0 * t);
  return {t - (e4 - 1.0) / (e4 + 1.0), -2.0 * std::exp(2.0 * t) / (e4 + 1.0) + 0.5};
}

}  // namespace detail

/// End parameter of each of the twelve half pieces (ln 3 / 4).
inline double rounded_triangle_piece_length() { return std::log(3.0) / 4.0; }

/// The rounded triangle of constant halving distance `h`. Each of the twelve
/// half pieces (six curved, six straight) gets `samples_per_piece` equal
/// arc-length steps. Vertex 0 is h * (0, -1/2); orientation is
/// counter-clockwise.
inline ClosedCurve rounded_triangle(double h, std::size_t samples_per_piece) {
  detail::require_positive(h, "h");
  detail::require_samples(samples_per_piece, 8);
  const std::size_t m = samples_per_piece;
  const double t1 = rounded_triangle_piece_length();

  // One third of the curve in clockwise order: the bottom curved piece from
  // right to left, then the straight piece continuing its end tangent.
  std::vector<Point2> third;
  third.reserve(4 * m);
  for (std::size_t k = 0; k < 2 * m; ++k) {
    const double t = t1 * (static_cast<double>(k) - static_cast<double>(m)) / static_cast<double>(m);
    third.push_back(detail::rounded_triangle_arc(t));
  }
  const Point2 corner = detail::rounded_triangle_arc(t1);
  const Point2 dir{-0.5, std::sqrt(3.0) / 2.0};  // end tangent of the curved piece
  for (std::size_t k = 0; k < 2 * m; ++k) {
    third.push_back(corner + dir * (2.0 * t1 * static_cast<double>(k) / static_cast<double>(2 * m)));
  }
  const Point2 straight_end = corner + dir * (2.0 * t1);

  // Rotation by -120 degrees about `centre` maps the start of the curved
  // piece onto the end of the straight piece: (I - R) centre = end - R start.
  const double ang = -2.0 * kPi / 3.0;
  const double c = std::cos(ang), s = std::sin(ang);
  const Point2 start = third.front();
  const Point2 rhs = straight_end - rotate(start, ang);
  const double a11 = 1.0 - c, a12 = s, a21 = -s, a22 = 1.0 - c;
  const double det = a11 * a22 - a12 * a21;
  const Point2 centre{(rhs.x * a22 - a12 * rhs.y) / det, (a11 * rhs.y - a21 * rhs.x) / det};

  std::vector<Point2> cw;
  cw.reserve(3 * third.size());
  for (int r = 0; r < 3; ++r) {
    for (Point2 p : third) cw.push_back(centre + rotate(p - centre, ang * r));
  }
  // Start at c(0) = (0, -1/2) and reverse to counter-clockwise order.
  std::rotate(cw.begin(), cw.begin() + static_cast<std::ptrdiff_t>(m), cw.end());
  std::reverse(cw.begin() + 1, cw.end());
  for (Point2 &p : cw) p *= h;
  return ClosedCurve::from_vertices(std::move(cw));
}

/// A circle with a superimposed small elliptic epicycle of frequency three:
/// c(phi) = (cos, sin)(1 + s cos 3phi) + (-sin, cos)(-(s/3) sin 3phi).
inline ClosedCurve moon_orbit(double s, std::size_t n) {
  if (!(s >= 0.0 && s <= 0.2)) {
    throw GeometryError(ErrorKind::InvalidDimension, "moon orbit needs 0 <= s <= 0.2");
  }
  detail::require_samples(n, 64);
  return ClosedCurve::from_vertices(detail::sample_parametric(
      [&](double phi) {
        const double radial = 1.0 + s * std::cos(3.0 * phi);
        const double tangential = -(s / 3.0) * std::sin(3.0 * phi);
        return Point2{std::cos(phi) * radial - std::sin(phi) * tangential,
                      std::sin(phi) * radial + std::cos(phi) * tangential};
      },
      n));
}

/// Closed-form length of the cap curve.
inline double cap_curve_length(double h, double H) {
  return 2.0 * h * (std::asin(h / H) + std::sqrt((H / h) * (H / h) - 1.0));
}

/// Shortest closed curve around the disk of radius h/2 through (+-H/2, 0):
/// two circular arcs joined by four tangent segments.
inline ClosedCurve cap_curve(double h, double H, std::size_t n) {
  detail::require_positive(h, "h");
  detail::require_positive(H, "H");
  if (H < h) throw GeometryError(ErrorKind::InvalidDimension, "cap curve needs H >= h");
  detail::require_samples(n, 8);
  const double r = 0.5 * h;
  const double tangent = std::sqrt(std::max(0.0, 0.25 * H * H - r * r));
  if (tangent <= 1e-12 * h) return primitive(shape::Circle{r}, n);

  const double phi = std::acos(h / H);
  const std::size_t arc_steps = std::max<std::size_t>(2, n / 2 - 2);
  std::vector<Point2> pts;
  pts.reserve(2 * arc_steps + 4);
  for (int side = 0; side < 2; ++side) {
    const double base = side == 0 ? 0.0 : kPi;
    pts.push_back(rotate({0.5 * H, 0.0}, base));
    for (std::size_t k = 0; k <= arc_steps; ++k) {
      const double a = base + phi + (kPi - 2.0 * phi) * static_cast<double>(k) /
                                        static_cast<double>(arc_steps);
      pts.push_back({r * std::cos(a), r * std::sin(a)});
    }
  }
  return ClosedCurve::from_vertices(std::move(pts));
}

/// Curve of constant halving distance built from a midpoint curve with speed
/// v(alpha) = amplitude * sin(3 alpha) along the chord direction.
struct ZindlerSpec {
  double h = 1.0;
  double amplitude = 0.0;
  std::size_t n = 1024;
};

inline Point2 zindler_midpoint(double amplitude, double alpha) {
  return amplitude * Point2{-std::cos(4.0 * alpha) / 8.0 - std::cos(2.0 * alpha) / 4.0,
                            std::sin(2.0 * alpha) / 4.0 - std::sin(4.0 * alpha) / 8.0};
}

inline ClosedCurve zindler_mode(const ZindlerSpec &spec) {
  if (!(spec.h > 0.0) || !std::isfinite(spec.h) || !std::isfinite(spec.amplitude) ||
      spec.n < 8 || spec.n % 2 != 0) {
    throw GeometryError(ErrorKind::InvalidSpec, "zindler spec needs h > 0 and even n >= 8");
  }
  return ClosedCurve::from_vertices(detail::sample_parametric(
      [&](double alpha) {
        return zindler_midpoint(spec.amplitude, alpha) +
               0.5 * spec.h * Point2{std::cos(alpha), std::sin(alpha)};
      },
      spec.n));
}

/// Traces the second diagonal of the square whose first diagonal is a
/// halving chord of a Zindler curve. The result has constant width.
inline ClosedCurve auerbach_width_curve(const ClosedCurve &zindler, double tol) {
  const HalvingExtrema ext = halving_extrema(zindler);
  if (ext.H - ext.h > tol) {
    throw GeometryError(ErrorKind::NotZindler,
                        "halving distance varies by " + std::to_string(ext.H - ext.h));
  }
  const std::size_t n = 2 * zindler.size();
  const double len = zindler.total_length();
  std::vector<Point2> pts(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto [p, q] = halving_pair(zindler, len * static_cast<double>(k) / static_cast<double>(n));
    pts[k] = 0.5 * (p + q) + 0.5 * perp(q - p);
  }
  return make_ccw(detail::curve_without_repeats(pts));
}

/// `k` points uniform in angle on an ellipse with random semi-axes in
/// [0.5, 2] and random rotation; always in convex position.
inline ClosedCurve random_convex_polygon(std::uint64_t seed, std::size_t k) {
  if (k < 3) throw GeometryError(ErrorKind::TooFewVertices, "random polygon needs >= 3 vertices");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> axis(0.5, 2.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  const double a = axis(rng), b = axis(rng), rot = angle(rng);
  for (;;) {
    std::vector<double> t(k);
    for (double &x : t) x = angle(rng);
    std::sort(t.begin(), t.end());
    std::vector<Point2> pts;
    for (double x : t) pts.push_back(rotate({a * std::cos(x), b * std::sin(x)}, rot));
    std::vector<Point2> hull = convex_hull(pts);
    if (hull.size() >= 3) return ClosedCurve::from_vertices(std::move(hull));
  }
}

/// Star-shaped simple polygon with `k` vertices and random radii; rejects
/// convex draws.
inline ClosedCurve random_simple_polygon(std::uint64_t seed, std::size_t k) {
  if (k < 4) throw GeometryError(ErrorKind::TooFewVertices, "non-convex polygon needs >= 4 vertices");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  std::uniform_real_distribution<double> radius(0.3, 1.0);
  for (;;) {
    std::vector<double> t(k);
    for (double &x : t) x = angle(rng);
    std::sort(t.begin(), t.end());
    if (std::adjacent_find(t.begin(), t.end()) != t.end()) continue;
    std::vector<Point2> pts;
    for (double x : t) {
      const double r = radius(rng);
      pts.push_back({r * std::cos(x), r * std::sin(x)});
    }
    ClosedCurve c = ClosedCurve::from_vertices(std::move(pts));
    const CurveClass cls = classify(c);
    if (cls.simple && !cls.convex) return c;
  }
}

}  // namespace dilation
