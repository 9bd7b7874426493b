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

#include <cmath>
#include <numbers>

namespace dilation {

inline constexpr double kPi = std::numbers::pi;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Point2 &operator+=(Point2 o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr Point2 &operator-=(Point2 o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  constexpr Point2 &operator*=(double k) {
    x *= k;
    y *= k;
    return *this;
  }

  friend constexpr Point2 operator+(Point2 a, Point2 b) { return a += b; }
  friend constexpr Point2 operator-(Point2 a, Point2 b) { return a -= b; }
  friend constexpr Point2 operator-(Point2 a) { return {-a.x, -a.y}; }
  friend constexpr Point2 operator*(Point2 a, double k) { return a *= k; }
  friend constexpr Point2 operator*(double k, Point2 a) { return a *= k; }
  friend constexpr Point2 operator/(Point2 a, double k) { return {a.x / k, a.y / k}; }
  friend constexpr bool operator==(Point2, Point2) = default;
};

constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
constexpr double norm2(Point2 a) { return dot(a, a); }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }

/// Counter-clockwise quarter turn.
constexpr Point2 perp(Point2 a) { return {-a.y, a.x}; }

inline Point2 rotate(Point2 a, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * a.x - s * a.y, s * a.x + c * a.y};
}

constexpr Point2 lerp(Point2 a, Point2 b, double f) { return a + (b - a) * f; }

inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Distance from `p` to the closed segment [a, b].
inline double point_segment_distance(Point2 p, Point2 a, Point2 b) {
  const Point2 ab = b - a;
  const double len2 = norm2(ab);
  if (len2 == 0.0) return distance(p, a);
  double f = dot(p - a, ab) / len2;
  f = f < 0.0 ? 0.0 : (f > 1.0 ? 1.0 : f);
  return distance(p, a + ab * f);
}

}  // namespace dilation
