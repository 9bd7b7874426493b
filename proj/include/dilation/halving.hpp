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

// Halving pairs split a closed curve into two arcs of equal length. On a
// polyline both ends of a halving chord move linearly between breakpoints,
// which makes the minimum and maximum halving distance exact.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "dilation/closed_curve.hpp"

namespace dilation {

inline std::pair<Point2, Point2> halving_pair(const ClosedCurve &curve, double s) {
  return {curve.point_at(s), curve.point_at(s + 0.5 * curve.total_length())};
}

struct HalvingExtrema {
  double h = 0.0;
  double s_h = 0.0;
  double H = 0.0;
  double s_H = 0.0;
};

/// One linear piece of the halving motion: on [start, end) the chord ends
/// move with unit velocities `u` (near end) and `w` (far end).
struct HalvingPiece {
  double start = 0.0;
  double end = 0.0;
  Point2 near_point;  // c(start)
  Point2 far_point;   // c(start + L/2)
  Point2 u;
  Point2 w;
};

/// Splits [0, L/2) at every parameter where either end of the halving chord
/// sits on a vertex.
inline std::vector<HalvingPiece> halving_pieces(const ClosedCurve &curve) {
  const double len = curve.total_length();
  const double half = 0.5 * len;
  const auto cum = curve.cum_length();

  std::vector<double> breaks;
  breaks.reserve(curve.size() + 1);
  for (std::size_t k = 0; k < curve.size(); ++k) {
    double b = cum[k] >= half ? cum[k] - half : cum[k];
    if (b >= half) b = 0.0;
    breaks.push_back(b);
  }
  std::sort(breaks.begin(), breaks.end());
  // Merge breakpoints closer than rounding noise.
  std::vector<double> uniq;
  uniq.reserve(breaks.size() + 1);
  const double merge_tol = 1e-14 * len;
  for (double b : breaks) {
    if (uniq.empty() || b - uniq.back() > merge_tol) uniq.push_back(b);
  }
  uniq.push_back(half);

  std::vector<HalvingPiece> pieces;
  pieces.reserve(uniq.size());
  for (std::size_t k = 0; k + 1 < uniq.size(); ++k) {
    const double a = uniq[k], b = uniq[k + 1];
    const double mid = 0.5 * (a + b);
    const std::size_t i = curve.edge_at(mid);
    const std::size_t j = curve.edge_at(mid + half);
    HalvingPiece p;
    p.start = a;
    p.end = b;
    p.u = curve.edge_direction(i);
    p.w = curve.edge_direction(j);
    p.near_point = curve.vertex(i) + p.u * (a - cum[i]);
    // The far parameter a + L/2 may wrap past L.
    double far_s = a + half;
    if (far_s >= len) far_s -= len;
    double off = far_s - cum[j];
    if (off < -0.5 * len) off += len;
    if (off > 0.5 * len) off -= len;
    p.far_point = curve.vertex(j) + p.w * off;
    pieces.push_back(p);
  }
  return pieces;
}

/// Exact minimum (h) and maximum (H) halving distance of the polyline, with
/// the smallest parameters attaining them.
inline HalvingExtrema halving_extrema(const ClosedCurve &curve) {
  HalvingExtrema out;
  double best_min = std::numeric_limits<double>::infinity();
  double best_max = -1.0;
  for (const HalvingPiece &p : halving_pieces(curve)) {
    const Point2 d0 = p.far_point - p.near_point;
    const Point2 dv = p.w - p.u;
    const double span = p.end - p.start;
    auto chord2 = [&](double tau) { return norm2(d0 + dv * tau); };

    // |d(tau)|^2 is a convex quadratic: maximum at an end, minimum at the
    // clamped vertex of the parabola.
    const double a2 = norm2(dv);
    double tau_min = 0.0;
    if (a2 > 0.0) tau_min = std::clamp(-dot(d0, dv) / a2, 0.0, span);
    const double vmin = chord2(tau_min);
    if (vmin < best_min) {
      best_min = vmin;
      out.s_h = p.start + tau_min;
    }
    const double v0 = chord2(0.0), v1 = chord2(span);
    if (v0 > best_max) {
      best_max = v0;
      out.s_H = p.start;
    }
    if (v1 > best_max) {
      best_max = v1;
      out.s_H = p.end;
    }
  }
  out.h = std::sqrt(best_min);
  out.H = std::sqrt(best_max);
  const double half = 0.5 * curve.total_length();
  if (out.s_H >= half) out.s_H -= half;
  return out;
}

/// Lengths of the halving-pair transform C* and of one traversal of the
/// midpoint curve M, computed exactly from the linear pieces.
struct TransformLengths {
  double cstar_length = 0.0;
  double midpoint_length = 0.0;
};

inline TransformLengths exact_transform_lengths(const ClosedCurve &curve) {
  TransformLengths out;
  for (const HalvingPiece &p : halving_pieces(curve)) {
    const double span = p.end - p.start;
    out.cstar_length += norm(p.u - p.w) * span;  // both halves of C*
    out.midpoint_length += 0.5 * norm(p.u + p.w) * span;
  }
  return out;
}

/// Vertices of C* for a polyline: c*(t) is linear between halving
/// breakpoints, so its corners are the breakpoint images and their negatives.
inline std::vector<Point2> exact_cstar_vertices(const ClosedCurve &curve) {
  const auto pieces = halving_pieces(curve);
  std::vector<Point2> out;
  out.reserve(2 * pieces.size());
  for (const HalvingPiece &p : pieces) out.push_back(0.5 * (p.near_point - p.far_point));
  for (const HalvingPiece &p : pieces) out.push_back(0.5 * (p.far_point - p.near_point));
  return out;
}

/// The halving-pair transform C*, the midpoint curve M and h/H.
struct HalvingDecomposition {
  /// c*(t_k) = (c(t_k) - c(t_k + L/2)) / 2 for t_k = k L / n, all k < n.
  std::vector<Point2> cstar_samples;
  /// Same samples as a curve, consecutive duplicates dropped.
  ClosedCurve cstar;
  /// m(t_k) = (c(t_k) + c(t_k + L/2)) / 2 for t_k in [0, L/2).
  std::vector<Point2> midpoint;
  double h = 0.0;
  double s_h = 0.0;
  double H = 0.0;
  double s_H = 0.0;
  /// Polyline length of one closed traversal of `midpoint`.
  double m_length = 0.0;
  std::size_t samples = 0;
};

namespace detail {

inline double polyline_length(std::span<const Point2> pts, bool closed) {
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) acc += distance(pts[i], pts[i + 1]);
  if (closed && pts.size() > 1) acc += distance(pts.back(), pts.front());
  return acc;
}

inline ClosedCurve curve_without_repeats(std::span<const Point2> pts) {
  std::vector<Point2> out;
  out.reserve(pts.size());
  for (Point2 p : pts) {
    if (out.empty() || !(p == out.back())) out.push_back(p);
  }
  while (out.size() > 1 && out.back() == out.front()) out.pop_back();
  return ClosedCurve::from_vertices(std::move(out));
}

}  // namespace detail

inline HalvingDecomposition decompose(const ClosedCurve &curve, std::size_t n) {
  if (n < 8 || n % 2 != 0) {
    throw GeometryError(ErrorKind::InvalidSampleCount,
                        "decompose needs an even sample count >= 8, got " + std::to_string(n));
  }
  const double len = curve.total_length();
  const double step = len / static_cast<double>(n);
  std::vector<Point2> samples(n);
  for (std::size_t k = 0; k < n; ++k) samples[k] = curve.point_at(step * static_cast<double>(k));

  std::vector<Point2> cstar(n);
  std::vector<Point2> mid(n / 2);
  for (std::size_t k = 0; k < n; ++k) {
    const Point2 p = samples[k];
    const Point2 q = samples[(k + n / 2) % n];
    cstar[k] = 0.5 * (p - q);
    if (k < n / 2) mid[k] = 0.5 * (p + q);
  }

  const HalvingExtrema ext = halving_extrema(curve);
  HalvingDecomposition out{
      .cstar_samples = cstar,
      .cstar = detail::curve_without_repeats(cstar),
      .midpoint = std::move(mid),
      .h = ext.h,
      .s_h = ext.s_h,
      .H = ext.H,
      .s_H = ext.s_H,
      .m_length = 0.0,
      .samples = n,
  };
  out.m_length = detail::polyline_length(out.midpoint, true);
  return out;
}

}  // namespace dilation
