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
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "dilation/closed_curve.hpp"
#include "dilation/halving.hpp"

namespace dilation {

/// Shoelace area. For self-overlapping paths every region is weighted by its
/// winding number. With `closed == false` the path is still closed by the
/// chord from the last point back to the first.
inline double signed_area(std::span<const Point2> path, bool closed = true) {
  (void)closed;
  if (path.size() < 3) {
    throw GeometryError(ErrorKind::TooFewVertices, "signed_area needs >= 3 points");
  }
  return detail::shoelace(path);
}

inline double area(const ClosedCurve &curve) { return std::abs(signed_area(curve.vertices())); }

/// Counter-clockwise convex hull without collinear points (Andrew's monotone
/// chain).
inline std::vector<Point2> convex_hull(std::span<const Point2> points) {
  std::vector<Point2> p(points.begin(), points.end());
  std::sort(p.begin(), p.end(), [](Point2 a, Point2 b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (p.size() < 3) return p;
  std::vector<Point2> hull(2 * p.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p[i] - hull[k - 2]) <= 0.0) --k;
    hull[k++] = p[i];
  }
  for (std::size_t i = p.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(hull[k - 1] - hull[k - 2], p[i - 1] - hull[k - 2]) <= 0.0) --k;
    hull[k++] = p[i - 1];
  }
  hull.resize(k - 1);
  return hull;
}

namespace detail {

inline double hull_diameter(std::span<const Point2> hull) {
  const std::size_t n = hull.size();
  if (n == 1) return 0.0;
  if (n == 2) return distance(hull[0], hull[1]);
  double best = 0.0;
  std::size_t j = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = hull[i], b = hull[(i + 1) % n];
    while (std::abs(cross(b - a, hull[(j + 1) % n] - a)) > std::abs(cross(b - a, hull[j] - a))) {
      j = (j + 1) % n;
    }
    best = std::max({best, distance(a, hull[j]), distance(b, hull[j])});
  }
  return best;
}

inline double hull_width(std::span<const Point2> hull) {
  const std::size_t n = hull.size();
  double best = std::numeric_limits<double>::infinity();
  std::size_t j = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = hull[i], b = hull[(i + 1) % n];
    const double len = distance(a, b);
    while (cross(b - a, hull[(j + 1) % n] - a) > cross(b - a, hull[j] - a)) j = (j + 1) % n;
    best = std::min(best, cross(b - a, hull[j] - a) / len);
  }
  return best;
}

}  // namespace detail

/// Largest distance between two points of the curve (attained at vertices).
inline double diameter(const ClosedCurve &curve) {
  return detail::hull_diameter(convex_hull(curve.vertices()));
}

/// Minimum distance between two parallel lines enclosing a convex curve.
inline double width(const ClosedCurve &curve) {
  if (!classify(curve).convex) {
    throw GeometryError(ErrorKind::NotConvex, "width is defined for convex curves only");
  }
  return detail::hull_width(convex_hull(curve.vertices()));
}

struct Circle {
  Point2 center;
  double radius = 0.0;
};

namespace detail {

inline Circle circle_from(Point2 a, Point2 b) {
  const Point2 c = 0.5 * (a + b);
  return {c, distance(a, c)};
}

inline Circle circle_from(Point2 a, Point2 b, Point2 c) {
  const Point2 ab = b - a, ac = c - a;
  const double d = 2.0 * cross(ab, ac);
  if (d == 0.0) {
    // Collinear: the circle over the two farthest points.
    Circle best = circle_from(a, b);
    for (Circle cand : {circle_from(a, c), circle_from(b, c)}) {
      if (cand.radius > best.radius) best = cand;
    }
    return best;
  }
  const Point2 off{(ac.y * norm2(ab) - ab.y * norm2(ac)) / d,
                   (ab.x * norm2(ac) - ac.x * norm2(ab)) / d};
  return {a + off, norm(off)};
}

inline bool contains(const Circle &c, Point2 p) {
  return distance(c.center, p) <= c.radius * (1.0 + 1e-12) + 1e-300;
}

}  // namespace detail

/// Smallest enclosing circle (Welzl, iterative form). The input order is
/// shuffled with a fixed seed so the result is deterministic.
inline Circle min_enclosing_circle(std::span<const Point2> points) {
  if (points.empty()) {
    throw GeometryError(ErrorKind::TooFewVertices, "min_enclosing_circle needs >= 1 point");
  }
  std::vector<Point2> p(points.begin(), points.end());
  std::mt19937_64 rng(0x5eed);
  std::shuffle(p.begin(), p.end(), rng);
  Circle c{p[0], 0.0};
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (detail::contains(c, p[i])) continue;
    c = {p[i], 0.0};
    for (std::size_t j = 0; j < i; ++j) {
      if (detail::contains(c, p[j])) continue;
      c = detail::circle_from(p[i], p[j]);
      for (std::size_t k = 0; k < j; ++k) {
        if (!detail::contains(c, p[k])) c = detail::circle_from(p[i], p[j], p[k]);
      }
    }
  }
  return c;
}

/// Ratio of arc distance to Euclidean distance between two curve points.
inline double detour(const ClosedCurve &curve, double s1, double s2) {
  const Point2 p = curve.point_at(s1), q = curve.point_at(s2);
  const double d = distance(p, q);
  if (d == 0.0) {
    throw GeometryError(ErrorKind::CoincidentPoints, "detour between coincident points");
  }
  return arc_distance(curve, s1, s2) / d;
}

struct DilationResult {
  double delta = 1.0;
  double s1 = 0.0;
  double s2 = 0.0;
  bool attained_at_vertex_limit = false;
};

namespace detail {

inline double safe_detour(const ClosedCurve &curve, double s1, double s2) {
  const double d = distance(curve.point_at(s1), curve.point_at(s2));
  const double arc = arc_distance(curve, s1, s2);
  if (!(d > 0.0) || !(arc > 0.0)) return 0.0;
  return arc / d;
}

/// Golden-section maximization of f on [lo, hi].
template <class F>
double golden_max(F &&f, double lo, double hi, int evals) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a), x2 = a + kInvPhi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < evals; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    }
  }
  return f1 >= f2 ? x1 : x2;
}

/// Detour limit for two points approaching a vertex from both sides.
inline double vertex_limit(Point2 prev, Point2 at, Point2 next) {
  const Point2 a = prev - at, b = next - at;
  const double theta = std::atan2(std::abs(cross(a, b)), dot(a, b));
  const double s = std::sin(0.5 * theta);
  return s > 0.0 ? 1.0 / s : std::numeric_limits<double>::infinity();
}

}  // namespace detail

inline constexpr std::size_t kMinDilationSamples = 64;

/// Brute-force dilation of a simple curve: every pair of `n` arc-length
/// samples, local refinement of the best pairs, vertex limits and the
/// minimum-halving pair. The result is a lower bound that converges as n
/// grows.
inline DilationResult dilation_sampled(const ClosedCurve &curve, std::size_t n) {
  if (n < kMinDilationSamples) {
    throw GeometryError(ErrorKind::InvalidSampleCount,
                        "dilation needs n >= 64, got " + std::to_string(n));
  }
  const double len = curve.total_length();
  const double step = len / static_cast<double>(n);
  std::vector<Point2> pts(n);
  for (std::size_t i = 0; i < n; ++i) pts[i] = curve.point_at(step * static_cast<double>(i));

  struct Cand {
    double value;
    std::size_t i, j;
  };
  constexpr std::size_t kKeep = 8;
  std::vector<Cand> top;
  auto better = [](const Cand &a, const Cand &b) {
    if (a.value != b.value) return a.value > b.value;
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t k = j - i;
      const double arc = step * static_cast<double>(std::min(k, n - k));
      const double d = distance(pts[i], pts[j]);
      if (!(d > 0.0)) continue;
      const Cand c{arc / d, i, j};
      if (top.size() < kKeep) {
        top.push_back(c);
        std::sort(top.begin(), top.end(), better);
      } else if (better(c, top.back())) {
        top.back() = c;
        std::sort(top.begin(), top.end(), better);
      }
    }
  }

  DilationResult best;
  best.delta = 0.0;
  auto consider = [&](double value, double s1, double s2, bool vertex) {
    if (value > best.delta) {
      best.delta = value;
      best.s1 = curve.normalize(s1);
      best.s2 = curve.normalize(s2);
      best.attained_at_vertex_limit = vertex;
    }
  };

  for (const Cand &c : top) {
    double s1 = step * static_cast<double>(c.i);
    double s2 = step * static_cast<double>(c.j);
    consider(c.value, s1, s2, false);
    for (int it = 0; it < 30; ++it) {
      s1 = detail::golden_max([&](double s) { return detail::safe_detour(curve, s, s2); },
                              s1 - step, s1 + step, 40);
      s2 = detail::golden_max([&](double s) { return detail::safe_detour(curve, s1, s); },
                              s2 - step, s2 + step, 40);
    }
    consider(detail::safe_detour(curve, s1, s2), s1, s2, false);
  }

  const HalvingExtrema ext = halving_extrema(curve);
  consider(len / (2.0 * ext.h), ext.s_h, ext.s_h + 0.5 * len, false);

  const auto cum = curve.cum_length();
  for (std::size_t v = 0; v < curve.size(); ++v) {
    const double lim = detail::vertex_limit(curve.vertex(v + curve.size() - 1), curve.vertex(v),
                                            curve.vertex(v + 1));
    if (lim >= best.delta * (1.0 - 1e-12)) {
      best.delta = std::max(best.delta, lim);
      best.s1 = best.s2 = cum[v];
      best.attained_at_vertex_limit = true;
    }
  }
  return best;
}

/// Geometric dilation. Convex curves use the exact halving-pair formula
/// L / (2h); other simple curves fall back to `dilation_sampled`.
inline DilationResult dilation(const ClosedCurve &curve, std::size_t n) {
  if (n < kMinDilationSamples) {
    throw GeometryError(ErrorKind::InvalidSampleCount,
                        "dilation needs n >= 64, got " + std::to_string(n));
  }
  const CurveClass cls = classify(curve);
  if (!cls.simple) throw GeometryError(ErrorKind::NotSimple, "dilation of a non-simple curve");
  if (cls.convex) {
    const HalvingExtrema ext = halving_extrema(curve);
    const double len = curve.total_length();
    return {len / (2.0 * ext.h), ext.s_h, curve.normalize(ext.s_h + 0.5 * len), false};
  }
  return dilation_sampled(curve, n);
}

namespace detail {

/// O(1) area of the region cut off by the chord between two parameters, the
/// boundary running forward from `sa` to `sb` (sb in [sa, sa + L]).
class ChordAreaTable {
 public:
  explicit ChordAreaTable(const ClosedCurve &curve) : curve_(curve) {
    const std::size_t n = curve.size();
    prefix_.resize(2 * n + 1);
    prefix_[0] = 0.0;
    for (std::size_t k = 0; k < 2 * n; ++k) {
      prefix_[k + 1] = prefix_[k] + cross(curve.vertex(k), curve.vertex(k + 1));
    }
  }

  double area(double sa, double sb) const {
    const std::size_t n = curve_.size();
    const double len = curve_.total_length();
    const double a = curve_.normalize(sa);
    double span = sb - sa;
    if (span <= 0.0) return 0.0;
    if (span >= len) span = len;
    const std::size_t ia = curve_.edge_at(a);
    const double b_unwrapped = a + span;
    std::size_t ib = curve_.edge_at(b_unwrapped);
    if (b_unwrapped >= len) ib += n;
    if (ib < ia) ib = ia;
    const Point2 pa = curve_.point_at(a);
    const Point2 pb = curve_.point_at(b_unwrapped);
    if (ia == ib) return 0.0;
    double acc = cross(pa, curve_.vertex(ia + 1));
    acc += prefix_[ib] - prefix_[ia + 1];
    acc += cross(curve_.vertex(ib), pb);
    acc += cross(pb, pa);
    return 0.5 * acc;
  }

 private:
  const ClosedCurve &curve_;
  std::vector<double> prefix_;
};

/// Parameter of the point q such that the chord from `sp` halves the area.
inline double area_halving_partner(const ClosedCurve &curve, const ChordAreaTable &table,
                                   double total_area, double sp) {
  const double len = curve.total_length();
  double lo = sp, hi = sp + len;
  const double target = 0.5 * total_area;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double a = table.area(sp, mid);
    if (std::abs(a - target) <= 1e-12 * total_area) return mid;
    if (a < target) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

/// Minimum length of a chord that bisects the enclosed area of a convex
/// curve.
inline double min_area_halving_distance(const ClosedCurve &in) {
  if (!classify(in).convex) {
    throw GeometryError(ErrorKind::NotConvex, "area-halving distance needs a convex curve");
  }
  const ClosedCurve curve = make_ccw(in);
  const double total = area(curve);
  const detail::ChordAreaTable table(curve);
  const double len = curve.total_length();
  auto chord = [&](double sp) {
    const double sq = detail::area_halving_partner(curve, table, total, sp);
    return distance(curve.point_at(sp), curve.point_at(sq));
  };

  const std::size_t m = std::max<std::size_t>(2048, 2 * curve.size());
  const double step = len / static_cast<double>(m);
  // Chords from s and from the partner of s coincide, half a turn suffices
  // in principle; scanning the whole loop keeps the search symmetric.
  std::vector<std::pair<double, double>> scan(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double s = step * static_cast<double>(k);
    scan[k] = {chord(s), s};
  }
  std::sort(scan.begin(), scan.end());
  double best = scan.front().first;
  for (std::size_t c = 0; c < std::min<std::size_t>(4, m); ++c) {
    const double s0 = scan[c].second;
    const double s = detail::golden_max([&](double x) { return -chord(x); }, s0 - step,
                                        s0 + step, 60);
    best = std::min({best, chord(s), scan[c].first});
  }
  return best;
}

/// (C + (-C)) / 2 for a convex polygon, centred at the origin.
inline ClosedCurve central_symmetrization(const ClosedCurve &in) {
  if (!classify(in).convex) {
    throw GeometryError(ErrorKind::NotConvex, "central symmetrization needs a convex curve");
  }
  const ClosedCurve curve = make_ccw(in);
  std::vector<Point2> edges;
  edges.reserve(2 * curve.size());
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const Point2 e = 0.5 * (curve.vertex(i + 1) - curve.vertex(i));
    edges.push_back(e);
    edges.push_back(-e);
  }
  std::stable_sort(edges.begin(), edges.end(), [](Point2 a, Point2 b) {
    return std::atan2(a.y, a.x) < std::atan2(b.y, b.x);
  });
  auto parallel = [](Point2 a, Point2 b) {
    return dot(a, b) > 0.0 && std::abs(cross(a, b)) <= kCollinearTolerance * norm(a) * norm(b);
  };
  std::vector<Point2> merged;
  for (Point2 e : edges) {
    if (!merged.empty() && parallel(merged.back(), e)) merged.back() += e;
    else merged.push_back(e);
  }
  if (merged.size() > 1 && parallel(merged.back(), merged.front())) {
    merged.front() += merged.back();
    merged.pop_back();
  }
  std::vector<Point2> verts;
  verts.reserve(merged.size());
  Point2 cur{0.0, 0.0};
  for (Point2 e : merged) {
    verts.push_back(cur);
    cur += e;
  }
  Point2 centre{0.0, 0.0};
  for (Point2 v : verts) centre += v;
  centre = centre / static_cast<double>(verts.size());
  for (Point2 &v : verts) v -= centre;
  return ClosedCurve::from_vertices(std::move(verts));
}

struct CurveMetrics {
  double perimeter = 0.0;
  double area = 0.0;
  double diameter = 0.0;
  std::optional<double> width;
  double h = 0.0;
  double H = 0.0;
  std::optional<double> h_area;
  double dilation = 0.0;
  bool convex = false;
};

inline CurveMetrics compute_metrics(const ClosedCurve &curve, std::size_t dilation_samples = 512) {
  CurveMetrics m;
  const CurveClass cls = classify(curve);
  const HalvingExtrema ext = halving_extrema(curve);
  m.perimeter = curve.total_length();
  m.area = area(curve);
  m.diameter = diameter(curve);
  m.h = ext.h;
  m.H = ext.H;
  m.convex = cls.convex;
  if (cls.convex) {
    m.width = width(curve);
    m.h_area = min_area_halving_distance(curve);
  }
  m.dilation = dilation(curve, dilation_samples).delta;
  return m;
}

}  // namespace dilation
