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
#include <span>
#include <string>
#include <vector>

#include "dilation/closed_curve.hpp"
#include "dilation/generators.hpp"
#include "dilation/halving.hpp"
#include "dilation/metrics.hpp"

namespace dilation {

/// One evaluated inequality. `slack >= 0` means satisfied; inapplicable items
/// carry zero slack and `applicable == false`.
struct InequalityReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = true;
  double slack = 0.0;
  bool applicable = true;
};

namespace detail {

inline double report_tolerance(double lhs, double rhs) {
  return 1e-9 * std::max({std::abs(lhs), std::abs(rhs), 1.0});
}

inline InequalityReport finish(InequalityReport r) {
  r.satisfied = r.slack >= -report_tolerance(r.lhs, r.rhs);
  return r;
}

/// lhs <= rhs
inline InequalityReport at_most(std::string name, double lhs, double rhs) {
  return finish({std::move(name), lhs, rhs, true, rhs - lhs, true});
}

/// lhs >= rhs
inline InequalityReport at_least(std::string name, double lhs, double rhs) {
  return finish({std::move(name), lhs, rhs, true, lhs - rhs, true});
}

/// |lhs - rhs| <= band
inline InequalityReport close_to(std::string name, double lhs, double rhs, double band) {
  return finish({std::move(name), lhs, rhs, true, band - std::abs(lhs - rhs), true});
}

inline InequalityReport not_applicable(std::string name) {
  return {std::move(name), 0.0, 0.0, true, 0.0, false};
}

/// arcsin(1/x) + sqrt(x^2 - 1), increasing on [1, inf) from pi/2.
inline double cap_bound(double ratio) {
  return std::asin(1.0 / ratio) + std::sqrt(std::max(0.0, ratio * ratio - 1.0));
}

/// Maximum of |c(s) + c(s + L/2) - 2 m(0)|; piecewise linear in s, so the
/// breakpoints suffice.
inline double symmetry_defect(const ClosedCurve &curve) {
  const auto pieces = halving_pieces(curve);
  const Point2 centre = 0.5 * (pieces.front().near_point + pieces.front().far_point);
  double worst = 0.0;
  for (const HalvingPiece &p : pieces) {
    const double span = p.end - p.start;
    const Point2 a = p.near_point + p.far_point - 2.0 * centre;
    const Point2 b = a + (p.u + p.w) * span;
    worst = std::max({worst, norm(a), norm(b)});
  }
  return worst;
}

inline std::size_t even_samples(const ClosedCurve &curve, std::size_t floor) {
  std::size_t n = std::max(floor, 2 * curve.size());
  return n + (n % 2);
}

}  // namespace detail

/// Relative threshold for treating a curve as centrally symmetric.
inline constexpr double kSymmetryTolerance = 1e-9;
/// Halving-distance variation (relative to h) under which a curve counts as
/// a curve of constant halving distance.
inline constexpr double kZindlerTolerance = 1e-3;
/// Dilation excess below which the midpoint-length bound applies.
inline constexpr double kSmallEpsilon = 1e-4;

struct CheckOptions {
  std::size_t dilation_samples = 512;
  std::size_t midpoint_samples = 4096;
};

/// Evaluates every inequality and identity on `curve`; each item reports
/// whether it applies (convexity, vertex count, symmetry, near-constant
/// halving distance).
inline std::vector<InequalityReport> check_all(const ClosedCurve &curve,
                                               const CheckOptions &opt = {}) {
  const CurveClass cls = classify(curve);
  if (!cls.simple) throw GeometryError(ErrorKind::NotSimple, "check_all needs a simple curve");

  const double len = curve.total_length();
  const HalvingExtrema ext = halving_extrema(curve);
  const double h = ext.h, H = ext.H;
  const TransformLengths tl = exact_transform_lengths(curve);
  const double delta = dilation(curve, opt.dilation_samples).delta;
  const double eps = 2.0 * delta / kPi - 1.0;
  const double A = area(curve);
  const double D = diameter(curve);
  const std::size_t corners = corner_indices(curve).size();

  std::vector<InequalityReport> out;
  using namespace detail;
  out.push_back(at_least("dilation_vs_halving", delta, len / (2.0 * h)));
  out.push_back(at_most("pythagorean_lengths",
                        4.0 * tl.midpoint_length * tl.midpoint_length +
                            tl.cstar_length * tl.cstar_length,
                        len * len));
  out.push_back(at_most("cstar_shorter", tl.cstar_length, len));
  out.push_back(at_least("arcsin_bound", delta, cap_bound(H / h)));
  out.push_back(at_most("enclosing_circle", min_enclosing_circle(curve.vertices()).radius,
                        len / 4.0));
  if (eps >= 0.0 && eps <= kSmallEpsilon) {
    out.push_back(at_most("midpoint_length_bound", tl.midpoint_length,
                          0.5 * kPi * h * std::sqrt(2.0 * eps + eps * eps)));
  } else {
    out.push_back(not_applicable("midpoint_length_bound"));
  }

  if (cls.convex) {
    const double w = width(curve);
    const double r = D / w;
    out.push_back(at_least("kubota_area_dw", A, D * w / 2.0));
    out.push_back(at_most("area_dh", A, D * h));
    out.push_back(at_least("h_vs_w", h, w / 2.0));
    out.push_back(at_most("h_le_w", h, w));
    out.push_back(at_most("kubota_length", len,
                          2.0 * D * std::asin(w / D) + 2.0 * std::sqrt(std::max(0.0, D * D - w * w))));
    out.push_back(at_most("upper_dilation_dw", delta,
                          2.0 * (r * std::asin(1.0 / r) + std::sqrt(std::max(0.0, r * r - 1.0)))));
    out.push_back(at_most("simple_upper_bounds", delta, std::min(kPi * r, 2.0 * (r + 1.0))));
    out.push_back(at_least("lower_dilation_dw", delta, cap_bound(r)));
  } else {
    for (const char *name : {"kubota_area_dw", "area_dh", "h_vs_w", "h_le_w", "kubota_length",
                             "upper_dilation_dw", "simple_upper_bounds", "lower_dilation_dw"}) {
      out.push_back(not_applicable(name));
    }
  }

  if (corners == 3) out.push_back(at_least("triangle_bound", delta, 2.0));
  else out.push_back(not_applicable("triangle_bound"));

  const bool symmetric = symmetry_defect(curve) <= kSymmetryTolerance * len;
  if (cls.convex && symmetric) {
    const double n = static_cast<double>(corners);
    out.push_back(at_least("sym_polygon_bound", delta, 0.5 * n * std::tan(kPi / n)));
  } else {
    out.push_back(not_applicable("sym_polygon_bound"));
  }

  {
    const double n = static_cast<double>(corners);
    out.push_back(at_least("polygon_bound", delta, n * std::tan(kPi / (2.0 * n))));
  }

  if (cls.convex && H - h <= kZindlerTolerance * h) {
    const HalvingDecomposition dec = decompose(curve, even_samples(curve, opt.midpoint_samples));
    const double am = std::abs(signed_area(dec.midpoint));
    const double hm = 0.5 * (h + H);
    const double disk = 0.25 * kPi * hm * hm;
    out.push_back(close_to("zindler_area_identity", A + 2.0 * am, disk, kZindlerTolerance * disk));
    out.push_back(at_most("zindler_area_upper", A, disk));
  } else {
    out.push_back(not_applicable("zindler_area_identity"));
    out.push_back(not_applicable("zindler_area_upper"));
  }
  return out;
}

inline bool all_applicable_satisfied(std::span<const InequalityReport> reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const InequalityReport &r) { return !r.applicable || r.satisfied; });
}

struct Ring {
  Point2 center;
  double r_inner = 0.0;
  double r_outer = 0.0;
  double ratio() const { return r_outer / r_inner; }
};

/// Thinnest concentric ring found around the curve. `proof` is centred on the
/// smallest circle enclosing the midpoint curve; the primary fields come from
/// a local search started there and are never worse.
struct RingFit {
  Point2 center;
  double r_inner = 0.0;
  double r_outer = 0.0;
  double ratio = 0.0;
  double eps = 0.0;   // dilation = (1 + eps) pi / 2
  double beta = 0.0;  // H / h - 1
  Ring proof;
};

/// Exact radii of the thinnest ring centred at `z` containing the polyline.
inline Ring ring_around(const ClosedCurve &curve, Point2 z) {
  Ring r{z, std::numeric_limits<double>::infinity(), 0.0};
  for (std::size_t i = 0; i < curve.size(); ++i) {
    r.r_outer = std::max(r.r_outer, distance(z, curve.vertex(i)));
    r.r_inner = std::min(r.r_inner, point_segment_distance(z, curve.vertex(i), curve.vertex(i + 1)));
  }
  return r;
}

struct RingOptions {
  std::size_t dilation_samples = 512;
  std::size_t midpoint_samples = 2048;
  int refine_steps = 50;
};

inline RingFit ring_fit(const ClosedCurve &curve, const RingOptions &opt = {}) {
  const CurveClass cls = classify(curve);
  if (!cls.simple) throw GeometryError(ErrorKind::NotSimple, "ring_fit needs a simple curve");
  const HalvingDecomposition dec =
      decompose(curve, detail::even_samples(curve, opt.midpoint_samples));
  const double m_len = exact_transform_lengths(curve).midpoint_length;
  if (!(0.5 * dec.h > 0.25 * m_len)) {
    throw GeometryError(ErrorKind::DegenerateRing, "h/2 <= |M|/4, the enclosing ring degenerates");
  }

  RingFit fit;
  fit.proof = ring_around(curve, min_enclosing_circle(dec.midpoint).center);
  if (!(fit.proof.r_inner > 0.0)) {
    throw GeometryError(ErrorKind::DegenerateRing, "ring centre lies on the curve");
  }

  // Compass search on the ring ratio.
  Ring best = fit.proof;
  double step = 0.05 * best.r_inner;
  constexpr std::array<Point2, 8> kDirs{{{1, 0}, {-1, 0}, {0, 1}, {0, -1},
                                         {0.7071067811865476, 0.7071067811865476},
                                         {-0.7071067811865476, 0.7071067811865476},
                                         {0.7071067811865476, -0.7071067811865476},
                                         {-0.7071067811865476, -0.7071067811865476}}};
  for (int it = 0; it < opt.refine_steps; ++it) {
    bool moved = false;
    for (Point2 d : kDirs) {
      const Ring cand = ring_around(curve, best.center + d * step);
      if (cand.r_inner > 0.0 && cand.ratio() < best.ratio()) {
        best = cand;
        moved = true;
      }
    }
    if (!moved) step *= 0.5;
  }

  fit.center = best.center;
  fit.r_inner = best.r_inner;
  fit.r_outer = best.r_outer;
  fit.ratio = best.ratio();
  fit.eps = 2.0 * dilation(curve, opt.dilation_samples).delta / kPi - 1.0;
  fit.beta = dec.H / dec.h - 1.0;
  return fit;
}

struct StabilityRow {
  double s = 0.0;
  double eps = 0.0;
  double ring_ratio = 0.0;
  double predicted = 0.0;  // 1 + 1.5 sqrt(eps)
};

/// Dilation excess and ring ratio of the moon orbit for each `s`.
inline std::vector<StabilityRow> stability_table(std::vector<double> s_values, std::size_t n) {
  for (double s : s_values) {
    if (!(s > 0.0 && s <= 0.2)) {
      throw GeometryError(ErrorKind::InvalidDimension, "stability table needs s in (0, 0.2]");
    }
  }
  std::sort(s_values.begin(), s_values.end());
  std::vector<StabilityRow> rows;
  rows.reserve(s_values.size());
  for (double s : s_values) {
    const ClosedCurve c = moon_orbit(s, n);
    const RingFit fit = ring_fit(c);
    rows.push_back({s, fit.eps, fit.ratio, 1.0 + 1.5 * std::sqrt(fit.eps)});
  }
  return rows;
}

struct BisectionCheck {
  double max_area_imbalance = 0.0;
  double max_length_mismatch = 0.0;
};

/// Compares halving chords with area bisectors: the area imbalance of each
/// of `n` halving chords (relative to the total area) and the relative
/// spread of their lengths.
inline BisectionCheck zindler_bisection_check(const ClosedCurve &in, std::size_t n) {
  if (!classify(in).convex) {
    throw GeometryError(ErrorKind::NotConvex, "bisection check needs a convex curve");
  }
  if (n < 1) throw GeometryError(ErrorKind::InvalidSampleCount, "need at least one chord");
  const ClosedCurve curve = make_ccw(in);
  const double len = curve.total_length();
  const double A = area(curve);
  const detail::ChordAreaTable table(curve);
  BisectionCheck out;
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0, sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double s = 0.5 * len * static_cast<double>(k) / static_cast<double>(n);
    const double side = table.area(s, s + 0.5 * len);
    out.max_area_imbalance = std::max(out.max_area_imbalance, std::abs(2.0 * side - A) / A);
    const auto [p, q] = halving_pair(curve, s);
    const double d = distance(p, q);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
    sum += d;
  }
  out.max_length_mismatch = (hi - lo) / (sum / static_cast<double>(n));
  return out;
}

}  // namespace dilation
