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

// CSV polylines, deterministic JSON and SVG overlays.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dilation/bounds.hpp"
#include "dilation/closed_curve.hpp"
#include "dilation/error.hpp"
#include "dilation/graph.hpp"
#include "dilation/halving.hpp"
#include "dilation/metrics.hpp"

namespace dilation {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// ---------------------------------------------------------------- CSV

/// Reads `x,y` rows after a mandatory `x,y` header. Blank lines are skipped.
inline std::vector<Point2> parse_csv(std::istream &in) {
  std::string line;
  auto strip = [](std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
            s.end());
    return s;
  };
  bool header = false;
  std::vector<Point2> pts;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = strip(line);
    if (t.empty()) continue;
    if (!header) {
      if (t != "x,y") throw GeometryError(ErrorKind::ParseError, "CSV header must be 'x,y'");
      header = true;
      continue;
    }
    const auto comma = t.find(',');
    if (comma == std::string::npos || t.find(',', comma + 1) != std::string::npos) {
      throw GeometryError(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected x,y");
    }
    try {
      std::size_t used_x = 0, used_y = 0;
      const std::string xs = t.substr(0, comma), ys = t.substr(comma + 1);
      const double x = std::stod(xs, &used_x);
      const double y = std::stod(ys, &used_y);
      if (used_x != xs.size() || used_y != ys.size()) throw std::invalid_argument("trailing text");
      pts.push_back({x, y});
    } catch (const std::logic_error &) {
      throw GeometryError(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": bad number");
    }
    if (!is_finite(pts.back())) {
      throw GeometryError(ErrorKind::NonFinite, "line " + std::to_string(lineno));
    }
  }
  if (!header) throw GeometryError(ErrorKind::ParseError, "empty CSV");
  if (pts.size() < 3) throw GeometryError(ErrorKind::TooFewVertices, "CSV needs at least 3 rows");
  return pts;
}

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline void write_csv(std::ostream &out, std::span<const Point2> pts) {
  out << "x,y\n";
  for (Point2 p : pts) out << format_double(p.x) << ',' << format_double(p.y) << '\n';
}

// ---------------------------------------------------------------- JSON

namespace detail {

inline void dump_json(std::ostream &out, const Json &j, int indent, int depth) {
  auto newline = [&](int d) {
    out << '\n' << std::string(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      out << '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {  // std::map order: sorted keys
        if (!first) out << ',';
        first = false;
        newline(depth + 1);
        out << Json(it.key()).dump() << ": ";
        dump_json(out, it.value(), indent, depth + 1);
      }
      newline(depth);
      out << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      const bool flat = std::all_of(j.begin(), j.end(), [](const Json &e) { return e.is_primitive(); });
      out << '[';
      bool first = true;
      for (const Json &e : j) {
        if (!first) out << (flat ? ", " : ",");
        first = false;
        if (!flat) newline(depth + 1);
        dump_json(out, e, indent, depth + 1);
      }
      if (!flat) newline(depth);
      out << ']';
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      out << (std::isfinite(v) ? format_double(v) : std::string("null"));
      return;
    }
    default:
      out << j.dump();
  }
}

}  // namespace detail

/// Sorted keys, floats with 17 significant digits, two-space indent.
inline std::string dump_json(const Json &j) {
  std::ostringstream out;
  detail::dump_json(out, j, 2, 0);
  out << '\n';
  return out.str();
}

inline Json points_json(std::span<const Point2> pts) {
  Json arr = Json::array();
  for (Point2 p : pts) arr.push_back(Json::array({p.x, p.y}));
  return arr;
}

inline Json to_json(const CurveMetrics &m) {
  Json j = {{"perimeter", m.perimeter}, {"area", m.area},  {"diameter", m.diameter},
            {"h", m.h},                 {"H", m.H},        {"dilation", m.dilation},
            {"convex", m.convex}};
  if (m.width) j["width"] = *m.width;
  if (m.h_area) j["h_area"] = *m.h_area;
  return j;
}

inline Json to_json(const HalvingDecomposition &d) {
  return {{"cstar", points_json(d.cstar.vertices())},
          {"midpoint", points_json(d.midpoint)},
          {"h", d.h},
          {"s_h", d.s_h},
          {"H", d.H},
          {"s_H", d.s_H},
          {"m_length", d.m_length},
          {"samples", d.samples}};
}

inline Json to_json(const InequalityReport &r) {
  return {{"name", r.name},         {"lhs", r.lhs},     {"rhs", r.rhs},
          {"satisfied", r.satisfied}, {"slack", r.slack}, {"applicable", r.applicable}};
}

inline Json to_json(std::span<const InequalityReport> reports) {
  Json arr = Json::array();
  for (const InequalityReport &r : reports) arr.push_back(to_json(r));
  return arr;
}

inline Json to_json(const RingFit &f) {
  return {{"center", {f.center.x, f.center.y}},
          {"r_inner", f.r_inner},
          {"r_outer", f.r_outer},
          {"ratio", f.ratio},
          {"eps", f.eps},
          {"beta", f.beta},
          {"proof_ring",
           {{"center", {f.proof.center.x, f.proof.center.y}},
            {"r_inner", f.proof.r_inner},
            {"r_outer", f.proof.r_outer},
            {"ratio", f.proof.ratio()}}}};
}

inline Json to_json(const EmbeddedGraph &g) {
  Json edges = Json::array();
  for (const GraphEdge &e : g.edges()) {
    edges.push_back({{"a", e.a}, {"b", e.b}, {"polyline", points_json(e.polyline)}});
  }
  return {{"vertices", points_json(g.vertices())}, {"edges", edges}};
}

inline Json to_json(const GraphDilationResult &r) {
  return {{"delta_lower", r.delta_lower},
          {"p", {r.p.x, r.p.y}},
          {"q", {r.q.x, r.q.y}},
          {"sample_eps", r.sample_eps},
          {"samples", r.samples},
          {"sources", r.sources},
          {"attained_at_vertex_limit", r.attained_at_vertex_limit}};
}

inline Json to_json(std::span<const CoverEntry> cover) {
  Json arr = Json::array();
  for (const CoverEntry &c : cover) {
    Json e = {{"point", c.point}, {"covered", c.covered}};
    if (c.edge) {
      e["edge"] = *c.edge;
      e["offset"] = c.offset;
    }
    arr.push_back(e);
  }
  return arr;
}

inline Json error_json(const GeometryError &e) {
  return {{"schema_version", kSchemaVersion},
          {"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}}};
}

// ---------------------------------------------------------------- SVG

struct SvgScene {
  const ClosedCurve *curve = nullptr;
  const HalvingDecomposition *decomposition = nullptr;
  std::optional<Ring> ring;
};

/// C black, C* blue (translated to the centroid of C's vertices), M red,
/// extremal halving chords dashed, ring gray. 5% padding, y axis up.
inline std::string render_svg(const SvgScene &scene) {
  if (scene.curve == nullptr) throw GeometryError(ErrorKind::InvalidSpec, "nothing to render");
  const ClosedCurve &c = *scene.curve;

  Point2 centroid{0.0, 0.0};
  for (Point2 p : c.vertices()) centroid = centroid + p;
  centroid = centroid * (1.0 / static_cast<double>(c.size()));

  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  auto grow = [&](Point2 p) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  };
  for (Point2 p : c.vertices()) grow(p);
  if (scene.decomposition) {
    for (Point2 p : scene.decomposition->cstar.vertices()) grow(p + centroid);
    for (Point2 p : scene.decomposition->midpoint) grow(p);
  }
  if (scene.ring) {
    const Ring &r = *scene.ring;
    grow(r.center + Point2{r.r_outer, r.r_outer});
    grow(r.center - Point2{r.r_outer, r.r_outer});
  }
  const double span = std::max(xmax - xmin, ymax - ymin);
  const double pad = 0.05 * (span > 0.0 ? span : 1.0);
  xmin -= pad;
  ymin -= pad;
  xmax += pad;
  ymax += pad;

  auto fx = [&](double x) { return format_double(x - xmin); };
  auto fy = [&](double y) { return format_double(ymax - y); };
  auto path = [&](std::span<const Point2> pts, bool closed) {
    std::string d;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      d += (i == 0 ? "M" : " L") + fx(pts[i].x) + "," + fy(pts[i].y);
    }
    if (closed) d += " Z";
    return d;
  };
  const double stroke = 0.004 * (xmax - xmin);

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << format_double(xmax - xmin)
      << ' ' << format_double(ymax - ymin) << "\">\n";
  svg << "<g fill=\"none\" stroke-width=\"" << format_double(stroke) << "\">\n";
  if (scene.ring) {
    const Ring &r = *scene.ring;
    for (double rad : {r.r_inner, r.r_outer}) {
      svg << "<circle cx=\"" << fx(r.center.x) << "\" cy=\"" << fy(r.center.y) << "\" r=\""
          << format_double(rad) << "\" stroke=\"gray\"/>\n";
    }
  }
  svg << "<path d=\"" << path(c.vertices(), true) << "\" stroke=\"black\"/>\n";
  if (scene.decomposition) {
    const HalvingDecomposition &d = *scene.decomposition;
    std::vector<Point2> cs;
    for (Point2 p : d.cstar.vertices()) cs.push_back(p + centroid);
    svg << "<path d=\"" << path(cs, true) << "\" stroke=\"blue\"/>\n";
    svg << "<path d=\"" << path(d.midpoint, true) << "\" stroke=\"red\"/>\n";
    for (double s : {d.s_h, d.s_H}) {
      const auto [p, q] = halving_pair(c, s);
      svg << "<line x1=\"" << fx(p.x) << "\" y1=\"" << fy(p.y) << "\" x2=\"" << fx(q.x)
          << "\" y2=\"" << fy(q.y) << "\" stroke=\"black\" stroke-dasharray=\""
          << format_double(4.0 * stroke) << "\"/>\n";
    }
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace dilation
