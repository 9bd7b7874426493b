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

// Planar graphs whose edges are polylines, with sampled geometric dilation
// and hexagonal grids.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <span>
#include <thread>
#include <utility>
#include <vector>

#include "dilation/error.hpp"
#include "dilation/metrics.hpp"
#include "dilation/point.hpp"

namespace dilation {

struct GraphEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  /// Includes both endpoints; a closed loop has a == b.
  std::vector<Point2> polyline;
  double length = 0.0;
};

class EmbeddedGraph {
 public:
  std::size_t add_vertex(Point2 p) {
    if (!is_finite(p)) throw GeometryError(ErrorKind::NonFinite, "graph vertex");
    vertices_.push_back(p);
    return vertices_.size() - 1;
  }

  /// Straight edge between two existing vertices.
  std::size_t add_edge(std::size_t a, std::size_t b) {
    check_vertex(a);
    check_vertex(b);
    return add_edge(a, b, {vertices_[a], vertices_[b]});
  }

  std::size_t add_edge(std::size_t a, std::size_t b, std::vector<Point2> polyline) {
    check_vertex(a);
    check_vertex(b);
    if (polyline.size() < 2) {
      throw GeometryError(ErrorKind::TooFewVertices, "edge polyline needs two points");
    }
    if (!(polyline.front() == vertices_[a]) || !(polyline.back() == vertices_[b])) {
      throw GeometryError(ErrorKind::InvalidLocator, "edge polyline must start and end at its vertices");
    }
    if (a == b && polyline.size() < 4) {
      throw GeometryError(ErrorKind::DegenerateEdge, "a loop needs at least three distinct points");
    }
    if (polyline.size() == 2) {
      for (const GraphEdge &other : edges_) {
        if (other.polyline.size() == 2 && ((other.a == a && other.b == b) || (other.a == b && other.b == a))) {
          throw GeometryError(ErrorKind::DegenerateEdge, "duplicate straight edge");
        }
      }
    }
    GraphEdge e{a, b, std::move(polyline), 0.0};
    for (std::size_t i = 0; i + 1 < e.polyline.size(); ++i) {
      const double d = distance(e.polyline[i], e.polyline[i + 1]);
      if (!(d > 0.0)) throw GeometryError(ErrorKind::DegenerateEdge, "repeated polyline point");
      e.length += d;
    }
    edges_.push_back(std::move(e));
    return edges_.size() - 1;
  }

  std::span<const Point2> vertices() const { return vertices_; }
  std::span<const GraphEdge> edges() const { return edges_; }

  double total_edge_length() const {
    double acc = 0.0;
    for (const GraphEdge &e : edges_) acc += e.length;
    return acc;
  }

  bool connected() const {
    if (vertices_.empty()) return false;
    std::vector<std::vector<std::size_t>> adj(vertices_.size());
    for (const GraphEdge &e : edges_) {
      adj[e.a].push_back(e.b);
      adj[e.b].push_back(e.a);
    }
    std::vector<bool> seen(vertices_.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == vertices_.size();
  }

 private:
  void check_vertex(std::size_t v) const {
    if (v >= vertices_.size()) throw GeometryError(ErrorKind::InvalidLocator, "no such vertex");
  }

  std::vector<Point2> vertices_;
  std::vector<GraphEdge> edges_;
};

/// A point on an edge, `offset` measured along the polyline from vertex a.
struct EdgeLocator {
  std::size_t edge = 0;
  double offset = 0.0;
};

namespace detail {

/// Edges subdivided into straight pieces; graph vertices keep their indices.
struct SampledGraph {
  struct Sample {
    double offset;
    std::size_t node;
  };
  std::vector<Point2> nodes;
  std::vector<std::vector<std::pair<std::size_t, double>>> adj;
  std::vector<std::vector<Sample>> per_edge;
  std::size_t graph_vertices = 0;

  std::size_t add_node(Point2 p) {
    nodes.push_back(p);
    adj.emplace_back();
    return nodes.size() - 1;
  }
  void link(std::size_t u, std::size_t v, double w) {
    adj[u].emplace_back(v, w);
    adj[v].emplace_back(u, w);
  }
};

/// Pieces per segment are the smallest power of two reaching spacing <= eps,
/// so halving eps only adds samples.
inline std::size_t dyadic_pieces(double len, double eps) {
  std::size_t k = 1;
  while (len / static_cast<double>(k) > eps) k *= 2;
  return k;
}

inline SampledGraph subdivide(const EmbeddedGraph &g, double eps) {
  SampledGraph sg;
  for (Point2 v : g.vertices()) sg.add_node(v);
  sg.graph_vertices = g.vertices().size();
  sg.per_edge.resize(g.edges().size());
  for (std::size_t ei = 0; ei < g.edges().size(); ++ei) {
    const GraphEdge &e = g.edges()[ei];
    auto &samples = sg.per_edge[ei];
    samples.push_back({0.0, e.a});
    std::size_t prev = e.a;
    double offset = 0.0;
    for (std::size_t s = 0; s + 1 < e.polyline.size(); ++s) {
      const Point2 p0 = e.polyline[s], p1 = e.polyline[s + 1];
      const double seg = distance(p0, p1);
      const std::size_t k = dyadic_pieces(seg, eps);
      for (std::size_t j = 1; j <= k; ++j) {
        const bool last = s + 2 == e.polyline.size() && j == k;
        const double f = static_cast<double>(j) / static_cast<double>(k);
        const std::size_t node = last ? e.b : sg.add_node(lerp(p0, p1, f));
        sg.link(prev, node, seg / static_cast<double>(k));
        samples.push_back({offset + seg * f, node});
        prev = node;
      }
      offset += seg;
    }
    samples.back().offset = e.length;
  }
  return sg;
}

inline std::vector<double> dijkstra(const SampledGraph &sg, std::size_t source) {
  std::vector<double> dist(sg.nodes.size(), std::numeric_limits<double>::infinity());
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[source] = 0.0;
  pq.emplace(0.0, source);
  while (!pq.empty()) {
    const auto [d, u] = pq.top();
    pq.pop();
    if (d > dist[u]) continue;
    for (const auto &[v, w] : sg.adj[u]) {
      const double nd = d + w;
      if (nd < dist[v]) {
        dist[v] = nd;
        pq.emplace(nd, v);
      }
    }
  }
  return dist;
}

inline Point2 polyline_point(const GraphEdge &e, double offset) {
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < e.polyline.size(); ++i) {
    const double seg = distance(e.polyline[i], e.polyline[i + 1]);
    if (offset <= acc + seg || i + 2 == e.polyline.size()) {
      return lerp(e.polyline[i], e.polyline[i + 1], std::clamp((offset - acc) / seg, 0.0, 1.0));
    }
    acc += seg;
  }
  return e.polyline.back();
}

/// Inserts a node at `loc`, linked to its neighbouring samples. Returns the
/// node and the index of the piece it splits.
inline std::pair<std::size_t, std::size_t> insert_locator(SampledGraph &sg, const EmbeddedGraph &g,
                                                          EdgeLocator loc) {
  const auto &samples = sg.per_edge[loc.edge];
  std::size_t piece = 0;
  while (piece + 2 < samples.size() && samples[piece + 1].offset < loc.offset) ++piece;
  const auto lo = samples[piece], hi = samples[piece + 1];
  const std::size_t node = sg.add_node(polyline_point(g.edges()[loc.edge], loc.offset));
  sg.link(node, lo.node, loc.offset - lo.offset);
  sg.link(node, hi.node, hi.offset - loc.offset);
  return {node, piece};
}

}  // namespace detail

/// Shortest path length between two on-edge points after subdividing every
/// edge at spacing <= eps.
inline double shortest_path_length(const EmbeddedGraph &g, EdgeLocator p, EdgeLocator q,
                                   double eps) {
  for (EdgeLocator l : {p, q}) {
    if (l.edge >= g.edges().size() || !(l.offset >= 0.0) ||
        l.offset > g.edges()[l.edge].length) {
      throw GeometryError(ErrorKind::InvalidLocator, "locator outside its edge");
    }
  }
  if (!(eps > 0.0)) throw GeometryError(ErrorKind::InvalidSampleSpacing, "eps must be positive");
  detail::SampledGraph sg = detail::subdivide(g, eps);
  const auto [np, piece_p] = detail::insert_locator(sg, g, p);
  const auto [nq, piece_q] = detail::insert_locator(sg, g, q);
  if (p.edge == q.edge && piece_p == piece_q) sg.link(np, nq, std::abs(p.offset - q.offset));
  const double d = detail::dijkstra(sg, np)[nq];
  if (!std::isfinite(d)) throw GeometryError(ErrorKind::Unreachable, "points lie in different components");
  return d;
}

struct GraphDilationResult {
  double delta_lower = 1.0;
  Point2 p;
  Point2 q;
  double sample_eps = 0.0;
  std::size_t samples = 0;
  std::size_t sources = 0;
  bool attained_at_vertex_limit = false;
};

/// Above this many samples only graph vertices and an evenly strided subset
/// of samples serve as shortest-path sources.
inline constexpr std::size_t kMaxAllPairsSamples = 5000;

/// Certified lower bound on the geometric dilation from subdivided samples
/// (pairs closer than eps are skipped) and the corner limits 1/sin(theta/2).
inline GraphDilationResult graph_dilation(const EmbeddedGraph &g, double eps,
                                          unsigned threads = 0) {
  if (!(eps > 0.0)) throw GeometryError(ErrorKind::InvalidSampleSpacing, "eps must be positive");
  if (g.edges().empty() || !g.connected()) {
    throw GeometryError(ErrorKind::Disconnected, "graph must be connected");
  }
  const detail::SampledGraph sg = detail::subdivide(g, eps);
  const std::size_t n = sg.nodes.size();

  std::vector<std::size_t> sources;
  if (n <= kMaxAllPairsSamples) {
    sources.resize(n);
    for (std::size_t i = 0; i < n; ++i) sources[i] = i;
  } else {
    const std::size_t stride = (n + kMaxAllPairsSamples - 1) / kMaxAllPairsSamples;
    for (std::size_t i = 0; i < n; ++i) {
      if (i < sg.graph_vertices || i % stride == 0) sources.push_back(i);
    }
  }

  struct Best {
    double value = 0.0;
    std::size_t i = 0, j = 0;
  };
  auto better = [](const Best &a, const Best &b) {
    if (a.value != b.value) return a.value > b.value;
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  };
  const bool all_sources = sources.size() == n;

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, sources.size())));
  std::vector<Best> partial(threads);
  auto work = [&](unsigned t) {
    Best local;
    for (std::size_t si = t; si < sources.size(); si += threads) {
      const std::size_t i = sources[si];
      const std::vector<double> dist = detail::dijkstra(sg, i);
      for (std::size_t j = all_sources ? i + 1 : 0; j < n; ++j) {
        if (j == i) continue;
        const double d = distance(sg.nodes[i], sg.nodes[j]);
        if (d < eps) continue;
        const Best cand{dist[j] / d, std::min(i, j), std::max(i, j)};
        if (better(cand, local)) local = cand;
      }
    }
    partial[t] = local;
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
    work(0);
  }
  Best best;
  for (const Best &b : partial) {
    if (better(b, best)) best = b;
  }

  GraphDilationResult out;
  out.delta_lower = std::max(1.0, best.value);
  out.p = sg.nodes[best.i];
  out.q = sg.nodes[best.j];
  out.sample_eps = eps;
  out.samples = n;
  out.sources = sources.size();

  // Corner limits: smallest angle between incident directions at each graph
  // vertex, and the bend at every interior polyline vertex.
  auto consider_limit = [&](double lim, Point2 at) {
    if (lim > out.delta_lower) {
      out.delta_lower = lim;
      out.p = out.q = at;
      out.attained_at_vertex_limit = true;
    }
  };
  std::vector<std::vector<Point2>> incident(g.vertices().size());
  for (const GraphEdge &e : g.edges()) {
    incident[e.a].push_back(e.polyline[1]);
    incident[e.b].push_back(e.polyline[e.polyline.size() - 2]);
    for (std::size_t k = 1; k + 1 < e.polyline.size(); ++k) {
      consider_limit(detail::vertex_limit(e.polyline[k - 1], e.polyline[k], e.polyline[k + 1]),
                     e.polyline[k]);
    }
  }
  for (std::size_t v = 0; v < incident.size(); ++v) {
    const auto &dirs = incident[v];
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      for (std::size_t j = i + 1; j < dirs.size(); ++j) {
        consider_limit(detail::vertex_limit(dirs[i], g.vertices()[v], dirs[j]), g.vertices()[v]);
      }
    }
  }
  return out;
}

/// Hexagon (row, col) of a pointy-top lattice. Lattice coordinates are
/// integers: x in units of (sqrt(3)/2) edge, y in units of edge / 2.
struct HexCell {
  long row = 0;
  long col = 0;
};

namespace detail {

inline EmbeddedGraph build_hex_graph(std::span<const HexCell> cells,
                                     const std::function<Point2(long, long)> &place) {
  static constexpr std::array<std::pair<long, long>, 6> kCorners{
      {{1, 1}, {0, 2}, {-1, 1}, {-1, -1}, {0, -2}, {1, -1}}};
  EmbeddedGraph g;
  std::map<std::pair<long, long>, std::size_t> index;
  std::map<std::pair<std::size_t, std::size_t>, bool> seen;
  auto vertex = [&](long x, long y) {
    auto [it, fresh] = index.try_emplace({x, y}, 0);
    if (fresh) it->second = g.add_vertex(place(x, y));
    return it->second;
  };
  for (const HexCell &c : cells) {
    const long cx = 2 * c.col + (c.row & 1L), cy = 3 * c.row;
    std::array<std::size_t, 6> ids{};
    for (std::size_t k = 0; k < 6; ++k) ids[k] = vertex(cx + kCorners[k].first, cy + kCorners[k].second);
    for (std::size_t k = 0; k < 6; ++k) {
      const std::size_t a = ids[k], b = ids[(k + 1) % 6];
      if (seen.try_emplace({std::min(a, b), std::max(a, b)}, true).second) g.add_edge(a, b);
    }
  }
  return g;
}

}  // namespace detail

/// rows x cols pointy-top hexagons, odd rows shifted right by half a cell.
inline EmbeddedGraph hex_grid(std::size_t rows, std::size_t cols, double edge) {
  if (rows < 1 || cols < 1 || !(edge > 0.0) || !std::isfinite(edge)) {
    throw GeometryError(ErrorKind::InvalidDimension, "hex grid needs rows, cols >= 1 and edge > 0");
  }
  std::vector<HexCell> cells;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) cells.push_back({static_cast<long>(r), static_cast<long>(c)});
  }
  const double sx = std::sqrt(3.0) / 2.0 * edge, sy = 0.5 * edge;
  return detail::build_hex_graph(cells, [&](long x, long y) {
    return Point2{sx * static_cast<double>(x), sy * static_cast<double>(y)};
  });
}

struct CoverEntry {
  std::size_t point = 0;
  bool covered = false;
  std::optional<std::size_t> edge;  // host edge in the embedding graph
  double offset = 0.0;              // along the host edge
};

struct Embedding {
  EmbeddedGraph graph;
  double edge = 0.0;  // edge length actually used
  std::vector<CoverEntry> cover;
};

/// Embeds points on the horizontal edges of a flat-top hexagonal grid (the
/// pointy-top lattice with axes swapped). Edge lengths edge/m for m = 1..64
/// are tried; rows are fixed through the first point and the horizontal
/// offset is chosen to cover as many points as possible. Points whose
/// height is not a lattice level are reported uncovered.
inline Embedding embed_point_set(std::span<const Point2> points, double edge) {
  if (points.empty()) throw GeometryError(ErrorKind::TooFewVertices, "no points to embed");
  if (!(edge > 0.0) || !std::isfinite(edge)) {
    throw GeometryError(ErrorKind::InvalidDimension, "edge must be positive");
  }
  const double y0 = points.front().y;

  struct Choice {
    std::size_t covered = 0;
    double e = 0.0;
    double x0 = 0.0;
  };
  Choice best{0, edge, points.front().x};

  auto level_of = [&](Point2 p, double e) -> std::optional<long> {
    const double unit = std::sqrt(3.0) / 2.0 * e;
    const double k = std::round((p.y - y0) / unit);
    if (std::abs(p.y - y0 - k * unit) > 1e-9 * e) return std::nullopt;
    return static_cast<long>(k);
  };
  // Offset of the covered interval centres for a point: x0 must lie within
  // e/2 of `anchor` modulo 3e.
  auto anchor_of = [](Point2 p, long level, double e) {
    return p.x - 1.5 * e * static_cast<double>(level + 1);
  };
  auto circ = [](double a, double period) {
    double r = std::fmod(a, period);
    if (r < 0.0) r += period;
    return std::min(r, period - r);
  };

  for (int m = 1; m <= 64; ++m) {
    const double e = edge / m;
    std::vector<double> anchors;
    for (Point2 p : points) {
      if (auto k = level_of(p, e)) anchors.push_back(anchor_of(p, *k, e));
    }
    Choice local{0, e, 0.0};
    for (double a : anchors) {
      for (double cand : {a, a - 0.5 * e, a + 0.5 * e}) {
        std::size_t count = 0;
        for (double b : anchors) {
          if (circ(cand - b, 3.0 * e) <= 0.5 * e * (1.0 + 1e-9)) ++count;
        }
        if (count > local.covered) local = {count, e, cand};
      }
    }
    if (local.covered > best.covered) best = local;
    if (best.covered == anchors.size() && anchors.size() == points.size()) break;
    if (m == 64) break;
  }

  const double e = best.e, x0 = best.x0;
  Embedding out;
  out.edge = e;
  std::vector<HexCell> cells;
  std::vector<bool> hosted(points.size(), false);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto k = level_of(points[i], e);
    if (!k) continue;
    const double u = (points[i].x - x0) / (0.5 * e);
    // Vertical (pre-swap) edges at lattice x = k belong to rows of parity k+1.
    const long parity = ((*k + 1) % 2 + 2) % 2;
    long r = static_cast<long>(std::floor(u / 3.0 + 0.5));
    for (long cand : {r - 1, r, r + 1}) {
      if (((cand % 2) + 2) % 2 != parity) continue;
      const double lo = 3.0 * static_cast<double>(cand) - 1.0, hi = lo + 2.0;
      if (u >= lo - 1e-9 && u <= hi + 1e-9) {
        const long col = (*k - 1 - (cand & 1L)) / 2;
        cells.push_back({cand, col});
        hosted[i] = true;
        break;
      }
    }
  }
  if (cells.empty()) cells.push_back({0, 0});
  long rmin = cells.front().row, rmax = rmin, cmin = cells.front().col, cmax = cmin;
  for (const HexCell &c : cells) {
    rmin = std::min(rmin, c.row);
    rmax = std::max(rmax, c.row);
    cmin = std::min(cmin, c.col);
    cmax = std::max(cmax, c.col);
  }
  std::vector<HexCell> grid;
  for (long r = rmin; r <= rmax; ++r) {
    for (long c = cmin; c <= cmax; ++c) grid.push_back({r, c});
  }
  const double sx = std::sqrt(3.0) / 2.0 * e, sy = 0.5 * e;
  out.graph = detail::build_hex_graph(grid, [&](long x, long y) {
    return Point2{x0 + sy * static_cast<double>(y), y0 + sx * static_cast<double>(x)};
  });

  for (std::size_t i = 0; i < points.size(); ++i) {
    CoverEntry entry{i, false, std::nullopt, 0.0};
    if (hosted[i]) {
      for (std::size_t ei = 0; ei < out.graph.edges().size(); ++ei) {
        const GraphEdge &ge = out.graph.edges()[ei];
        if (point_segment_distance(points[i], ge.polyline.front(), ge.polyline.back()) <= 1e-9 * e) {
          entry.covered = true;
          entry.edge = ei;
          entry.offset = distance(ge.polyline.front(), points[i]);
          break;
        }
      }
    }
    out.cover.push_back(entry);
  }
  return out;
}

}  // namespace dilation
