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

// Command-line front end: generate, analyze, verify, ring, grid, svg.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dilation/dilation.hpp"

namespace {

using namespace dilation;

constexpr int kExitModuleError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string kind;
  double h = 0.0, H = 0.0, s = 0.0, amplitude = 0.0, eps = 0.0, edge = 0.0;
  std::size_t samples = 0, rows = 0, cols = 0;
  std::uint64_t seed = 0;
  std::string input, output;
  std::map<std::string, CLI::Option *> given;

  bool has(const std::string &name) const {
    const auto it = given.find(name);
    return it != given.end() && it->second->count() > 0;
  }
};

void add_flags(CLI::App *cmd, Options &o) {
  o.given["kind"] = cmd->add_option("--kind", o.kind, "generator kind");
  o.given["h"] = cmd->add_option("--h", o.h, "minimum halving distance or diameter");
  o.given["H"] = cmd->add_option("--H", o.H, "maximum halving distance or major diameter");
  o.given["s"] = cmd->add_option("--s", o.s, "moon orbit parameter");
  o.given["amplitude"] = cmd->add_option("--amplitude", o.amplitude, "zindler amplitude A");
  o.given["samples"] = cmd->add_option("--samples", o.samples, "sample or vertex count");
  o.given["eps"] = cmd->add_option("--eps", o.eps, "graph sample spacing");
  o.given["rows"] = cmd->add_option("--rows", o.rows, "hex grid rows");
  o.given["cols"] = cmd->add_option("--cols", o.cols, "hex grid columns");
  o.given["edge"] = cmd->add_option("--edge", o.edge, "edge length");
  o.given["seed"] = cmd->add_option("--seed", o.seed, "random polygon seed");
  o.given["input"] = cmd->add_option("-i,--input", o.input, "input CSV");
  o.given["output"] = cmd->add_option("-o,--output", o.output, "output path");
}

Json config_json(const std::string &command, const Options &o) {
  Json params = Json::object();
  auto put = [&](const char *name, auto value) {
    if (o.has(name)) params[name] = value;
  };
  put("h", o.h);
  put("H", o.H);
  put("s", o.s);
  put("amplitude", o.amplitude);
  put("samples", o.samples);
  put("eps", o.eps);
  put("rows", o.rows);
  put("cols", o.cols);
  put("edge", o.edge);
  Json cfg = {{"command", command}, {"params", params}, {"seed", o.seed}};
  if (o.has("kind")) cfg["kind"] = o.kind;
  if (o.has("input")) cfg["input"] = o.input;
  return cfg;
}

Json envelope(const std::string &command, const Options &o) {
  return {{"schema_version", kSchemaVersion}, {"config", config_json(command, o)}};
}

std::size_t samples_or(const Options &o, std::size_t fallback) { return o.has("samples") ? o.samples : fallback; }

double require(const Options &o, const char *name, double value) {
  if (!o.has(name)) throw UsageError(std::string("--") + name + " is required for --kind " + o.kind);
  return value;
}

ClosedCurve generate_curve(const Options &o) {
  const std::string &k = o.kind;
  if (k == "circle") return primitive(shape::Circle{0.5 * (o.has("h") ? o.h : 2.0)}, samples_or(o, 1024));
  if (k == "ellipse") {
    return primitive(shape::Ellipse{0.5 * require(o, "H", o.H), 0.5 * require(o, "h", o.h)}, samples_or(o, 1024));
  }
  if (k == "regular-polygon") {
    const std::size_t n = samples_or(o, 6);
    const double side = o.has("edge") ? o.edge : 1.0;
    if (n < 3) throw UsageError("--samples must be >= 3 for a regular polygon");
    return primitive(shape::RegularPolygon{n, side / (2.0 * std::sin(kPi / static_cast<double>(n)))});
  }
  if (k == "rounded-triangle") return rounded_triangle(o.has("h") ? o.h : 1.0, samples_or(o, 256));
  if (k == "moon-orbit") return moon_orbit(require(o, "s", o.s), samples_or(o, 4096));
  if (k == "cap-curve") return cap_curve(require(o, "h", o.h), require(o, "H", o.H), samples_or(o, 2048));
  if (k == "zindler") {
    return zindler_mode({o.has("h") ? o.h : 48.0, o.has("amplitude") ? o.amplitude : 8.0, samples_or(o, 8192)});
  }
  if (k == "auerbach") return auerbach_width_curve(rounded_triangle(o.has("h") ? o.h : 1.0, samples_or(o, 256)), 1e-3);
  if (k == "random-convex") return random_convex_polygon(o.seed, samples_or(o, 12));
  if (k == "random-simple") return random_simple_polygon(o.seed, samples_or(o, 12));
  throw UsageError("unknown --kind '" + k + "'");
}

std::vector<Point2> read_points(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw GeometryError(ErrorKind::ParseError, "cannot open " + path);
  return parse_csv(in);
}

ClosedCurve load_curve(const Options &o) {
  if (o.has("input")) return ClosedCurve::from_vertices(read_points(o.input));
  if (o.has("kind")) return generate_curve(o);
  throw UsageError("either -i/--input or --kind is required");
}

void emit(const Options &o, const std::string &text) {
  if (!o.has("output")) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw GeometryError(ErrorKind::ParseError, "cannot write " + o.output);
  out << text;
}

int cmd_generate(const Options &o) {
  if (!o.has("kind")) throw UsageError("generate needs --kind");
  if (!o.has("output")) throw UsageError("generate needs -o/--output");
  const ClosedCurve c = generate_curve(o);
  {
    std::ofstream out(o.output, std::ios::binary);
    if (!out) throw GeometryError(ErrorKind::ParseError, "cannot write " + o.output);
    write_csv(out, c.vertices());
  }
  Json side = envelope("generate", o);
  side["kind"] = o.kind;
  side["perimeter"] = c.total_length();
  side["vertices"] = c.size();
  std::ofstream meta(std::filesystem::path(o.output).replace_extension(".json"), std::ios::binary);
  meta << dump_json(side);
  return 0;
}

int cmd_analyze(const Options &o) {
  const ClosedCurve c = load_curve(o);
  Json j = envelope("analyze", o);
  j["metrics"] = to_json(compute_metrics(c));
  j["decomposition"] = to_json(decompose(c, detail::even_samples(c, 1024)));
  emit(o, dump_json(j));
  return 0;
}

int cmd_verify(const Options &o) {
  const ClosedCurve c = load_curve(o);
  const std::vector<InequalityReport> reports = check_all(c);
  const bool ok = all_applicable_satisfied(reports);
  Json j = envelope("verify", o);
  j["reports"] = to_json(std::span<const InequalityReport>(reports));
  j["all_applicable_satisfied"] = ok;
  emit(o, dump_json(j));
  return ok ? 0 : kExitVerification;
}

int cmd_ring(const Options &o) {
  const ClosedCurve c = load_curve(o);
  Json j = envelope("ring", o);
  j["ring_fit"] = to_json(ring_fit(c));
  emit(o, dump_json(j));
  return 0;
}

int cmd_grid(const Options &o) {
  const double eps = o.has("eps") ? o.eps : 0.05;
  const double edge = o.has("edge") ? o.edge : 1.0;
  Json j = envelope("grid", o);
  EmbeddedGraph g;
  if (o.has("input")) {
    const std::vector<Point2> pts = read_points(o.input);
    Embedding e = embed_point_set(pts, edge);
    j["cover_report"] = to_json(std::span<const CoverEntry>(e.cover));
    j["embedding_edge"] = e.edge;
    g = std::move(e.graph);
  } else {
    g = hex_grid(o.has("rows") ? o.rows : 1, o.has("cols") ? o.cols : 1, edge);
  }
  j["graph"] = to_json(g);
  j["dilation"] = to_json(graph_dilation(g, eps));
  emit(o, dump_json(j));
  return 0;
}

int cmd_svg(const Options &o) {
  const ClosedCurve c = load_curve(o);
  const HalvingDecomposition d = decompose(c, detail::even_samples(c, 1024));
  std::optional<Ring> ring;
  try {
    const RingFit f = ring_fit(c);
    ring = Ring{f.center, f.r_inner, f.r_outer};
  } catch (const GeometryError &e) {
    if (e.kind() != ErrorKind::DegenerateRing) throw;
  }
  emit(o, render_svg({&c, &d, ring}));
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Halving-distance and dilation toolkit"};
  app.set_help_flag("--help", "print this help");
  app.require_subcommand(1);
  struct Command {
    const char *name;
    const char *help;
    int (*run)(const Options &);
  };
  const std::vector<Command> commands{
      {"generate", "write a generated curve as CSV plus a JSON sidecar", cmd_generate},
      {"analyze", "curve metrics and halving decomposition as JSON", cmd_analyze},
      {"verify", "evaluate every inequality report; exit 3 on violation", cmd_verify},
      {"ring", "fit the enclosing ring", cmd_ring},
      {"grid", "hexagonal grid or point-set embedding with sampled dilation", cmd_grid},
      {"svg", "render the curve, C*, M, extremal chords and ring", cmd_svg}};
  std::vector<Options> opts(commands.size());
  std::vector<CLI::App *> subs;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    subs.push_back(app.add_subcommand(commands[i].name, commands[i].help));
    add_flags(subs.back(), opts[i]);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }
  for (std::size_t i = 0; i < commands.size(); ++i) {
    if (!subs[i]->parsed()) continue;
    try {
      return commands[i].run(opts[i]);
    } catch (const UsageError &e) {
      std::cerr << "usage error: " << e.what() << "\n" << subs[i]->help();
      return kExitUsage;
    } catch (const GeometryError &e) {
      std::cerr << dump_json(error_json(e));
      return kExitModuleError;
    }
  }
  return kExitUsage;
}
