// Copyright 2026 The wvguard Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Exit codes: 0 ok, 1 domain failure (not simple,
// not weakly visible, not guarded), 2 usage or parse error.

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <span>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wvguard/wvguard.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace wvguard;

namespace {

constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kUsage = 2;

// Failure with a chosen exit code.
struct Exit {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Exit{kUsage, "cannot open " + path};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Exit{kUsage, "cannot write " + path};
  out << text;
}

PolygonFile load_polygon(const std::string& path) {
  try {
    return parse_polygon_text(read_file(path));
  } catch (const ParseError& e) {
    throw Exit{kUsage, path + ": " + e.what()};
  }
}

std::vector<GuardSpec> load_guards(const std::string& path) {
  try {
    return parse_guard_text(read_file(path));
  } catch (const ParseError& e) {
    throw Exit{kUsage, path + ": " + e.what()};
  }
}

// Domain errors while building the polygon (not simple, bad chord) exit 1.
WVPolygon build(const PolygonFile& file) {
  try {
    return to_wv_polygon(file);
  } catch (const NotSimpleError& e) {
    throw Exit{kDomain, std::string("not simple: ") + e.what()};
  } catch (const Error& e) {
    throw Exit{kDomain, e.what()};
  }
}

json point_json(const Point& p) {
  return json::array({format_rational(p.x), format_rational(p.y)});
}

json ring_json(const WVPolygon& wv, std::span<const Point> ring) {
  json out = json::array();
  for (const Point& p : ring) out.push_back(point_json(wv.frame().invert(p)));
  return out;
}

json coverage_json(const WVPolygon& wv, const CoverageReport& r) {
  json holes = json::array();
  for (const Hole& h : r.holes) {
    json leaned = json::array();
    for (const auto& w : h.leaned_windows)
      leaned.push_back(w ? json(to_string(w->kind)) : json(nullptr));
    holes.push_back({{"vertices", ring_json(wv, h.region.ring())},
                     {"convex", h.is_convex()},
                     {"leaned_windows", leaned}});
  }
  json boundary = json::array();
  for (const BoundaryWitness& w : r.uncovered_boundary)
    boundary.push_back(
        {{"point", point_json(wv.frame().invert(w.point(wv.polygon())))},
         {"start", point_json(wv.frame().invert(
                       lerp(wv.vertex(w.edge_index),
                            wv.vertex(w.edge_index + 1), w.t0)))},
         {"end", point_json(wv.frame().invert(
                     lerp(wv.vertex(w.edge_index),
                          wv.vertex(w.edge_index + 1), w.t1)))}});
  return {{"fully_guarded", r.fully_guarded},
          {"holes", holes},
          {"uncovered_boundary", boundary},
          {"faces", r.face_count},
          {"boundary_faces", r.boundary_faces}};
}

std::vector<std::string> provenance_notes(const GuardSet& g) {
  std::vector<std::string> out;
  for (const Guard& guard : g) out.push_back(to_string(guard.provenance));
  return out;
}

// ---------------------------------------------------------------- check

int cmd_check(const std::string& path) {
  PolygonFile file = load_polygon(path);
  WVPolygon wv = build(file);
  WeakVisibilityResult wvr = is_weakly_visible(wv);
  const Point u = wv.frame().invert(wv.u()), v = wv.frame().invert(wv.v());
  const char* what = wv.mode() == WVMode::kEdge ? "edge" : "chord";
  std::cout << "simple, ";
  if (!wvr.visible) {
    std::cout << "not weakly visible from " << what << " " << u << "-" << v;
    if (wvr.witness)
      std::cout << ", " << wv.frame().invert(*wvr.witness)
                << " sees no point of it";
    std::cout << "\n";
    return kDomain;
  }
  std::cout << "weakly visible from " << what << " " << u << "-" << v;
  if (wv.mode() == WVMode::kEdge) {
    auto [reduced, report] = preprocess_concave_endpoints(wv);
    if (report.empty()) std::cout << ", no preprocessing";
    for (const Point& q : report.forced_guards)
      std::cout << ", preprocessing: forced guard at "
                << (q == wv.u() ? "u " : "v ") << wv.frame().invert(q);
  }
  std::cout << "\n";
  return kOk;
}

// ---------------------------------------------------------------- guard

struct GuardArgs {
  std::string polygon;
  std::string phase1 = "greedy";
  std::string guards;
  std::string out;
  std::string stats;
  bool eps_report = false;
  bool chord = false;
  bool deterministic = false;
  bool allow_uv = false;
  bool chord_endpoints = false;
  std::size_t exact_limit = 64;
};

json stats_json(const WVPolygon& wv, const Solution& s, const GuardArgs& a) {
  const bool chord = wv.mode() == WVMode::kChord;
  const std::size_t bound = chord ? 2 * s.stats.boundary_guards
                                  : s.stats.boundary_guards;
  json j = {{"mode", chord ? "chord" : "edge"},
            {"vertices", wv.size()},
            {"phase1", a.phase1},
            {"G", s.stats.boundary_guards},
            {"G_prime", s.stats.added_guards},
            {"forced", s.stats.forced_guards},
            {"total", s.all.size()},
            {"cardinality_bound", bound},
            {"within_bound", s.stats.added_guards <= bound},
            {"upper_on_uv", s.stats.upper_on_uv},
            {"windows", s.stats.windows},
            {"triangles", s.stats.tasks},
            {"holes_before", s.stats.holes_before},
            {"holes_after", s.stats.holes_after},
            {"fully_guarded", s.coverage.fully_guarded}};
  if (chord) j["role_switches"] = s.switches.size();
  if (!a.deterministic)
    j["runtime_ms"] = {{"phase1", s.stats.phase1_ms},
                       {"phase2", s.stats.phase2_ms},
                       {"verify", s.stats.verify_ms}};
  return j;
}

json eps_json(const WVPolygon& wv, const Solution& s) {
  json j;
  try {
    const std::size_t full = brute_force_opt(wv, OptMode::kFull).size();
    const std::size_t bnd = brute_force_opt(wv, OptMode::kBoundary).size();
    j = {{"opt", full},
         {"opt_boundary", bnd},
         {"ratio_total", double(s.all.size()) / double(full)},
         {"ratio_boundary", double(s.boundary.size()) / double(bnd)}};
  } catch (const BudgetExceededError& e) {
    j = {{"error", e.what()}};
  }
  return j;
}

int cmd_guard(const GuardArgs& a) {
  PolygonFile file = load_polygon(a.polygon);
  WVPolygon wv = build(file);
  if (a.chord && wv.mode() != WVMode::kChord)
    throw Exit{kUsage, "--chord needs a chord polygon file"};
  SolveOptions opt;
  opt.exact_limit = a.exact_limit;
  opt.allow_uv_interior = a.allow_uv;
  opt.with_chord_endpoints = a.chord_endpoints;
  if (a.phase1 == "greedy") {
    opt.phase1 = Phase1Source::kGreedy;
  } else if (a.phase1 == "exact") {
    opt.phase1 = Phase1Source::kExact;
  } else {
    if (a.guards.empty()) throw Exit{kUsage, "--phase1 file needs --guards"};
    opt.phase1 = Phase1Source::kUser;
    try {
      opt.user_guards = resolve_guards(file, wv, load_guards(a.guards),
                                       Provenance::kUserSupplied);
    } catch (const Exit&) {
      throw;
    } catch (const Error& e) {
      throw Exit{kUsage, a.guards + ": " + e.what()};
    }
  }
  if (!is_weakly_visible(wv))
    throw Exit{kDomain, "polygon is not weakly visible"};
  Solution s;
  try {
    s = solve(wv, opt);
  } catch (const Error& e) {
    throw Exit{kDomain, e.what()};
  }
  write_output(a.out, guard_file_text(describe_guards(file, wv, s.all),
                                      provenance_notes(s.all)));
  json stats = stats_json(wv, s, a);
  if (a.eps_report) stats["eps_report"] = eps_json(wv, s);
  std::string text = stats.dump(2) + "\n";
  if (a.stats.empty())
    std::cerr << text;
  else
    write_output(a.stats, text);
  return s.coverage.fully_guarded ? kOk : kDomain;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string& poly_path, const std::string& guard_path,
               const std::string& out) {
  PolygonFile file = load_polygon(poly_path);
  std::vector<GuardSpec> specs = load_guards(guard_path);
  WVPolygon wv = build(file);
  GuardSet g;
  try {
    g = resolve_guards(file, wv, specs, Provenance::kUserSupplied);
    validate_guard_positions(wv, g, true);
  } catch (const Error& e) {
    throw Exit{kUsage, guard_path + ": " + e.what()};
  }
  CoverageReport r = verify_coverage(wv, g);
  json j = coverage_json(wv, r);
  j["guards"] = g.size();
  write_output(out, j.dump(2) + "\n");
  return r.fully_guarded ? kOk : kDomain;
}

// ---------------------------------------------------------------- render

int cmd_render(const std::string& poly_path, const std::string& guard_path,
               const std::vector<std::string>& show, const std::string& out) {
  PolygonFile file = load_polygon(poly_path);
  WVPolygon wv = build(file);
  GuardSet g;
  if (!guard_path.empty()) {
    try {
      g = resolve_guards(file, wv, load_guards(guard_path),
                         Provenance::kUserSupplied);
    } catch (const Error& e) {
      throw Exit{kUsage, guard_path + ": " + e.what()};
    }
  }
  RenderOptions opt;
  opt.layers.clear();
  for (const std::string& s : show) {
    try {
      opt.layers.insert(layer_from_string(s));
    } catch (const Error& e) {
      throw Exit{kUsage, e.what()};
    }
  }
  std::vector<TriangleTask> tasks;
  if (opt.layers.count(Layer::kTriangles)) {
    try {
      tasks = wv.mode() == WVMode::kEdge ? complete_guards(wv, g).tasks
                                         : complete_guards_chord(wv, g).tasks;
    } catch (const Error& e) {
      std::cerr << "no triangles: " << e.what() << "\n";
    }
    // Chord tasks below the chord are in the lower side's frame.
    std::erase_if(tasks, [](const TriangleTask& t) { return t.side != 0; });
  }
  write_output(out, render_svg(wv, g, tasks, opt));
  return kOk;
}

// -------------------------------------------------------------- generate

struct GenerateArgs {
  std::string family = "comb";
  std::size_t n = 14;
  std::uint64_t seed = 1;
  std::string out;
  std::string guards_out;
};

int cmd_generate(const GenerateArgs& a) {
  PolygonFile file;
  std::vector<std::size_t> guards;
  try {
    if (a.family == "hole") {
      HoleFixture h = generate_hole_fixture(a.seed, a.n > 9 ? a.n - 9 : 0);
      file.vertices = h.ring;
      file.mode = EdgeSpec{0, 1};
      guards = h.guards;
    } else if (a.family == "chord" || a.family == "chord-edges" ||
               a.family == "chord-hole") {
      ChordFixture c =
          a.family == "chord-hole"
              ? generate_chord_hole_fixture(a.seed, a.n > 10 ? a.n - 10 : 0)
              : generate_chord_fixture(a.seed, a.n, a.family == "chord-edges");
      file.vertices = c.ring;
      file.mode = ChordSpec{c.first.edge, c.first.t, c.second.edge, c.second.t};
      guards = c.guards;
    } else if (a.family == "dip-u" || a.family == "dip-v" ||
               a.family == "dip-both") {
      DipSide side = a.family == "dip-u"   ? DipSide::kU
                     : a.family == "dip-v" ? DipSide::kV
                                           : DipSide::kBoth;
      file.vertices = generate_dip_ring(a.seed, a.n, side);
      file.mode = EdgeSpec{0, 1};
    } else {
      file.vertices = generate_ring(a.seed, a.n, family_from_string(a.family));
      file.mode = EdgeSpec{0, 1};
    }
  } catch (const GenerationFailedError& e) {
    throw Exit{kDomain, e.what()};
  } catch (const Error& e) {
    throw Exit{kUsage, e.what()};
  }
  write_output(a.out, polygon_file_text(file));
  if (!a.guards_out.empty()) {
    std::vector<GuardSpec> specs;
    for (std::size_t i : guards) specs.push_back({GuardSpec::Kind::kVertex, i, 0});
    write_output(a.guards_out, guard_file_text(specs));
  }
  return kOk;
}

// ----------------------------------------------------------------- batch

int cmd_batch(const std::vector<std::string>& inputs, const std::string& phase1,
              unsigned jobs, bool deterministic, const std::string& out) {
  std::vector<std::string> files;
  for (const std::string& in : inputs) {
    if (fs::is_directory(in)) {
      for (const auto& entry : fs::directory_iterator(in))
        if (entry.path().extension() == ".wvp")
          files.push_back(entry.path().string());
    } else {
      files.push_back(in);
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<json> rows(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i; (i = next++) < files.size();) {
      json row = {{"file", files[i]}};
      try {
        PolygonFile file = parse_polygon_text(read_file(files[i]));
        WVPolygon wv = to_wv_polygon(file);
        SolveOptions opt;
        opt.phase1 = phase1 == "exact" ? Phase1Source::kExact
                                       : Phase1Source::kGreedy;
        Solution s = solve(wv, opt);
        GuardArgs a;
        a.phase1 = phase1;
        a.deterministic = deterministic;
        row["stats"] = stats_json(wv, s, a);
        row["ok"] = s.coverage.fully_guarded;
      } catch (const Exit& e) {
        row["ok"] = false;
        row["error"] = e.message;
      } catch (const std::exception& e) {
        row["ok"] = false;
        row["error"] = e.what();
      }
      rows[i] = std::move(row);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1u, jobs); ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  std::ostringstream text;
  bool all_ok = true;
  for (const json& row : rows) {
    text << row.dump() << "\n";
    all_ok = all_ok && row["ok"].get<bool>();
  }
  write_output(out, text.str());
  return all_ok ? kOk : kDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Guards for polygons weakly visible from an edge or chord"};
  app.require_subcommand(1);

  std::string check_path;
  auto* check = app.add_subcommand("check", "Validate a polygon file");
  check->add_option("polygon", check_path, "Polygon file")->required();

  GuardArgs ga;
  auto* guard = app.add_subcommand("guard", "Compute a guard set");
  guard->add_option("polygon", ga.polygon, "Polygon file")->required();
  guard->add_option("--phase1", ga.phase1, "Boundary guards")
      ->check(CLI::IsMember({"greedy", "exact", "file"}));
  guard->add_option("--guards", ga.guards, "Guard file for --phase1 file");
  guard->add_option("-o,--out", ga.out, "Guard output (default stdout)");
  guard->add_option("--stats", ga.stats, "JSON stats output (default stderr)");
  guard->add_option("--exact-limit", ga.exact_limit, "Size bound for exact");
  guard->add_flag("--eps-report", ga.eps_report,
                  "Compare with brute-force optima (WVGUARD_BUDGET caps it)");
  guard->add_flag("--chord", ga.chord, "Require a chord polygon");
  guard->add_flag("--deterministic", ga.deterministic, "Omit runtimes");
  guard->add_flag("--allow-uv-interior", ga.allow_uv,
                  "Accept user guards inside uv");
  guard->add_flag("--chord-endpoint-candidates", ga.chord_endpoints,
                  "Let inserted chord endpoints be candidates");

  std::string vpoly, vguards, vout;
  auto* verify = app.add_subcommand("verify", "Check a guard set");
  verify->add_option("polygon", vpoly, "Polygon file")->required();
  verify->add_option("guards", vguards, "Guard file")->required();
  verify->add_option("-o,--out", vout, "JSON output (default stdout)");

  std::string rpoly, rguards, rout;
  std::vector<std::string> show{"vis", "windows"};
  auto* render = app.add_subcommand("render", "Draw an SVG diagram");
  render->add_option("polygon", rpoly, "Polygon file")->required();
  render->add_option("--guards", rguards, "Guard file");
  render->add_option("--show", show,
                     "Layers: vis, windows, pockets, holes, triangles")
      ->delimiter(',');
  render->add_option("-o,--out", rout, "SVG output (default stdout)");

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a fixture polygon");
  generate->add_option("--family", gen.family,
                       "comb, staircase, spikes, random, hole, chord, "
                       "chord-edges, chord-hole, dip-u, dip-v, dip-both");
  generate->add_option("-n", gen.n, "Vertex count (approximate)");
  generate->add_option("--seed", gen.seed, "Seed");
  generate->add_option("-o,--out", gen.out, "Output (default stdout)");
  generate->add_option("--guards-out", gen.guards_out,
                       "Guard file for fixtures that come with guards");

  std::vector<std::string> binputs;
  std::string bphase = "greedy", bout;
  unsigned bjobs = 1;
  bool bdet = false;
  auto* batch = app.add_subcommand("batch", "Guard many polygon files");
  batch->add_option("inputs", binputs, "Files or directories of .wvp files")
      ->required();
  batch->add_option("--phase1", bphase, "greedy or exact")
      ->check(CLI::IsMember({"greedy", "exact"}));
  batch->add_option("-j,--jobs", bjobs, "Worker threads");
  batch->add_flag("--deterministic", bdet, "Omit runtimes");
  batch->add_option("-o,--out", bout, "JSON lines output (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*check) return cmd_check(check_path);
    if (*guard) return cmd_guard(ga);
    if (*verify) return cmd_verify(vpoly, vguards, vout);
    if (*render) return cmd_render(rpoly, rguards, show, rout);
    if (*generate) return cmd_generate(gen);
    if (*batch) return cmd_batch(binputs, bphase, bjobs, bdet, bout);
  } catch (const Exit& e) {
    std::cerr << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
  return kOk;
}
