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

// Text formats for polygons and guard lists.
//
//   wvpolygon v1
//   edge u=0 v=1                      (or: chord e1=0 t1=1/2 e2=3 t2=0)
//   0 0
//   7/2 -1
//
// Guard files hold one guard per line: `vertex <i>` or
// `boundary <edge> <t>`. Both formats take `#` comments and blank lines.
#pragma once

#include <cctype>
#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "wvguard/errors.hpp"
#include "wvguard/geometry.hpp"
#include "wvguard/guards.hpp"
#include "wvguard/wv_polygon.hpp"

namespace wvguard {

struct EdgeSpec {
  std::size_t u = 0;
  std::size_t v = 1;
  bool operator==(const EdgeSpec&) const = default;
};

struct ChordSpec {
  std::size_t e1 = 0;
  Rational t1;
  std::size_t e2 = 0;
  Rational t2;
  bool operator==(const ChordSpec&) const = default;
};

struct PolygonFile {
  std::vector<Point> vertices;
  std::variant<EdgeSpec, ChordSpec> mode;
  bool operator==(const PolygonFile&) const = default;
};

struct GuardSpec {
  enum class Kind { kVertex, kBoundary };
  Kind kind = Kind::kVertex;
  std::size_t index = 0;  // vertex index, or edge index for kBoundary
  Rational t;             // parameter along the edge (kBoundary)
  bool operator==(const GuardSpec&) const = default;
};

namespace detail {

inline ParseError parse_error(std::size_t line, const std::string& what) {
  return ParseError("line " + std::to_string(line) + ": " + what);
}

// Line without its comment, split on whitespace.
inline std::vector<std::string> tokens_of(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream in(body);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

inline bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace detail

// Accepts `p`, `p/q` and decimals like `-1.25`; the value is exact.
inline std::optional<Rational> parse_rational(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  Rational r;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den)) return {};
    mpz_class d(den);
    if (d == 0) return {};
    r = ratio(mpz_class(num), d);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!detail::all_digits(whole) || !detail::all_digits(frac)) return {};
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    r = ratio(mpz_class(whole + frac), scale);
  } else {
    if (!detail::all_digits(s)) return {};
    r = Rational(mpz_class(s));
  }
  return negative ? Rational(-r) : r;
}

// Canonical text: `p` for integers, `p/q` otherwise.
inline std::string format_rational(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace detail {

inline Rational rational_or_throw(const std::string& s, std::size_t line) {
  auto r = parse_rational(s);
  if (!r) throw parse_error(line, "not a rational number: '" + s + "'");
  return *r;
}

inline std::size_t index_or_throw(const std::string& s, std::size_t line) {
  if (!all_digits(s)) throw parse_error(line, "not an index: '" + s + "'");
  return std::stoul(s);
}

inline std::map<std::string, std::string> key_values(
    const std::vector<std::string>& toks, std::size_t line) {
  std::map<std::string, std::string> out;
  for (std::size_t i = 1; i < toks.size(); ++i) {
    auto eq = toks[i].find('=');
    if (eq == std::string::npos)
      throw parse_error(line, "expected key=value, got '" + toks[i] + "'");
    if (!out.emplace(toks[i].substr(0, eq), toks[i].substr(eq + 1)).second)
      throw parse_error(line, "repeated key '" + toks[i].substr(0, eq) + "'");
  }
  return out;
}

inline const std::string& require_key(
    const std::map<std::string, std::string>& kv, const std::string& key,
    std::size_t line) {
  auto it = kv.find(key);
  if (it == kv.end()) throw parse_error(line, "missing " + key + "=");
  return it->second;
}

}  // namespace detail

// Throws ParseError.
inline PolygonFile parse_polygon_file(std::istream& in) {
  PolygonFile file;
  bool header = false, mode = false;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    std::vector<std::string> toks = detail::tokens_of(line);
    if (toks.empty()) continue;
    if (!header) {
      if (toks.size() != 2 || toks[0] != "wvpolygon" || toks[1] != "v1")
        throw detail::parse_error(no, "expected header 'wvpolygon v1'");
      header = true;
      continue;
    }
    if (!mode) {
      auto kv = detail::key_values(toks, no);
      if (toks[0] == "edge") {
        if (kv.size() != 2) throw detail::parse_error(no, "edge takes u= v=");
        EdgeSpec e;
        e.u = detail::index_or_throw(detail::require_key(kv, "u", no), no);
        e.v = detail::index_or_throw(detail::require_key(kv, "v", no), no);
        file.mode = e;
      } else if (toks[0] == "chord") {
        if (kv.size() != 4)
          throw detail::parse_error(no, "chord takes e1= t1= e2= t2=");
        ChordSpec c;
        c.e1 = detail::index_or_throw(detail::require_key(kv, "e1", no), no);
        c.t1 = detail::rational_or_throw(detail::require_key(kv, "t1", no), no);
        c.e2 = detail::index_or_throw(detail::require_key(kv, "e2", no), no);
        c.t2 = detail::rational_or_throw(detail::require_key(kv, "t2", no), no);
        file.mode = c;
      } else {
        throw detail::parse_error(no, "expected 'edge' or 'chord' line");
      }
      mode = true;
      continue;
    }
    if (toks.size() != 2)
      throw detail::parse_error(no, "expected a vertex 'x y'");
    file.vertices.emplace_back(detail::rational_or_throw(toks[0], no),
                               detail::rational_or_throw(toks[1], no));
  }
  if (!header) throw ParseError("empty polygon file");
  if (!mode) throw ParseError("missing edge/chord line");
  if (file.vertices.empty()) throw ParseError("no vertices");
  return file;
}

inline PolygonFile parse_polygon_text(const std::string& text) {
  std::istringstream in(text);
  return parse_polygon_file(in);
}

inline void write_polygon_file(std::ostream& out, const PolygonFile& file) {
  out << "wvpolygon v1\n";
  if (const auto* e = std::get_if<EdgeSpec>(&file.mode)) {
    out << "edge u=" << e->u << " v=" << e->v << "\n";
  } else {
    const auto& c = std::get<ChordSpec>(file.mode);
    out << "chord e1=" << c.e1 << " t1=" << format_rational(c.t1)
        << " e2=" << c.e2 << " t2=" << format_rational(c.t2) << "\n";
  }
  for (const Point& p : file.vertices)
    out << format_rational(p.x) << " " << format_rational(p.y) << "\n";
}

inline std::string polygon_file_text(const PolygonFile& file) {
  std::ostringstream out;
  write_polygon_file(out, file);
  return out.str();
}

// Validates the polygon and builds the canonical weakly visible polygon
// (weak visibility itself is not checked here).
inline WVPolygon to_wv_polygon(const PolygonFile& file) {
  if (const auto* e = std::get_if<EdgeSpec>(&file.mode))
    return make_edge_wv(file.vertices, e->u, e->v);
  const auto& c = std::get<ChordSpec>(file.mode);
  return make_chord_wv(file.vertices, {c.e1, c.t1}, {c.e2, c.t2});
}

// Throws ParseError.
inline std::vector<GuardSpec> parse_guard_file(std::istream& in) {
  std::vector<GuardSpec> out;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    std::vector<std::string> toks = detail::tokens_of(line);
    if (toks.empty()) continue;
    GuardSpec g;
    if (toks[0] == "vertex" && toks.size() == 2) {
      g.index = detail::index_or_throw(toks[1], no);
    } else if (toks[0] == "boundary" && toks.size() == 3) {
      g.kind = GuardSpec::Kind::kBoundary;
      g.index = detail::index_or_throw(toks[1], no);
      g.t = detail::rational_or_throw(toks[2], no);
      if (g.t < 0 || g.t > 1)
        throw detail::parse_error(no, "edge parameter outside [0,1]");
    } else {
      throw detail::parse_error(no, "expected 'vertex <i>' or "
                                    "'boundary <edge> <t>'");
    }
    out.push_back(std::move(g));
  }
  return out;
}

inline std::vector<GuardSpec> parse_guard_text(const std::string& text) {
  std::istringstream in(text);
  return parse_guard_file(in);
}

// `notes`, when given, are written as trailing comments.
inline void write_guard_file(std::ostream& out,
                             const std::vector<GuardSpec>& guards,
                             const std::vector<std::string>& notes = {}) {
  for (std::size_t i = 0; i < guards.size(); ++i) {
    const GuardSpec& g = guards[i];
    if (g.kind == GuardSpec::Kind::kVertex)
      out << "vertex " << g.index;
    else
      out << "boundary " << g.index << " " << format_rational(g.t);
    if (i < notes.size() && !notes[i].empty()) out << "  # " << notes[i];
    out << "\n";
  }
}

inline std::string guard_file_text(const std::vector<GuardSpec>& guards,
                                   const std::vector<std::string>& notes = {}) {
  std::ostringstream out;
  write_guard_file(out, guards, notes);
  return out.str();
}

// Input-frame position of a guard spec. Throws Error for bad indices.
inline Point guard_spec_point(const PolygonFile& file, const GuardSpec& g) {
  const std::size_t n = file.vertices.size();
  if (g.index >= n)
    throw Error("guard index " + std::to_string(g.index) + " out of range");
  if (g.kind == GuardSpec::Kind::kVertex) return file.vertices[g.index];
  return lerp(file.vertices[g.index], file.vertices[(g.index + 1) % n], g.t);
}

// Guards in the canonical frame of `wv`, which must come from `file`.
inline GuardSet resolve_guards(const PolygonFile& file, const WVPolygon& wv,
                               const std::vector<GuardSpec>& specs,
                               Provenance provenance) {
  GuardSet out;
  for (const GuardSpec& g : specs) {
    Point p = wv.frame().apply(guard_spec_point(file, g));
    out.add(Guard{p, wv.polygon().vertex_index(p), provenance});
  }
  return out;
}

// Guard specs in the input numbering: input vertices as `vertex`, other
// boundary points as `boundary` on the input edge holding them. Throws
// Error for a position off the boundary.
inline std::vector<GuardSpec> describe_guards(const PolygonFile& file,
                                              const WVPolygon& wv,
                                              const GuardSet& guards) {
  const std::size_t n = file.vertices.size();
  std::vector<GuardSpec> out;
  for (const Guard& g : guards) {
    Point p = wv.frame().invert(g.position);
    GuardSpec spec;
    bool found = false;
    for (std::size_t i = 0; i < n && !found; ++i) {
      if (file.vertices[i] == p) {
        spec.index = i;
        found = true;
      }
    }
    for (std::size_t e = 0; e < n && !found; ++e) {
      const Point& a = file.vertices[e];
      const Point& b = file.vertices[(e + 1) % n];
      if (point_on_segment(p, a, b)) {
        spec.kind = GuardSpec::Kind::kBoundary;
        spec.index = e;
        spec.t = param_on_line(a, b, p);
        found = true;
      }
    }
    if (!found) throw Error("guard position is not on the input boundary");
    out.push_back(std::move(spec));
  }
  return out;
}

}  // namespace wvguard
