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

// Exact planar primitives over arbitrary-precision rationals.
//
// Nothing in this header rounds. Every predicate returns the sign of an exact
// expression and every construction (intersection points, projections)
// produces a point with rational coordinates.

#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace wvguard {

using Rational = mpq_class;

// num/den in lowest terms. The two-argument mpq_class constructor does not
// reduce, and GMP arithmetic expects reduced operands.
inline Rational ratio(const mpz_class& num, const mpz_class& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline int sign(const Rational& r) { return sgn(r); }

struct Point {
  Rational x;
  Rational y;

  Point() = default;
  Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
  Point(long px, long py) : x(px), y(py) {}

  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
  // Lexicographic (x, then y).
  friend bool operator<(const Point& a, const Point& b) {
    int c = cmp(a.x, b.x);
    if (c != 0) return c < 0;
    return a.y < b.y;
  }
  friend Point operator+(const Point& a, const Point& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend Point operator-(const Point& a, const Point& b) {
    return {a.x - b.x, a.y - b.y};
  }
  friend Point operator*(const Rational& s, const Point& a) {
    return {s * a.x, s * a.y};
  }
  friend std::ostream& operator<<(std::ostream& os, const Point& p) {
    return os << '(' << p.x.get_str() << ", " << p.y.get_str() << ')';
  }
};

inline Rational cross(const Point& a, const Point& b) {
  return a.x * b.y - a.y * b.x;
}
inline Rational dot(const Point& a, const Point& b) {
  return a.x * b.x + a.y * b.y;
}
inline Rational squared_distance(const Point& a, const Point& b) {
  Rational dx = a.x - b.x;
  Rational dy = a.y - b.y;
  return dx * dx + dy * dy;
}
inline Point midpoint(const Point& a, const Point& b) {
  Rational two(2);
  return {(a.x + b.x) / two, (a.y + b.y) / two};
}
// a + t (b - a)
inline Point lerp(const Point& a, const Point& b, const Rational& t) {
  return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

enum class Orientation { kRight = -1, kCollinear = 0, kLeft = 1 };

inline Orientation orientation_of(int s) {
  return s > 0 ? Orientation::kLeft
               : (s < 0 ? Orientation::kRight : Orientation::kCollinear);
}

namespace detail {

// Homogeneous integer coordinates (x/w, y/w) when every component fits in
// 40 bits; a 3x3 determinant of such values fits in 128 bits.
struct SmallHomogeneous {
  long x, y, w;
};

inline bool small_homogeneous(const Point& p, SmallHomogeneous& out) {
  constexpr long kLimit = 1L << 40;
  const mpz_srcptr nx = p.x.get_num_mpz_t();
  const mpz_srcptr dx = p.x.get_den_mpz_t();
  const mpz_srcptr ny = p.y.get_num_mpz_t();
  const mpz_srcptr dy = p.y.get_den_mpz_t();
  if (mpz_sizeinbase(nx, 2) > 40 || mpz_sizeinbase(ny, 2) > 40 ||
      mpz_sizeinbase(dx, 2) > 40 || mpz_sizeinbase(dy, 2) > 40)
    return false;
  long a = mpz_get_si(nx), b = mpz_get_si(dx);
  long c = mpz_get_si(ny), d = mpz_get_si(dy);
  if (b == d) {
    out = {a, c, b};
    return true;
  }
  __int128 x = static_cast<__int128>(a) * d;
  __int128 y = static_cast<__int128>(c) * b;
  __int128 w = static_cast<__int128>(b) * d;
  if (x >= kLimit || x <= -kLimit || y >= kLimit || y <= -kLimit ||
      w >= kLimit)
    return false;
  out = {static_cast<long>(x), static_cast<long>(y), static_cast<long>(w)};
  return true;
}

inline int orient_small(const SmallHomogeneous& p, const SmallHomogeneous& q,
                        const SmallHomogeneous& r) {
  using I = __int128;
  // det [[px py pw] [qx qy qw] [rx ry rw]]; all w are positive.
  I det = static_cast<I>(p.x) * (static_cast<I>(q.y) * r.w - static_cast<I>(r.y) * q.w) -
          static_cast<I>(p.y) * (static_cast<I>(q.x) * r.w - static_cast<I>(r.x) * q.w) +
          static_cast<I>(p.w) * (static_cast<I>(q.x) * r.y - static_cast<I>(r.x) * q.y);
  return det > 0 ? 1 : (det < 0 ? -1 : 0);
}

}  // namespace detail

// Sign of (q - p) x (r - p).
inline Orientation orient(const Point& p, const Point& q, const Point& r) {
  detail::SmallHomogeneous hp, hq, hr;
  if (detail::small_homogeneous(p, hp) && detail::small_homogeneous(q, hq) &&
      detail::small_homogeneous(r, hr)) {
    return orientation_of(detail::orient_small(hp, hq, hr));
  }
  Rational c = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return orientation_of(sgn(c));
}

inline int orient_sign(const Point& p, const Point& q, const Point& r) {
  return static_cast<int>(orient(p, q, r));
}

inline Orientation opposite(Orientation o) {
  return orientation_of(-static_cast<int>(o));
}

struct Segment {
  Point a;
  Point b;

  friend bool operator==(const Segment& s, const Segment& t) {
    return s.a == t.a && s.b == t.b;
  }
  friend std::ostream& operator<<(std::ostream& os, const Segment& s) {
    return os << s.a << "-" << s.b;
  }
};

// Same segment, endpoints in lexicographic order.
inline Segment canonical(const Segment& s) {
  return s.b < s.a ? Segment{s.b, s.a} : s;
}

// A line through two distinct points. Side tests are relative to the
// direction a -> b.
struct Line {
  Point a;
  Point b;

  Orientation side(const Point& p) const { return orient(a, b, p); }
};

// Parameter of p along a -> b, assuming p is on the supporting line.
inline Rational param_on_line(const Point& a, const Point& b, const Point& p) {
  if (a.x != b.x) return (p.x - a.x) / (b.x - a.x);
  return (p.y - a.y) / (b.y - a.y);
}

// p is on segment ab, endpoints included.
inline bool point_on_segment(const Point& p, const Point& a, const Point& b) {
  if (cmp(p.x, a.x) * cmp(p.x, b.x) > 0) return false;
  if (cmp(p.y, a.y) * cmp(p.y, b.y) > 0) return false;
  return orient(a, b, p) == Orientation::kCollinear;
}
inline bool point_on_segment(const Point& p, const Segment& s) {
  return point_on_segment(p, s.a, s.b);
}

// p is on s but is neither endpoint.
inline bool point_in_segment_interior(const Point& p, const Segment& s) {
  return point_on_segment(p, s) && p != s.a && p != s.b;
}

struct NoIntersection {
  friend bool operator==(NoIntersection, NoIntersection) { return true; }
};

// Empty, a single point, or a collinear overlap (endpoints in lexicographic
// order, so the result does not depend on argument order).
using SegmentIntersection = std::variant<NoIntersection, Point, Segment>;

inline SegmentIntersection segment_intersection(const Point& a, const Point& b,
                                                const Point& c,
                                                const Point& d) {
  int d1 = orient_sign(a, b, c);
  int d2 = orient_sign(a, b, d);
  if (d1 == 0 && d2 == 0) {
    // Collinear (or s1 degenerate, which callers never pass).
    Point lo1 = std::min(a, b), hi1 = std::max(a, b);
    Point lo2 = std::min(c, d), hi2 = std::max(c, d);
    Point lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
    if (hi < lo) return NoIntersection{};
    if (lo == hi) return lo;
    return Segment{lo, hi};
  }
  if (d1 * d2 > 0) return NoIntersection{};
  int d3 = orient_sign(c, d, a);
  int d4 = orient_sign(c, d, b);
  if (d3 * d4 > 0) return NoIntersection{};
  if (d1 == 0) return c;
  if (d2 == 0) return d;
  if (d3 == 0) return a;
  if (d4 == 0) return b;
  Point r = b - a;
  Point q = d - c;
  Rational t = cross(c - a, q) / cross(r, q);
  return lerp(a, b, t);
}

inline SegmentIntersection segment_intersection(const Segment& s1,
                                                const Segment& s2) {
  return segment_intersection(s1.a, s1.b, s2.a, s2.b);
}

inline bool segments_intersect(const Segment& s1, const Segment& s2) {
  return !std::holds_alternative<NoIntersection>(segment_intersection(s1, s2));
}

// Intersection of the supporting lines of (a1, a2) and (b1, b2); nullopt when
// parallel.
inline std::optional<Point> line_intersection(const Point& a1, const Point& a2,
                                              const Point& b1,
                                              const Point& b2) {
  Point r = a2 - a1;
  Point q = b2 - b1;
  Rational den = cross(r, q);
  if (sgn(den) == 0) return std::nullopt;
  Rational t = cross(b1 - a1, q) / den;
  return lerp(a1, a2, t);
}

// Closest point of s to p.
inline Point closest_point_on_segment(const Point& p, const Segment& s) {
  Point d = s.b - s.a;
  Rational len2 = dot(d, d);
  Rational t = dot(p - s.a, d) / len2;
  if (t <= 0) return s.a;
  if (t >= 1) return s.b;
  return lerp(s.a, s.b, t);
}

// Twice the signed area; positive for counterclockwise rings.
inline Rational signed_area2(std::span<const Point> ring) {
  Rational acc(0);
  for (std::size_t i = 0, n = ring.size(); i < n; ++i) {
    acc += cross(ring[i], ring[(i + 1) % n]);
  }
  return acc;
}

// Counterclockwise hull without collinear points (Andrew's monotone chain).
inline std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], p) != Orientation::kLeft)
      --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    const Point& p = pts[i];
    while (k >= t && orient(hull[k - 2], hull[k - 1], p) != Orientation::kLeft)
      --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  return hull;
}

// Convex with no reflex turn; collinear vertices are tolerated.
inline bool is_convex_ring(std::span<const Point> ring) {
  const std::size_t n = ring.size();
  if (n < 3) return false;
  bool seen_left = false;
  for (std::size_t i = 0; i < n; ++i) {
    Orientation o = orient(ring[i], ring[(i + 1) % n], ring[(i + 2) % n]);
    if (o == Orientation::kRight) return false;
    if (o == Orientation::kLeft) seen_left = true;
  }
  return seen_left && sgn(signed_area2(ring)) > 0;
}

// Drops repeated and collinear-interior vertices of a closed ring.
inline std::vector<Point> simplify_ring(std::vector<Point> ring) {
  bool changed = true;
  while (changed && ring.size() >= 3) {
    changed = false;
    std::vector<Point> out;
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point& prev = ring[(i + n - 1) % n];
      const Point& cur = ring[i];
      const Point& next = ring[(i + 1) % n];
      if (cur == prev || (orient(prev, cur, next) == Orientation::kCollinear &&
                          point_on_segment(cur, Segment{prev, next}))) {
        changed = true;
        continue;
      }
      out.push_back(cur);
    }
    ring = std::move(out);
  }
  return ring;
}

inline Point centroid_of(std::span<const Point> pts) {
  Rational sx(0), sy(0);
  for (const Point& p : pts) {
    sx += p.x;
    sy += p.y;
  }
  Rational n(static_cast<long>(pts.size()));
  return {sx / n, sy / n};
}

// Counterclockwise angular order of direction vectors, starting at +x.
// Directions must be nonzero.
inline int direction_half(const Point& d) {
  return (sgn(d.y) > 0 || (sgn(d.y) == 0 && sgn(d.x) > 0)) ? 0 : 1;
}
inline bool direction_less(const Point& a, const Point& b) {
  int ha = direction_half(a), hb = direction_half(b);
  if (ha != hb) return ha < hb;
  return sgn(cross(a, b)) > 0;
}
inline bool same_direction(const Point& a, const Point& b) {
  return sgn(cross(a, b)) == 0 && sgn(dot(a, b)) > 0;
}

inline double to_double(const Rational& r) { return r.get_d(); }

}  // namespace wvguard
