// Copyright 2026 The LatticeLab Authors
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

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "latticelab/numeric.hpp"

namespace latticelab {

using Coord = std::int64_t;

struct Point {
  Coord x = 0;
  Coord y = 0;

  friend bool operator==(const Point&, const Point&) = default;
  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(Coord c, Point a) { return {c * a.x, c * a.y}; }
  Point operator-() const { return {-x, -y}; }
};

// Row-major order: by y, then by x. Every LatticeSet is kept in this order.
struct RowMajorLess {
  bool operator()(const Point& a, const Point& b) const {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
  }
};

inline Coord dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline Coord cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline Coord norm2(Point a) { return dot(a, a); }

// Rotation by `quarter_turns` * 90 degrees counterclockwise.
Point rotate(Point p, int quarter_turns);

std::string to_string(Point p);

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(p.x) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(p.y) + 0x7F4A7C159E3779B9ULL + (h << 6) +
         (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

// Closed integer interval [lo, hi].
struct Interval {
  Coord lo = 0;
  Coord hi = -1;

  bool empty() const { return hi < lo; }
  Coord length() const { return empty() ? 0 : hi - lo + 1; }
  bool contains(Coord v) const { return lo <= v && v <= hi; }
  bool contains(const Interval& o) const {
    return o.empty() || (lo <= o.lo && o.hi <= hi);
  }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Axis-aligned lattice box x_range × y_range. Used both as a search box of
// translates and as a bounding box / exact region.
struct Box {
  Interval x;
  Interval y;

  bool empty() const { return x.empty() || y.empty(); }
  std::size_t cell_count() const {
    return static_cast<std::size_t>(x.length()) *
           static_cast<std::size_t>(y.length());
  }
  bool contains(Point p) const { return x.contains(p.x) && y.contains(p.y); }
  bool contains(const Box& o) const {
    return o.empty() || (x.contains(o.x) && y.contains(o.y));
  }
  // Minkowski sum: every a + b with a in *this and b in other.
  Box plus(const Box& other) const {
    return {{x.lo + other.x.lo, x.hi + other.x.hi},
            {y.lo + other.y.lo, y.hi + other.y.hi}};
  }
  Box translated(Point v) const {
    return {{x.lo + v.x, x.hi + v.x}, {y.lo + v.y, y.hi + v.y}};
  }
  friend bool operator==(const Box&, const Box&) = default;

  // [0, w-1] × [0, h-1].
  static Box sized(Coord w, Coord h) { return {{0, w - 1}, {0, h - 1}}; }
};

Box rotate(const Box& b, int quarter_turns);
std::string to_string(const Box& b);

// A primitive integer vector (p, q): gcd(|p|, |q|) = 1.
class Direction {
 public:
  Direction(Coord p, Coord q);
  // Divides out the gcd instead of rejecting non-primitive input.
  static Direction primitive_of(Coord p, Coord q);

  static Direction e1() { return {1, 0}; }
  static Direction e2() { return {0, 1}; }

  Coord p() const { return v_.x; }
  Coord q() const { return v_.y; }
  Point vec() const { return v_; }
  Coord norm2() const { return latticelab::norm2(v_); }
  Direction operator-() const { return {-v_.x, -v_.y}; }
  // Normal n with v-planes {z : <z, n> <= c}; for v = (a, b), n = (b, -a).
  Point plane_normal() const { return {v_.y, -v_.x}; }

  friend bool operator==(const Direction&, const Direction&) = default;

 private:
  Point v_;
};

std::string to_string(const Direction& d);

// Finite set of lattice points in row-major order without duplicates.
class LatticeSet {
 public:
  LatticeSet() = default;
  explicit LatticeSet(std::vector<Point> points);
  LatticeSet(std::initializer_list<Point> points)
      : LatticeSet(std::vector<Point>(points)) {}
  static LatticeSet from_box(const Box& b);

  bool empty() const { return points_.empty(); }
  std::size_t size() const { return points_.size(); }
  std::span<const Point> points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }

  bool contains(Point p) const;
  // Index of p in row-major order, or nullopt.
  std::optional<std::size_t> index_of(Point p) const;
  Box bounding_box() const;

  LatticeSet translated(Point v) const;
  // Translate so the bounding box min-corner sits at the origin.
  LatticeSet anchored() const;
  LatticeSet rotated(int quarter_turns) const;
  LatticeSet without(Point p) const;

  bool is_subset_of(const LatticeSet& other) const;
  friend LatticeSet set_union(const LatticeSet& a, const LatticeSet& b);
  friend LatticeSet set_difference(const LatticeSet& a, const LatticeSet& b);
  friend bool operator==(const LatticeSet&, const LatticeSet&) = default;

 private:
  std::vector<Point> points_;
};

std::string to_string(const LatticeSet& s);

// S = conv(S) ∩ Z², with the hull stored counterclockwise without collinear
// vertices. Degenerate sets keep their one or two extreme points as hull.
class ConvexLatticeSet {
 public:
  const LatticeSet& points() const { return points_; }
  std::span<const Point> hull() const { return hull_; }
  std::size_t size() const { return points_.size(); }
  bool contains(Point p) const { return points_.contains(p); }
  // Twice the hull area.
  Coord doubled_area() const;
  bool has_volume() const { return hull_.size() >= 3; }

  // Lattice points on the boundary of the hull.
  LatticeSet boundary() const;
  ConvexLatticeSet translated(Point v) const;
  ConvexLatticeSet rotated(int quarter_turns) const;

  friend bool operator==(const ConvexLatticeSet& a, const ConvexLatticeSet& b) {
    return a.points_ == b.points_;
  }

 private:
  friend ConvexLatticeSet convex_close(std::span<const Point> points);
  LatticeSet points_;
  std::vector<Point> hull_;
};

// conv(points) ∩ Z². Throws PreconditionError on empty input.
ConvexLatticeSet convex_close(std::span<const Point> points);
inline ConvexLatticeSet convex_close(std::initializer_list<Point> points) {
  return convex_close(std::span<const Point>(points.begin(), points.size()));
}
inline ConvexLatticeSet convex_close(const LatticeSet& points) {
  return convex_close(points.points());
}
// [x0, x0+w-1] × [y0, y0+h-1].
ConvexLatticeSet rectangle(Coord w, Coord h, Point origin = {0, 0});

// True iff s = conv(s) ∩ Z².
bool is_convex(const LatticeSet& s);

// Counterclockwise convex hull (Andrew's monotone chain) without collinear
// vertices.
std::vector<Point> convex_hull(std::span<const Point> points);

// E(l, S): the points of S on the boundary of the intersection of all
// l-planes containing S, where the v-plane for v = (a, b) is
// {z : <z, (b, -a)> <= c}. Defined for any nonempty set.
LatticeSet edge_set(const LatticeSet& region, const Direction& line_dir);
inline LatticeSet edge_set(const ConvexLatticeSet& region,
                           const Direction& line_dir) {
  return edge_set(region.points(), line_dir);
}

// Points of `region` grouped by the line parallel to `dir` they lie on.
std::vector<std::vector<Point>> lines_parallel_to(const LatticeSet& region,
                                                  const Direction& dir);

// Max Euclidean distance squared between points of the set.
Coord squared_diameter(const LatticeSet& s);

// [0, s·û]^(t) with û the unit vector along `direction`. The scale lives in
// Q(sqrt(|direction|²)), so both Euclidean lengths and lattice multiples
// of the direction are representable exactly.
struct SegmentNeighborhood {
  Direction direction;
  Surd scale;
  Rational thickness;

  // Segment of Euclidean length s.
  static SegmentNeighborhood euclidean(Direction d, Rational s, Rational t);
  // Segment from the origin to lambda·(p, q).
  static SegmentNeighborhood lattice(Direction d, Rational lambda,
                                     Rational t);
};

// All n in Z² strictly closer than t to the segment, decided exactly.
LatticeSet neighborhood_points(const SegmentNeighborhood& nbhd);

// Maximal chord length of conv(region) parallel to `dir`, as an exact
// element of Q(sqrt(|dir|²)).
Surd thickness(const ConvexLatticeSet& region, const Direction& dir);

struct TrapezoidRegion {
  Coord n1 = 1;
  Coord k1 = 1;
  Coord m = 1;
  Coord k = 1;
};

struct TrapezoidSets {
  LatticeSet t;  // T_{m,k}
  LatticeSet b;  // B_{m,k}
};

// Throws PreconditionError("degenerate trapezoid") unless k > 14·m·n1·k1.
TrapezoidSets trapezoid_region(const TrapezoidRegion& params);

}  // namespace latticelab
