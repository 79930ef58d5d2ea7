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

#include "latticelab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "latticelab/error.hpp"

namespace latticelab {

Point rotate(Point p, int quarter_turns) {
  switch (((quarter_turns % 4) + 4) % 4) {
    case 0: return p;
    case 1: return {-p.y, p.x};
    case 2: return {-p.x, -p.y};
    default: return {p.y, -p.x};
  }
}

std::string to_string(Point p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

Box rotate(const Box& b, int quarter_turns) {
  const Point a = rotate(Point{b.x.lo, b.y.lo}, quarter_turns);
  const Point c = rotate(Point{b.x.hi, b.y.hi}, quarter_turns);
  return {{std::min(a.x, c.x), std::max(a.x, c.x)},
          {std::min(a.y, c.y), std::max(a.y, c.y)}};
}

std::string to_string(const Box& b) {
  return "[" + std::to_string(b.x.lo) + "," + std::to_string(b.x.hi) + "]x[" +
         std::to_string(b.y.lo) + "," + std::to_string(b.y.hi) + "]";
}

Direction::Direction(Coord p, Coord q) : v_{p, q} {
  if (p == 0 && q == 0) {
    throw PreconditionError("geometry", "direction must be nonzero");
  }
  if (std::gcd(p, q) != 1) {
    throw PreconditionError("geometry", "direction " + to_string(v_) +
                                            " is not primitive");
  }
}

Direction Direction::primitive_of(Coord p, Coord q) {
  if (p == 0 && q == 0) {
    throw PreconditionError("geometry", "direction must be nonzero");
  }
  const Coord g = std::gcd(p, q);
  return Direction(p / g, q / g);
}

std::string to_string(const Direction& d) {
  return std::to_string(d.p()) + "," + std::to_string(d.q());
}

// --- LatticeSet -------------------------------------------------------------

LatticeSet::LatticeSet(std::vector<Point> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end(), RowMajorLess{});
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

LatticeSet LatticeSet::from_box(const Box& b) {
  LatticeSet s;
  if (b.empty()) return s;
  s.points_.reserve(b.cell_count());
  for (Coord y = b.y.lo; y <= b.y.hi; ++y) {
    for (Coord x = b.x.lo; x <= b.x.hi; ++x) s.points_.push_back({x, y});
  }
  return s;
}

bool LatticeSet::contains(Point p) const {
  return std::binary_search(points_.begin(), points_.end(), p, RowMajorLess{});
}

std::optional<std::size_t> LatticeSet::index_of(Point p) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), p, RowMajorLess{});
  if (it == points_.end() || !(*it == p)) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

Box LatticeSet::bounding_box() const {
  if (points_.empty()) return {};
  Box b{{points_.front().x, points_.front().x},
        {points_.front().y, points_.back().y}};
  for (const Point& p : points_) {
    b.x.lo = std::min(b.x.lo, p.x);
    b.x.hi = std::max(b.x.hi, p.x);
  }
  return b;
}

LatticeSet LatticeSet::translated(Point v) const {
  LatticeSet s;
  s.points_.reserve(points_.size());
  for (const Point& p : points_) s.points_.push_back(p + v);
  return s;
}

LatticeSet LatticeSet::anchored() const {
  if (points_.empty()) return {};
  const Box b = bounding_box();
  return translated({-b.x.lo, -b.y.lo});
}

LatticeSet LatticeSet::rotated(int quarter_turns) const {
  std::vector<Point> out;
  out.reserve(points_.size());
  for (const Point& p : points_) out.push_back(rotate(p, quarter_turns));
  return LatticeSet(std::move(out));
}

LatticeSet LatticeSet::without(Point p) const {
  LatticeSet s;
  s.points_.reserve(points_.size());
  for (const Point& q : points_) {
    if (!(q == p)) s.points_.push_back(q);
  }
  return s;
}

bool LatticeSet::is_subset_of(const LatticeSet& other) const {
  return std::includes(other.points_.begin(), other.points_.end(),
                       points_.begin(), points_.end(), RowMajorLess{});
}

LatticeSet set_union(const LatticeSet& a, const LatticeSet& b) {
  LatticeSet s;
  s.points_.reserve(a.size() + b.size());
  std::set_union(a.points_.begin(), a.points_.end(), b.points_.begin(),
                 b.points_.end(), std::back_inserter(s.points_),
                 RowMajorLess{});
  return s;
}

LatticeSet set_difference(const LatticeSet& a, const LatticeSet& b) {
  LatticeSet s;
  std::set_difference(a.points_.begin(), a.points_.end(), b.points_.begin(),
                      b.points_.end(), std::back_inserter(s.points_),
                      RowMajorLess{});
  return s;
}

std::string to_string(const LatticeSet& s) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const Point& p : s) {
    if (!first) out << ",";
    out << to_string(p);
    first = false;
  }
  out << "}";
  return out.str();
}

// --- Convex sets --------------------------------------------------------------

std::vector<Point> convex_hull(std::span<const Point> input) {
  std::vector<Point> pts(input.begin(), input.end());
  auto lex = [](const Point& a, const Point& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  };
  std::sort(pts.begin(), pts.end(), lex);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;

  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    const Point& p = pts[i];
    while (k >= lower && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0) {
      --k;
    }
    hull[k++] = p;
  }
  hull.resize(k - 1);
  // All points collinear: the chain collapses to the two extremes.
  if (hull.size() == 2 || (hull.size() > 2 && std::all_of(
      hull.begin(), hull.end(), [&](const Point& p) {
        return cross(hull[1] - hull[0], p - hull[0]) == 0;
      }))) {
    return {pts.front(), pts.back()};
  }
  return hull;
}

namespace {

std::vector<Point> segment_points(Point a, Point b) {
  const Point d = b - a;
  const Coord g = std::gcd(d.x, d.y);
  if (g == 0) return {a};
  const Point step{d.x / g, d.y / g};
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(g) + 1);
  for (Coord i = 0; i <= g; ++i) out.push_back(a + i * step);
  return out;
}

bool inside_hull(std::span<const Point> hull, Point p) {
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point& a = hull[i];
    const Point& b = hull[(i + 1) % hull.size()];
    if (cross(b - a, p - a) < 0) return false;
  }
  return true;
}

}  // namespace

ConvexLatticeSet convex_close(std::span<const Point> points) {
  if (points.empty()) throw PreconditionError("geometry", "empty set");
  ConvexLatticeSet out;
  out.hull_ = convex_hull(points);
  if (out.hull_.size() <= 2) {
    out.points_ = out.hull_.size() == 1
                      ? LatticeSet({out.hull_[0]})
                      : LatticeSet(segment_points(out.hull_[0], out.hull_[1]));
    return out;
  }
  const Box bb = LatticeSet(out.hull_).bounding_box();
  std::vector<Point> pts;
  for (Coord y = bb.y.lo; y <= bb.y.hi; ++y) {
    for (Coord x = bb.x.lo; x <= bb.x.hi; ++x) {
      if (inside_hull(out.hull_, {x, y})) pts.push_back({x, y});
    }
  }
  out.points_ = LatticeSet(std::move(pts));
  return out;
}

ConvexLatticeSet rectangle(Coord w, Coord h, Point origin) {
  if (w <= 0 || h <= 0) throw PreconditionError("geometry", "empty set");
  return convex_close({origin, origin + Point{w - 1, 0},
                       origin + Point{0, h - 1}, origin + Point{w - 1, h - 1}});
}

bool is_convex(const LatticeSet& s) {
  if (s.empty()) return false;
  return convex_close(s).size() == s.size();
}

Coord ConvexLatticeSet::doubled_area() const {
  if (hull_.size() < 3) return 0;
  Coord a = 0;
  for (std::size_t i = 0; i < hull_.size(); ++i) {
    a += cross(hull_[i], hull_[(i + 1) % hull_.size()]);
  }
  return a;
}

LatticeSet ConvexLatticeSet::boundary() const {
  if (hull_.size() <= 2) return points_;
  std::vector<Point> out;
  for (std::size_t i = 0; i < hull_.size(); ++i) {
    auto seg = segment_points(hull_[i], hull_[(i + 1) % hull_.size()]);
    out.insert(out.end(), seg.begin(), seg.end());
  }
  return LatticeSet(std::move(out));
}

ConvexLatticeSet ConvexLatticeSet::translated(Point v) const {
  ConvexLatticeSet out;
  out.points_ = points_.translated(v);
  out.hull_.reserve(hull_.size());
  for (const Point& p : hull_) out.hull_.push_back(p + v);
  return out;
}

ConvexLatticeSet ConvexLatticeSet::rotated(int quarter_turns) const {
  std::vector<Point> h;
  for (const Point& p : hull_) h.push_back(rotate(p, quarter_turns));
  return convex_close(h);
}

LatticeSet edge_set(const LatticeSet& region, const Direction& line_dir) {
  if (region.empty()) throw PreconditionError("geometry", "empty set");
  const Point n = line_dir.plane_normal();
  Coord best = dot(region[0], n);
  for (const Point& p : region) best = std::max(best, dot(p, n));
  std::vector<Point> out;
  for (const Point& p : region) {
    if (dot(p, n) == best) out.push_back(p);
  }
  return LatticeSet(std::move(out));
}

std::vector<std::vector<Point>> lines_parallel_to(const LatticeSet& region,
                                                  const Direction& dir) {
  std::map<Coord, std::vector<Point>> groups;
  for (const Point& p : region) groups[cross(dir.vec(), p)].push_back(p);
  std::vector<std::vector<Point>> out;
  out.reserve(groups.size());
  for (auto& [key, pts] : groups) {
    std::sort(pts.begin(), pts.end(), [&](const Point& a, const Point& b) {
      return dot(a, dir.vec()) < dot(b, dir.vec());
    });
    out.push_back(std::move(pts));
  }
  return out;
}

Coord squared_diameter(const LatticeSet& s) {
  const std::vector<Point> h = convex_hull(s.points());
  Coord best = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t j = i + 1; j < h.size(); ++j) {
      best = std::max(best, norm2(h[i] - h[j]));
    }
  }
  return best;
}

// --- Segment neighborhoods ----------------------------------------------------

SegmentNeighborhood SegmentNeighborhood::euclidean(Direction d, Rational s,
                                                   Rational t) {
  if (s < Rational(0)) throw PreconditionError("geometry", "scale must be nonnegative");
  if (t <= Rational(0)) throw PreconditionError("geometry", "thickness must be positive");
  return {d, Surd::rational(s, d.norm2()), t};
}

SegmentNeighborhood SegmentNeighborhood::lattice(Direction d, Rational lambda,
                                                 Rational t) {
  if (lambda < Rational(0)) throw PreconditionError("geometry", "scale must be nonnegative");
  if (t <= Rational(0)) throw PreconditionError("geometry", "thickness must be positive");
  return {d, Surd(Rational(0), lambda, d.norm2()), t};
}

LatticeSet neighborhood_points(const SegmentNeighborhood& nbhd) {
  const Point v = nbhd.direction.vec();
  const Coord big_d = nbhd.direction.norm2();
  const Rational t2 = nbhd.thickness * nbhd.thickness;
  // Endpoint of the segment is w·v with w = s / sqrt(D).
  const Surd& s = nbhd.scale;
  const Surd w(s.radical_part(), s.rational_part() / big_d, big_d);

  const double wv = w.value();
  const double tv = to_double(nbhd.thickness);
  const double ex = wv * static_cast<double>(v.x);
  const double ey = wv * static_cast<double>(v.y);
  const Box bb{{static_cast<Coord>(std::floor(std::min(0.0, ex) - tv)) - 1,
                static_cast<Coord>(std::ceil(std::max(0.0, ex) + tv)) + 1},
               {static_cast<Coord>(std::floor(std::min(0.0, ey) - tv)) - 1,
                static_cast<Coord>(std::ceil(std::max(0.0, ey) + tv)) + 1}};

  std::vector<Point> out;
  for (Coord y = bb.y.lo; y <= bb.y.hi; ++y) {
    for (Coord x = bb.x.lo; x <= bb.x.hi; ++x) {
      const Point n{x, y};
      const Coord nv = dot(n, v);
      bool inside;
      if (nv <= 0) {
        inside = Rational(norm2(n)) < t2;
      } else if (w <= Surd::rational(Rational(nv, big_d), big_d)) {
        // Beyond the far endpoint: |n - w v|² = |n|² - 2 w <n,v> + w² D.
        const Surd d2 = Surd::rational(Rational(norm2(n)), big_d) -
                        Surd::rational(Rational(2 * nv), big_d) * w +
                        w * w * Surd::rational(Rational(big_d), big_d);
        inside = d2 < Surd::rational(t2, big_d);
      } else {
        const Coord c = cross(n, v);
        inside = Rational(c * c, big_d) < t2;
      }
      if (inside) out.push_back(n);
    }
  }
  return LatticeSet(std::move(out));
}

// --- Thickness ----------------------------------------------------------------

Surd thickness(const ConvexLatticeSet& region, const Direction& dir) {
  const Point v = dir.vec();
  const Coord big_d = dir.norm2();
  const auto hull = region.hull();
  if (hull.size() <= 1) return Surd::rational(Rational(0), big_d);
  if (hull.size() == 2) {
    const Point e = hull[1] - hull[0];
    if (cross(e, v) != 0) return Surd::rational(Rational(0), big_d);
    const Coord proj = dot(e, v);
    return Surd(Rational(0), Rational(proj < 0 ? -proj : proj, big_d), big_d);
  }
  // The longest chord in a fixed direction passes through a hull vertex.
  Rational best(0);
  for (const Point& p : hull) {
    bool bounded_below = false, bounded_above = false;
    Rational lo(0), hi(0);
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const Point a = hull[i];
      const Point e = hull[(i + 1) % hull.size()] - a;
      const Coord ev = cross(e, v);
      if (ev == 0) continue;
      // cross(e, p - a) + lambda * ev >= 0
      const Rational bound(-cross(e, p - a), ev);
      if (ev > 0) {
        if (!bounded_below || bound > lo) lo = bound;
        bounded_below = true;
      } else {
        if (!bounded_above || bound < hi) hi = bound;
        bounded_above = true;
      }
    }
    if (bounded_below && bounded_above && hi - lo > best) best = hi - lo;
  }
  return Surd(Rational(0), best, big_d);
}

// --- Trapezoid ----------------------------------------------------------------

TrapezoidSets trapezoid_region(const TrapezoidRegion& t) {
  if (t.n1 <= 0 || t.k1 <= 0 || t.m <= 0 || t.k <= 0) {
    throw PreconditionError("geometry", "trapezoid parameters must be positive");
  }
  const Coord margin = 7 * t.m * t.n1 * t.k1;
  if (!(t.k > 2 * margin)) {
    throw PreconditionError("geometry", "degenerate trapezoid: need k > 14*m*n1*k1");
  }
  std::vector<Point> tp;
  for (Coord i = 0; i < t.n1; ++i) {
    for (Coord j = 0; j < t.k; ++j) tp.push_back({i, j});
  }
  for (Coord i = t.n1; i <= t.m - 1; ++i) {
    for (Coord j = t.k1 * (i - t.n1); j <= t.k - 1 - t.k1 * (i - t.n1); ++j) {
      tp.push_back({i, j});
    }
  }
  TrapezoidSets out;
  out.t = LatticeSet(std::move(tp));
  out.b = LatticeSet::from_box({{0, t.m - 1}, {margin, t.k - margin}});
  return out;
}

}  // namespace latticelab
