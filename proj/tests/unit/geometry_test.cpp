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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "latticelab/error.hpp"
#include "latticelab/geometry.hpp"
#include "support/oracles.hpp"

using namespace latticelab;

namespace {

LatticeSet from(const oracle::PointSet& s) { return LatticeSet(std::vector<Point>(s.begin(), s.end())); }

// Lattice points strictly within distance t of [0, end], in doubles with a
// guard band; every test case keeps squared distances away from t².
oracle::PointSet distance_scan(Point end, double t) {
  oracle::PointSet out;
  const Coord r = static_cast<Coord>(std::ceil(t)) + 1;
  const Coord x0 = std::min<Coord>(0, end.x) - r, x1 = std::max<Coord>(0, end.x) + r;
  const Coord y0 = std::min<Coord>(0, end.y) - r, y1 = std::max<Coord>(0, end.y) + r;
  const double l2 = static_cast<double>(end.x * end.x + end.y * end.y);
  for (Coord y = y0; y <= y1; ++y) {
    for (Coord x = x0; x <= x1; ++x) {
      double u = l2 == 0 ? 0 : static_cast<double>(x * end.x + y * end.y) / l2;
      u = std::clamp(u, 0.0, 1.0);
      const double dx = x - u * end.x, dy = y - u * end.y;
      if (dx * dx + dy * dy < t * t - 1e-9) out.insert({x, y});
    }
  }
  return out;
}

// Longest chord parallel to v of the polygon, by intersecting each line
// through a hull vertex with every hull edge.
double chord_oracle(const std::vector<Point>& hull, Point v) {
  if (hull.size() < 2) return 0.0;
  const double vn = std::hypot(static_cast<double>(v.x), static_cast<double>(v.y));
  double best = 0.0;
  for (auto base : hull) {
    std::vector<double> params;
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const Point a = hull[i], b = hull[(i + 1) % hull.size()];
      // base + λ v = a + μ (b - a)
      const Point e = b - a, w = a - base;
      const double den = static_cast<double>(cross(v, e));
      if (den == 0) {
        if (cross(v, w) == 0) {
          params.push_back(static_cast<double>(dot(w, v)) / norm2(v));
          params.push_back(static_cast<double>(dot(b - base, v)) / norm2(v));
        }
        continue;
      }
      const double lam = static_cast<double>(cross(w, e)) / den;
      const double mu = static_cast<double>(cross(w, v)) / den;
      if (mu >= -1e-12 && mu <= 1 + 1e-12) params.push_back(lam);
    }
    if (params.empty()) continue;
    const auto [lo, hi] = std::minmax_element(params.begin(), params.end());
    best = std::max(best, (*hi - *lo) * vn);
  }
  return best;
}

}  // namespace

TEST(ConvexClose, RightTriangle) {
  const auto s = convex_close({{0, 0}, {2, 0}, {0, 2}});
  EXPECT_EQ(s.points(), (LatticeSet{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {0, 2}}));
}

TEST(ConvexClose, Singleton) {
  EXPECT_EQ(convex_close({{0, 0}}).points(), (LatticeSet{{0, 0}}));
}

TEST(ConvexClose, PrimitiveSegmentHasNoInteriorPoints) {
  EXPECT_EQ(convex_close({{0, 0}, {3, 1}}).points(), (LatticeSet{{0, 0}, {3, 1}}));
}

TEST(ConvexClose, EmptyInputRejected) {
  EXPECT_THROW(convex_close(std::span<const Point>{}), PreconditionError);
}

TEST(ConvexClose, MatchesTriangleOracleOnRandomInputs) {
  std::mt19937_64 rng(0x5eed01);
  for (int iter = 0; iter < 150; ++iter) {
    const auto pts = oracle::random_points(rng, 9, 9, 1 + static_cast<int>(rng() % 6));
    const auto got = convex_close(std::span<const Point>(pts));
    EXPECT_EQ(got.points(), from(oracle::convex_closure(pts))) << "iteration " << iter;
    EXPECT_TRUE(is_convex(got.points()));
    // Closure is idempotent.
    EXPECT_EQ(convex_close(got.points()), got);
  }
}

TEST(EdgeSet, RectangleRightColumnForE2) {
  const auto r = rectangle(3, 4);
  EXPECT_EQ(edge_set(r, Direction::e2()), (LatticeSet{{2, 0}, {2, 1}, {2, 2}, {2, 3}}));
}

TEST(EdgeSet, RectangleLeftColumnForMinusE2) {
  const auto r = rectangle(3, 4);
  EXPECT_EQ(edge_set(r, -Direction::e2()), (LatticeSet{{0, 0}, {0, 1}, {0, 2}, {0, 3}}));
}

TEST(EdgeSet, TriangleVertex) {
  const auto t = convex_close({{0, 0}, {2, 0}, {0, 2}});
  EXPECT_EQ(edge_set(t, Direction::e2()), (LatticeSet{{2, 0}}));
}

TEST(EdgeSet, MatchesArgmaxOracle) {
  std::mt19937_64 rng(0x5eed02);
  const std::vector<Direction> dirs = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1},
                                       {2, -1}, {-1, 3}, {3, 2}};
  for (int iter = 0; iter < 100; ++iter) {
    const auto pts = oracle::random_points(rng, 8, 8, 1 + static_cast<int>(rng() % 5));
    const auto s = convex_close(std::span<const Point>(pts));
    for (const auto& d : dirs) {
      EXPECT_EQ(edge_set(s, d), from(oracle::edge(oracle::to_set(s.points()), d.vec())));
    }
  }
}

TEST(Neighborhood, HorizontalUnitThickness) {
  const auto n = neighborhood_points(SegmentNeighborhood::euclidean(Direction::e1(), Rational(3), Rational(1)));
  EXPECT_EQ(n, (LatticeSet{{0, 0}, {1, 0}, {2, 0}, {3, 0}}));
}

TEST(Neighborhood, DegenerateSegmentIsADisk) {
  // x² + y² < 9/4 admits the diagonal neighbors too (2 < 9/4).
  const auto n = neighborhood_points(
      SegmentNeighborhood::euclidean(Direction::e2(), Rational(0), Rational(3, 2)));
  EXPECT_EQ(n, LatticeSet::from_box({{-1, 1}, {-1, 1}}));
  const auto small = neighborhood_points(
      SegmentNeighborhood::euclidean(Direction::e2(), Rational(0), Rational(7, 5)));
  EXPECT_EQ(small, (LatticeSet{{0, -1}, {-1, 0}, {0, 0}, {1, 0}, {0, 1}}));
}

TEST(Neighborhood, DiagonalLatticeEndpoint) {
  const auto n = neighborhood_points(
      SegmentNeighborhood::lattice(Direction(1, 1), Rational(2), Rational(1, 2)));
  EXPECT_EQ(n, (LatticeSet{{0, 0}, {1, 1}, {2, 2}}));
}

TEST(Neighborhood, MatchesDistanceScan) {
  const std::vector<Direction> dirs = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {-1, 2}, {3, -2}};
  const std::vector<Rational> ts = {Rational(1), Rational(3, 2), Rational(5, 2), Rational(7, 3)};
  for (const auto& d : dirs) {
    for (const auto& t : ts) {
      for (Coord lam = 0; lam <= 5; ++lam) {
        const auto got = neighborhood_points(SegmentNeighborhood::lattice(d, Rational(lam), t));
        EXPECT_EQ(got, from(distance_scan(lam * d.vec(), to_double(t))))
            << to_string(d) << " t=" << to_string(t) << " lambda=" << lam;
      }
    }
  }
}

TEST(Neighborhood, EuclideanAndLatticeScalesAgreeOnAxes) {
  for (Coord s = 0; s <= 10; ++s) {
    EXPECT_EQ(neighborhood_points(SegmentNeighborhood::euclidean(Direction::e2(), Rational(s), Rational(2))),
              neighborhood_points(SegmentNeighborhood::lattice(Direction::e2(), Rational(s), Rational(2))));
  }
}

TEST(Thickness, RectangleHorizontalChord) {
  for (Coord n = 1; n <= 6; ++n) {
    EXPECT_EQ(thickness(rectangle(n, 3), Direction::e1()), Surd::rational(Rational(n - 1), 1));
  }
}

TEST(Thickness, RectangleDiagonal) {
  const Surd t = thickness(rectangle(4, 5), Direction(3, 4));
  EXPECT_DOUBLE_EQ(t.value(), 5.0);
}

TEST(Thickness, SingletonIsZero) {
  EXPECT_EQ(thickness(convex_close({{2, 3}}), Direction(1, 2)).sign(), 0);
}

TEST(Thickness, MatchesChordOracle) {
  std::mt19937_64 rng(0x5eed03);
  const std::vector<Direction> dirs = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {-1, 3}, {3, 4}};
  for (int iter = 0; iter < 80; ++iter) {
    const auto pts = oracle::random_points(rng, 10, 10, 2 + static_cast<int>(rng() % 5));
    const auto s = convex_close(std::span<const Point>(pts));
    const std::vector<Point> hull(s.hull().begin(), s.hull().end());
    for (const auto& d : dirs) {
      EXPECT_NEAR(thickness(s, d).value(), chord_oracle(hull, d.vec()), 1e-9);
    }
  }
}

TEST(Trapezoid, DegenerateRejected) {
  EXPECT_THROW(trapezoid_region({1, 1, 2, 28}), PreconditionError);
}

TEST(Trapezoid, SingleColumnSeed) {
  const auto sets = trapezoid_region({1, 1, 2, 29});
  for (Coord j = 0; j <= 28; ++j) {
    EXPECT_TRUE(sets.t.contains({0, j}));
    EXPECT_TRUE(sets.t.contains({1, j}));
  }
  EXPECT_EQ(sets.t.size(), 58u);
  EXPECT_EQ(sets.b, (LatticeSet{{0, 14}, {1, 14}, {0, 15}, {1, 15}}));
  EXPECT_TRUE(sets.b.is_subset_of(sets.t));
}

TEST(Trapezoid, WideSeedIsRectangle) {
  EXPECT_THROW(trapezoid_region({2, 1, 2, 29}), PreconditionError);
  const auto sets = trapezoid_region({2, 1, 2, 57});
  EXPECT_EQ(sets.t, LatticeSet::from_box({{0, 1}, {0, 56}}));
}

TEST(Trapezoid, BInsideTOnRandomParameters) {
  std::mt19937_64 rng(0x5eed04);
  for (int iter = 0; iter < 50; ++iter) {
    const Coord n1 = 1 + static_cast<Coord>(rng() % 3), k1 = 1 + static_cast<Coord>(rng() % 3);
    const Coord m = 1 + static_cast<Coord>(rng() % 4);
    const Coord k = 14 * m * n1 * k1 + 1 + static_cast<Coord>(rng() % 20);
    const auto sets = trapezoid_region({n1, k1, m, k});
    EXPECT_FALSE(sets.b.empty());
    EXPECT_TRUE(sets.b.is_subset_of(sets.t));
  }
}

TEST(DirectionTest, NonPrimitiveRejected) {
  EXPECT_THROW(Direction(2, 4), PreconditionError);
  EXPECT_EQ(Direction::primitive_of(2, 4), Direction(1, 2));
}

TEST(SurdTest, ExactSignOfNearlyEqualValues) {
  // 140/99 < sqrt(2) < 577/408
  EXPECT_EQ((Surd(Rational(0), Rational(1), 2) - Surd::rational(Rational(140, 99), 2)).sign(), 1);
  EXPECT_EQ((Surd(Rational(0), Rational(1), 2) - Surd::rational(Rational(577, 408), 2)).sign(), -1);
  EXPECT_EQ(Surd(Rational(0), Rational(3), 4).rational_part(), Rational(6));
}
