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

#include <set>
#include <string>

#include "latticelab/configuration.hpp"
#include "latticelab/error.hpp"

using namespace latticelab;

namespace {

std::string as_string(const CyclicWord& w) {
  std::string s;
  for (auto c : w.period) s.push_back(static_cast<char>('0' + c));
  return s;
}

// Distinct cyclic factors of length n, by direct enumeration.
std::size_t cyclic_factors(const CyclicWord& w, std::size_t n) {
  std::set<std::string> seen;
  for (std::size_t i = 0; i < w.length(); ++i) {
    std::string f;
    for (std::size_t j = 0; j < n; ++j) f.push_back(static_cast<char>('0' + w.at(static_cast<Coord>(i + j))));
    seen.insert(f);
  }
  return seen.size();
}

}  // namespace

TEST(Periodic, ConstantFromOneCell) {
  const auto c = make_periodic({1, 1, {0}}, Alphabet({"a"}), {1, 0}, {0, 1});
  for (Coord y = -5; y <= 5; ++y) {
    for (Coord x = -5; x <= 5; ++x) EXPECT_EQ(c.at({x, y}), 0);
  }
}

TEST(Periodic, VerticalStripes) {
  const auto c = make_periodic({2, 1, {0, 1}}, Alphabet({"a", "b"}), {2, 0}, {0, 1});
  for (Coord y = -4; y <= 4; ++y) {
    for (Coord x = -6; x <= 6; ++x) EXPECT_EQ(c.at({x, y}), ((x % 2) + 2) % 2);
  }
}

TEST(Periodic, Checkerboard) {
  const auto c = make_periodic({2, 2, {0, 1, 1, 0}}, Alphabet::numeric(2), {2, 0}, {0, 2});
  for (Coord y = -7; y <= 7; ++y) {
    for (Coord x = -7; x <= 7; ++x) EXPECT_EQ(c.at({x, y}), (((x + y) % 2) + 2) % 2);
  }
}

TEST(Periodic, DependentPeriodsRejected) {
  EXPECT_THROW(make_periodic({2, 1, {0, 1}}, Alphabet::numeric(2), {2, 0}, {4, 0}), PreconditionError);
}

TEST(Periodic, SkewLatticeInvariantOnLargeBox) {
  // Period lattice spanned by (3,1) and (0,2); the patch covers a fundamental domain.
  Grid patch{3, 2, {0, 1, 2, 2, 0, 1}};
  const auto c = make_periodic(patch, Alphabet::numeric(3), {3, 1}, {0, 2});
  for (Coord y = -25; y < 25; ++y) {
    for (Coord x = -25; x < 25; ++x) {
      EXPECT_EQ(c.at({x, y}), c.at({x + 3, y + 1}));
      EXPECT_EQ(c.at({x, y}), c.at({x, y + 2}));
    }
  }
}

TEST(Periodic, InconsistentPatchRejected) {
  EXPECT_THROW(make_periodic({2, 1, {0, 1}}, Alphabet::numeric(2), {1, 0}, {0, 1}), PreconditionError);
}

TEST(DeBruijn, SmallOrders) {
  EXPECT_EQ(as_string(make_debruijn_word(1)), "01");
  EXPECT_EQ(as_string(make_debruijn_word(2)), "0011");
  EXPECT_EQ(as_string(make_debruijn_word(3)), "00010111");
}

TEST(DeBruijn, FullFactorComplexityUpToOrder) {
  for (int order = 1; order <= 10; ++order) {
    const auto w = make_debruijn_word(order);
    ASSERT_EQ(w.length(), std::size_t{1} << order);
    for (int n = 1; n <= order; ++n) {
      EXPECT_EQ(cyclic_factors(w, static_cast<std::size_t>(n)), std::size_t{1} << n)
          << "order " << order << " n " << n;
    }
  }
}

TEST(Section2, MembershipAndRule) {
  EXPECT_TRUE(in_sparse_set(11, 10, 4));
  EXPECT_FALSE(in_sparse_set(12, 10, 4));
  EXPECT_TRUE(in_sparse_set(101, 10, 4));
  EXPECT_TRUE(in_sparse_set(104, 10, 4));
  EXPECT_FALSE(in_sparse_set(109, 10, 4));

  const auto alpha = make_debruijn_word(4);
  const auto c = make_section2_example(alpha, 10, 4);
  for (Coord i = -20; i <= 20; ++i) {
    EXPECT_EQ(c.at({i, 11}), alpha.at(i + 11));
    EXPECT_EQ(c.at({i, 12}), alpha.at(i));
  }
}

TEST(Section2, OffSetRowsCarryAlpha) {
  const auto alpha = make_debruijn_word(5);
  const auto c = make_section2_example(alpha, 10, 3);
  for (Coord j = 0; j < 2000; ++j) {
    if (in_sparse_set(j, 10, 3)) continue;
    for (Coord i = 0; i < 8; ++i) EXPECT_EQ(c.at({i, j}), alpha.at(i));
  }
}

TEST(Section2, QueryBeyondExactRegionFails) {
  const auto c = make_section2_example(make_debruijn_word(3), 10, 2);
  EXPECT_NO_THROW(c.at({0, 999}));
  EXPECT_THROW(c.at({0, 1000}), ExactnessError);
}

TEST(Section5, RuleAndAlphabet) {
  const auto c = make_section5_example(make_debruijn_word(2));
  EXPECT_EQ(c.alphabet().size(), 4u);
  EXPECT_EQ(c.at({0, 0}), 2);
  EXPECT_EQ(c.at({0, 1}), 0);
  EXPECT_EQ(c.at({2, 0}), 3);
}

TEST(Section5, RowsOffZeroAreVerticallyConstant) {
  const auto c = make_section5_example(make_debruijn_word(4));
  for (Coord x = -20; x <= 20; ++x) {
    for (Coord y = -10; y <= 10; ++y) {
      if (y == 0) continue;
      EXPECT_EQ(c.at({x, y}), c.at({x, 1}));
    }
  }
}

TEST(Grid, BackgroundFillsOutside) {
  const auto c = load_grid("alphabet: a,b\nbackground: a\nab\nba\n");
  EXPECT_EQ(c.alphabet().name(c.at({5, 5})), "a");
  EXPECT_EQ(c.alphabet().name(c.at({0, 1})), "a");
  EXPECT_EQ(c.alphabet().name(c.at({1, 1})), "b");
  EXPECT_EQ(c.alphabet().name(c.at({0, 0})), "b");
}

TEST(Grid, NoBackgroundMeansExactFootprint) {
  const auto c = load_grid("alphabet: x\nx\n");
  EXPECT_EQ(c.at({0, 0}), 0);
  EXPECT_THROW(c.at({1, 0}), ExactnessError);
}

TEST(Grid, BackgroundArgument) {
  const auto c = load_grid("alphabet: a,b\naba\n", std::string("b"));
  EXPECT_EQ(c.alphabet().name(c.at({0, 0})), "a");
  EXPECT_EQ(c.alphabet().name(c.at({3, 0})), "b");
}

TEST(Grid, RaggedRowsReportLocation) {
  try {
    load_grid("alphabet: a,b\nab\nabb\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(Grid, UnknownSymbolReportsLocation) {
  try {
    load_grid("alphabet: a,b\nab\naz\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 2);
  }
}

TEST(Grid, WriteParseRoundTrip) {
  GridFile f;
  f.alphabet = Alphabet({"red", "green", "blue"});
  f.grid = Grid{3, 2, {0, 1, 2, 2, 1, 0}};
  const auto again = parse_grid(write_grid(f));
  EXPECT_EQ(again.alphabet, f.alphabet);
  EXPECT_EQ(again.grid.cells, f.grid.cells);
  EXPECT_EQ(write_grid(again), write_grid(f));
}

TEST(ConfigurationTest, RotationMatchesDefinition) {
  const auto c = make_section5_example(make_debruijn_word(3));
  const auto r = c.rotated(1);
  for (Coord y = -4; y <= 4; ++y) {
    for (Coord x = -4; x <= 4; ++x) EXPECT_EQ(r.at({x, y}), c.at(rotate(Point{x, y}, 1)));
  }
  EXPECT_EQ(rotate(Point{1, 0}, 1), (Point{0, 1}));
}

TEST(ConfigurationTest, EvaluationIsDeterministic) {
  const auto c = make_section2_example(make_debruijn_word(6), 10, 3);
  for (Coord j = 0; j < 300; j += 7) {
    for (Coord i = -30; i < 30; i += 3) EXPECT_EQ(c.at({i, j}), c.at({i, j}));
  }
}
