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

#include <random>

#include "latticelab/catalog.hpp"
#include "latticelab/complexity.hpp"
#include "latticelab/error.hpp"
#include "latticelab/parallel.hpp"
#include "support/oracles.hpp"

using namespace latticelab;

namespace {

Configuration stripes() { return build_config("stripes:p=2"); }
Configuration checker() { return build_config("checkerboard"); }

LatticeSet random_convex(std::mt19937_64& rng, Coord w, Coord h) {
  const auto pts = oracle::random_points(rng, w, h, 1 + static_cast<int>(rng() % 5));
  return convex_close(std::span<const Point>(pts)).points();
}

}  // namespace

TEST(Patterns, ConstantHasOne) {
  const auto c = build_config("constant");
  const auto r = complexity(c, rectangle(4, 3), Box::sized(5, 5));
  EXPECT_EQ(r.count, 1u);
  EXPECT_TRUE(r.exact);
}

TEST(Patterns, StripesSinglePoint) {
  EXPECT_EQ(patterns_of(stripes(), LatticeSet{{0, 0}}, Box::sized(10, 10)).size(), 2u);
}

TEST(Patterns, CheckerboardDomino) {
  const auto c = checker();
  const auto pats = patterns_of(c, LatticeSet{{0, 0}, {1, 0}}, Box::sized(8, 8));
  ASSERT_EQ(pats.size(), 2u);
  EXPECT_EQ(pats[0].values, (std::vector<Symbol>{0, 1}));
  EXPECT_EQ(pats[1].values, (std::vector<Symbol>{1, 0}));
  EXPECT_EQ(pats[0].support, (LatticeSet{{0, 0}, {1, 0}}));
}

TEST(Patterns, EscapingExactRegionNamesTranslate) {
  const auto c = load_grid("alphabet: a,b\nab\nba\n");
  try {
    complexity(c, LatticeSet{{0, 0}, {1, 0}}, Box::sized(2, 1));
    FAIL() << "expected ExactnessError";
  } catch (const ExactnessError& e) {
    EXPECT_NE(std::string(e.what()).find("n=(1,0)"), std::string::npos) << e.what();
  }
}

TEST(Patterns, EmptyRegionRejected) {
  EXPECT_THROW(complexity(stripes(), LatticeSet{}, Box::sized(2, 2)), PreconditionError);
}

TEST(ComplexityTest, Section5ClosedFormSmall) {
  const auto c = build_config("section5:L=6");
  for (Coord n = 1; n <= 6; ++n) {
    for (Coord k = 1; k <= 4; ++k) {
      const Box box{{0, 63}, {-k - 1, 1}};
      EXPECT_EQ(rectangle_complexity(c, n, k, box), static_cast<std::uint64_t>(k + 1) << n)
          << n << "x" << k;
    }
  }
}

TEST(ComplexityTest, DoublyPeriodicBoundedByPeriodArea) {
  for (Coord p = 1; p <= 3; ++p) {
    for (Coord q = 1; q <= 3; ++q) {
      Grid patch{p, q, {}};
      for (Coord i = 0; i < p * q; ++i) patch.cells.push_back(static_cast<Symbol>(i));
      const auto c = make_periodic(patch, Alphabet::numeric(static_cast<std::size_t>(p * q)),
                                   {p, 0}, {0, q});
      const auto t = rectangle_table(c, 5, 5, Box::sized(p, q));
      for (Coord n = 1; n <= 5; ++n) {
        for (Coord k = 1; k <= 5; ++k) EXPECT_LE(t.at(n, k), static_cast<std::uint64_t>(p * q));
      }
    }
  }
}

TEST(ComplexityTest, MatchesBruteForceOnRandomRegions) {
  std::mt19937_64 rng(0xc0ffee);
  const std::vector<Configuration> configs = {
      stripes(), checker(), build_config("debruijn_lift:L=5"), build_config("section5:L=5"),
      build_config("section2:L=6,max_n=2")};
  for (int iter = 0; iter < 120; ++iter) {
    const auto& c = configs[static_cast<std::size_t>(iter) % configs.size()];
    const auto region = random_convex(rng, 6, 5);
    const Box box{{-3, 40}, {-4, 12}};
    const auto got = complexity(c, region, box).count;
    EXPECT_EQ(got, oracle::count(c, oracle::to_set(region), box))
        << c.descriptor().to_string() << " " << to_string(region);
  }
}

TEST(ComplexityTest, SerialAndParallelAgree) {
  const auto c = build_config("section5:L=10");
  const Box box{{0, 1023}, {-6, 2}};
  const auto region = LatticeSet::from_box({{0, 7}, {0, 3}});
  std::uint64_t serial = 0, parallel4 = 0;
  {
    parallel::ScopedThreadCount one(1);
    serial = count_patterns(c, region, box);
  }
  {
    parallel::ScopedThreadCount four(4);
    parallel4 = count_patterns(c, region, box);
  }
  EXPECT_EQ(serial, parallel4);
  EXPECT_EQ(serial, 5u << 8);
}

TEST(Table, StripesAndCheckerboardAreConstant) {
  for (const auto& c : {stripes(), checker()}) {
    const auto t = rectangle_table(c, 4, 4, Box::sized(16, 16));
    for (Coord n = 1; n <= 4; ++n) {
      for (Coord k = 1; k <= 4; ++k) {
        EXPECT_EQ(t.at(n, k), 2u);
        EXPECT_TRUE(t.exact[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)]);
      }
    }
  }
}

TEST(Table, DeBruijnLiftFirstColumnIsFull) {
  const auto c = build_config("debruijn_lift:L=6");
  const auto t = rectangle_table(c, 6, 3, Box::sized(64, 1));
  for (Coord n = 1; n <= 6; ++n) {
    EXPECT_EQ(t.at(n, 1), std::uint64_t{1} << n);
    EXPECT_EQ(t.at(n, 3), std::uint64_t{1} << n);
  }
}

TEST(Table, MonotoneInBothArguments) {
  const auto c = build_config("section5:L=5");
  const auto t = rectangle_table(c, 5, 5, Box{{0, 31}, {-6, 1}});
  for (Coord n = 1; n <= 5; ++n) {
    for (Coord k = 1; k <= 5; ++k) {
      if (n > 1) EXPECT_LE(t.at(n - 1, k), t.at(n, k));
      if (k > 1) EXPECT_LE(t.at(n, k - 1), t.at(n, k));
    }
  }
}

TEST(Nivat, ExpectedPairsPresent) {
  const auto s = nivat_scan(stripes(), 3, 3, Box::sized(4, 4));
  EXPECT_NE(std::find(s.begin(), s.end(), NivatPair{1, 2, 2}), s.end());
  const auto ch = nivat_scan(checker(), 3, 3, Box::sized(4, 4));
  EXPECT_NE(std::find(ch.begin(), ch.end(), NivatPair{2, 1, 2}), ch.end());
  EXPECT_TRUE(std::is_sorted(s.begin(), s.end(), [](const NivatPair& a, const NivatPair& b) {
    return a.n != b.n ? a.n < b.n : a.k < b.k;
  }));
}

TEST(Nivat, DeBruijnLiftHasNoSingleRowPair) {
  const auto c = build_config("debruijn_lift:L=6");
  for (const auto& p : nivat_scan(c, 6, 1, Box::sized(64, 1))) {
    ADD_FAILURE() << "unexpected pair " << p.n << "," << p.k;
  }
}

TEST(Properties, MonotoneUnderInclusion) {
  std::mt19937_64 rng(0x1001);
  const auto c = build_config("section5:L=6");
  const Box box{{0, 63}, {-8, 3}};
  for (int iter = 0; iter < 60; ++iter) {
    const auto a = random_convex(rng, 5, 4);
    auto more = std::vector<Point>(a.begin(), a.end());
    const auto extra = oracle::random_points(rng, 7, 5, 2);
    more.insert(more.end(), extra.begin(), extra.end());
    const auto b = convex_close(std::span<const Point>(more)).points();
    ASSERT_TRUE(a.is_subset_of(b));
    EXPECT_LE(count_patterns(c, a, box), count_patterns(c, b, box));
  }
}

TEST(Properties, TranslationInvariant) {
  std::mt19937_64 rng(0x1002);
  const auto c = checker();
  for (int iter = 0; iter < 40; ++iter) {
    const auto a = random_convex(rng, 5, 5);
    const Point v{static_cast<Coord>(rng() % 11) - 5, static_cast<Coord>(rng() % 11) - 5};
    EXPECT_EQ(count_patterns(c, a, Box::sized(4, 4)),
              count_patterns(c, a.translated(v), Box::sized(4, 4)));
  }
}

TEST(Properties, BoxGrowthNeverDecreases) {
  const auto c = build_config("section5:L=5");
  const auto region = LatticeSet::from_box({{0, 2}, {0, 1}});
  std::uint64_t prev = 0;
  for (Coord w = 1; w <= 40; w += 3) {
    const auto now = count_patterns(c, region, Box{{0, w - 1}, {-3, 1}});
    EXPECT_GE(now, prev);
    prev = now;
  }
}

TEST(Properties, PeriodicCountStableBeyondFundamentalDomain) {
  const auto c = build_config("stripes:p=3");
  const auto region = LatticeSet::from_box({{0, 3}, {0, 2}});
  const auto base = complexity(c, region, Box::sized(3, 1));
  EXPECT_TRUE(base.exact);
  for (Coord w = 3; w <= 12; ++w) EXPECT_EQ(count_patterns(c, region, Box::sized(w, w)), base.count);
}
