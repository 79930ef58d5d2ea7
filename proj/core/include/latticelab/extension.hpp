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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "latticelab/complexity.hpp"
#include "latticelab/configuration.hpp"
#include "latticelab/geometry.hpp"

namespace latticelab {

// The colorings of a base region seen over a search box; a finite stand-in
// for the region's language in the orbit closure.
struct ObservedLanguage {
  LatticeSet base_region;
  PatternCollection patterns;  // support = base_region.anchored()
  SearchBox provenance;

  static ObservedLanguage observe(const Configuration& config, const LatticeSet& region,
                                  const SearchBox& box);
  bool contains(std::span<const Symbol> values) const { return patterns.contains(values); }
};

// x is generated by `region` iff every observed coloring of region \ {x}
// has exactly one observed extension, i.e. P(region \ {x}) = P(region).
bool is_generated(const Configuration& config, const LatticeSet& region, Point x,
                  const SearchBox& box);
inline bool is_generated(const Configuration& config, const ConvexLatticeSet& region,
                         Point x, const SearchBox& box) {
  return is_generated(config, region.points(), x, box);
}

// Every lattice point on the hull boundary of `region` is generated.
bool is_generating_set(const Configuration& config, const ConvexLatticeSet& region,
                       const SearchBox& box);

struct BalancedSetReport {
  ConvexLatticeSet set;
  Direction line_dir = Direction::e2();
  LatticeSet edge;  // E(l, S)
  // (i) endpoints of the edge are generated by S.
  bool endpoints_generated = false;
  // (ii) P(S \ E) > P(S) - |E|.
  bool complexity_drop = false;
  // (iii) every line parallel to l meeting S meets it in >= |E| - 1 points.
  bool lines_long_enough = false;
  // The stronger >= |E| form used when the construction is justified; kept
  // alongside (iii) because the two statements differ.
  bool lines_at_least_edge = false;
  Coord width = 0;
  Coord height = 0;

  std::uint64_t complexity_of_set = 0;
  std::uint64_t complexity_without_edge = 0;

  // Construction details (filled by find_balanced_set only).
  bool periodic_branch = false;
  Coord minimal_side = 0;              // n1' in the frame where l points up
  std::optional<Coord> column_period;  // p on the periodic branch
  std::optional<std::uint64_t> column_complexity;  // c on the periodic branch

  bool balanced() const {
    return endpoints_generated && complexity_drop && lines_long_enough;
  }
};

// Literal check of the three balanced-set conditions for S and l.
BalancedSetReport verify_balanced(const Configuration& config, const ConvexLatticeSet& set,
                                  const Direction& line_dir, const SearchBox& box);

// Constructs an l-balanced set for an axis direction l from a Nivat pair
// P(n1, k1) <= n1·k1. Throws PreconditionError("no Nivat pair") when the
// pair fails over the box, and Error when no candidate verifies.
BalancedSetReport find_balanced_set(const Configuration& config, Coord n1, Coord k1,
                                    const Direction& line_dir, const SearchBox& box);

// J_{T,l,S} = {j : (S + j) \ T = E(l, S) + j}, ordered along l. Requires
// that T contains a translate of S and has an edge parallel to l.
std::vector<Point> extension_candidates(const LatticeSet& t, const LatticeSet& s,
                                        const Direction& line_dir);
inline std::vector<Point> extension_candidates(const ConvexLatticeSet& t,
                                               const ConvexLatticeSet& s,
                                               const Direction& line_dir) {
  return extension_candidates(t.points(), s.points(), line_dir);
}

// Drops the p candidates nearest each end of an ordered J.
std::vector<Point> trim_candidates(std::vector<Point> j, Coord p);

struct ExtensionResult {
  LatticeSet region;
  Coord steps_applied = 0;
  // True when an iteration found no candidates left after trimming.
  bool reached_fixed_point = false;
};

// ext^n_{l,S,p}(T); ext^0 = T.
ExtensionResult extend_region(const LatticeSet& t, const LatticeSet& s,
                              const Direction& line_dir, Coord p, Coord n);

// ∂_{l,S,p}(T) = union over j in J_{T,l,S,p} of (S \ E(l, S)) + j.
LatticeSet border(const LatticeSet& t, const LatticeSet& s, const Direction& line_dir,
                  Coord p);

enum class ColoringVerdict { kYes, kNo, kUndecided };

// Decides whether f (values in R order) extends to a coloring of R dilated
// by the language's base region such that every translate of the base
// region meeting R shows an observed pattern. Search stops with kUndecided
// after `node_budget` assignments.
ColoringVerdict is_s_eta_coloring(const Configuration& config, const LatticeSet& r,
                                  std::span<const Symbol> f,
                                  const ObservedLanguage& s_language,
                                  std::size_t node_budget = 1'000'000);

enum class DichotomyClass { kUniqueExtension, kPeriodicOnB, kViolation };

struct SeedReport {
  std::vector<Symbol> seed;  // coloring of [0,n1-1]×[0,k-1]
  std::uint64_t extensions = 0;
  DichotomyClass verdict = DichotomyClass::kUniqueExtension;
  std::optional<Coord> period;  // largest least vertical period over extensions
};

struct DichotomyReport {
  TrapezoidRegion params;
  SearchBox box;
  bool exact = false;
  std::size_t t_size = 0;
  std::size_t b_size = 0;
  std::vector<SeedReport> seeds;

  std::size_t count(DichotomyClass c) const;
};

// Classifies every observed coloring of [0,n1-1]×[0,k-1] by how it extends
// to T_{m,k}: uniquely, only to colorings vertically periodic on B_{m,k},
// or neither (a violation of the dichotomy at this box).
DichotomyReport trapezoid_dichotomy(const Configuration& config, Coord n1, Coord k1,
                                    Coord m, Coord k, const SearchBox& box);

const char* to_string(DichotomyClass c);
const char* to_string(ColoringVerdict v);

}  // namespace latticelab
