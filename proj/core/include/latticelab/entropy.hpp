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

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "latticelab/complexity.hpp"
#include "latticelab/configuration.hpp"
#include "latticelab/geometry.hpp"

namespace latticelab {

// log P_η([0, s·û]^(t)) over a grid of thicknesses t and scales s, where s
// is the Euclidean length of the segment.
struct EntropyProfile {
  Direction direction = Direction::e2();
  SearchBox box;
  std::vector<Rational> thickness_values;
  std::vector<Coord> scales;
  // Indexed [t][s].
  std::vector<std::vector<std::uint64_t>> counts;
  std::vector<std::vector<double>> log_counts;
  std::vector<std::vector<bool>> exact;
  // Per t: least-squares slope of (s, log P) and the difference quotient of
  // the last two scales.
  std::vector<double> slope_fit;
  std::vector<double> slope_diff;
  // Max over t of slope_diff.
  double sup_slope = 0.0;
};

EntropyProfile directional_entropy_profile(const Configuration& config, const Direction& dir,
                                           std::span<const Rational> t_list,
                                           std::span<const Coord> s_list,
                                           const SearchBox& box);

struct NormalizedCount {
  Coord n = 0;
  std::uint64_t count = 0;
  double value = 0.0;  // log P(n, n) / n²
};

std::vector<NormalizedCount> topological_entropy_estimate(const Configuration& config,
                                                          std::span<const Coord> n_list,
                                                          const SearchBox& box);

struct ConvexRatio {
  std::size_t index = 0;
  std::uint64_t count = 0;
  double thickness = 0.0;
  double value = 0.0;  // log P(K_i) / τ_u(K_i)
};

// Throws PreconditionError naming the region index when its thickness in
// direction `dir` is zero.
std::vector<ConvexRatio> convex_criterion_check(const Configuration& config,
                                                std::span<const ConvexLatticeSet> regions,
                                                const Direction& dir, const SearchBox& box);

struct BoundStep {
  Coord s_from = 0;
  Coord s_to = 0;
  std::uint64_t count_from = 0;
  std::uint64_t count_to = 0;
  double log_bound = 0.0;  // log of |A|^(2d·(s_to - s_from))·P(s_from)
  bool holds = false;
};

// Checks P([0,(s+1)û]^(t)) <= |A|^(2d)·P([0,s·û]^(t)) for consecutive
// entries of s_list, with d the diameter of S; a gap of g scale units uses
// the g-fold bound. Requires S generating and t > d.
std::vector<BoundStep> generating_bound_check(const Configuration& config,
                                              const ConvexLatticeSet& s, const Direction& dir,
                                              const Rational& t, std::span<const Coord> s_list,
                                              const SearchBox& box);

}  // namespace latticelab
