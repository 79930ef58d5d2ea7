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
#include <vector>

#include "latticelab/configuration.hpp"
#include "latticelab/geometry.hpp"

namespace latticelab {

// A coloring of a finite lattice set, anchored so that the support's bounding
// box min-corner is the origin. values[i] colors support[i] (row-major order).
struct Pattern {
  LatticeSet support;
  std::vector<Symbol> values;

  Symbol at(Point p) const;
  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend bool operator<(const Pattern& a, const Pattern& b);
};

// Distinct colorings of one region, stored flat: pattern i occupies
// data[i*width, (i+1)*width), aligned with support order. Sorted
// lexicographically.
class PatternCollection {
 public:
  PatternCollection(LatticeSet support, std::vector<Symbol> data);

  const LatticeSet& support() const { return support_; }
  std::size_t width() const { return support_.size(); }
  std::size_t size() const { return width() == 0 ? 0 : data_.size() / width(); }
  std::span<const Symbol> operator[](std::size_t i) const {
    return {data_.data() + i * width(), width()};
  }
  bool contains(std::span<const Symbol> values) const;
  Pattern pattern(std::size_t i) const;

 private:
  LatticeSet support_;
  std::vector<Symbol> data_;
};

struct ComplexityResult {
  std::uint64_t count = 0;
  LatticeSet region;
  SearchBox box;
  // True iff the configuration proves the box reaches every translate's
  // pattern; otherwise count is a lower bound on the true complexity.
  bool exact = false;
};

// Throws ExactnessError naming the first translate n in `box` with
// region + n outside the exact region, and PreconditionError on an empty
// region or box.
void check_translates_exact(const Configuration& config, const LatticeSet& region,
                            const SearchBox& box);

// {T^n η|region : n in box}, deduplicated, where T^n η(x) = η(x + n).
PatternCollection collect_patterns(const Configuration& config,
                                   const LatticeSet& region, const SearchBox& box);
std::vector<Pattern> patterns_of(const Configuration& config, const LatticeSet& region,
                                 const SearchBox& box);

ComplexityResult complexity(const Configuration& config, const LatticeSet& region,
                            const SearchBox& box);
inline ComplexityResult complexity(const Configuration& config,
                                   const ConvexLatticeSet& region,
                                   const SearchBox& box) {
  return complexity(config, region.points(), box);
}

// Counts only; same semantics as complexity().count.
std::uint64_t count_patterns(const Configuration& config, const LatticeSet& region,
                             const SearchBox& box);

// P(n, k) for rectangles [0,n-1]×[0,k-1].
std::uint64_t rectangle_complexity(const Configuration& config, Coord n, Coord k,
                                   const SearchBox& box);

struct RectangleTable {
  Coord n_max = 0;
  Coord k_max = 0;
  // counts[n-1][k-1] = P(n, k)
  std::vector<std::vector<std::uint64_t>> counts;
  std::vector<std::vector<bool>> exact;

  std::uint64_t at(Coord n, Coord k) const {
    return counts[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)];
  }
};

RectangleTable rectangle_table(const Configuration& config, Coord n_max, Coord k_max,
                               const SearchBox& box);

struct NivatPair {
  Coord n = 0;
  Coord k = 0;
  std::uint64_t count = 0;
  friend bool operator==(const NivatPair&, const NivatPair&) = default;
};

// All (n, k) in range with P(n, k) <= n·k, ascending lexicographically.
std::vector<NivatPair> nivat_scan(const Configuration& config, Coord n_max,
                                  Coord k_max, const SearchBox& box);

}  // namespace latticelab
