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

#include <optional>
#include <string>
#include <utility>

#include "latticelab/complexity.hpp"
#include "latticelab/configuration.hpp"
#include "latticelab/geometry.hpp"

namespace latticelab {

// Scale-bound evidence about the line through the origin along a direction:
// whether, among observed colorings of `window`, agreement on the strip of
// points at distance < radius from the line forces agreement on the window.
struct ExpansivityReport {
  Direction direction = Direction::e1();
  Rational radius{1};
  SearchBox window;  // absolute coordinates
  SearchBox box;     // translates observed
  LatticeSet strip;  // strip ∩ window, absolute coordinates
  std::size_t window_patterns = 0;
  std::size_t strip_classes = 0;
  bool determined = true;
  // Two window colorings equal on the strip but different elsewhere.
  std::optional<std::pair<Pattern, Pattern>> witness;
};

ExpansivityReport probe_expansive(const Configuration& config, const Direction& dir,
                                  const Rational& r, const SearchBox& window,
                                  const SearchBox& box);

// n lies strictly closer than r to the line R·dir, decided exactly.
bool in_strip(Point n, const Direction& dir, const Rational& r);

// A pattern on a full rectangle rendered in the grid file format.
std::string pattern_grid(const Pattern& pattern, const Alphabet& alphabet);

}  // namespace latticelab
