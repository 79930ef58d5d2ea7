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
#include <optional>
#include <vector>

#include "latticelab/configuration.hpp"

namespace latticelab {

// f: {a, a+1, ..., a+i-1} -> alphabet.
struct FiniteWord {
  Coord start = 0;
  std::vector<Symbol> values;

  Coord length() const { return static_cast<Coord>(values.size()); }
  Symbol at(Coord pos) const { return values[static_cast<std::size_t>(pos - start)]; }
};

struct PeriodReport {
  bool periodic = false;
  std::optional<Coord> period;
  // Closed interval of positions on which `period` was verified.
  std::optional<Interval> certified;
};

// Number of distinct length-n factors (1 for n = 0).
std::uint64_t word_complexity(const FiniteWord& f, Coord n);

// Least p >= 1 with f(x + p) = f(x) whenever both x and x + p lie in `span`.
Coord least_period(const FiniteWord& f, const Interval& span);

// Finite Morse-Hedlund test. Requires length > 3·n0. If P_f(n0) <= n0,
// reports the least period of f on [a+n0, a+i-n0] (necessarily <= n0);
// otherwise reports periodic = false with no certificate ("unknown", not
// "aperiodic").
PeriodReport morse_hedlund_check(const FiniteWord& f, Coord n0);

// Least p in [1, max_period] with η(x + p·dir) = η(x) for all x with x and
// x + p·dir both in `window`. A shift only counts when every cell whose line
// along dir meets the window in more than p points is compared with a
// partner, so shifts too long for the window are never reported as vacuous
// periods.
PeriodReport directional_period_scan(const Configuration& config, const Box& window,
                                     const Direction& dir, Coord max_period);

}  // namespace latticelab
