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

#include "latticelab/periodicity.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>

#include "latticelab/error.hpp"

namespace latticelab {

std::uint64_t word_complexity(const FiniteWord& f, Coord n) {
  if (n < 0 || n > f.length()) {
    throw PreconditionError("periodicity", "factor length " + std::to_string(n) +
                                               " outside [0, " +
                                               std::to_string(f.length()) + "]");
  }
  if (n == 0) return 1;
  const std::string_view text(reinterpret_cast<const char*>(f.values.data()),
                              f.values.size());
  std::unordered_set<std::string_view> factors;
  const auto len = static_cast<std::size_t>(n);
  for (std::size_t m = 0; m + len <= text.size(); ++m) factors.insert(text.substr(m, len));
  return factors.size();
}

Coord least_period(const FiniteWord& f, const Interval& span) {
  for (Coord p = 1; p < span.length(); ++p) {
    bool ok = true;
    for (Coord x = span.lo; x + p <= span.hi && ok; ++x) ok = f.at(x) == f.at(x + p);
    if (ok) return p;
  }
  return span.length();
}

PeriodReport morse_hedlund_check(const FiniteWord& f, Coord n0) {
  if (n0 < 1) throw PreconditionError("periodicity", "n0 must be positive");
  if (!(f.length() > 3 * n0)) {
    throw PreconditionError("periodicity", "word too short for hypothesis: need length > 3*n0");
  }
  PeriodReport report;
  if (word_complexity(f, n0) > static_cast<std::uint64_t>(n0)) return report;
  const Interval span{f.start + n0, f.start + f.length() - n0};
  const Coord p = least_period(f, span);
  if (p > n0) {
    throw std::logic_error("periodicity: least period exceeds n0 despite P_f(n0) <= n0");
  }
  report.periodic = true;
  report.period = p;
  report.certified = span;
  return report;
}

namespace {

// Range [lo, hi] of k with x + k*d inside [wlo, whi] along one axis.
void clip(Coord x, Coord d, Coord wlo, Coord whi, Coord& lo, Coord& hi) {
  if (d == 0) return;
  auto floor_div = [](Coord a, Coord b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); };
  Coord a = wlo - x, b = whi - x;
  if (d < 0) std::swap(a, b), a = -a, b = -b, d = -d;
  lo = std::max(lo, -floor_div(-a, d));
  hi = std::min(hi, floor_div(b, d));
}

// Every cell whose line along `dir` holds at least one pair at distance p
// must be compared with a partner. Cells on shorter lines are exempt: they
// carry no information about the shift either way.
bool every_cell_has_partner(const Box& window, const Direction& dir, Coord p) {
  const Point v = dir.vec();
  for (Coord y = window.y.lo; y <= window.y.hi; ++y) {
    for (Coord x = window.x.lo; x <= window.x.hi; ++x) {
      Coord lo = std::numeric_limits<Coord>::min() / 4, hi = std::numeric_limits<Coord>::max() / 4;
      clip(x, v.x, window.x.lo, window.x.hi, lo, hi);
      clip(y, v.y, window.y.lo, window.y.hi, lo, hi);
      if (hi - lo < p) continue;
      if (p > hi && -p < lo) return false;
    }
  }
  return true;
}

}  // namespace

PeriodReport directional_period_scan(const Configuration& config, const Box& window,
                                     const Direction& dir, Coord max_period) {
  if (window.empty()) throw PreconditionError("periodicity", "empty window");
  if (!config.is_exact_on(window)) {
    throw ExactnessError("periodicity", "window " + to_string(window) +
                                            " leaves the exact region");
  }
  PeriodReport report;
  for (Coord p = 1; p <= max_period; ++p) {
    const Point shift = p * dir.vec();
    if (std::abs(shift.x) >= window.x.length() || std::abs(shift.y) >= window.y.length()) {
      break;  // no pairs at this or any longer shift
    }
    if (!every_cell_has_partner(window, dir, p)) continue;
    bool ok = true;
    for (Coord y = window.y.lo; y <= window.y.hi && ok; ++y) {
      for (Coord x = window.x.lo; x <= window.x.hi && ok; ++x) {
        const Point q = Point{x, y} + shift;
        if (window.contains(q)) ok = config.at({x, y}) == config.at(q);
      }
    }
    if (ok) {
      report.periodic = true;
      report.period = p;
      return report;
    }
  }
  return report;
}

}  // namespace latticelab
