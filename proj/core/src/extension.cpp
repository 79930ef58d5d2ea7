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

#include "latticelab/extension.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>

#include "latticelab/error.hpp"
#include "latticelab/periodicity.hpp"

namespace latticelab {

namespace {

constexpr const char* kModule = "extension";

std::vector<Point> sorted_along(std::vector<Point> pts, const Direction& dir) {
  const Point v = dir.vec();
  std::sort(pts.begin(), pts.end(), [&](Point a, Point b) {
    const Coord da = dot(a, v);
    const Coord db = dot(b, v);
    return da != db ? da < db : RowMajorLess{}(a, b);
  });
  return pts;
}

// Quarter turns r with R^r e2 = dir, for the four axis directions.
int turns_to(const Direction& dir) {
  if (dir == Direction::e2()) return 0;
  if (dir == -Direction::e1()) return 1;
  if (dir == -Direction::e2()) return 2;
  if (dir == Direction::e1()) return 3;
  throw PreconditionError(kModule, "balanced sets are constructed for axis directions only, got " +
                                       to_string(dir));
}

LatticeSet column_segment(Coord x, Coord y0, Coord len) {
  std::vector<Point> pts;
  for (Coord y = y0; y < y0 + len; ++y) pts.push_back({x, y});
  return LatticeSet(std::move(pts));
}

}  // namespace

ObservedLanguage ObservedLanguage::observe(const Configuration& config,
                                           const LatticeSet& region, const SearchBox& box) {
  return {region, collect_patterns(config, region, box), box};
}

bool is_generated(const Configuration& config, const LatticeSet& region, Point x,
                  const SearchBox& box) {
  if (!region.contains(x)) {
    throw PreconditionError(kModule, "point " + to_string(x) + " is not in the region");
  }
  const LatticeSet rest = region.without(x);
  if (rest.empty()) {
    throw PreconditionError(kModule,
                            "region minus the point is empty; its complexity is undefined");
  }
  return count_patterns(config, rest, box) == count_patterns(config, region, box);
}

bool is_generating_set(const Configuration& config, const ConvexLatticeSet& region,
                       const SearchBox& box) {
  if (region.size() < 2) {
    throw PreconditionError(kModule, "a generating set needs at least two points");
  }
  for (const Point x : region.boundary()) {
    if (!is_generated(config, region.points(), x, box)) return false;
  }
  return true;
}

BalancedSetReport verify_balanced(const Configuration& config, const ConvexLatticeSet& set,
                                  const Direction& line_dir, const SearchBox& box) {
  BalancedSetReport r;
  r.set = set;
  r.line_dir = line_dir;
  r.edge = edge_set(set, line_dir);
  const Box bb = set.points().bounding_box();
  r.width = bb.x.length();
  r.height = bb.y.length();

  const auto edge_size = static_cast<Coord>(r.edge.size());
  r.complexity_of_set = count_patterns(config, set.points(), box);

  const std::vector<Point> ordered =
      sorted_along({r.edge.begin(), r.edge.end()}, line_dir);
  if (set.size() >= 2) {
    r.endpoints_generated = is_generated(config, set.points(), ordered.front(), box) &&
                            is_generated(config, set.points(), ordered.back(), box);
  }

  const LatticeSet interior = set_difference(set.points(), r.edge);
  if (!interior.empty()) {
    r.complexity_without_edge = count_patterns(config, interior, box);
    r.complexity_drop = static_cast<long double>(r.complexity_without_edge) >
                        static_cast<long double>(r.complexity_of_set) -
                            static_cast<long double>(edge_size);
  }

  r.lines_long_enough = true;
  r.lines_at_least_edge = true;
  for (const auto& line : lines_parallel_to(set.points(), line_dir)) {
    const auto n = static_cast<Coord>(line.size());
    if (n < edge_size - 1) r.lines_long_enough = false;
    if (n < edge_size) r.lines_at_least_edge = false;
  }
  return r;
}

BalancedSetReport find_balanced_set(const Configuration& config, Coord n1, Coord k1,
                                    const Direction& line_dir, const SearchBox& box) {
  if (n1 < 1 || k1 < 1) throw PreconditionError(kModule, "n1 and k1 must be positive");
  const int turns = turns_to(line_dir);
  const std::uint64_t pk = rectangle_complexity(config, n1, k1, box);
  if (pk > static_cast<std::uint64_t>(n1 * k1)) {
    throw PreconditionError(kModule, "no Nivat pair: P(" + std::to_string(n1) + ", " +
                                         std::to_string(k1) + ") = " + std::to_string(pk) +
                                         " exceeds " + std::to_string(n1 * k1) + " over box " +
                                         to_string(box));
  }

  // Work in the frame where the line points up: η'(z) = η(R^r z) and the
  // translates n' = R^{-r} n.
  const Configuration rot = config.rotated(turns);
  const SearchBox rbox = rotate(box, -turns);
  const Coord wn = turns % 2 == 0 ? n1 : k1;
  const Coord wk = turns % 2 == 0 ? k1 : n1;

  Coord n_min = 0;
  for (Coord n = 1; n <= wn; ++n) {
    if (rectangle_complexity(rot, n, wk, rbox) <= static_cast<std::uint64_t>(n * wk)) {
      n_min = n;
      break;
    }
  }
  if (n_min == 0) {
    throw std::logic_error("extension: rotated frame lost the Nivat pair");
  }

  LatticeSet chosen;
  std::optional<Coord> period;
  std::optional<std::uint64_t> column_c;
  if (n_min == 1) {
    // With at most wk column patterns each column has period at most wk;
    // make the window tall enough to certify such a period when the
    // configuration is evaluable there.
    Box window = rbox.plus(Box::sized(2, wk));
    const Coord want = 4 * wk + 2;
    if (window.y.length() < want) {
      const Box taller{window.x, {window.y.lo, window.y.lo + want - 1}};
      if (rot.is_exact_on(taller)) window = taller;
    }
    const PeriodReport pr =
        directional_period_scan(rot, window, Direction::e2(), window.y.length() / 2);
    if (!pr.periodic) {
      throw PreconditionError(kModule, "columns of height " + std::to_string(wk) +
                                           " have at most that many patterns but no common "
                                           "vertical period fits the box; enlarge the box");
    }
    const Coord p = *pr.period;
    const std::uint64_t c = count_patterns(rot, column_segment(0, 0, p), rbox);
    const auto cc = static_cast<Coord>(c);
    const Coord k = std::max(p, cc * cc - cc) + 1;
    chosen = rectangle(2, k).points();
    period = p;
    column_c = c;
  } else {
    const LatticeSet r1 = rectangle(n_min - 1, wk).points();
    const LatticeSet r2 = rectangle(n_min, wk).points();
    const auto target = static_cast<long long>(count_patterns(rot, r2, rbox)) -
                        static_cast<long long>(r2.size());
    for (Coord len = 1; len <= wk && chosen.empty(); ++len) {
      for (Coord a = 0; a + len <= wk; ++a) {
        const LatticeSet cand = set_union(r1, column_segment(n_min - 1, a, len));
        const auto value = static_cast<long long>(count_patterns(rot, cand, rbox)) -
                           static_cast<long long>(cand.size());
        if (value == target) {
          chosen = cand;
          break;
        }
      }
    }
  }

  const ConvexLatticeSet set = convex_close(chosen.rotated(turns));
  BalancedSetReport report = verify_balanced(config, set, line_dir, box);
  report.periodic_branch = n_min == 1;
  report.minimal_side = n_min;
  report.column_period = period;
  report.column_complexity = column_c;
  if (!report.balanced()) {
    throw Error(kModule, "constructed set " + to_string(set.points()) + " is not " +
                             to_string(line_dir) + "-balanced over box " + to_string(box) +
                             " (i=" + (report.endpoints_generated ? "ok" : "fail") +
                             ", ii=" + (report.complexity_drop ? "ok" : "fail") +
                             ", iii=" + (report.lines_long_enough ? "ok" : "fail") + ")");
  }
  return report;
}

std::vector<Point> extension_candidates(const LatticeSet& t, const LatticeSet& s,
                                        const Direction& line_dir) {
  if (t.empty() || s.empty()) throw PreconditionError(kModule, "empty set");
  const LatticeSet edge = edge_set(s, line_dir);
  const LatticeSet inner = set_difference(s, edge);
  if (inner.empty()) {
    throw PreconditionError(kModule, "S lies on its own edge; S \\ E is empty");
  }
  if (edge_set(t, line_dir).size() < 2) {
    throw PreconditionError(kModule, "T has no edge parallel to " + to_string(line_dir));
  }

  const Box tb = t.bounding_box();
  const Box ib = inner.bounding_box();
  bool contains_translate = false;
  std::vector<Point> found;
  for (Coord jy = tb.y.lo - ib.y.lo; jy <= tb.y.hi - ib.y.hi; ++jy) {
    for (Coord jx = tb.x.lo - ib.x.lo; jx <= tb.x.hi - ib.x.hi; ++jx) {
      const Point j{jx, jy};
      bool inner_in = true;
      for (const Point q : inner) {
        if (!t.contains(q + j)) {
          inner_in = false;
          break;
        }
      }
      if (!inner_in) continue;
      bool edge_out = true;
      bool edge_in = true;
      for (const Point q : edge) {
        const bool in = t.contains(q + j);
        edge_out = edge_out && !in;
        edge_in = edge_in && in;
      }
      if (edge_in) contains_translate = true;
      if (edge_out) found.push_back(j);
    }
  }
  if (!contains_translate) {
    throw PreconditionError(kModule, "T contains no translate of S");
  }
  return sorted_along(std::move(found), line_dir);
}

std::vector<Point> trim_candidates(std::vector<Point> j, Coord p) {
  if (p < 0) throw PreconditionError(kModule, "trim parameter p must be >= 0");
  const auto drop = static_cast<std::size_t>(p);
  if (2 * drop >= j.size()) return {};
  return {j.begin() + static_cast<std::ptrdiff_t>(drop),
          j.end() - static_cast<std::ptrdiff_t>(drop)};
}

ExtensionResult extend_region(const LatticeSet& t, const LatticeSet& s,
                              const Direction& line_dir, Coord p, Coord n) {
  if (n < 0) throw PreconditionError(kModule, "iteration count must be >= 0");
  ExtensionResult out{t, 0, false};
  for (Coord step = 0; step < n; ++step) {
    const std::vector<Point> j = trim_candidates(extension_candidates(out.region, s, line_dir), p);
    if (j.empty()) {
      out.reached_fixed_point = true;
      break;
    }
    std::vector<Point> grown(out.region.begin(), out.region.end());
    for (const Point v : j) {
      for (const Point q : s) grown.push_back(q + v);
    }
    out.region = LatticeSet(std::move(grown));
    ++out.steps_applied;
  }
  return out;
}

LatticeSet border(const LatticeSet& t, const LatticeSet& s, const Direction& line_dir,
                  Coord p) {
  const LatticeSet inner = set_difference(s, edge_set(s, line_dir));
  std::vector<Point> pts;
  for (const Point v : trim_candidates(extension_candidates(t, s, line_dir), p)) {
    for (const Point q : inner) pts.push_back(q + v);
  }
  return LatticeSet(std::move(pts));
}

namespace {

class ColoringSearch {
 public:
  ColoringSearch(const LatticeSet& r, std::span<const Symbol> f, const ObservedLanguage& lang,
                 std::size_t alphabet_size, std::size_t budget)
      : lang_(lang), alphabet_size_(alphabet_size), budget_(budget) {
    const LatticeSet& base = lang.patterns.support();
    std::vector<Point> shifts;
    for (const Point x : r) {
      for (const Point q : base) shifts.push_back(x - q);
    }
    const LatticeSet translates(std::move(shifts));

    std::vector<Point> cells;
    for (const Point j : translates) {
      for (const Point q : base) cells.push_back(q + j);
    }
    domain_ = LatticeSet(std::move(cells));
    value_.assign(domain_.size(), -1);
    for (std::size_t i = 0; i < r.size(); ++i) value_[*domain_.index_of(r[i])] = f[i];
    for (std::size_t i = 0; i < domain_.size(); ++i) {
      if (value_[i] < 0) free_.push_back(i);
    }

    touching_.resize(domain_.size());
    for (const Point j : translates) {
      std::vector<std::size_t> idx;
      idx.reserve(base.size());
      for (const Point q : base) idx.push_back(*domain_.index_of(q + j));
      for (const std::size_t c : idx) touching_[c].push_back(constraints_.size());
      constraints_.push_back(std::move(idx));
    }
  }

  ColoringVerdict run() {
    for (std::size_t c = 0; c < constraints_.size(); ++c) {
      if (!satisfiable(c)) return ColoringVerdict::kNo;
    }
    const int result = search(0);
    if (result < 0) return ColoringVerdict::kUndecided;
    return result > 0 ? ColoringVerdict::kYes : ColoringVerdict::kNo;
  }

 private:
  bool satisfiable(std::size_t c) const {
    const auto& idx = constraints_[c];
    for (std::size_t i = 0; i < lang_.patterns.size(); ++i) {
      const auto pat = lang_.patterns[i];
      bool ok = true;
      for (std::size_t k = 0; k < idx.size() && ok; ++k) {
        const int v = value_[idx[k]];
        ok = v < 0 || v == pat[k];
      }
      if (ok) return true;
    }
    return false;
  }

  // 1 found, 0 exhausted, -1 out of budget.
  int search(std::size_t depth) {
    if (depth == free_.size()) return 1;
    const std::size_t cell = free_[depth];
    for (std::size_t a = 0; a < alphabet_size_; ++a) {
      if (++nodes_ > budget_) return -1;
      value_[cell] = static_cast<int>(a);
      bool ok = true;
      for (const std::size_t c : touching_[cell]) {
        if (!satisfiable(c)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        const int sub = search(depth + 1);
        if (sub != 0) {
          if (sub < 0) value_[cell] = -1;
          return sub;
        }
      }
    }
    value_[cell] = -1;
    return 0;
  }

  const ObservedLanguage& lang_;
  std::size_t alphabet_size_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  LatticeSet domain_;
  std::vector<int> value_;
  std::vector<std::size_t> free_;
  std::vector<std::vector<std::size_t>> constraints_;
  std::vector<std::vector<std::size_t>> touching_;
};

}  // namespace

ColoringVerdict is_s_eta_coloring(const Configuration& config, const LatticeSet& r,
                                  std::span<const Symbol> f,
                                  const ObservedLanguage& s_language,
                                  std::size_t node_budget) {
  if (r.empty()) throw PreconditionError(kModule, "empty region");
  if (f.size() != r.size()) {
    throw PreconditionError(kModule, "coloring has " + std::to_string(f.size()) +
                                         " values for a region of " +
                                         std::to_string(r.size()) + " points");
  }
  const std::size_t q = config.alphabet().size();
  for (const Symbol v : f) {
    if (v >= q) throw PreconditionError(kModule, "coloring uses a symbol outside the alphabet");
  }
  if (s_language.patterns.width() == 0) {
    throw PreconditionError(kModule, "language of the empty set");
  }
  return ColoringSearch(r, f, s_language, q, node_budget).run();
}

std::size_t DichotomyReport::count(DichotomyClass c) const {
  return static_cast<std::size_t>(
      std::count_if(seeds.begin(), seeds.end(), [c](const SeedReport& s) { return s.verdict == c; }));
}

DichotomyReport trapezoid_dichotomy(const Configuration& config, Coord n1, Coord k1, Coord m,
                                    Coord k, const SearchBox& box) {
  DichotomyReport report;
  report.params = {n1, k1, m, k};
  report.box = box;
  const TrapezoidSets sets = trapezoid_region(report.params);
  const std::uint64_t pk = rectangle_complexity(config, n1, k1, box);
  if (pk > static_cast<std::uint64_t>(n1 * k1)) {
    throw PreconditionError(kModule, "no Nivat pair: P(" + std::to_string(n1) + ", " +
                                         std::to_string(k1) + ") = " + std::to_string(pk));
  }
  report.t_size = sets.t.size();
  report.b_size = sets.b.size();
  report.exact = config.covers_all_translates(sets.t, box);

  // T contains the origin, so its anchored support coincides with T.
  const PatternCollection tpats = collect_patterns(config, sets.t, box);
  const LatticeSet seed_region = rectangle(n1, k).points();
  std::vector<std::size_t> seed_idx;
  for (const Point x : seed_region) seed_idx.push_back(*sets.t.index_of(x));

  std::map<std::vector<Symbol>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < tpats.size(); ++i) {
    const auto pat = tpats[i];
    std::vector<Symbol> key;
    key.reserve(seed_idx.size());
    for (const std::size_t c : seed_idx) key.push_back(pat[c]);
    groups[std::move(key)].push_back(i);
  }

  const Box bb = sets.b.bounding_box();
  const Coord bh = bb.y.length();
  // Least vertical period of a coloring of B in which every cell has a
  // partner, or nullopt.
  auto vertical_period = [&](std::span<const Symbol> pat) -> std::optional<Coord> {
    for (Coord p = 1; 2 * p <= bh; ++p) {
      bool ok = true;
      for (Coord x = bb.x.lo; x <= bb.x.hi && ok; ++x) {
        for (Coord y = bb.y.lo; y + p <= bb.y.hi && ok; ++y) {
          ok = pat[*sets.t.index_of({x, y})] == pat[*sets.t.index_of({x, y + p})];
        }
      }
      if (ok) return p;
    }
    return std::nullopt;
  };

  for (auto& [key, members] : groups) {
    SeedReport seed;
    seed.seed = key;
    seed.extensions = members.size();
    if (members.size() == 1) {
      seed.verdict = DichotomyClass::kUniqueExtension;
    } else {
      seed.verdict = DichotomyClass::kPeriodicOnB;
      Coord worst = 0;
      for (const std::size_t i : members) {
        const auto p = vertical_period(tpats[i]);
        if (!p) {
          seed.verdict = DichotomyClass::kViolation;
          break;
        }
        worst = std::max(worst, *p);
      }
      if (seed.verdict == DichotomyClass::kPeriodicOnB) seed.period = worst;
    }
    report.seeds.push_back(std::move(seed));
  }
  return report;
}

const char* to_string(DichotomyClass c) {
  switch (c) {
    case DichotomyClass::kUniqueExtension:
      return "unique";
    case DichotomyClass::kPeriodicOnB:
      return "periodic";
    case DichotomyClass::kViolation:
      return "violation";
  }
  return "?";
}

const char* to_string(ColoringVerdict v) {
  switch (v) {
    case ColoringVerdict::kYes:
      return "yes";
    case ColoringVerdict::kNo:
      return "no";
    case ColoringVerdict::kUndecided:
      return "undecided";
  }
  return "?";
}

}  // namespace latticelab
