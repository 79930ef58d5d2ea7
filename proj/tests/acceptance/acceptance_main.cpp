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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every check compares the library against a closed form or an
// independent brute-force evaluation; runtime limits are part of each check.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli/cli.hpp"
#include "latticelab/catalog.hpp"
#include "latticelab/complexity.hpp"
#include "latticelab/entropy.hpp"
#include "latticelab/error.hpp"
#include "latticelab/extension.hpp"
#include "latticelab/periodicity.hpp"
#include "latticelab/report.hpp"
#include "support/oracles.hpp"

using namespace latticelab;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<void(Check&)> body;
};

LatticeSet from(const oracle::PointSet& s) {
  return LatticeSet(std::vector<Point>(s.begin(), s.end()));
}

std::string str(std::uint64_t v) { return std::to_string(v); }

// 1. P(K) = (k+1)·2^n for every n×k rectangle over one de Bruijn period,
// with translates reaching all k heights that meet row 0 and one that
// misses it.
void section5_closed_form(Check& c) {
  const auto cfg = build_config("section5:L=16");
  for (Coord k = 1; k <= 6; ++k) {
    const Box box{{0, 65535}, {-k - 1, 1}};
    const auto table = rectangle_table(cfg, 16, k, box);
    for (Coord n = 1; n <= 16; ++n) {
      const std::uint64_t want = static_cast<std::uint64_t>(k + 1) << n;
      c.require(table.at(n, k) == want, "P(" + std::to_string(n) + "," + std::to_string(k) + ") = " +
                                            str(table.at(n, k)) + ", expected " + str(want));
    }
  }
}

// 2. Directional profile of the section5 configuration.
void section5_entropy(Check& c) {
  const auto cfg = build_config("section5:L=16");
  const std::vector<Rational> t = {Rational(1)};
  {
    const std::vector<Coord> s = {32, 64};
    const auto p = directional_entropy_profile(cfg, Direction::e2(), t, s, Box{{0, 65535}, {-66, 1}});
    c.require(p.slope_diff[0] < 0.05, "vertical slope " + report::format_double(p.slope_diff[0]));
    c.detail = "vertical slope " + report::format_double(p.slope_diff[0]);
  }
  {
    const std::vector<Coord> s = {8, 14};
    const auto p = directional_entropy_profile(cfg, Direction::e1(), t, s, Box{{0, 65535}, {-1, 0}});
    const double err = std::abs(p.slope_diff[0] - std::log(2.0));
    c.require(err <= 1e-9, "horizontal quotient " + report::format_double(p.slope_diff[0]));
    if (c.ok) c.detail += ", horizontal |q - log 2| = " + report::format_double(err);
  }
}

// 3. Sparse set counts and the cubic window bound.
void sparse_set_counts(Check& c) {
  c.require(sparse_set_count(10, 3, 3) == 1, "count(10,3,3) != 1");
  c.require(sparse_set_count(10, 4, 4) == 2, "count(10,4,4) != 2");
  std::uint64_t worst_k = 0;
  double worst_ratio = 0;
  for (std::int64_t k = 1; k <= 16; ++k) {
    const auto pk = beta_complexity(10, 4, k, {0, 10000});
    const auto bound = static_cast<std::uint64_t>((k + 1) * (k + 1) * (k + 1));
    c.require(pk <= bound, "P_beta(" + std::to_string(k) + ") = " + str(pk) + " > " + str(bound));
    const double ratio = static_cast<double>(pk) / static_cast<double>(bound);
    if (ratio > worst_ratio) worst_ratio = ratio, worst_k = static_cast<std::uint64_t>(k);
  }
  if (c.ok) c.detail = "max P_beta(k)/(k+1)^3 = " + report::format_double(worst_ratio) + " at k=" + str(worst_k);
}

// 4. Exhaustive Morse-Hedlund check against brute-force least periods.
void morse_hedlund(Check& c) {
  std::size_t certified = 0;
  for (unsigned bits = 0; bits < (1u << 12); ++bits) {
    FiniteWord f;
    for (int i = 0; i < 12; ++i) f.values.push_back(static_cast<Symbol>((bits >> i) & 1u));
    for (Coord n0 = 1; n0 <= 3; ++n0) {
      std::set<std::vector<Symbol>> factors;
      for (std::size_t i = 0; i + static_cast<std::size_t>(n0) <= 12; ++i) {
        factors.emplace(f.values.begin() + static_cast<std::ptrdiff_t>(i),
                        f.values.begin() + static_cast<std::ptrdiff_t>(i) + n0);
      }
      const bool hypothesis = factors.size() <= static_cast<std::size_t>(n0);
      const auto r = morse_hedlund_check(f, n0);
      const std::string tag = "word " + std::to_string(bits) + " n0=" + std::to_string(n0);
      c.require(r.periodic == hypothesis, tag + ": periodic flag");
      if (!hypothesis || !r.periodic) continue;
      ++certified;
      const auto lo = static_cast<std::size_t>(n0), hi = static_cast<std::size_t>(12 - n0);
      const Coord want = oracle::least_period(f.values, lo, hi);
      c.require(r.period == want, tag + ": period " + std::to_string(r.period.value_or(-1)) +
                                      " vs " + std::to_string(want));
      c.require(want <= n0, tag + ": period exceeds n0");
      c.require(r.certified == Interval{n0, 12 - n0}, tag + ": certified interval");
    }
  }
  if (c.ok) c.detail = std::to_string(certified) + " certified (word, n0) cases";
}

// 5. Balanced sets for four configurations and all axis directions.
void balanced_sets(Check& c) {
  const std::vector<std::pair<std::string, Box>> cases = {{"stripes:p=2", Box::sized(2, 1)},
                                                          {"stripes:p=3", Box::sized(3, 1)},
                                                          {"checkerboard", Box::sized(2, 2)},
                                                          {"constant", Box::sized(1, 1)}};
  const std::vector<Direction> dirs = {Direction::e2(), -Direction::e2(), Direction::e1(), -Direction::e1()};
  for (const auto& [spec, box] : cases) {
    const auto cfg = build_config(spec);
    const auto pairs = nivat_scan(cfg, 3, 3, box);
    c.require(!pairs.empty(), spec + ": no Nivat pair");
    if (pairs.empty()) continue;
    const auto [n1, k1, count] = pairs.front();
    std::vector<BalancedSetReport> reps;
    for (const auto& d : dirs) {
      reps.push_back(find_balanced_set(cfg, n1, k1, d, box));
      const auto& r = reps.back();
      const std::string tag = spec + " " + to_string(d);
      c.require(r.balanced(), tag + ": library verifier");
      c.require(oracle::balanced(cfg, oracle::to_set(r.set.points()), d.vec(), box), tag + ": definition check");
    }
    c.require(reps[0].width == reps[1].width, spec + ": e2 and -e2 widths differ");
    c.require(reps[2].height == reps[3].height, spec + ": e1 and -e1 heights differ");
    c.detail += std::string(c.detail.empty() ? "" : "; ") + spec + " at (" + std::to_string(n1) + "," +
                std::to_string(k1) + ")";
  }
}

// 6. Extension calculus against definitional evaluation.
void extension_calculus(Check& c) {
  std::mt19937_64 rng(0x6a7e5eed);
  const std::vector<Direction> dirs = {{0, 1}, {0, -1}, {1, 0}, {-1, 0}, {1, 1}, {1, -1}, {-1, 1}, {2, 1}};
  int instances = 0;
  for (int iter = 0; instances < 200 && iter < 200000; ++iter) {
    const auto t = oracle::convex_closure(oracle::random_points(rng, 9, 9, 3 + static_cast<int>(rng() % 4)));
    const auto s = oracle::convex_closure(oracle::random_points(rng, 3, 3, 2 + static_cast<int>(rng() % 3)));
    const auto& d = dirs[rng() % dirs.size()];
    if (t.size() > 60 || s.size() > 9 || !oracle::calculus_applies(t, s, d.vec())) continue;
    ++instances;
    const Coord p = static_cast<Coord>(rng() % 3);
    const Coord n = 1 + static_cast<Coord>(rng() % 3);
    const std::string tag = "instance " + std::to_string(instances) + " T=" + to_string(from(t)) +
                            " S=" + to_string(from(s)) + " dir=" + to_string(d);
    const auto got = extension_candidates(from(t), from(s), d);
    const auto want = oracle::candidates(t, s, d.vec());
    c.require(got == want, tag + ": candidates");
    c.require(trim_candidates(got, p) == oracle::trimmed(want, p), tag + ": trimmed candidates");
    c.require(border(from(t), from(s), d, p) == from(oracle::border(t, s, d.vec(), p)), tag + ": border");
    const auto ext = oracle::extend(t, s, d.vec(), p, n);
    if (ext) {
      c.require(extend_region(from(t), from(s), d, p, n).region == from(*ext), tag + ": extension");
    } else {
      bool threw = false;
      try {
        extend_region(from(t), from(s), d, p, n);
      } catch (const PreconditionError&) {
        threw = true;
      }
      c.require(threw, tag + ": extension should reject a step without a parallel edge");
    }
  }
  c.require(instances == 200, "only " + std::to_string(instances) + " valid instances generated");
  if (c.ok) c.detail = "200 instances";
}

// 7. Trapezoid dichotomy on exact boxes.
void trapezoid_dichotomy_check(Check& c) {
  for (const auto& [spec, box] : {std::pair{"stripes:p=2", Box::sized(2, 1)}, std::pair{"checkerboard", Box::sized(2, 2)}}) {
    const auto r = trapezoid_dichotomy(build_config(spec), 2, 1, 2, 60, box);
    c.require(r.exact, std::string(spec) + ": box not exact");
    c.require(r.count(DichotomyClass::kViolation) == 0,
              std::string(spec) + ": " + std::to_string(r.count(DichotomyClass::kViolation)) + " violations");
    c.detail += std::string(c.detail.empty() ? "" : "; ") + spec + ": " +
                std::to_string(r.count(DichotomyClass::kUniqueExtension)) + " unique, " +
                std::to_string(r.count(DichotomyClass::kPeriodicOnB)) + " periodic";
  }
}

// 8. One-step growth bound for generating sets.
void generating_bound(Check& c) {
  std::vector<Coord> scales;
  for (Coord s = 1; s <= 32; ++s) scales.push_back(s);
  std::size_t steps = 0;
  for (const auto& [spec, box] : {std::pair{"stripes:p=2", Box::sized(2, 1)}, std::pair{"checkerboard", Box::sized(2, 2)}}) {
    const auto cfg = build_config(spec);
    for (const auto& d : {Direction(1, 0), Direction(0, 1), Direction(1, 1)}) {
      for (const auto& st : generating_bound_check(cfg, rectangle(2, 2), d, Rational(2), scales, box)) {
        ++steps;
        c.require(st.holds, std::string(spec) + " " + to_string(d) + " s=" + std::to_string(st.s_from));
      }
    }
  }
  if (c.ok) c.detail = std::to_string(steps) + " steps";
}

// 9. Monotonicity, translation invariance and box monotonicity, with every
// count also checked against brute force.
void complexity_properties(Check& c) {
  struct Source {
    Configuration cfg;
    Box box;
  };
  const std::vector<Source> sources = {
      {build_config("constant"), {{0, 3}, {0, 3}}},
      {build_config("stripes:p=2"), {{0, 5}, {0, 2}}},
      {build_config("stripes:p=3"), {{-2, 4}, {0, 1}}},
      {build_config("checkerboard"), {{0, 3}, {0, 3}}},
      {build_config("debruijn_lift:L=5"), {{0, 31}, {0, 1}}},
      {build_config("section5:L=5"), {{0, 31}, {-7, 3}}},
      {build_config("section2:L=5,max_n=2"), {{0, 31}, {0, 20}}}};
  std::mt19937_64 rng(0x9a11);
  for (int iter = 0; iter < 500; ++iter) {
    const auto& src = sources[static_cast<std::size_t>(iter) % sources.size()];
    const auto a_pts = oracle::random_points(rng, 5, 5, 1 + static_cast<int>(rng() % 4));
    auto b_pts = a_pts;
    for (auto p : oracle::random_points(rng, 6, 6, 2)) b_pts.push_back(p);
    const auto a = convex_close(std::span<const Point>(a_pts)).points();
    const auto b = convex_close(std::span<const Point>(b_pts)).points();
    const Point v{static_cast<Coord>(rng() % 9) - 4, static_cast<Coord>(rng() % 5)};
    const Box bigger{{src.box.x.lo - 2, src.box.x.hi + 3}, {src.box.y.lo, src.box.y.hi + 2}};
    const std::string tag = src.cfg.descriptor().to_string() + " A=" + to_string(a);

    const auto ra = complexity(src.cfg, a, src.box);
    const auto rb = complexity(src.cfg, b, src.box);
    c.require(ra.count == oracle::count(src.cfg, oracle::to_set(a), src.box), tag + ": brute force");
    c.require(ra.count <= rb.count, tag + ": not monotone under inclusion");
    // Shifting the region is the same as shifting the box.
    const auto shifted = complexity(src.cfg, a.translated(v), src.box);
    c.require(shifted.count == count_patterns(src.cfg, a, src.box.translated(v)), tag + ": shift identity");
    if (ra.exact && shifted.exact) c.require(shifted.count == ra.count, tag + ": not translation invariant");
    const auto grown = count_patterns(src.cfg, a, bigger);
    c.require(grown >= ra.count, tag + ": box growth decreased the count");
    if (ra.exact) c.require(grown == ra.count, tag + ": exact count changed with a larger box");
  }
  if (c.ok) c.detail = "500 pairs";
}

// 10. Doubly periodic catalog entries have a Nivat pair with n, k <= 6.
void nivat_scan_check(Check& c) {
  for (const char* spec : {"constant", "stripes", "stripes:p=3", "stripes:p=6", "checkerboard", "debruijn_lift",
                           "debruijn_lift:L=5"}) {
    const auto cfg = build_config(spec);
    const auto box = default_box(cfg, Box::sized(6, 6));
    const auto pairs = nivat_scan(cfg, 6, 6, box);
    c.require(!pairs.empty(), std::string(spec) + ": no pair");
  }
}

// 11. Byte-identical CLI output across runs and thread counts.
void cli_determinism(Check& c) {
  const std::vector<std::vector<std::string>> examples = {
      {"table", "--config", "stripes:p=2", "--n-max", "4", "--k-max", "4", "--box", "16x16", "--format", "csv"},
      {"entropy", "--config", "section5:L=16", "--dir", "0,1", "--t", "1,2", "--s", "8,16,32", "--format", "json"},
      {"catalog"}};
  auto run = [](const std::vector<std::string>& args, std::string& out) {
    std::ostringstream o, e;
    const int code = cli::run(args, o, e);
    out = o.str();
    return code;
  };
  for (const auto& args : examples) {
    std::string first, second, serial, wide;
    const int code = run(args, first);
    c.require(code == 0, args[0] + ": exit " + std::to_string(code));
    run(args, second);
    auto a1 = args;
    a1.insert(a1.end(), {"--threads", "1"});
    run(a1, serial);
    auto a4 = args;
    a4.insert(a4.end(), {"--threads", "4"});
    run(a4, wide);
    c.require(first == second, args[0] + ": two runs differ");
    c.require(first == serial, args[0] + ": --threads 1 differs from default");
    c.require(first == wide, args[0] + ": --threads 4 differs from default");
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "section5_closed_form", 30, section5_closed_form},
      {2, "section5_entropy", 60, section5_entropy},
      {3, "sparse_set_counts", 10, sparse_set_counts},
      {4, "morse_hedlund", 60, morse_hedlund},
      {5, "balanced_sets", 60, balanced_sets},
      {6, "extension_calculus", 30, extension_calculus},
      {7, "trapezoid_dichotomy", 60, trapezoid_dichotomy_check},
      {8, "generating_bound", 30, generating_bound},
      {9, "complexity_properties", 60, complexity_properties},
      {10, "nivat_scan", 10, nivat_scan_check},
      {11, "cli_determinism", 120, cli_determinism},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.ok = false;
      check.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > cr.limit_s) {
      check.ok = false;
      check.detail = "over time limit; " + check.detail;
    }
    if (!check.ok) ++failures;
    std::printf("%s %2d %-22s %7.2f s / %3.0f s  %s\n", check.ok ? "PASS" : "FAIL", cr.id, cr.name, secs,
                cr.limit_s, check.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
