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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numeric>
#include <optional>

#include "CLI11.hpp"
#include "latticelab/catalog.hpp"
#include "latticelab/complexity.hpp"
#include "latticelab/entropy.hpp"
#include "latticelab/error.hpp"
#include "latticelab/expansivity.hpp"
#include "latticelab/extension.hpp"
#include "latticelab/parallel.hpp"
#include "latticelab/report.hpp"

namespace latticelab::cli {

namespace {

constexpr const char* kModule = "cli";

[[noreturn]] void fail(std::string_view what, std::string_view text, std::size_t offset) {
  throw ParseError(kModule,
                   std::string(what) + " in '" + std::string(text) + "'", 1,
                   static_cast<int>(offset) + 1);
}

// Parses a signed integer at text[pos...], advancing pos.
Coord take_int(std::string_view text, std::size_t& pos, std::string_view what) {
  Coord v = 0;
  const char* begin = text.data() + pos;
  const auto [ptr, ec] = std::from_chars(begin, text.data() + text.size(), v);
  if (ec != std::errc() || ptr == begin) fail("expected an integer for " + std::string(what), text, pos);
  pos = static_cast<std::size_t>(ptr - text.data());
  return v;
}

void expect(std::string_view text, std::size_t& pos, std::string_view token) {
  if (text.substr(pos, token.size()) != token) {
    fail("expected '" + std::string(token) + "'", text, pos);
  }
  pos += token.size();
}

void expect_end(std::string_view text, std::size_t pos) {
  if (pos != text.size()) fail("unexpected trailing input", text, pos);
}

std::vector<Point> point_list(std::string_view text, std::size_t pos) {
  std::vector<Point> pts;
  while (true) {
    const Coord x = take_int(text, pos, "x");
    expect(text, pos, ",");
    const Coord y = take_int(text, pos, "y");
    pts.push_back({x, y});
    if (pos == text.size()) break;
    expect(text, pos, ";");
  }
  return pts;
}

struct Common {
  std::string config;
  std::string box;
  std::string format = "csv";
  std::string output;
  int threads = 0;
};

void add_common(CLI::App* sub, Common& c, bool needs_config = true) {
  if (needs_config) {
    sub->add_option("--config", c.config, "catalog spec, e.g. stripes:p=2 or grid:path=f.txt")
        ->required();
    sub->add_option("--box", c.box, "search box of translates: WxH or x0..x1,y0..y1");
  }
  sub->add_option("--format", c.format, "csv or json");
  sub->add_option("--output", c.output, "write the result to this file");
  sub->add_option("--threads", c.threads, "worker threads (default: LATTICELAB_THREADS or all)");
}

unsigned resolve_threads(int flag) {
  if (flag > 0) return static_cast<unsigned>(flag);
  if (flag < 0) throw ParseError(kModule, "--threads must be positive");
  if (const char* env = std::getenv("LATTICELAB_THREADS"); env && *env) {
    unsigned v = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v == 0) {
      throw ParseError(kModule, "LATTICELAB_THREADS must be a positive integer, got '" +
                                    std::string(s) + "'");
    }
    return v;
  }
  return 0;
}

SearchBox box_or_default(const Common& c, const Configuration& config, const Box& bounds) {
  return c.box.empty() ? default_box(config, bounds) : parse_box(c.box);
}

Box bounds_of(const std::vector<LatticeSet>& regions) {
  Box b = regions.front().bounding_box();
  for (const auto& r : regions) {
    const Box o = r.bounding_box();
    b = {{std::min(b.x.lo, o.x.lo), std::max(b.x.hi, o.x.hi)},
         {std::min(b.y.lo, o.y.lo), std::max(b.y.hi, o.y.hi)}};
  }
  return b;
}

ConvexLatticeSet convex_region(std::string_view text) {
  const LatticeSet r = parse_region(text);
  if (!is_convex(r)) {
    throw PreconditionError(kModule, "region '" + std::string(text) + "' is not lattice-convex");
  }
  return convex_close(r);
}

}  // namespace

Box parse_box(std::string_view text) {
  std::size_t pos = 0;
  const Coord a = take_int(text, pos, "--box");
  if (pos < text.size() && text[pos] == 'x') {
    ++pos;
    const Coord h = take_int(text, pos, "--box height");
    expect_end(text, pos);
    if (a < 1 || h < 1) fail("box sides must be positive", text, 0);
    return Box::sized(a, h);
  }
  expect(text, pos, "..");
  const Coord x1 = take_int(text, pos, "--box x1");
  expect(text, pos, ",");
  const Coord y0 = take_int(text, pos, "--box y0");
  expect(text, pos, "..");
  const Coord y1 = take_int(text, pos, "--box y1");
  expect_end(text, pos);
  if (x1 < a || y1 < y0) fail("empty box", text, 0);
  return {{a, x1}, {y0, y1}};
}

Point parse_point(std::string_view text) {
  std::size_t pos = 0;
  const Coord x = take_int(text, pos, "x");
  expect(text, pos, ",");
  const Coord y = take_int(text, pos, "y");
  expect_end(text, pos);
  return {x, y};
}

Direction parse_direction(std::string_view text) {
  const Point v = parse_point(text);
  if ((v.x == 0 && v.y == 0) || std::gcd(v.x, v.y) != 1) {
    fail("direction must be a primitive integer vector", text, 0);
  }
  return {v.x, v.y};
}

LatticeSet parse_region(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with("rect:")) {
    pos = 5;
    const Coord n = take_int(text, pos, "rect width");
    expect(text, pos, "x");
    const Coord k = take_int(text, pos, "rect height");
    expect_end(text, pos);
    if (n < 1 || k < 1) fail("rectangle sides must be positive", text, 5);
    return LatticeSet::from_box(Box::sized(n, k));
  }
  if (text.starts_with("hull:")) {
    const auto pts = point_list(text, 5);
    return convex_close(std::span<const Point>(pts)).points();
  }
  if (text.starts_with("points:")) return LatticeSet(point_list(text, 7));
  fail("expected rect:, hull: or points:", text, 0);
}

std::vector<Coord> parse_int_list(std::string_view text) {
  std::vector<Coord> out;
  std::size_t pos = 0;
  while (true) {
    out.push_back(take_int(text, pos, "list entry"));
    if (pos == text.size()) break;
    expect(text, pos, ",");
  }
  return out;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item =
        text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    try {
      out.push_back(parse_rational(item));
    } catch (const ParseError&) {
      fail("expected a rational a, a/b or a.b", text, start);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"latticelab: pattern complexity and extension calculus for Z^2 colorings",
               "latticelab"};
  app.require_subcommand(1);

  Common common;
  std::string region, set_text, dir_text = "0,1", t_text = "1,2,4", s_text = "4,8,16,32";
  std::string point_text, window_text, radius_text = "1";
  Coord n_max = 4, k_max = 4, n1 = 0, k1 = 0, m = 1, k = 0, p = 0, iterations = 1;

  auto* c_complexity = app.add_subcommand("complexity", "P(region) over the search box");
  add_common(c_complexity, common);
  c_complexity->add_option("--region", region, "rect:NxK, hull:x,y;... or points:x,y;...")
      ->required();

  auto* c_table = app.add_subcommand("table", "P(n, k) for 1 <= n <= n-max, 1 <= k <= k-max");
  add_common(c_table, common);
  c_table->add_option("--n-max", n_max);
  c_table->add_option("--k-max", k_max);

  auto* c_nivat = app.add_subcommand("nivat", "pairs (n, k) with P(n, k) <= n*k");
  add_common(c_nivat, common);
  c_nivat->add_option("--n-max", n_max);
  c_nivat->add_option("--k-max", k_max);

  auto* c_entropy = app.add_subcommand("entropy", "directional entropy profile");
  add_common(c_entropy, common);
  c_entropy->add_option("--dir", dir_text, "direction p,q");
  c_entropy->add_option("--t", t_text, "thickness list");
  c_entropy->add_option("--s", s_text, "increasing scale list");

  auto* c_balanced = app.add_subcommand("balanced", "construct and verify a balanced set");
  add_common(c_balanced, common);
  c_balanced->add_option("--n1", n1)->required();
  c_balanced->add_option("--k1", k1)->required();
  c_balanced->add_option("--dir", dir_text, "axis direction: 1,0 0,1 -1,0 0,-1");

  auto* c_generated = app.add_subcommand("generated", "which boundary points are generated");
  add_common(c_generated, common);
  c_generated->add_option("--region", region)->required();
  c_generated->add_option("--point", point_text, "test a single point x,y");

  auto* c_extend = app.add_subcommand("extend", "candidates, border and iterated extension");
  add_common(c_extend, common, false);
  c_extend->add_option("--region", region, "T")->required();
  c_extend->add_option("--set", set_text, "S")->required();
  c_extend->add_option("--dir", dir_text, "line direction p,q");
  c_extend->add_option("--p", p, "trim count");
  c_extend->add_option("--n", iterations, "iterations");

  auto* c_dichotomy = app.add_subcommand("dichotomy", "classify extensions to the trapezoid");
  add_common(c_dichotomy, common);
  c_dichotomy->add_option("--n1", n1)->required();
  c_dichotomy->add_option("--k1", k1)->required();
  c_dichotomy->add_option("--m", m)->required();
  c_dichotomy->add_option("--k", k)->required();

  auto* c_expansive = app.add_subcommand("expansive", "finite-radius expansivity probe");
  add_common(c_expansive, common);
  c_expansive->add_option("--dir", dir_text, "line direction p,q");
  c_expansive->add_option("--radius", radius_text, "strip radius, rational");
  c_expansive->add_option("--window", window_text, "window: WxH or x0..x1,y0..y1")->required();

  auto* c_catalog = app.add_subcommand("catalog", "list the built-in configurations");
  add_common(c_catalog, common, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error [cli/ParseError]: " << e.what() << "\n";
    return kParseFailure;
  }

  try {
    const report::Format fmt = report::parse_format(common.format);
    std::optional<parallel::ScopedThreadCount> threads;
    if (const unsigned t = resolve_threads(common.threads); t > 0) threads.emplace(t);

    std::string result;
    if (c_catalog->parsed()) {
      result = report::catalog(catalog_list(), fmt);
    } else if (c_extend->parsed()) {
      const LatticeSet t = parse_region(region);
      const LatticeSet s = parse_region(set_text);
      const Direction d = parse_direction(dir_text);
      const auto cand = trim_candidates(extension_candidates(t, s, d), p);
      const LatticeSet b = border(t, s, d, p);
      const ExtensionResult ext = extend_region(t, s, d, p, iterations);
      result = report::extension(ext, t, s, d, p, iterations, cand, b, fmt);
    } else {
      const Configuration config = build_config(common.config);
      const std::string desc = config.descriptor().to_string();
      if (c_complexity->parsed()) {
        const LatticeSet r = parse_region(region);
        const SearchBox box = box_or_default(common, config, r.bounding_box());
        result = report::complexity(complexity(config, r, box), desc, fmt);
      } else if (c_table->parsed() || c_nivat->parsed()) {
        if (n_max < 1 || k_max < 1) throw PreconditionError(kModule, "n-max and k-max must be >= 1");
        const SearchBox box = box_or_default(common, config, Box::sized(n_max, k_max));
        if (c_table->parsed()) {
          result = report::table(rectangle_table(config, n_max, k_max, box), desc, box, fmt);
        } else {
          const auto pairs = nivat_scan(config, n_max, k_max, box);
          result = report::nivat(pairs, desc, box, fmt);
        }
      } else if (c_entropy->parsed()) {
        const Direction d = parse_direction(dir_text);
        const auto ts = parse_rational_list(t_text);
        const auto ss = parse_int_list(s_text);
        SearchBox box;
        if (common.box.empty()) {
          std::vector<LatticeSet> regions;
          for (const auto& t : ts) {
            if (t <= Rational(0)) throw PreconditionError(kModule, "thickness must be positive");
            regions.push_back(neighborhood_points(
                SegmentNeighborhood::euclidean(d, Rational(ss.back()), t)));
          }
          box = default_box(config, bounds_of(regions));
        } else {
          box = parse_box(common.box);
        }
        result = report::entropy(directional_entropy_profile(config, d, ts, ss, box), desc, fmt);
      } else if (c_balanced->parsed()) {
        const Direction d = parse_direction(dir_text);
        const SearchBox box = box_or_default(common, config, Box::sized(n1, k1));
        result = report::balanced(find_balanced_set(config, n1, k1, d, box), desc, box, fmt);
      } else if (c_generated->parsed()) {
        const ConvexLatticeSet r = convex_region(region);
        const SearchBox box = box_or_default(common, config, r.points().bounding_box());
        std::vector<report::GeneratedPoint> pts;
        if (!point_text.empty()) {
          const Point x = parse_point(point_text);
          pts.push_back({x, is_generated(config, r, x, box)});
        } else {
          for (const Point x : r.boundary()) {
            pts.push_back({x, is_generated(config, r, x, box)});
          }
        }
        result = report::generated(r.points(), pts, desc, box, fmt);
      } else if (c_dichotomy->parsed()) {
        const TrapezoidSets sets = trapezoid_region({n1, k1, m, k});
        const SearchBox box = box_or_default(common, config, sets.t.bounding_box());
        result = report::dichotomy(trapezoid_dichotomy(config, n1, k1, m, k, box), desc, fmt);
      } else if (c_expansive->parsed()) {
        const Direction d = parse_direction(dir_text);
        const Rational radius = parse_rational(radius_text);
        const Box window = parse_box(window_text);
        const SearchBox box = box_or_default(common, config, window);
        result = report::expansivity(probe_expansive(config, d, radius, window, box),
                                     config.alphabet(), desc, fmt);
      }
    }

    if (common.output.empty()) {
      out << result;
    } else {
      std::ofstream file(common.output, std::ios::binary);
      if (!file) throw Error(kModule, "cannot write '" + common.output + "'");
      file << result;
    }
    return kOk;
  } catch (const Error& e) {
    err << "error [" << e.module() << "/" << e.kind() << "]: " << e.what() << "\n";
    if (dynamic_cast<const ParseError*>(&e)) return kParseFailure;
    if (dynamic_cast<const PreconditionError*>(&e) || dynamic_cast<const ExactnessError*>(&e)) {
      return kPreconditionFailure;
    }
    return kOtherFailure;
  } catch (const std::exception& e) {
    err << "error [" << kModule << "/internal]: " << e.what() << "\n";
    return kOtherFailure;
  }
}

}  // namespace latticelab::cli
