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

#include "latticelab/catalog.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <string_view>
#include <unordered_set>

#include "latticelab/error.hpp"

namespace latticelab {

namespace {

constexpr const char* kModule = "catalog";

bool is_name_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

const CatalogEntry* find_entry(std::string_view name) {
  for (const auto& e : catalog_list()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

// Parameters of `spec` resolved against the entry: every declared key in
// declaration order, defaults filled in, unknown keys rejected.
std::vector<std::pair<std::string, std::string>> resolve(const CatalogEntry& entry,
                                                         const ConfigSpec& spec) {
  for (const auto& [k, v] : spec.params) {
    bool known = false;
    for (const auto& p : entry.params) known = known || p.key == k;
    if (!known) {
      throw ParseError(kModule, "unknown key '" + k + "' for '" + entry.name + "'");
    }
  }
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& p : entry.params) {
    std::optional<std::string> value;
    for (const auto& [k, v] : spec.params) {
      if (k == p.key) value = v;
    }
    if (!value && !p.default_value.empty()) value = p.default_value;
    if (!value) {
      if (p.key == "background") continue;  // optional without default
      throw ParseError(kModule, "'" + entry.name + "' needs key '" + p.key + "'");
    }
    out.emplace_back(p.key, *value);
  }
  return out;
}

std::string lookup(const std::vector<std::pair<std::string, std::string>>& params,
                   std::string_view key) {
  for (const auto& [k, v] : params) {
    if (k == key) return v;
  }
  return {};
}

std::int64_t int_param(const std::vector<std::pair<std::string, std::string>>& params,
                       std::string_view key, std::int64_t lo, std::int64_t hi) {
  const std::string text = lookup(params, key);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(kModule, "key '" + std::string(key) + "' expects an integer, got '" +
                                  text + "'");
  }
  if (v < lo || v > hi) {
    throw PreconditionError(kModule, "key '" + std::string(key) + "' must lie in [" +
                                         std::to_string(lo) + ", " + std::to_string(hi) +
                                         "], got " + std::to_string(v));
  }
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError(kModule, "cannot open grid file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Grid row_patch(const std::vector<Symbol>& row) {
  Grid g;
  g.width = static_cast<Coord>(row.size());
  g.height = 1;
  g.cells = row;
  return g;
}

}  // namespace

ConfigSpec parse_config_spec(std::string_view text) {
  ConfigSpec spec;
  std::size_t i = 0;
  while (i < text.size() && is_name_char(text[i])) ++i;
  if (i == 0) throw ParseError(kModule, "expected a configuration name", 1, 1);
  spec.name.assign(text.substr(0, i));
  if (i == text.size()) return spec;
  if (text[i] != ':') {
    throw ParseError(kModule, std::string("unexpected '") + text[i] + "'", 1,
                     static_cast<int>(i) + 1);
  }
  ++i;
  std::set<std::string> seen;
  while (true) {
    const std::size_t start = i;
    while (i < text.size() && text[i] != ',') ++i;
    const std::string_view item = text.substr(start, i - start);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw ParseError(kModule, "expected key=value", 1, static_cast<int>(start) + 1);
    }
    std::string key(item.substr(0, eq));
    for (std::size_t c = 0; c < key.size(); ++c) {
      if (!is_name_char(key[c])) {
        throw ParseError(kModule, "bad character in key '" + key + "'", 1,
                         static_cast<int>(start + c) + 1);
      }
    }
    if (!seen.insert(key).second) {
      throw ParseError(kModule, "duplicate key '" + key + "'", 1, static_cast<int>(start) + 1);
    }
    spec.params.emplace_back(std::move(key), std::string(item.substr(eq + 1)));
    if (i == text.size()) break;
    ++i;
  }
  return spec;
}

const std::vector<CatalogEntry>& catalog_list() {
  static const std::vector<CatalogEntry> entries = {
      {"constant", "every cell 0 over a one-symbol alphabet", {}, {"complexity_properties"}},
      {"stripes",
       "vertical stripes eta(x, y) = x mod p",
       {{"p", "2", "horizontal period"}},
       {"balanced_sets", "trapezoid_dichotomy", "generating_bound", "nivat_scan"}},
      {"checkerboard",
       "eta(x, y) = (x + y) mod 2",
       {},
       {"balanced_sets", "trapezoid_dichotomy", "generating_bound", "nivat_scan"}},
      {"debruijn_lift",
       "every row equal to the cyclic de Bruijn word B(2, L)",
       {{"L", "4", "de Bruijn order"}},
       {"nivat_scan", "complexity_properties"}},
      {"section2",
       "eta(i, j) = alpha(i + j) for j in A = {base^n + i^2 : 1 <= i <= n}, alpha(i) otherwise",
       {{"base", "10", "base of the sparse set"},
        {"L", "16", "de Bruijn order of alpha"},
        {"max_n", "4", "largest exponent n; exact for j < base^(max_n+1)"}},
       {"sparse_set_counts"}},
      {"section5",
       "eta(n, 0) = alpha(n) + 2, eta(n, k) = alpha(n) otherwise",
       {{"L", "16", "de Bruijn order of alpha"}},
       {"section5_closed_form", "section5_entropy"}},
      {"grid",
       "finite grid file; the footprint is exact unless a background symbol fills the plane",
       {{"path", "", "grid file path"}, {"background", "", "symbol outside the footprint"}},
       {}},
  };
  return entries;
}

Configuration build_config(const ConfigSpec& spec) {
  const CatalogEntry* entry = find_entry(spec.name);
  if (!entry) throw ParseError(kModule, "unknown configuration '" + spec.name + "'");
  const auto params = resolve(*entry, spec);
  const Descriptor desc{spec.name, params};

  if (spec.name == "constant") {
    Grid g = row_patch({0});
    return make_periodic(g, Alphabet::numeric(1), {1, 0}, {0, 1}).with_descriptor(desc);
  }
  if (spec.name == "stripes") {
    const auto p = int_param(params, "p", 1, 256);
    std::vector<Symbol> row;
    for (std::int64_t x = 0; x < p; ++x) row.push_back(static_cast<Symbol>(x));
    return make_periodic(row_patch(row), Alphabet::numeric(static_cast<std::size_t>(p)), {p, 0},
                         {0, 1})
        .with_descriptor(desc);
  }
  if (spec.name == "checkerboard") {
    Grid g;
    g.width = 2;
    g.height = 2;
    g.cells = {0, 1, 1, 0};
    return make_periodic(g, Alphabet::numeric(2), {2, 0}, {0, 2}).with_descriptor(desc);
  }
  if (spec.name == "debruijn_lift") {
    const auto order = int_param(params, "L", 1, 20);
    const CyclicWord alpha = make_debruijn_word(static_cast<int>(order));
    const auto len = static_cast<Coord>(alpha.length());
    return make_periodic(row_patch(alpha.period), Alphabet::numeric(2), {len, 0}, {0, 1})
        .with_descriptor(desc);
  }
  if (spec.name == "section2") {
    const auto base = int_param(params, "base", 2, 1'000'000);
    const auto order = int_param(params, "L", 1, 26);
    const auto max_n = int_param(params, "max_n", 1, 62);
    return make_section2_example(make_debruijn_word(static_cast<int>(order)),
                                 static_cast<int>(base), static_cast<int>(max_n))
        .with_descriptor(desc);
  }
  if (spec.name == "section5") {
    const auto order = int_param(params, "L", 1, 26);
    return make_section5_example(make_debruijn_word(static_cast<int>(order)))
        .with_descriptor(desc);
  }
  // grid
  std::optional<std::string> background;
  if (const std::string bg = lookup(params, "background"); !bg.empty()) background = bg;
  return load_grid(read_file(lookup(params, "path")), background).with_descriptor(desc);
}

Configuration build_config(std::string_view text) {
  return build_config(parse_config_spec(text));
}

SearchBox default_box(const Configuration& config, const Box& bb) {
  const Descriptor& d = config.descriptor();
  const auto pow2 = [&](std::string_view key) {
    return Coord{1} << int_param(d.params, key, 1, 26);
  };
  if (d.generator == "constant") return Box::sized(1, 1);
  if (d.generator == "stripes") return Box::sized(int_param(d.params, "p", 1, 256), 1);
  if (d.generator == "checkerboard") return Box::sized(2, 2);
  if (d.generator == "debruijn_lift") return Box::sized(pow2("L"), 1);
  if (d.generator == "section5") {
    return {{0, pow2("L") - 1}, {-bb.y.hi - 1, -bb.y.lo}};
  }
  if (d.generator == "section2") return Box::sized(pow2("L"), 64);

  Box footprint;
  if (d.generator == "grid") {
    const GridFile file = parse_grid(read_file(lookup(d.params, "path")));
    footprint = Box::sized(file.grid.width, file.grid.height);
  } else if (config.exact_region()) {
    footprint = *config.exact_region();
  } else {
    throw PreconditionError(kModule, "no default search box for '" + d.to_string() +
                                         "'; pass one explicitly");
  }
  const Box fit{{footprint.x.lo - bb.x.lo, footprint.x.hi - bb.x.hi},
                {footprint.y.lo - bb.y.lo, footprint.y.hi - bb.y.hi}};
  if (fit.empty()) {
    throw PreconditionError(kModule, "region bounding box " + to_string(bb) +
                                         " does not fit inside " + to_string(footprint));
  }
  return fit;
}

std::uint64_t sparse_set_count(int base, int n, std::int64_t k) {
  if (base < 2 || n < 1 || k < 1) {
    throw PreconditionError(kModule, "sparse_set_count needs base >= 2, n >= 1, k >= 1");
  }
  Int128 bn = 1;
  for (int i = 0; i < n; ++i) {
    bn *= base;
    if (bn > (static_cast<Int128>(1) << 100)) {
      throw PreconditionError(kModule, "base^n too large");
    }
  }
  const Int128 lo = bn + 1;
  const Int128 hi = bn + k;
  std::set<Int128> hits;
  Int128 bm = base;
  for (int m = 1; bm <= hi; ++m, bm *= base) {
    for (Int128 i = 1; i <= m; ++i) {
      const Int128 v = bm + i * i;
      if (lo <= v && v <= hi) hits.insert(v);
    }
  }
  return hits.size();
}

std::uint64_t beta_complexity(int base, int max_n, std::int64_t k, const Interval& starts) {
  if (base < 2 || max_n < 1) throw PreconditionError(kModule, "need base >= 2 and max_n >= 1");
  if (k < 1) throw PreconditionError(kModule, "window length must be >= 1");
  if (starts.empty() || starts.lo < 0) {
    throw PreconditionError(kModule, "start interval must be nonempty and >= 0");
  }
  Int128 limit = 1;
  for (int i = 0; i <= max_n; ++i) limit *= base;
  if (static_cast<Int128>(starts.hi) + k - 1 >= limit) {
    throw PreconditionError(kModule, "windows reach past base^(max_n+1), where A is truncated");
  }
  std::string word;
  for (std::int64_t j = starts.lo; j <= starts.hi + k - 1; ++j) {
    word.push_back(in_sparse_set(j, base, max_n) ? '1' : '0');
  }
  std::unordered_set<std::string_view> windows;
  const std::string_view w(word);
  for (std::size_t s = 0; s < static_cast<std::size_t>(starts.length()); ++s) {
    windows.insert(w.substr(s, static_cast<std::size_t>(k)));
  }
  return windows.size();
}

}  // namespace latticelab
