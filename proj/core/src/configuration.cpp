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

#include "latticelab/configuration.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "latticelab/error.hpp"

namespace latticelab {
namespace {

// Effectively unbounded coordinates for half-infinite exact regions; far
// enough inside int64 that box arithmetic never overflows.
constexpr Coord kFar = Coord{1} << 60;

Coord floor_div(Coord a, Coord b) {
  Coord q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::size_t utf8_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xE) return 3;
  if ((lead >> 3) == 0x1E) return 4;
  return 1;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

// --- Alphabet -------------------------------------------------------------------

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw PreconditionError("configuration", "empty alphabet");
  if (symbols_.size() > 256) {
    throw PreconditionError("configuration", "alphabet larger than 256 symbols");
  }
  std::set<std::string> seen;
  for (const auto& s : symbols_) {
    if (s.empty()) throw PreconditionError("configuration", "empty symbol name");
    if (!seen.insert(s).second) {
      throw PreconditionError("configuration", "duplicate symbol '" + s + "'");
    }
  }
}

Alphabet Alphabet::numeric(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return Alphabet(std::move(names));
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] == name) return static_cast<Symbol>(i);
  }
  return std::nullopt;
}

bool Alphabet::single_glyph() const {
  return std::all_of(symbols_.begin(), symbols_.end(), [](const std::string& s) {
    return utf8_length(static_cast<unsigned char>(s[0])) == s.size() &&
           s != " " && s != "\t";
  });
}

std::string Descriptor::to_string() const {
  std::string out = generator;
  for (std::size_t i = 0; i < params.size(); ++i) {
    out += (i == 0 ? ":" : ",");
    out += params[i].first + "=" + params[i].second;
  }
  return out;
}

std::optional<std::string> Descriptor::param(std::string_view key) const {
  for (const auto& [k, v] : params) {
    if (k == key) return v;
  }
  return std::nullopt;
}

// --- Configuration ----------------------------------------------------------------

Configuration::Configuration(Alphabet alphabet, Rule rule,
                             std::optional<Box> exact_region,
                             Descriptor descriptor, CoverageRule coverage)
    : alphabet_(std::make_shared<const Alphabet>(std::move(alphabet))),
      rule_(std::make_shared<const Rule>(std::move(rule))),
      exact_region_(exact_region),
      descriptor_(std::move(descriptor)),
      coverage_(coverage ? std::make_shared<const CoverageRule>(std::move(coverage))
                         : nullptr) {}

Symbol Configuration::at(Point p) const {
  if (exact_region_ && !exact_region_->contains(p)) {
    throw ExactnessError("configuration", "cell " + to_string(p) +
                                              " outside exact region " +
                                              to_string(*exact_region_));
  }
  return (*rule_)(p);
}

bool Configuration::covers_all_translates(const LatticeSet& region,
                                          const SearchBox& box) const {
  return coverage_ && !box.empty() && !region.empty() && (*coverage_)(region, box);
}

Configuration Configuration::rotated(int quarter_turns) const {
  auto base_rule = rule_;
  Rule rule = [base_rule, quarter_turns](Point z) {
    return (*base_rule)(rotate(z, quarter_turns));
  };
  std::optional<Box> exact;
  if (exact_region_) exact = rotate(*exact_region_, -quarter_turns);
  CoverageRule coverage;
  if (coverage_) {
    auto base_cov = coverage_;
    coverage = [base_cov, quarter_turns](const LatticeSet& region,
                                         const SearchBox& box) {
      return (*base_cov)(region.rotated(quarter_turns), rotate(box, quarter_turns));
    };
  }
  Descriptor d = descriptor_;
  d.params.emplace_back("rotated", std::to_string(((quarter_turns % 4) + 4) % 4));
  Configuration out(*alphabet_, std::move(rule), exact, std::move(d),
                    std::move(coverage));
  return out;
}

Configuration Configuration::with_descriptor(Descriptor d) const {
  Configuration out = *this;
  out.descriptor_ = std::move(d);
  return out;
}

Grid Grid::from_rows_top_down(const std::vector<std::vector<Symbol>>& rows) {
  Grid g;
  g.height = static_cast<Coord>(rows.size());
  g.width = rows.empty() ? 0 : static_cast<Coord>(rows.front().size());
  g.cells.resize(static_cast<std::size_t>(g.width * g.height));
  for (Coord r = 0; r < g.height; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (static_cast<Coord>(row.size()) != g.width) {
      throw PreconditionError("configuration", "ragged grid rows");
    }
    const Coord y = g.height - 1 - r;
    std::copy(row.begin(), row.end(), g.cells.begin() + y * g.width);
  }
  return g;
}

// --- Periodic ---------------------------------------------------------------------

namespace {

// Reduction of Z² modulo the lattice spanned by u and v onto the half-open
// fundamental parallelogram.
struct PeriodLattice {
  Point u, v;
  Coord det;

  Point reduce(Point x) const {
    const Coord a = floor_div(cross(x, v), det);
    const Coord b = floor_div(cross(u, x), det);
    return x - a * u - b * v;
  }
};

}  // namespace

Configuration make_periodic(const Grid& patch, const Alphabet& alphabet,
                            Point period_u, Point period_v) {
  const Coord det = cross(period_u, period_v);
  if (det == 0) {
    throw PreconditionError("configuration", "periods " + to_string(period_u) +
                                                 " and " + to_string(period_v) +
                                                 " are linearly dependent");
  }
  if (patch.width <= 0 || patch.height <= 0) {
    throw PreconditionError("configuration", "empty patch");
  }
  const PeriodLattice lattice{period_u, period_v, det};
  // Residues lie in the bounding box of the parallelogram {0, u, v, u+v}.
  const Coord xs[] = {0, period_u.x, period_v.x, period_u.x + period_v.x};
  const Coord ys[] = {0, period_u.y, period_v.y, period_u.y + period_v.y};
  const Box rbox{{*std::min_element(xs, xs + 4), *std::max_element(xs, xs + 4)},
                 {*std::min_element(ys, ys + 4), *std::max_element(ys, ys + 4)}};
  constexpr Symbol kUnset = 255;
  auto table = std::make_shared<std::vector<Symbol>>(rbox.cell_count(), kUnset);
  auto slot = [rbox](Point r) {
    return static_cast<std::size_t>((r.y - rbox.y.lo) * rbox.x.length() +
                                    (r.x - rbox.x.lo));
  };
  std::size_t filled = 0;
  for (Coord y = 0; y < patch.height; ++y) {
    for (Coord x = 0; x < patch.width; ++x) {
      const Symbol s = patch.at(x, y);
      if (s >= alphabet.size()) {
        throw PreconditionError("configuration", "patch symbol outside alphabet");
      }
      Symbol& cell = (*table)[slot(lattice.reduce({x, y}))];
      if (cell == kUnset) {
        cell = s;
        ++filled;
      } else if (cell != s) {
        throw PreconditionError("configuration",
                                "patch disagrees with itself at " +
                                    to_string(Point{x, y}) + " modulo the periods");
      }
    }
  }
  const Coord classes = det < 0 ? -det : det;
  if (static_cast<Coord>(filled) != classes) {
    throw PreconditionError("configuration",
                            "patch does not tile the quotient: covers " +
                                std::to_string(filled) + " of " +
                                std::to_string(classes) + " residue classes");
  }

  Configuration::Rule rule = [lattice, table, slot](Point p) {
    return (*table)[slot(lattice.reduce(p))];
  };
  Configuration::CoverageRule coverage = [lattice, classes](const LatticeSet&,
                                                            const SearchBox& box) {
    if (static_cast<Coord>(box.cell_count()) < classes) return false;
    std::unordered_set<Point, PointHash> seen;
    for (Coord y = box.y.lo; y <= box.y.hi; ++y) {
      for (Coord x = box.x.lo; x <= box.x.hi; ++x) {
        seen.insert(lattice.reduce({x, y}));
        if (static_cast<Coord>(seen.size()) == classes) return true;
      }
    }
    return false;
  };
  Descriptor d{"periodic",
               {{"u", std::to_string(period_u.x) + "," + std::to_string(period_u.y)},
                {"v", std::to_string(period_v.x) + "," + std::to_string(period_v.y)}}};
  return Configuration(alphabet, std::move(rule), std::nullopt, std::move(d),
                       std::move(coverage));
}

// --- de Bruijn ----------------------------------------------------------------------

CyclicWord make_debruijn_word(int order) {
  if (order < 1 || order > 26) {
    throw PreconditionError("configuration", "de Bruijn order must be in [1, 26]");
  }
  // Fredricksen-Kessler-Maiorana: concatenate Lyndon words whose length
  // divides the order, in lexicographic order.
  const int n = order;
  std::vector<int> a(static_cast<std::size_t>(n) + 1, 0);
  CyclicWord out;
  out.period.reserve(std::size_t{1} << n);
  std::function<void(int, int)> visit = [&](int t, int p) {
    if (t > n) {
      if (n % p == 0) {
        for (int i = 1; i <= p; ++i) out.period.push_back(static_cast<Symbol>(a[i]));
      }
      return;
    }
    a[t] = a[t - p];
    visit(t + 1, p);
    for (int j = a[t - p] + 1; j < 2; ++j) {
      a[t] = j;
      visit(t + 1, t);
    }
  };
  visit(1, 1);
  return out;
}

// --- Worked examples ---------------------------------------------------------------

bool in_sparse_set(std::int64_t j, int base, int max_n) {
  std::int64_t power = 1;
  for (int n = 1; n <= max_n; ++n) {
    power *= base;
    const std::int64_t d = j - power;
    if (d < 1) return false;  // powers only grow from here
    if (d > static_cast<std::int64_t>(n) * n) continue;
    const std::int64_t i = isqrt(d);
    if (i * i == d && i >= 1 && i <= n) return true;
  }
  return false;
}

Configuration make_section2_example(const CyclicWord& alpha, int base, int max_n) {
  if (base < 2) throw PreconditionError("configuration", "base must be >= 2");
  if (max_n < 1) throw PreconditionError("configuration", "max_n must be >= 1");
  if (alpha.period.empty()) throw PreconditionError("configuration", "empty alpha");
  std::int64_t limit = 1;
  for (int i = 0; i <= max_n; ++i) {
    if (limit > kFar / base) {
      throw PreconditionError("configuration", "base^(max_n+1) overflows");
    }
    limit *= base;
  }
  Configuration::Rule rule = [alpha, base, max_n](Point p) {
    return in_sparse_set(p.y, base, max_n) ? alpha.at(p.x + p.y) : alpha.at(p.x);
  };
  const Box exact{{-kFar, kFar}, {-kFar, limit - 1}};
  Descriptor d{"section2",
               {{"base", std::to_string(base)}, {"max_n", std::to_string(max_n)}}};
  return Configuration(Alphabet::numeric(2), std::move(rule), exact, std::move(d));
}

Configuration make_section5_example(const CyclicWord& alpha) {
  if (alpha.period.empty()) throw PreconditionError("configuration", "empty alpha");
  for (Symbol s : alpha.period) {
    if (s > 1) throw PreconditionError("configuration", "alpha must be binary");
  }
  Configuration::Rule rule = [alpha](Point p) {
    const Symbol s = alpha.at(p.x);
    return p.y == 0 ? static_cast<Symbol>(s + 2) : s;
  };
  const auto period = static_cast<Coord>(alpha.length());
  // Every pattern is reached once the box spans a horizontal period and puts
  // row 0 under each row of the region, plus one offset that misses it.
  Configuration::CoverageRule coverage = [period](const LatticeSet& region,
                                                  const SearchBox& box) {
    if (box.x.length() < period) return false;
    std::set<Coord> hits;
    for (const Point& p : region) hits.insert(-p.y);
    for (Coord ny : hits) {
      if (!box.y.contains(ny)) return false;
    }
    return box.y.length() > static_cast<Coord>(hits.size());
  };
  Descriptor d{"section5", {}};
  return Configuration(Alphabet::numeric(4), std::move(rule), std::nullopt,
                       std::move(d), std::move(coverage));
}

// --- Grid files ----------------------------------------------------------------------

GridFile parse_grid(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::size_t pos = 0; pos <= text.size();) {
    const std::size_t nl = text.find('\n', pos);
    const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
    lines.push_back(text.substr(pos, end - pos));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();

  std::size_t li = 0;
  auto header = [&](std::string_view key) -> std::optional<std::string_view> {
    if (li >= lines.size()) return std::nullopt;
    std::string_view line = trim(lines[li]);
    if (line.substr(0, key.size()) != key) return std::nullopt;
    line.remove_prefix(key.size());
    line = trim(line);
    if (line.empty() || line.front() != ':') return std::nullopt;
    line.remove_prefix(1);
    ++li;
    return trim(line);
  };

  GridFile out;
  auto alpha_line = header("alphabet");
  if (!alpha_line) throw ParseError("configuration", "expected 'alphabet:' header", 1, 1);
  std::vector<std::string> names;
  for (std::size_t pos = 0; pos <= alpha_line->size();) {
    const std::size_t comma = alpha_line->find(',', pos);
    const std::size_t end = comma == std::string_view::npos ? alpha_line->size() : comma;
    names.emplace_back(trim(alpha_line->substr(pos, end - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  try {
    out.alphabet = Alphabet(std::move(names));
  } catch (const PreconditionError& e) {
    throw ParseError("configuration", e.what(), 1, 1);
  }
  if (auto bg = header("background")) {
    auto s = out.alphabet.find(*bg);
    if (!s) {
      throw ParseError("configuration", "unknown background symbol '" + std::string(*bg) + "'",
                       static_cast<int>(li), 1);
    }
    out.background = *s;
  }

  const bool glyphs = out.alphabet.single_glyph();
  std::vector<std::vector<Symbol>> rows;
  for (; li < lines.size(); ++li) {
    const int line_no = static_cast<int>(li) + 1;
    std::string_view line = lines[li];
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::vector<Symbol> row;
    std::size_t pos = 0;
    while (pos < line.size()) {
      std::size_t len;
      if (glyphs) {
        len = std::min(utf8_length(static_cast<unsigned char>(line[pos])),
                       line.size() - pos);
      } else {
        if (line[pos] == ' ' || line[pos] == '\t') {
          ++pos;
          continue;
        }
        len = 0;
        while (pos + len < line.size() && line[pos + len] != ' ' &&
               line[pos + len] != '\t') {
          ++len;
        }
      }
      const std::string_view token = line.substr(pos, len);
      auto s = out.alphabet.find(token);
      if (!s) {
        throw ParseError("configuration", "unknown symbol '" + std::string(token) + "'",
                         line_no, static_cast<int>(pos) + 1);
      }
      row.push_back(*s);
      pos += len;
    }
    if (row.empty()) throw ParseError("configuration", "empty grid row", line_no, 1);
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("configuration",
                       "ragged row: expected " + std::to_string(rows.front().size()) +
                           " cells, found " + std::to_string(row.size()),
                       line_no, 1);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw ParseError("configuration", "grid has no rows", static_cast<int>(li) + 1, 1);
  }
  out.grid = Grid::from_rows_top_down(rows);
  return out;
}

std::string write_grid(const GridFile& file) {
  std::ostringstream out;
  out << "alphabet: ";
  for (std::size_t i = 0; i < file.alphabet.size(); ++i) {
    out << (i ? "," : "") << file.alphabet.name(static_cast<Symbol>(i));
  }
  out << "\n";
  if (file.background) out << "background: " << file.alphabet.name(*file.background) << "\n";
  const bool glyphs = file.alphabet.single_glyph();
  for (Coord y = file.grid.height - 1; y >= 0; --y) {
    for (Coord x = 0; x < file.grid.width; ++x) {
      if (!glyphs && x > 0) out << ' ';
      out << file.alphabet.name(file.grid.at(x, y));
    }
    out << "\n";
  }
  return out.str();
}

Configuration load_grid(std::string_view text, std::optional<std::string> background) {
  GridFile file = parse_grid(text);
  if (background) {
    auto s = file.alphabet.find(*background);
    if (!s) {
      throw ParseError("configuration", "unknown background symbol '" + *background + "'");
    }
    file.background = *s;
  }
  auto grid = std::make_shared<const Grid>(file.grid);
  const Box footprint = Box::sized(grid->width, grid->height);
  std::optional<Symbol> bg = file.background;
  Configuration::Rule rule = [grid, footprint, bg](Point p) -> Symbol {
    if (footprint.contains(p)) return grid->at(p.x, p.y);
    return bg.value_or(0);
  };
  Descriptor d{"grid", {}};
  if (bg) d.params.emplace_back("background", file.alphabet.name(*bg));
  return Configuration(file.alphabet, std::move(rule),
                       bg ? std::nullopt : std::optional<Box>(footprint), std::move(d));
}

}  // namespace latticelab
