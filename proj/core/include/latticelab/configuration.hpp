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
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latticelab/geometry.hpp"

namespace latticelab {

// Index into an Alphabet.
using Symbol = std::uint8_t;

class Alphabet {
 public:
  Alphabet() = default;
  // Throws PreconditionError on duplicates, an empty list or > 256 symbols.
  explicit Alphabet(std::vector<std::string> symbols);
  // Symbols "0", "1", ..., "n-1".
  static Alphabet numeric(std::size_t n);

  std::size_t size() const { return symbols_.size(); }
  const std::string& name(Symbol s) const { return symbols_.at(s); }
  std::optional<Symbol> find(std::string_view name) const;
  std::span<const std::string> names() const { return symbols_; }
  // True iff every symbol is a single UTF-8 code point.
  bool single_glyph() const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> symbols_;
};

// Provenance of a configuration: generator name plus its parameters, printed
// in the catalog grammar "name:key=value,key=value".
struct Descriptor {
  std::string generator;
  std::vector<std::pair<std::string, std::string>> params;

  std::string to_string() const;
  std::optional<std::string> param(std::string_view key) const;
};

// A finite stand-in for the set of all translates: the translates n with n in
// the box.
using SearchBox = Box;

// A coloring η: Z² -> alphabet, evaluated lazily.
//
// Evaluation outside exact_region() throws ExactnessError. A configuration may
// carry a coverage rule that decides whether a search box provably reaches
// every pattern of a region (e.g. a periodic configuration with a box covering
// a fundamental domain); complexity counts are flagged exact only then.
class Configuration {
 public:
  using Rule = std::function<Symbol(Point)>;
  using CoverageRule =
      std::function<bool(const LatticeSet& region, const SearchBox& box)>;

  Configuration(Alphabet alphabet, Rule rule, std::optional<Box> exact_region,
                Descriptor descriptor, CoverageRule coverage = {});

  const Alphabet& alphabet() const { return *alphabet_; }
  const std::optional<Box>& exact_region() const { return exact_region_; }
  const Descriptor& descriptor() const { return descriptor_; }

  Symbol at(Point p) const;
  Symbol at_unchecked(Point p) const { return (*rule_)(p); }
  bool is_exact_on(const Box& b) const {
    return !exact_region_ || exact_region_->contains(b);
  }
  bool covers_all_translates(const LatticeSet& region,
                             const SearchBox& box) const;

  // η'(z) = η(R^r z) with R the counterclockwise quarter turn.
  Configuration rotated(int quarter_turns) const;
  Configuration with_descriptor(Descriptor d) const;

 private:
  std::shared_ptr<const Alphabet> alphabet_;
  std::shared_ptr<const Rule> rule_;
  std::optional<Box> exact_region_;
  Descriptor descriptor_;
  std::shared_ptr<const CoverageRule> coverage_;
};

// A rectangular patch of symbols; row 0 is y = 0.
struct Grid {
  Coord width = 0;
  Coord height = 0;
  std::vector<Symbol> cells;

  Symbol at(Coord x, Coord y) const {
    return cells[static_cast<std::size_t>(y * width + x)];
  }
  static Grid from_rows_top_down(const std::vector<std::vector<Symbol>>& rows);
};

// Bi-infinite periodic word given by one period.
struct CyclicWord {
  std::vector<Symbol> period;

  Symbol at(Coord i) const {
    const auto n = static_cast<Coord>(period.size());
    return period[static_cast<std::size_t>(((i % n) + n) % n)];
  }
  std::size_t length() const { return period.size(); }
};

// Doubly periodic configuration with period lattice spanned by u and v.
// Every patch cell is reduced modulo the lattice; the patch must hit every
// residue class and agree with itself on repeated classes.
Configuration make_periodic(const Grid& patch, const Alphabet& alphabet,
                            Point period_u, Point period_v);

// Cyclic binary de Bruijn word B(2, order), length 2^order.
CyclicWord make_debruijn_word(int order);

// η(i, j) = α(i + j) if j ∈ A, α(i) otherwise, with
// A = {base^n + i² : 1 <= i <= n <= max_n}. Exact for j < base^(max_n+1).
Configuration make_section2_example(const CyclicWord& alpha, int base,
                                    int max_n);
// Membership in A_base restricted to exponents n <= max_n.
bool in_sparse_set(std::int64_t j, int base, int max_n);

// η(n, k) = α(n) for k != 0 and η(n, 0) = α(n) + 2, over {0, 1, 2, 3}.
Configuration make_section5_example(const CyclicWord& alpha);

// Grid file:
//   alphabet: a,b,c
//   background: a        (optional)
//   <rows, top row = highest y>
// Single-glyph alphabets write rows as contiguous glyphs; otherwise cells are
// separated by whitespace.
struct GridFile {
  Alphabet alphabet;
  Grid grid;
  std::optional<Symbol> background;
};

GridFile parse_grid(std::string_view text);
std::string write_grid(const GridFile& file);

// Configuration equal to the grid on its footprint [0,w-1]×[0,h-1]. Outside
// it uses `background` (overriding the file's), else the footprint is the
// exact region.
Configuration load_grid(std::string_view text,
                        std::optional<std::string> background = std::nullopt);

}  // namespace latticelab
