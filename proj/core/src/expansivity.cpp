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

#include "latticelab/expansivity.hpp"

#include <map>
#include <vector>

#include "latticelab/error.hpp"

namespace latticelab {

bool in_strip(Point n, const Direction& dir, const Rational& r) {
  // dist² = cross(n, v)² / |v|² < (a/b)²  <=>  cross² · b² < a² · |v|².
  const auto c = static_cast<Int128>(cross(n, dir.vec()));
  const auto a = static_cast<Int128>(r.numerator());
  const auto b = static_cast<Int128>(r.denominator());
  return c * c * b * b < a * a * static_cast<Int128>(dir.norm2());
}

ExpansivityReport probe_expansive(const Configuration& config, const Direction& dir,
                                  const Rational& r, const SearchBox& window,
                                  const SearchBox& box) {
  if (r <= Rational(0)) throw PreconditionError("expansivity", "radius must be positive");
  if (window.empty()) throw PreconditionError("expansivity", "empty window");

  ExpansivityReport rep;
  rep.direction = dir;
  rep.radius = r;
  rep.window = window;
  rep.box = box;

  const LatticeSet cells = LatticeSet::from_box(window);
  std::vector<std::size_t> strip_idx;
  std::vector<Point> strip_pts;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (in_strip(cells[i], dir, r)) {
      strip_idx.push_back(i);
      strip_pts.push_back(cells[i]);
    }
  }
  rep.strip = LatticeSet(std::move(strip_pts));

  const PatternCollection pats = collect_patterns(config, cells, box);
  rep.window_patterns = pats.size();

  // Patterns are sorted, so the first member of each class is its least.
  std::map<std::vector<Symbol>, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < pats.size(); ++i) {
    const auto p = pats[i];
    std::vector<Symbol> key;
    key.reserve(strip_idx.size());
    for (const std::size_t c : strip_idx) key.push_back(p[c]);
    classes[std::move(key)].push_back(i);
  }
  rep.strip_classes = classes.size();
  for (const auto& [key, members] : classes) {
    if (members.size() >= 2) {
      rep.determined = false;
      rep.witness = std::make_pair(pats.pattern(members[0]), pats.pattern(members[1]));
      break;
    }
  }
  return rep;
}

std::string pattern_grid(const Pattern& pattern, const Alphabet& alphabet) {
  const Box bb = pattern.support.bounding_box();
  if (pattern.support.size() != bb.cell_count()) {
    throw PreconditionError("expansivity", "pattern support is not a rectangle");
  }
  GridFile file;
  file.alphabet = alphabet;
  file.grid.width = bb.x.length();
  file.grid.height = bb.y.length();
  file.grid.cells = pattern.values;  // row-major from the lowest row
  return write_grid(file);
}

}  // namespace latticelab
