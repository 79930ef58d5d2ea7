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

#include "latticelab/complexity.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <unordered_map>

#include "latticelab/error.hpp"
#include "latticelab/parallel.hpp"

namespace latticelab {

Symbol Pattern::at(Point p) const {
  auto idx = support.index_of(p);
  if (!idx) throw PreconditionError("complexity", to_string(p) + " not in pattern support");
  return values[*idx];
}

bool operator<(const Pattern& a, const Pattern& b) {
  if (a.support.size() != b.support.size()) return a.support.size() < b.support.size();
  if (a.values != b.values) return a.values < b.values;
  return std::lexicographical_compare(a.support.begin(), a.support.end(),
                                      b.support.begin(), b.support.end(),
                                      RowMajorLess{});
}

PatternCollection::PatternCollection(LatticeSet support, std::vector<Symbol> data)
    : support_(std::move(support)), data_(std::move(data)) {}

bool PatternCollection::contains(std::span<const Symbol> values) const {
  if (values.size() != width()) return false;
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    auto row = (*this)[mid];
    if (std::lexicographical_compare(row.begin(), row.end(), values.begin(),
                                     values.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo < size() && std::equal(values.begin(), values.end(), (*this)[lo].begin());
}

Pattern PatternCollection::pattern(std::size_t i) const {
  auto row = (*this)[i];
  return Pattern{support_, std::vector<Symbol>(row.begin(), row.end())};
}

namespace {

// Polynomial hashing modulo the Mersenne prime 2^61 - 1.
constexpr std::uint64_t kMod = (std::uint64_t{1} << 61) - 1;
constexpr std::uint64_t kRowBase = 0x1F3D5B79A2C4E68DULL % kMod;
constexpr std::uint64_t kRunBase = 0x5851F42D4C957F2DULL % kMod;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  const UInt128 p = static_cast<UInt128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(p & kMod) + static_cast<std::uint64_t>(p >> 61);
  if (r >= kMod) r -= kMod;
  return r;
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  if (r >= kMod) r -= kMod;
  return r;
}

// Maximal horizontal run of region cells, relative to the region's bounding
// box min-corner. `offset` is the index of its first cell in region order.
struct Run {
  Coord dy;
  Coord dx;
  Coord len;
  std::size_t offset;
};

std::vector<Run> row_runs(const LatticeSet& region, const Box& rb) {
  std::vector<Run> runs;
  for (std::size_t i = 0; i < region.size();) {
    std::size_t j = i + 1;
    while (j < region.size() && region[j].y == region[i].y &&
           region[j].x == region[j - 1].x + 1) {
      ++j;
    }
    runs.push_back({region[i].y - rb.y.lo, region[i].x - rb.x.lo,
                    static_cast<Coord>(j - i), i});
    i = j;
  }
  return runs;
}

// Dense copy of the configuration over the union of region + n for n in a
// band of box rows, with per-row prefix hashes.
class Window {
 public:
  Window(const Configuration& config, const Box& cells, std::span<const std::uint64_t> powers)
      : cells_(cells),
        width_(static_cast<std::size_t>(cells.x.length())),
        powers_(powers) {
    const std::size_t rows = static_cast<std::size_t>(cells.y.length());
    symbols_.resize(width_ * rows);
    prefix_.resize((width_ + 1) * rows);
    for (std::size_t r = 0; r < rows; ++r) {
      const Coord y = cells.y.lo + static_cast<Coord>(r);
      Symbol* row = symbols_.data() + r * width_;
      std::uint64_t* pre = prefix_.data() + r * (width_ + 1);
      pre[0] = 0;
      for (std::size_t c = 0; c < width_; ++c) {
        row[c] = config.at_unchecked({cells.x.lo + static_cast<Coord>(c), y});
        pre[c + 1] = addmod(mulmod(pre[c], kRowBase), std::uint64_t{row[c]} + 1);
      }
    }
  }

  const Symbol* cell(Coord x, Coord y) const {
    return symbols_.data() + static_cast<std::size_t>(y - cells_.y.lo) * width_ +
           static_cast<std::size_t>(x - cells_.x.lo);
  }

  std::uint64_t run_hash(Coord x, Coord y, Coord len) const {
    const std::uint64_t* pre = prefix_.data() +
                               static_cast<std::size_t>(y - cells_.y.lo) * (width_ + 1) +
                               static_cast<std::size_t>(x - cells_.x.lo);
    const auto l = static_cast<std::size_t>(len);
    return addmod(pre[l], kMod - mulmod(pre[0], powers_[l]));
  }

 private:
  Box cells_;
  std::size_t width_;
  std::span<const std::uint64_t> powers_;
  std::vector<Symbol> symbols_;
  std::vector<std::uint64_t> prefix_;
};

// Hash set of patterns with full content comparison on hash equality.
class PatternTable {
 public:
  explicit PatternTable(std::size_t width) : width_(width) {}

  std::size_t size() const { return hashes_.size(); }
  std::size_t width() const { return width_; }
  const Symbol* entry(std::size_t i) const { return arena_.data() + i * width_; }
  std::uint64_t hash(std::size_t i) const { return hashes_[i]; }

  // `equal(entry)` compares candidate contents; `write(dst)` materializes.
  template <class Equal, class Write>
  void insert(std::uint64_t h, Equal&& equal, Write&& write) {
    auto [it, fresh] = first_.try_emplace(h, static_cast<std::uint32_t>(size()));
    if (!fresh) {
      for (std::uint32_t i = it->second;; i = next_[i]) {
        if (equal(entry(i))) return;
        if (next_[i] == kNone) {
          next_[i] = static_cast<std::uint32_t>(size());
          break;
        }
      }
    }
    hashes_.push_back(h);
    next_.push_back(kNone);
    arena_.resize(arena_.size() + width_);
    write(arena_.data() + arena_.size() - width_);
  }

  void merge(const PatternTable& other) {
    for (std::size_t i = 0; i < other.size(); ++i) {
      const Symbol* src = other.entry(i);
      insert(
          other.hash(i),
          [&](const Symbol* e) { return std::memcmp(e, src, width_) == 0; },
          [&](Symbol* dst) { std::memcpy(dst, src, width_); });
    }
  }

  std::vector<Symbol> sorted_contents() const {
    std::vector<std::size_t> order(size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return std::lexicographical_compare(entry(a), entry(a) + width_, entry(b),
                                          entry(b) + width_);
    });
    std::vector<Symbol> out;
    out.reserve(size() * width_);
    for (std::size_t i : order) out.insert(out.end(), entry(i), entry(i) + width_);
    return out;
  }

 private:
  static constexpr std::uint32_t kNone = 0xFFFFFFFFu;
  std::size_t width_;
  std::unordered_map<std::uint64_t, std::uint32_t> first_;
  std::vector<std::uint32_t> next_;
  std::vector<std::uint64_t> hashes_;
  std::vector<Symbol> arena_;
};

constexpr std::size_t kWindowCellBudget = std::size_t{1} << 22;

PatternTable sweep(const Configuration& config, const LatticeSet& region,
                   const SearchBox& box) {
  const Box rb = region.bounding_box();
  const std::vector<Run> runs = row_runs(region, rb);
  const std::size_t width = region.size();
  const Coord win_w = box.x.length() + rb.x.length() - 1;

  std::vector<std::uint64_t> powers(static_cast<std::size_t>(rb.x.length()) + 1, 1);
  for (std::size_t i = 1; i < powers.size(); ++i) powers[i] = mulmod(powers[i - 1], kRowBase);

  const auto box_rows = static_cast<std::size_t>(box.y.length());
  const std::size_t chunks = std::min<std::size_t>(parallel::thread_count(), box_rows);
  std::vector<PatternTable> tables(chunks, PatternTable(width));

  parallel::for_each_chunk(box_rows, chunks, [&](std::size_t c, std::size_t begin,
                                                 std::size_t end) {
    PatternTable& table = tables[c];
    const auto band_rows = static_cast<std::size_t>(std::max<Coord>(
        1, static_cast<Coord>(kWindowCellBudget) / std::max<Coord>(1, win_w) -
               rb.y.length()));
    for (std::size_t r0 = begin; r0 < end; r0 += band_rows) {
      const std::size_t r1 = std::min(end, r0 + band_rows);
      const Coord ny0 = box.y.lo + static_cast<Coord>(r0);
      const Coord ny1 = box.y.lo + static_cast<Coord>(r1) - 1;
      const Box cells{{box.x.lo + rb.x.lo, box.x.hi + rb.x.hi},
                      {ny0 + rb.y.lo, ny1 + rb.y.hi}};
      const Window window(config, cells, powers);
      for (Coord ny = ny0; ny <= ny1; ++ny) {
        for (Coord nx = box.x.lo; nx <= box.x.hi; ++nx) {
          const Coord ox = nx + rb.x.lo;
          const Coord oy = ny + rb.y.lo;
          std::uint64_t h = 0;
          for (const Run& run : runs) {
            h = addmod(mulmod(h, kRunBase),
                       window.run_hash(ox + run.dx, oy + run.dy, run.len) + 1);
          }
          table.insert(
              h,
              [&](const Symbol* e) {
                for (const Run& run : runs) {
                  if (std::memcmp(e + run.offset, window.cell(ox + run.dx, oy + run.dy),
                                  static_cast<std::size_t>(run.len)) != 0) {
                    return false;
                  }
                }
                return true;
              },
              [&](Symbol* dst) {
                for (const Run& run : runs) {
                  std::memcpy(dst + run.offset, window.cell(ox + run.dx, oy + run.dy),
                              static_cast<std::size_t>(run.len));
                }
              });
        }
      }
    }
  });

  for (std::size_t c = 1; c < tables.size(); ++c) tables[0].merge(tables[c]);
  return std::move(tables[0]);
}

}  // namespace

void check_translates_exact(const Configuration& config, const LatticeSet& region,
                            const SearchBox& box) {
  if (region.empty()) {
    throw PreconditionError("complexity", "empty region: complexity of the empty set is undefined");
  }
  if (box.empty()) throw PreconditionError("complexity", "empty search box");
  const auto& exact = config.exact_region();
  if (!exact) return;
  const Box rb = region.bounding_box();
  const Interval ok_x{exact->x.lo - rb.x.lo, exact->x.hi - rb.x.hi};
  const Interval ok_y{exact->y.lo - rb.y.lo, exact->y.hi - rb.y.hi};
  if (ok_x.contains(box.x) && ok_y.contains(box.y)) return;
  auto first_bad = [](const Interval& range, const Interval& ok) {
    if (ok.empty() || range.lo < ok.lo || range.lo > ok.hi) return range.lo;
    return ok.hi + 1;
  };
  Point n{box.x.lo, box.y.lo};
  if (!ok_y.contains(box.y)) {
    n.y = first_bad(box.y, ok_y);
  } else {
    n.x = first_bad(box.x, ok_x);
  }
  throw ExactnessError("complexity", "translate n=" + to_string(n) +
                                         " moves the region outside the exact region " +
                                         to_string(*exact));
}

PatternCollection collect_patterns(const Configuration& config, const LatticeSet& region,
                                   const SearchBox& box) {
  check_translates_exact(config, region, box);
  PatternTable table = sweep(config, region, box);
  return PatternCollection(region.anchored(), table.sorted_contents());
}

std::vector<Pattern> patterns_of(const Configuration& config, const LatticeSet& region,
                                 const SearchBox& box) {
  const PatternCollection patterns = collect_patterns(config, region, box);
  std::vector<Pattern> out;
  out.reserve(patterns.size());
  for (std::size_t i = 0; i < patterns.size(); ++i) out.push_back(patterns.pattern(i));
  return out;
}

std::uint64_t count_patterns(const Configuration& config, const LatticeSet& region,
                             const SearchBox& box) {
  check_translates_exact(config, region, box);
  return sweep(config, region, box).size();
}

ComplexityResult complexity(const Configuration& config, const LatticeSet& region,
                            const SearchBox& box) {
  ComplexityResult r;
  r.count = count_patterns(config, region, box);
  r.region = region;
  r.box = box;
  r.exact = config.covers_all_translates(region, box);
  return r;
}

std::uint64_t rectangle_complexity(const Configuration& config, Coord n, Coord k,
                                   const SearchBox& box) {
  if (n <= 0 || k <= 0) throw PreconditionError("complexity", "rectangle sides must be positive");
  return count_patterns(config, LatticeSet::from_box(Box::sized(n, k)), box);
}

RectangleTable rectangle_table(const Configuration& config, Coord n_max, Coord k_max,
                               const SearchBox& box) {
  if (n_max <= 0 || k_max <= 0) {
    throw PreconditionError("complexity", "n_max and k_max must be positive");
  }
  RectangleTable t;
  t.n_max = n_max;
  t.k_max = k_max;
  t.counts.assign(static_cast<std::size_t>(n_max),
                  std::vector<std::uint64_t>(static_cast<std::size_t>(k_max)));
  t.exact.assign(static_cast<std::size_t>(n_max),
                 std::vector<bool>(static_cast<std::size_t>(k_max)));
  for (Coord n = 1; n <= n_max; ++n) {
    for (Coord k = 1; k <= k_max; ++k) {
      const ComplexityResult r =
          complexity(config, LatticeSet::from_box(Box::sized(n, k)), box);
      t.counts[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] = r.count;
      t.exact[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] = r.exact;
    }
  }
  return t;
}

std::vector<NivatPair> nivat_scan(const Configuration& config, Coord n_max, Coord k_max,
                                  const SearchBox& box) {
  const RectangleTable t = rectangle_table(config, n_max, k_max, box);
  std::vector<NivatPair> out;
  for (Coord n = 1; n <= n_max; ++n) {
    for (Coord k = 1; k <= k_max; ++k) {
      const std::uint64_t c = t.at(n, k);
      if (c <= static_cast<std::uint64_t>(n * k)) out.push_back({n, k, c});
    }
  }
  return out;
}

}  // namespace latticelab
