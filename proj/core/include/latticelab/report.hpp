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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "latticelab/catalog.hpp"
#include "latticelab/complexity.hpp"
#include "latticelab/entropy.hpp"
#include "latticelab/expansivity.hpp"
#include "latticelab/extension.hpp"

namespace latticelab::report {

// Serializers for analysis results. Output is a pure function of the input:
// fixed key order, fixed float formatting, trailing newline.
enum class Format { kCsv, kJson };

// "csv" or "json"; anything else raises ParseError.
Format parse_format(std::string_view text);

std::string complexity(const ComplexityResult& r, std::string_view config, Format f);
std::string table(const RectangleTable& t, std::string_view config, const SearchBox& box,
                  Format f);
std::string nivat(std::span<const NivatPair> pairs, std::string_view config,
                  const SearchBox& box, Format f);
std::string entropy(const EntropyProfile& p, std::string_view config, Format f);
std::string balanced(const BalancedSetReport& r, std::string_view config,
                     const SearchBox& box, Format f);

struct GeneratedPoint {
  Point point;
  bool generated = false;
};
std::string generated(const LatticeSet& region, std::span<const GeneratedPoint> points,
                      std::string_view config, const SearchBox& box, Format f);

std::string extension(const ExtensionResult& r, const LatticeSet& t, const LatticeSet& s,
                      const Direction& dir, Coord p, Coord n,
                      std::span<const Point> candidates, const LatticeSet& border_set,
                      Format f);
std::string dichotomy(const DichotomyReport& r, std::string_view config, Format f);
std::string expansivity(const ExpansivityReport& r, const Alphabet& alphabet,
                        std::string_view config, Format f);
std::string catalog(std::span<const CatalogEntry> entries, Format f);

// Shortest decimal that round-trips the double.
std::string format_double(double v);

}  // namespace latticelab::report
