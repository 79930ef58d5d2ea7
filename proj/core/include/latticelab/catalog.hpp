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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latticelab/configuration.hpp"
#include "latticelab/geometry.hpp"

namespace latticelab {

// "name" or "name:key=value,key=value".
struct ConfigSpec {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
};

// Throws ParseError (column = 1-based offset into `text`) on malformed input.
ConfigSpec parse_config_spec(std::string_view text);

struct CatalogParam {
  std::string key;
  std::string default_value;  // empty: required
  std::string meaning;
};

struct CatalogEntry {
  std::string name;
  std::string summary;
  std::vector<CatalogParam> params;
  // Names of acceptance checks that exercise this entry.
  std::vector<std::string> known_facts;
};

const std::vector<CatalogEntry>& catalog_list();

// Builds the configuration named by the spec. Unknown names or keys and
// malformed values raise ParseError; out-of-range values raise
// PreconditionError. The result's descriptor lists every parameter,
// defaults included, so descriptor().to_string() rebuilds the same
// configuration.
Configuration build_config(const ConfigSpec& spec);
Configuration build_config(std::string_view text);

// Search box used when the caller gives none: large enough to be exact for a
// region with the given bounding box when the configuration admits that.
SearchBox default_box(const Configuration& config, const Box& region_bounds);

// |A_base ∩ (base^n + [1, k])| with A_base = {base^m + i² : 1 <= i <= m},
// by direct enumeration of the i² terms.
std::uint64_t sparse_set_count(int base, int n, std::int64_t k);

// Distinct length-k windows of the indicator word of A_base (exponents up to
// max_n) with left endpoints in `starts`.
std::uint64_t beta_complexity(int base, int max_n, std::int64_t k, const Interval& starts);

}  // namespace latticelab
