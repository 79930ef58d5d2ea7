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

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "latticelab/geometry.hpp"

namespace latticelab::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kParseFailure = 1;
inline constexpr int kPreconditionFailure = 2;
inline constexpr int kOtherFailure = 3;

// Runs one command line (without the program name). Results go to `out`
// unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Value grammars. Each throws ParseError naming the flag and the 1-based
// column of the offending character.
Box parse_box(std::string_view text);              // "WxH" or "x0..x1,y0..y1"
Direction parse_direction(std::string_view text);  // "p,q", primitive
Point parse_point(std::string_view text);          // "x,y"
// "rect:NxK", "hull:x,y;x,y;..." (lattice convex closure) or "points:x,y;...".
LatticeSet parse_region(std::string_view text);
std::vector<Coord> parse_int_list(std::string_view text);
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace latticelab::cli
