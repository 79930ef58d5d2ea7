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

#include "latticelab/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "latticelab/error.hpp"
#include "latticelab/extension.hpp"

namespace latticelab {

namespace {

constexpr const char* kModule = "entropy";

double least_squares_slope(std::span<const Coord> xs, std::span<const double> ys) {
  const auto n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += static_cast<double>(xs[i]);
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = static_cast<double>(xs[i]) - mx;
    sxy += dx * (ys[i] - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

void check_scales(std::span<const Coord> s_list, std::size_t min_size) {
  if (s_list.size() < min_size) {
    throw PreconditionError(kModule, "need at least " + std::to_string(min_size) + " scales");
  }
  for (std::size_t i = 0; i < s_list.size(); ++i) {
    if (s_list[i] < 0) throw PreconditionError(kModule, "scales must be >= 0");
    if (i > 0 && s_list[i] <= s_list[i - 1]) {
      throw PreconditionError(kModule, "scales must be strictly increasing");
    }
  }
}

LatticeSet segment_region(const Direction& dir, Coord s, const Rational& t) {
  return neighborhood_points(SegmentNeighborhood::euclidean(dir, Rational(s), t));
}

}  // namespace

EntropyProfile directional_entropy_profile(const Configuration& config, const Direction& dir,
                                           std::span<const Rational> t_list,
                                           std::span<const Coord> s_list,
                                           const SearchBox& box) {
  check_scales(s_list, 2);
  if (t_list.empty()) throw PreconditionError(kModule, "no thickness values");
  for (const Rational& t : t_list) {
    if (t <= Rational(0)) throw PreconditionError(kModule, "thickness must be positive");
  }

  EntropyProfile prof;
  prof.direction = dir;
  prof.box = box;
  prof.thickness_values.assign(t_list.begin(), t_list.end());
  prof.scales.assign(s_list.begin(), s_list.end());
  prof.sup_slope = 0.0;
  for (std::size_t ti = 0; ti < t_list.size(); ++ti) {
    std::vector<std::uint64_t> counts;
    std::vector<double> logs;
    std::vector<bool> exact;
    for (const Coord s : s_list) {
      const LatticeSet region = segment_region(dir, s, t_list[ti]);
      const ComplexityResult res = complexity(config, region, box);
      counts.push_back(res.count);
      logs.push_back(std::log(static_cast<double>(res.count)));
      exact.push_back(res.exact);
    }
    const std::size_t last = s_list.size() - 1;
    prof.slope_fit.push_back(least_squares_slope(s_list, logs));
    prof.slope_diff.push_back((logs[last] - logs[last - 1]) /
                              static_cast<double>(s_list[last] - s_list[last - 1]));
    prof.sup_slope = ti == 0 ? prof.slope_diff.back()
                             : std::max(prof.sup_slope, prof.slope_diff.back());
    prof.counts.push_back(std::move(counts));
    prof.log_counts.push_back(std::move(logs));
    prof.exact.push_back(std::move(exact));
  }
  return prof;
}

std::vector<NormalizedCount> topological_entropy_estimate(const Configuration& config,
                                                          std::span<const Coord> n_list,
                                                          const SearchBox& box) {
  std::vector<NormalizedCount> out;
  for (const Coord n : n_list) {
    if (n < 1) throw PreconditionError(kModule, "square side must be positive");
    const std::uint64_t c = rectangle_complexity(config, n, n, box);
    out.push_back({n, c, std::log(static_cast<double>(c)) / static_cast<double>(n * n)});
  }
  return out;
}

std::vector<ConvexRatio> convex_criterion_check(const Configuration& config,
                                                std::span<const ConvexLatticeSet> regions,
                                                const Direction& dir, const SearchBox& box) {
  std::vector<ConvexRatio> out;
  for (std::size_t i = 0; i < regions.size(); ++i) {
    const Surd tau = thickness(regions[i], dir);
    if (tau.sign() == 0) {
      throw PreconditionError(kModule, "region " + std::to_string(i) +
                                           " has zero thickness in direction " + to_string(dir));
    }
    const std::uint64_t c = count_patterns(config, regions[i].points(), box);
    const double tv = tau.value();
    out.push_back({i, c, tv, std::log(static_cast<double>(c)) / tv});
  }
  return out;
}

std::vector<BoundStep> generating_bound_check(const Configuration& config,
                                              const ConvexLatticeSet& s, const Direction& dir,
                                              const Rational& t, std::span<const Coord> s_list,
                                              const SearchBox& box) {
  check_scales(s_list, 2);
  const Coord d2 = squared_diameter(s.points());
  // t > d  <=>  t² > d² for t > 0.
  if (!(t > Rational(0) && t * t > Rational(d2))) {
    throw PreconditionError(kModule, "thickness " + to_string(t) +
                                         " must exceed the diameter sqrt(" +
                                         std::to_string(d2) + ") of S");
  }
  if (!is_generating_set(config, s, box)) {
    throw PreconditionError(kModule, "S " + to_string(s.points()) + " is not generating");
  }
  const long double d = std::sqrt(static_cast<long double>(d2));
  const long double log_a = std::log(static_cast<long double>(config.alphabet().size()));

  std::vector<std::uint64_t> counts;
  for (const Coord sv : s_list) {
    counts.push_back(count_patterns(config, segment_region(dir, sv, t), box));
  }
  std::vector<BoundStep> out;
  for (std::size_t i = 0; i + 1 < s_list.size(); ++i) {
    BoundStep st;
    st.s_from = s_list[i];
    st.s_to = s_list[i + 1];
    st.count_from = counts[i];
    st.count_to = counts[i + 1];
    const long double gap = static_cast<long double>(st.s_to - st.s_from);
    const long double bound =
        2.0L * d * gap * log_a + std::log(static_cast<long double>(counts[i]));
    st.log_bound = static_cast<double>(bound);
    // Integer counts against a transcendental bound: compare in log space
    // with a relative slack far below the spacing of distinct counts.
    st.holds = std::log(static_cast<long double>(counts[i + 1])) <= bound * (1.0L + 1e-15L) + 1e-15L;
    out.push_back(st);
  }
  return out;
}

}  // namespace latticelab
