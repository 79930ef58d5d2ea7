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

#include "latticelab/report.hpp"

#include <charconv>
#include <sstream>

#include "json.hpp"
#include "latticelab/error.hpp"

namespace latticelab::report {

namespace {

using Json = nlohmann::ordered_json;

Json to_json(Point p) { return Json::array({p.x, p.y}); }

Json to_json(const LatticeSet& s) {
  Json a = Json::array();
  for (const Point p : s) a.push_back(to_json(p));
  return a;
}

Json to_json(const Box& b) {
  return Json{{"x", Json::array({b.x.lo, b.x.hi})}, {"y", Json::array({b.y.lo, b.y.hi})}};
}

Json to_json(const Direction& d) { return Json::array({d.p(), d.q()}); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string points_text(const LatticeSet& s) {
  std::string out;
  for (const Point p : s) {
    if (!out.empty()) out += ";";
    out += std::to_string(p.x) + "," + std::to_string(p.y);
  }
  return out;
}

std::string box_text(const Box& b) {
  return std::to_string(b.x.lo) + ".." + std::to_string(b.x.hi) + "," +
         std::to_string(b.y.lo) + ".." + std::to_string(b.y.hi);
}

const char* flag(bool b) { return b ? "true" : "false"; }

// Quotes a CSV field when it contains a separator or quote.
std::string field(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (const char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

class KeyValueCsv {
 public:
  KeyValueCsv() { out_ << "key,value\n"; }
  KeyValueCsv& add(std::string_view key, std::string_view value) {
    out_ << key << "," << field(value) << "\n";
    return *this;
  }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "csv") return Format::kCsv;
  if (text == "json") return Format::kJson;
  throw ParseError("report", "unknown format '" + std::string(text) + "' (expected csv or json)");
}

std::string format_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string complexity(const ComplexityResult& r, std::string_view config, Format f) {
  if (f == Format::kCsv) {
    return "count,exact,region_size\n" + std::to_string(r.count) + "," + flag(r.exact) + "," +
           std::to_string(r.region.size()) + "\n";
  }
  return dump(Json{{"config", config},
                   {"box", to_json(r.box)},
                   {"region", to_json(r.region)},
                   {"count", r.count},
                   {"exact", r.exact}});
}

std::string table(const RectangleTable& t, std::string_view config, const SearchBox& box,
                  Format f) {
  if (f == Format::kCsv) {
    std::ostringstream out;
    out << "n,k,count,exact\n";
    for (Coord n = 1; n <= t.n_max; ++n) {
      for (Coord k = 1; k <= t.k_max; ++k) {
        out << n << "," << k << "," << t.at(n, k) << ","
            << flag(t.exact[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)])
            << "\n";
      }
    }
    return out.str();
  }
  Json rows = Json::array();
  for (Coord n = 1; n <= t.n_max; ++n) {
    for (Coord k = 1; k <= t.k_max; ++k) {
      rows.push_back(Json{
          {"n", n},
          {"k", k},
          {"count", t.at(n, k)},
          {"exact",
           static_cast<bool>(
               t.exact[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)])}});
    }
  }
  return dump(Json{{"config", config},
                   {"box", to_json(box)},
                   {"n_max", t.n_max},
                   {"k_max", t.k_max},
                   {"rows", rows}});
}

std::string nivat(std::span<const NivatPair> pairs, std::string_view config,
                  const SearchBox& box, Format f) {
  if (f == Format::kCsv) {
    std::ostringstream out;
    out << "n,k,count\n";
    for (const auto& p : pairs) out << p.n << "," << p.k << "," << p.count << "\n";
    return out.str();
  }
  Json a = Json::array();
  for (const auto& p : pairs) a.push_back(Json{{"n", p.n}, {"k", p.k}, {"count", p.count}});
  return dump(Json{{"config", config}, {"box", to_json(box)}, {"pairs", a}});
}

std::string entropy(const EntropyProfile& p, std::string_view config, Format f) {
  const std::string dir = std::to_string(p.direction.p()) + "," + std::to_string(p.direction.q());
  if (f == Format::kCsv) {
    std::ostringstream out;
    out << "direction,t,s,log_count,slope_fit,slope_diff\n";
    for (std::size_t ti = 0; ti < p.thickness_values.size(); ++ti) {
      for (std::size_t si = 0; si < p.scales.size(); ++si) {
        out << field(dir) << "," << to_string(p.thickness_values[ti]) << "," << p.scales[si]
            << "," << format_double(p.log_counts[ti][si]) << ","
            << format_double(p.slope_fit[ti]) << "," << format_double(p.slope_diff[ti])
            << "\n";
      }
    }
    return out.str();
  }
  Json ts = Json::array();
  for (const auto& t : p.thickness_values) ts.push_back(to_string(t));
  Json exact = Json::array();
  for (const auto& row : p.exact) {
    Json r = Json::array();
    for (const bool b : row) r.push_back(b);
    exact.push_back(r);
  }
  return dump(Json{{"config", config},
                   {"direction", to_json(p.direction)},
                   {"box", to_json(p.box)},
                   {"thickness_values", ts},
                   {"scales", p.scales},
                   {"counts", p.counts},
                   {"log_counts", p.log_counts},
                   {"exact", exact},
                   {"slope_fit", p.slope_fit},
                   {"slope_diff", p.slope_diff},
                   {"sup_slope", p.sup_slope}});
}

std::string balanced(const BalancedSetReport& r, std::string_view config, const SearchBox& box,
                     Format f) {
  if (f == Format::kCsv) {
    KeyValueCsv kv;
    kv.add("direction", to_string(r.line_dir))
        .add("set", points_text(r.set.points()))
        .add("edge", points_text(r.edge))
        .add("width", std::to_string(r.width))
        .add("height", std::to_string(r.height))
        .add("endpoints_generated", flag(r.endpoints_generated))
        .add("complexity_drop", flag(r.complexity_drop))
        .add("lines_long_enough", flag(r.lines_long_enough))
        .add("lines_at_least_edge", flag(r.lines_at_least_edge))
        .add("balanced", flag(r.balanced()));
    return kv.str();
  }
  Json j{{"config", config},
         {"box", to_json(box)},
         {"direction", to_json(r.line_dir)},
         {"set", to_json(r.set.points())},
         {"edge", to_json(r.edge)},
         {"width", r.width},
         {"height", r.height},
         {"complexity_of_set", r.complexity_of_set},
         {"complexity_without_edge", r.complexity_without_edge},
         {"checks",
          Json{{"endpoints_generated", r.endpoints_generated},
               {"complexity_drop", r.complexity_drop},
               {"lines_long_enough", r.lines_long_enough},
               {"lines_at_least_edge", r.lines_at_least_edge}}},
         {"balanced", r.balanced()},
         {"periodic_branch", r.periodic_branch},
         {"minimal_side", r.minimal_side}};
  j["column_period"] = r.column_period ? Json(*r.column_period) : Json(nullptr);
  j["column_complexity"] = r.column_complexity ? Json(*r.column_complexity) : Json(nullptr);
  return dump(j);
}

std::string generated(const LatticeSet& region, std::span<const GeneratedPoint> points,
                      std::string_view config, const SearchBox& box, Format f) {
  bool all = true;
  for (const auto& p : points) all = all && p.generated;
  if (f == Format::kCsv) {
    std::ostringstream out;
    out << "x,y,generated\n";
    for (const auto& p : points) {
      out << p.point.x << "," << p.point.y << "," << flag(p.generated) << "\n";
    }
    return out.str();
  }
  Json a = Json::array();
  for (const auto& p : points) {
    a.push_back(Json{{"point", to_json(p.point)}, {"generated", p.generated}});
  }
  return dump(Json{{"config", config},
                   {"box", to_json(box)},
                   {"region", to_json(region)},
                   {"points", a},
                   {"all_generated", all}});
}

std::string extension(const ExtensionResult& r, const LatticeSet& t, const LatticeSet& s,
                      const Direction& dir, Coord p, Coord n,
                      std::span<const Point> candidates, const LatticeSet& border_set,
                      Format f) {
  if (f == Format::kCsv) {
    KeyValueCsv kv;
    LatticeSet cand(std::vector<Point>(candidates.begin(), candidates.end()));
    kv.add("direction", to_string(dir))
        .add("p", std::to_string(p))
        .add("n", std::to_string(n))
        .add("steps_applied", std::to_string(r.steps_applied))
        .add("reached_fixed_point", flag(r.reached_fixed_point))
        .add("candidates", points_text(cand))
        .add("border", points_text(border_set))
        .add("region", points_text(r.region));
    return kv.str();
  }
  Json c = Json::array();
  for (const Point q : candidates) c.push_back(to_json(q));
  return dump(Json{{"direction", to_json(dir)},
                   {"t", to_json(t)},
                   {"s", to_json(s)},
                   {"p", p},
                   {"n", n},
                   {"candidates", c},
                   {"border", to_json(border_set)},
                   {"steps_applied", r.steps_applied},
                   {"reached_fixed_point", r.reached_fixed_point},
                   {"region", to_json(r.region)}});
}

std::string dichotomy(const DichotomyReport& r, std::string_view config, Format f) {
  auto seed_text = [](const std::vector<Symbol>& v) {
    std::string out;
    for (const Symbol s : v) {
      if (!out.empty()) out += " ";
      out += std::to_string(s);
    }
    return out;
  };
  if (f == Format::kCsv) {
    std::ostringstream out;
    out << "seed_index,extensions,class,period\n";
    for (std::size_t i = 0; i < r.seeds.size(); ++i) {
      const auto& s = r.seeds[i];
      out << i << "," << s.extensions << "," << to_string(s.verdict) << ","
          << (s.period ? std::to_string(*s.period) : std::string()) << "\n";
    }
    return out.str();
  }
  Json seeds = Json::array();
  for (const auto& s : r.seeds) {
    Json e{{"seed", seed_text(s.seed)},
           {"extensions", s.extensions},
           {"class", to_string(s.verdict)}};
    e["period"] = s.period ? Json(*s.period) : Json(nullptr);
    seeds.push_back(e);
  }
  return dump(Json{{"config", config},
                   {"params",
                    Json{{"n1", r.params.n1},
                         {"k1", r.params.k1},
                         {"m", r.params.m},
                         {"k", r.params.k}}},
                   {"box", to_json(r.box)},
                   {"exact", r.exact},
                   {"t_size", r.t_size},
                   {"b_size", r.b_size},
                   {"counts",
                    Json{{"unique", r.count(DichotomyClass::kUniqueExtension)},
                         {"periodic", r.count(DichotomyClass::kPeriodicOnB)},
                         {"violation", r.count(DichotomyClass::kViolation)}}},
                   {"seeds", seeds}});
}

std::string expansivity(const ExpansivityReport& r, const Alphabet& alphabet,
                        std::string_view config, Format f) {
  if (f == Format::kCsv) {
    KeyValueCsv kv;
    kv.add("direction", to_string(r.direction))
        .add("radius", to_string(r.radius))
        .add("window", box_text(r.window))
        .add("box", box_text(r.box))
        .add("strip_size", std::to_string(r.strip.size()))
        .add("window_patterns", std::to_string(r.window_patterns))
        .add("strip_classes", std::to_string(r.strip_classes))
        .add("determined", flag(r.determined));
    return kv.str();
  }
  Json j{{"config", config},
         {"direction", to_json(r.direction)},
         {"radius", to_string(r.radius)},
         {"window", to_json(r.window)},
         {"box", to_json(r.box)},
         {"strip_size", r.strip.size()},
         {"window_patterns", r.window_patterns},
         {"strip_classes", r.strip_classes},
         {"determined", r.determined}};
  if (r.witness) {
    j["witness"] = Json::array({pattern_grid(r.witness->first, alphabet),
                                pattern_grid(r.witness->second, alphabet)});
  } else {
    j["witness"] = nullptr;
  }
  return dump(j);
}

std::string catalog(std::span<const CatalogEntry> entries, Format f) {
  if (f == Format::kCsv) {
    std::ostringstream out;
    out << "name,params,summary\n";
    for (const auto& e : entries) {
      std::string params;
      for (const auto& p : e.params) {
        if (!params.empty()) params += ";";
        params += p.key + "=" + p.default_value;
      }
      out << e.name << "," << field(params) << "," << field(e.summary) << "\n";
    }
    return out.str();
  }
  Json a = Json::array();
  for (const auto& e : entries) {
    Json params = Json::array();
    for (const auto& p : e.params) {
      params.push_back(
          Json{{"key", p.key}, {"default", p.default_value}, {"meaning", p.meaning}});
    }
    a.push_back(Json{{"name", e.name},
                     {"summary", e.summary},
                     {"params", params},
                     {"known_facts", e.known_facts}});
  }
  return dump(Json{{"entries", a}});
}

}  // namespace latticelab::report
