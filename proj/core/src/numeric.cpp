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

#include "latticelab/numeric.hpp"

#include <charconv>
#include <cmath>
#include <numeric>

#include "latticelab/error.hpp"

namespace latticelab {
namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t v = 0;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError("numeric",
                     "invalid rational '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t num = parse_int(text.substr(0, slash), whole);
    std::int64_t den = parse_int(text.substr(slash + 1), whole);
    if (den == 0) throw ParseError("numeric", "zero denominator in '" +
                                                  std::string(whole) + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 15) {
      throw ParseError("numeric", "invalid rational '" + std::string(whole) + "'");
    }
    const bool negative = !int_part.empty() && int_part.front() == '-';
    std::int64_t ip = (int_part.empty() || int_part == "-" || int_part == "+")
                          ? 0
                          : parse_int(int_part, whole);
    std::int64_t fp = parse_int(frac, whole);
    if (fp < 0) throw ParseError("numeric", "invalid rational '" + std::string(whole) + "'");
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    std::int64_t mag = std::abs(ip) * den + fp;
    return Rational(negative || ip < 0 ? -mag : mag, den);
  }
  return Rational(parse_int(text, whole));
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) /
         static_cast<double>(r.denominator());
}

std::int64_t isqrt(std::int64_t n) {
  if (n <= 0) return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

Surd::Surd(Rational a, Rational b, std::int64_t radicand)
    : a_(a), b_(b), d_(radicand) {
  if (d_ <= 0) throw PreconditionError("numeric", "radicand must be positive");
  const std::int64_t root = isqrt(d_);
  if (root * root == d_) {
    a_ += b_ * root;
    b_ = Rational(0);
    d_ = 1;
  }
}

int Surd::sign() const {
  const int sa = a_.numerator() > 0 ? 1 : (a_.numerator() < 0 ? -1 : 0);
  const int sb = b_.numerator() > 0 ? 1 : (b_.numerator() < 0 ? -1 : 0);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a² with b²·D.
  const Rational lhs = a_ * a_;
  const Rational rhs = b_ * b_ * d_;
  if (lhs > rhs) return sa;
  if (lhs < rhs) return sb;
  return 0;
}

double Surd::value() const {
  return to_double(a_) + to_double(b_) * std::sqrt(static_cast<double>(d_));
}

namespace {

std::int64_t common_radicand(const Surd& x, const Surd& y) {
  if (x.radical_part().numerator() == 0) return y.radicand();
  if (y.radical_part().numerator() == 0) return x.radicand();
  if (x.radicand() != y.radicand()) {
    throw PreconditionError("numeric", "mixed quadratic fields");
  }
  return x.radicand();
}

}  // namespace

Surd operator+(const Surd& x, const Surd& y) {
  const std::int64_t d = common_radicand(x, y);
  return Surd(x.a_ + y.a_, x.b_ + y.b_, d);
}

Surd operator*(const Surd& x, const Surd& y) {
  const std::int64_t d = common_radicand(x, y);
  return Surd(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d);
}

std::string to_string(const Surd& s) {
  if (s.radical_part().numerator() == 0) return to_string(s.rational_part());
  std::string out;
  if (s.rational_part().numerator() != 0) out = to_string(s.rational_part()) + "+";
  return out + to_string(s.radical_part()) + "*sqrt(" +
         std::to_string(s.radicand()) + ")";
}

}  // namespace latticelab
