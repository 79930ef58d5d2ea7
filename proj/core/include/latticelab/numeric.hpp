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

#include <boost/rational.hpp>

namespace latticelab {

using Rational = boost::rational<std::int64_t>;

// 128-bit intermediates for exact products of 64-bit coordinates.
__extension__ using Int128 = __int128;
__extension__ using UInt128 = unsigned __int128;

// Parses "7", "-3/4" or "1.5" (finite decimals only) into an exact rational.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
double to_double(const Rational& r);

// Exact element a + b*sqrt(D) of the quadratic field Q(sqrt(D)).
//
// Lengths along a primitive direction (p, q) live in Q(sqrt(p^2 + q^2)), so
// every distance comparison in the geometry module reduces to a sign test on
// a Surd. When D is a perfect square the radical is folded into `a`.
class Surd {
 public:
  Surd() = default;
  Surd(Rational a, Rational b, std::int64_t radicand);
  static Surd rational(Rational a, std::int64_t radicand) {
    return Surd(a, Rational(0), radicand);
  }

  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }
  std::int64_t radicand() const { return d_; }

  // -1, 0 or +1, decided exactly.
  int sign() const;
  double value() const;

  Surd operator-() const { return Surd(-a_, -b_, d_); }
  friend Surd operator+(const Surd& x, const Surd& y);
  friend Surd operator-(const Surd& x, const Surd& y) { return x + (-y); }
  friend Surd operator*(const Surd& x, const Surd& y);
  friend bool operator==(const Surd& x, const Surd& y) {
    return (x - y).sign() == 0;
  }
  friend bool operator<(const Surd& x, const Surd& y) {
    return (x - y).sign() < 0;
  }
  friend bool operator<=(const Surd& x, const Surd& y) {
    return (x - y).sign() <= 0;
  }

 private:
  Rational a_{0};
  Rational b_{0};
  std::int64_t d_ = 1;
};

std::string to_string(const Surd& s);

// Largest r >= 0 with r*r <= n.
std::int64_t isqrt(std::int64_t n);

}  // namespace latticelab
