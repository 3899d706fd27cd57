// Copyright 2026 The pbr-workbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pbr/rational.hpp"

#include <cstdio>
#include <utility>

namespace pbr {

std::string to_string(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_text(s)) {
    throw ValidationError("malformed integer '" + std::string(s) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    const Integer num = parse_integer(text.substr(0, slash));
    const Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  const auto dot = text.find('.');
  if (dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.remove_prefix(1);
    if (whole.empty()) whole = "0";
    if (frac.empty() || !is_integer_text(frac) || frac[0] == '-' || frac[0] == '+') {
      throw ValidationError("malformed decimal '" + std::string(text) + "'");
    }
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rational q = Rational(parse_integer(whole)) + Rational(parse_integer(frac), scale);
    return neg ? Rational(-q) : q;
  }
  return Rational(parse_integer(text));
}

Rational from_double(double x, const Integer& max_den) {
  if (!std::isfinite(x)) throw ValidationError("non-finite value has no rational form");
  if (max_den < 1) throw ValidationError("max_den must be positive");
  // Exact value of the double, then the best approximation below the bound.
  const Rational exact(x);
  if (boost::multiprecision::denominator(exact) <= max_den) return exact;

  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Integer n = boost::multiprecision::numerator(exact);
  Integer d = boost::multiprecision::denominator(exact);
  while (true) {
    Integer a = n / d;
    if (n < 0 && a * d != n) a -= 1;  // floor
    const Integer q2 = q0 + a * q1;
    if (q2 > max_den) {
      const Integer k = (max_den - q0) / q1;
      const Rational semi(p0 + k * p1, q0 + k * q1);
      const Rational conv(p1, q1);
      return abs(semi - exact) < abs(conv - exact) ? semi : conv;
    }
    const Integer p2 = p0 + a * p1;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const Integer r = n - a * d;
    if (r == 0) return Rational(p1, q1);
    n = d;
    d = r;
  }
}

std::string Arith<double>::format(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

}  // namespace pbr
