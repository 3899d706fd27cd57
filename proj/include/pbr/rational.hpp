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

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace pbr {

/// Arbitrary-precision rational. Expression templates are off so that `auto`
/// and Eigen coefficient access always yield plain values.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename T>
using Vector = Eigen::Matrix<T, Eigen::Dynamic, 1>;
template <typename T>
using Matrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

using RationalVector = Vector<Rational>;
using RationalMatrix = Matrix<Rational>;

/// Raised when a value violates a documented invariant on construction.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when operands have incompatible shapes.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// "num/den" in lowest terms; integers print without a denominator.
std::string to_string(const Rational& q);

/// Accepts "n", "n/d" or a plain decimal like "0.25". Throws ValidationError.
Rational parse_rational(std::string_view text);

/// Best rational approximation with denominator at most `max_den`
/// (continued-fraction convergents and semiconvergents).
Rational from_double(double x, const Integer& max_den);

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(double x) { return x; }

/// Comparison policy for the two arithmetic modes. Exact mode compares
/// with equality; float mode uses an absolute tolerance.
template <typename T>
struct Arith;

template <>
struct Arith<Rational> {
  static constexpr const char* mode = "exact";
  static bool is_zero(const Rational& x) { return x == 0; }
  static bool equal(const Rational& a, const Rational& b) { return a == b; }
  static bool negative(const Rational& x) { return x < 0; }
  static bool positive(const Rational& x) { return x > 0; }
  static std::string format(const Rational& x) { return to_string(x); }
};

template <>
struct Arith<double> {
  static constexpr const char* mode = "float";
  static constexpr double tolerance = 1e-9;
  static bool is_zero(double x) { return std::abs(x) <= tolerance; }
  static bool equal(double a, double b) { return std::abs(a - b) <= tolerance; }
  static bool negative(double x) { return x < -tolerance; }
  static bool positive(double x) { return x > tolerance; }
  static std::string format(double x);
};

}  // namespace pbr
