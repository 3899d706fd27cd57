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

#include <complex>
#include <ostream>
#include <string>

#include <Eigen/Core>

#include "pbr/rational.hpp"

namespace pbr::hilbert {

/// Element a + b·√2 of the real quadratic field Q(√2).
class QSqrt2 {
 public:
  QSqrt2() = default;
  QSqrt2(int a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QSqrt2(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QSqrt2(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QSqrt2 sqrt2() { return {0, 1}; }
  /// 1/√2 = √2/2.
  static QSqrt2 inv_sqrt2() { return {0, Rational(1, 2)}; }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }
  bool is_rational() const { return b_ == 0; }
  int sign() const;

  QSqrt2 conjugate_root() const { return {a_, -b_}; }
  /// Field norm a² - 2b², rational and zero only at 0.
  Rational field_norm() const { return a_ * a_ - 2 * b_ * b_; }
  QSqrt2 inverse() const;
  double to_double() const;

  QSqrt2 operator-() const { return {-a_, -b_}; }
  QSqrt2& operator+=(const QSqrt2& o);
  QSqrt2& operator-=(const QSqrt2& o);
  QSqrt2& operator*=(const QSqrt2& o);
  QSqrt2& operator/=(const QSqrt2& o) { return *this *= o.inverse(); }

  friend QSqrt2 operator+(QSqrt2 x, const QSqrt2& y) { return x += y; }
  friend QSqrt2 operator-(QSqrt2 x, const QSqrt2& y) { return x -= y; }
  friend QSqrt2 operator*(QSqrt2 x, const QSqrt2& y) { return x *= y; }
  friend QSqrt2 operator/(QSqrt2 x, const QSqrt2& y) { return x /= y; }
  friend bool operator==(const QSqrt2& x, const QSqrt2& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator<(const QSqrt2& x, const QSqrt2& y) { return (x - y).sign() < 0; }
  friend bool operator>(const QSqrt2& x, const QSqrt2& y) { return y < x; }
  friend bool operator<=(const QSqrt2& x, const QSqrt2& y) { return !(y < x); }
  friend bool operator>=(const QSqrt2& x, const QSqrt2& y) { return !(x < y); }

 private:
  Rational a_ = 0;
  Rational b_ = 0;
};

std::string to_string(const QSqrt2& x);
std::ostream& operator<<(std::ostream& os, const QSqrt2& x);

/// Gaussian extension of Q(√2): re + i·im with both parts in Q(√2).
class ComplexQ2 {
 public:
  ComplexQ2() = default;
  ComplexQ2(int re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  ComplexQ2(QSqrt2 re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  ComplexQ2(QSqrt2 re, QSqrt2 im) : re_(std::move(re)), im_(std::move(im)) {}

  const QSqrt2& real() const { return re_; }
  const QSqrt2& imag() const { return im_; }

  ComplexQ2 conj() const { return {re_, -im_}; }
  /// |z|² = re² + im².
  QSqrt2 abs2() const { return re_ * re_ + im_ * im_; }
  ComplexQ2 inverse() const;
  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

  ComplexQ2 operator-() const { return {-re_, -im_}; }
  ComplexQ2& operator+=(const ComplexQ2& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  ComplexQ2& operator-=(const ComplexQ2& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  ComplexQ2& operator*=(const ComplexQ2& o) {
    QSqrt2 re = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    return *this;
  }
  ComplexQ2& operator/=(const ComplexQ2& o) { return *this *= o.inverse(); }

  friend ComplexQ2 operator+(ComplexQ2 x, const ComplexQ2& y) { return x += y; }
  friend ComplexQ2 operator-(ComplexQ2 x, const ComplexQ2& y) { return x -= y; }
  friend ComplexQ2 operator*(ComplexQ2 x, const ComplexQ2& y) { return x *= y; }
  friend ComplexQ2 operator/(ComplexQ2 x, const ComplexQ2& y) { return x /= y; }
  friend bool operator==(const ComplexQ2& x, const ComplexQ2& y) {
    return x.re_ == y.re_ && x.im_ == y.im_;
  }
  friend bool operator!=(const ComplexQ2& x, const ComplexQ2& y) { return !(x == y); }

 private:
  QSqrt2 re_;
  QSqrt2 im_;
};

std::ostream& operator<<(std::ostream& os, const ComplexQ2& z);

// ADL hooks used by Eigen's numext for complex scalars.
inline ComplexQ2 conj(const ComplexQ2& z) { return z.conj(); }
inline const QSqrt2& real(const ComplexQ2& z) { return z.real(); }
inline const QSqrt2& imag(const ComplexQ2& z) { return z.imag(); }
inline QSqrt2 abs2(const ComplexQ2& z) { return z.abs2(); }
inline QSqrt2 conj(const QSqrt2& x) { return x; }
inline const QSqrt2& real(const QSqrt2& x) { return x; }
inline QSqrt2 imag(const QSqrt2&) { return {}; }
inline QSqrt2 abs2(const QSqrt2& x) { return x * x; }

}  // namespace pbr::hilbert

namespace Eigen {

template <>
struct NumTraits<pbr::hilbert::QSqrt2> : GenericNumTraits<pbr::hilbert::QSqrt2> {
  using Real = pbr::hilbert::QSqrt2;
  using NonInteger = pbr::hilbert::QSqrt2;
  using Nested = pbr::hilbert::QSqrt2;
  using Literal = pbr::hilbert::QSqrt2;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 64
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<pbr::hilbert::ComplexQ2> : GenericNumTraits<pbr::hilbert::ComplexQ2> {
  using Real = pbr::hilbert::QSqrt2;
  using NonInteger = pbr::hilbert::ComplexQ2;
  using Nested = pbr::hilbert::ComplexQ2;
  using Literal = pbr::hilbert::ComplexQ2;
  enum {
    IsComplex = 1,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 256
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

template <typename BinaryOp>
struct ScalarBinaryOpTraits<pbr::hilbert::QSqrt2, pbr::hilbert::ComplexQ2, BinaryOp> {
  using ReturnType = pbr::hilbert::ComplexQ2;
};
template <typename BinaryOp>
struct ScalarBinaryOpTraits<pbr::hilbert::ComplexQ2, pbr::hilbert::QSqrt2, BinaryOp> {
  using ReturnType = pbr::hilbert::ComplexQ2;
};

}  // namespace Eigen
