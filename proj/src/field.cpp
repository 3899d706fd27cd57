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

#include "pbr/field.hpp"

namespace pbr::hilbert {

int QSqrt2::sign() const {
  // sign(a + b√2): compare a² against 2b² when the parts disagree.
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  const Rational lhs = a_ * a_;
  const Rational rhs = 2 * b_ * b_;
  if (lhs == rhs) return 0;  // unreachable for rationals, √2 is irrational
  return lhs > rhs ? sa : sb;
}

QSqrt2 QSqrt2::inverse() const {
  const Rational n = field_norm();
  if (n == 0) throw std::domain_error("inverse of zero in Q(sqrt2)");
  return {a_ / n, -b_ / n};
}

double QSqrt2::to_double() const {
  return pbr::to_double(a_) + pbr::to_double(b_) * std::sqrt(2.0);
}

QSqrt2& QSqrt2::operator+=(const QSqrt2& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QSqrt2& QSqrt2::operator-=(const QSqrt2& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& o) {
  Rational a = a_ * o.a_ + 2 * b_ * o.b_;
  b_ = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  return *this;
}

std::string to_string(const QSqrt2& x) {
  if (x.sqrt2_part() == 0) return pbr::to_string(x.rational_part());
  std::string root = pbr::to_string(x.sqrt2_part()) + "*sqrt2";
  if (x.rational_part() == 0) return root;
  if (x.sqrt2_part() > 0) root = "+" + root;
  return pbr::to_string(x.rational_part()) + root;
}

std::ostream& operator<<(std::ostream& os, const QSqrt2& x) { return os << to_string(x); }

ComplexQ2 ComplexQ2::inverse() const {
  const QSqrt2 n = abs2();
  if (n == QSqrt2{}) throw std::domain_error("inverse of zero complex scalar");
  const QSqrt2 inv = n.inverse();
  return {re_ * inv, -im_ * inv};
}

std::ostream& operator<<(std::ostream& os, const ComplexQ2& z) {
  os << to_string(z.real());
  if (!(z.imag() == QSqrt2{})) os << " + i(" << to_string(z.imag()) << ")";
  return os;
}

}  // namespace pbr::hilbert
