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

#include <cmath>

#include "gtest/gtest.h"
#include "support/generators.hpp"

namespace pbr::hilbert {
namespace {

TEST(QSqrt2, SquareRootSquaresToTwo) {
  EXPECT_EQ(QSqrt2::sqrt2() * QSqrt2::sqrt2(), QSqrt2(2));
  EXPECT_EQ(QSqrt2::inv_sqrt2() * QSqrt2::sqrt2(), QSqrt2(1));
  EXPECT_EQ(QSqrt2::inv_sqrt2() * QSqrt2::inv_sqrt2(), QSqrt2(Rational(1, 2)));
}

TEST(QSqrt2, InverseOfZeroThrows) { EXPECT_THROW(QSqrt2().inverse(), std::domain_error); }

TEST(QSqrt2, SignMatchesFloatingPoint) {
  EXPECT_EQ(QSqrt2(Rational(3), Rational(-2)).sign(), 1);   // 3 - 2.83
  EXPECT_EQ(QSqrt2(Rational(-3), Rational(2)).sign(), -1);
  EXPECT_EQ(QSqrt2(Rational(7, 5), Rational(-1)).sign(), -1);  // 1.4 - 1.414
  testing::Gen gen(11);
  for (int trial = 0; trial < 500; ++trial) {
    const QSqrt2 x = gen.field();
    const double d = x.to_double();
    if (std::abs(d) > 1e-9) EXPECT_EQ(x.sign(), d > 0 ? 1 : -1) << to_string(x);
  }
}

TEST(QSqrt2, FieldAxiomsHoldExactly) {
  testing::Gen gen(12);
  for (int trial = 0; trial < 300; ++trial) {
    const QSqrt2 a = gen.field(), b = gen.field(), c = gen.field();
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a + b, b + a);
    if (!(a == QSqrt2())) EXPECT_EQ(a * a.inverse(), QSqrt2(1));
    EXPECT_NEAR((a * b).to_double(), a.to_double() * b.to_double(),
                1e-12 * (1 + std::abs(a.to_double() * b.to_double())));
  }
}

TEST(ComplexQ2, ConjugateAndModulus) {
  const ComplexQ2 z(QSqrt2(Rational(1)), QSqrt2::sqrt2());
  EXPECT_EQ(z.conj(), ComplexQ2(QSqrt2(1), -QSqrt2::sqrt2()));
  EXPECT_EQ(z.abs2(), QSqrt2(3));
  EXPECT_EQ(z * z.conj(), ComplexQ2(QSqrt2(3)));
  EXPECT_THROW(ComplexQ2().inverse(), std::domain_error);
}

TEST(ComplexQ2, ClosedUnderFieldOperationsAndMatchesFloat) {
  testing::Gen gen(13);
  for (int trial = 0; trial < 300; ++trial) {
    const ComplexQ2 a = gen.complex(), b = gen.complex();
    const std::complex<double> fa = a.to_complex(), fb = b.to_complex();
    const double tol = 1e-12 * (1 + std::abs(fa) * std::abs(fb));
    EXPECT_LT(std::abs((a * b).to_complex() - fa * fb), tol);
    EXPECT_LT(std::abs((a + b).to_complex() - (fa + fb)), tol);
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    if (a != ComplexQ2()) {
      EXPECT_EQ(a * a.inverse(), ComplexQ2(1));
      EXPECT_LT(std::abs((b / a).to_complex() - fb / fa), 1e-12 * (1 + std::abs(fb / fa)));
    }
  }
}

}  // namespace
}  // namespace pbr::hilbert
