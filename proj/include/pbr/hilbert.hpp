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

#include <array>
#include <complex>
#include <initializer_list>
#include <string>

#include <Eigen/Core>

#include "pbr/context.hpp"
#include "pbr/field.hpp"
#include "pbr/rational.hpp"

namespace pbr::hilbert {

using ApproxScalar = std::complex<double>;

/// Per-scalar rules: what a Born probability is, and when a squared norm
/// counts as one. Exact amplitudes give exact rational probabilities.
template <typename S>
struct StateTraits;

template <>
struct StateTraits<ComplexQ2> {
  using Real = QSqrt2;
  using Probability = Rational;
  static bool is_one(const QSqrt2& x) { return x == QSqrt2(1); }
  static bool is_zero(const ComplexQ2& z) { return z == ComplexQ2{}; }
  static Probability probability(const QSqrt2& x) {
    if (!x.is_rational()) {
      throw std::domain_error("Born probability " + to_string(x) + " is not rational");
    }
    return x.rational_part();
  }
  static std::string format(const QSqrt2& x) { return to_string(x); }
};

template <>
struct StateTraits<ApproxScalar> {
  using Real = double;
  using Probability = double;
  static constexpr double tolerance = 1e-12;
  static bool is_one(double x) { return std::abs(x - 1.0) <= tolerance; }
  static bool is_zero(const ApproxScalar& z) { return std::abs(z) <= tolerance; }
  static Probability probability(double x) { return x; }
  static std::string format(double x) { return std::to_string(x); }
};

/// Unit vector over the computational basis. Index convention for products:
/// component (first-factor index)·(second-factor dim) + (second-factor index).
template <typename S>
class PureState {
 public:
  using Scalar = S;
  using Amplitudes = Vector<S>;

  /// Validating constructor; the norm is checked, never rescaled.
  explicit PureState(Amplitudes amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() == 0) throw ValidationError("state needs at least one amplitude");
    const auto norm2 = squared_norm();
    if (!StateTraits<S>::is_one(norm2)) {
      throw ValidationError("state is not normalized: squared norm " +
                            StateTraits<S>::format(norm2) + " != 1");
    }
  }

  Eigen::Index dim() const { return amplitudes_.size(); }
  const Amplitudes& amplitudes() const { return amplitudes_; }
  const S& operator[](Eigen::Index i) const { return amplitudes_[i]; }

  typename StateTraits<S>::Real squared_norm() const {
    typename StateTraits<S>::Real acc{};
    for (Eigen::Index i = 0; i < amplitudes_.size(); ++i) acc += abs2(amplitudes_[i]);
    return acc;
  }

 private:
  static auto abs2(const S& z) {
    if constexpr (std::is_same_v<S, ApproxScalar>) {
      return std::norm(z);
    } else {
      return z.abs2();
    }
  }

  Amplitudes amplitudes_;
};

using ExactState = PureState<ComplexQ2>;
using ApproxState = PureState<ApproxScalar>;

template <typename S>
PureState<S> make_state(std::initializer_list<S> amplitudes) {
  Vector<S> v(static_cast<Eigen::Index>(amplitudes.size()));
  Eigen::Index i = 0;
  for (const auto& a : amplitudes) v[i++] = a;
  return PureState<S>(std::move(v));
}

template <typename S>
PureState<S> make_state(Vector<S> amplitudes) {
  return PureState<S>(std::move(amplitudes));
}

template <typename S>
PureState<S> tensor(const PureState<S>& a, const PureState<S>& b) {
  Vector<S> out(a.dim() * b.dim());
  for (Eigen::Index i = 0; i < a.dim(); ++i) {
    for (Eigen::Index j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = a[i] * b[j];
  }
  return PureState<S>(std::move(out));
}

/// ⟨a|b⟩, conjugate-linear in the first argument.
template <typename S>
S inner(const PureState<S>& a, const PureState<S>& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("inner product of dims " + std::to_string(a.dim()) + " and " +
                         std::to_string(b.dim()));
  }
  return a.amplitudes().dot(b.amplitudes());
}

/// |⟨effect|state⟩|².
template <typename S>
typename StateTraits<S>::Probability born(const PureState<S>& effect, const PureState<S>& state) {
  const S amp = inner(effect, state);
  if constexpr (std::is_same_v<S, ApproxScalar>) {
    return std::norm(amp);
  } else {
    return StateTraits<S>::probability(amp.abs2());
  }
}

/// Four orthonormal effects spanning the two-qubit space.
template <typename S>
class MeasurementBasis {
 public:
  using Gram = Eigen::Matrix<S, 4, 4>;

  explicit MeasurementBasis(std::array<PureState<S>, 4> effects) : effects_(std::move(effects)) {
    for (const auto& e : effects_) {
      if (e.dim() != 4) throw DimensionError("measurement effects must have dim 4");
    }
    const Gram g = gram();
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        const S expected = r == c ? S(1) : S(0);
        if (!StateTraits<S>::is_zero(g(r, c) - expected)) {
          throw ValidationError("measurement basis is not orthonormal at (" + std::to_string(r) +
                                "," + std::to_string(c) + ")");
        }
      }
    }
  }

  const PureState<S>& operator[](int i) const { return effects_[static_cast<std::size_t>(i)]; }
  const std::array<PureState<S>, 4>& effects() const { return effects_; }

  Gram gram() const {
    Gram g;
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) g(r, c) = inner(effects_[r], effects_[c]);
    }
    return g;
  }

 private:
  std::array<PureState<S>, 4> effects_;
};

template <typename S>
Eigen::Matrix<typename StateTraits<S>::Probability, 4, 1> born_vector(
    const MeasurementBasis<S>& basis, const PureState<S>& state) {
  Eigen::Matrix<typename StateTraits<S>::Probability, 4, 1> out;
  for (int i = 0; i < 4; ++i) out[i] = born(basis[i], state);
  return out;
}

/// Born table indexed (context, outcome); each row sums to one.
using TargetTable = Eigen::Matrix<Rational, 4, 4>;

ExactState ket0();
ExactState ket1();
ExactState ket_plus();
ExactState ket_minus();
/// The two non-orthogonal preparations: Ψ₁ = |0⟩, Ψ₂ = (|0⟩ + |1⟩)/√2.
ExactState psi(int which);
/// Ψⱼ ⊗ Ψₖ.
ExactState product_state(Context context);

/// Entangled basis with ⟨ξᵢ|Ψⱼ⊗Ψₖ⟩ = 0 for the i-th context:
///   ξ₁ = (|0,1⟩ + |1,0⟩)/√2,  ξ₂ = (|0,−⟩ + |1,+⟩)/√2,
///   ξ₃ = (|+,1⟩ + |−,0⟩)/√2,  ξ₄ = (|+,−⟩ + |−,+⟩)/√2.
/// Orthonormality and the four zeros are checked on construction.
const MeasurementBasis<ComplexQ2>& pbr_basis();

/// Born probabilities of pbr_basis() on the four product preparations.
TargetTable pbr_targets();

ApproxState to_approx(const ExactState& s);

}  // namespace pbr::hilbert
