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

#include "pbr/hilbert.hpp"

namespace pbr::hilbert {

namespace {

QSqrt2 half_root() { return QSqrt2::inv_sqrt2(); }

ExactState superpose(const ExactState& a, const ExactState& b) {
  Vector<ComplexQ2> v = a.amplitudes() + b.amplitudes();
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] *= ComplexQ2(half_root());
  return ExactState(std::move(v));
}

MeasurementBasis<ComplexQ2> build_basis() {
  const ExactState z = ket0(), o = ket1(), p = ket_plus(), m = ket_minus();
  MeasurementBasis<ComplexQ2> basis({
      superpose(tensor(z, o), tensor(o, z)),
      superpose(tensor(z, m), tensor(o, p)),
      superpose(tensor(p, o), tensor(m, z)),
      superpose(tensor(p, m), tensor(m, p)),
  });
  for (int i = 0; i < 4; ++i) {
    if (born(basis[i], product_state(kContexts[i])) != 0) {
      throw std::logic_error("measurement basis misses orthogonality anchor " +
                             std::to_string(i + 1));
    }
  }
  return basis;
}

}  // namespace

ExactState ket0() { return make_state<ComplexQ2>({1, 0}); }
ExactState ket1() { return make_state<ComplexQ2>({0, 1}); }
ExactState ket_plus() { return make_state<ComplexQ2>({half_root(), half_root()}); }
ExactState ket_minus() { return make_state<ComplexQ2>({half_root(), -half_root()}); }

ExactState psi(int which) {
  if (which == 1) return ket0();
  if (which == 2) return ket_plus();
  throw std::invalid_argument("preparation label must be 1 or 2");
}

ExactState product_state(Context context) { return tensor(psi(context.j), psi(context.k)); }

const MeasurementBasis<ComplexQ2>& pbr_basis() {
  static const MeasurementBasis<ComplexQ2> basis = build_basis();
  return basis;
}

TargetTable pbr_targets() {
  TargetTable t;
  for (const Context& c : kContexts) {
    t.row(c.index()) = born_vector(pbr_basis(), product_state(c)).transpose();
  }
  return t;
}

ApproxState to_approx(const ExactState& s) {
  Vector<ApproxScalar> v(s.dim());
  for (Eigen::Index i = 0; i < s.dim(); ++i) v[i] = s[i].to_complex();
  return ApproxState(std::move(v));
}

}  // namespace pbr::hilbert
