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

#include <cstddef>

#include "pbr/rational.hpp"

namespace pbr::lp {

/// Result of a phase-1 feasibility solve of {Ax = b, x ≥ 0}.
struct PhaseOneResult {
  bool feasible = false;
  /// A nonnegative solution when feasible.
  RationalVector point;
  /// Farkas vector y with yᵀA ≤ 0 and yᵀb > 0 when infeasible.
  RationalVector certificate;
  std::size_t pivots = 0;
};

/// Dense exact phase-1 simplex with one artificial per row and Bland's
/// smallest-index rule for both entering and leaving variables, so it
/// terminates on degenerate systems. Redundant rows are allowed.
PhaseOneResult find_feasible_point(const RationalMatrix& A, const RationalVector& b);

/// True iff (yᵀA)ⱼ ≤ 0 for every column j and yᵀb > 0.
bool verify_farkas(const RationalMatrix& A, const RationalVector& b, const RationalVector& y);

}  // namespace pbr::lp
