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
#include <string>
#include <variant>
#include <vector>

#include "pbr/context.hpp"
#include "pbr/lp.hpp"
#include "pbr/ontology.hpp"

namespace pbr::nogo {

using ExactState = ontology::EpistemicState<Rational>;
using ExactResponse = ontology::ResponseTable<Rational>;
using ExactTargets = ontology::Targets<Rational>;
using ExactModel = ontology::OntologicalModel<Rational>;

/// {Ax = b, x ≥ 0} over response variables x[i][λ][λ′].
///
/// Columns: x[i][λ][λ′] sits at i·L² + λ·L + λ′ (outcome-major, cell-minor).
/// Rows: L² normalization rows first (row λ·L + λ′ reads Σᵢ x[i][λ][λ′] = 1),
/// then 16 Born rows at L² + 4i + context for outcome i and context index,
/// reading Σ_{λ,λ′} ρⱼ(λ)ρₖ(λ′) x[i][λ][λ′] = q[(j,k)][i].
struct FeasibilityProblem {
  Eigen::Index lambda_size = 1;
  RationalMatrix A;
  RationalVector b;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;

  Eigen::Index num_vars() const { return A.cols(); }
  Eigen::Index num_rows() const { return A.rows(); }

  static Eigen::Index column(int outcome, Eigen::Index lambda, Eigen::Index lambda_prime,
                             Eigen::Index size) {
    return outcome * size * size + lambda * size + lambda_prime;
  }
  static Eigen::Index born_row(int outcome, Context context, Eigen::Index size) {
    return size * size + outcome * 4 + context.index();
  }
};

FeasibilityProblem build_feasibility(const ExactState& rho1, const ExactState& rho2,
                                     const ExactTargets& targets);

struct Feasible {
  ExactResponse witness;
};

struct Infeasible {
  RationalVector certificate;
};

struct FeasibilityOutcome {
  std::variant<Feasible, Infeasible> verdict;
  std::size_t pivots = 0;

  bool feasible() const { return std::holds_alternative<Feasible>(verdict); }
  const Feasible& as_feasible() const { return std::get<Feasible>(verdict); }
  const Infeasible& as_infeasible() const { return std::get<Infeasible>(verdict); }
};

/// Exact verdict. A Feasible witness is re-checked against every row and
/// an Infeasible certificate against the Farkas condition before return;
/// a failed self-check throws std::logic_error.
FeasibilityOutcome solve_feasibility(const FeasibilityProblem& problem);

/// Farkas audit: (yᵀA)ⱼ ≤ 0 for every column and yᵀb > 0.
bool verify_certificate(const FeasibilityProblem& problem, const RationalVector& y);

/// Raised when the zero-forcing argument has nothing to work with.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ForcingStep {
  int outcome = 1;  // 1-based ξᵢ
  Context context;
  Rational weight;  // ρⱼ(λ*)ρₖ(λ*) > 0
  Rational target;  // q[(j,k)][i] = 0
};

/// For some λ* in both supports, each ξᵢ has a context whose Born target is
/// zero while ρⱼ(λ*)ρₖ(λ*) > 0, forcing P(ξᵢ|λ*,λ*) = 0. The four zeros
/// contradict Σᵢ P(ξᵢ|λ*,λ*) = 1.
struct ContradictionProof {
  Eigen::Index lambda_star = 0;
  std::array<ForcingStep, kOutcomes> steps;
  Rational forced_sum = 0;
  Rational required_sum = 1;

  std::string conclusion() const;
  std::vector<std::string> lines() const;
};

struct NoOverlap {};

using ContradictionResult = std::variant<ContradictionProof, NoOverlap>;

/// Throws ValidationError on an invalid model and PreconditionError when an
/// outcome has no zero-target context.
ContradictionResult derive_contradiction(const ExactModel& model);

/// Float-mode models are refused: zero targets are not tolerance-robust.
ContradictionResult derive_contradiction(const ontology::OntologicalModel<double>& model);

/// Same argument from the distributions and targets alone.
ContradictionResult derive_contradiction(const ExactState& rho1, const ExactState& rho2,
                                         const ExactTargets& targets);

}  // namespace pbr::nogo
