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

#include "pbr/nogo.hpp"

#include <stdexcept>

namespace pbr::nogo {

using ontology::joint_weights;

FeasibilityProblem build_feasibility(const ExactState& rho1, const ExactState& rho2,
                                     const ExactTargets& targets) {
  auto report = ontology::validate_distributions(rho1, rho2);
  for (auto& issue : ontology::validate_targets(targets).issues) report.issues.push_back(issue);
  if (!report.ok()) throw ValidationError("invalid feasibility input: " + report.summary());

  const Eigen::Index size = rho1.size();
  const Eigen::Index cells = size * size;
  FeasibilityProblem p;
  p.lambda_size = size;
  p.A = RationalMatrix::Zero(cells + 16, kOutcomes * cells);
  p.b = RationalVector::Zero(cells + 16);

  for (Eigen::Index l = 0; l < size; ++l) {
    for (Eigen::Index lp = 0; lp < size; ++lp) {
      const Eigen::Index row = ontology::cell_index(l, lp, size);
      for (int i = 0; i < kOutcomes; ++i) p.A(row, FeasibilityProblem::column(i, l, lp, size)) = 1;
      p.b[row] = 1;
      p.row_labels.push_back("norm[" + std::to_string(l) + "][" + std::to_string(lp) + "]");
    }
  }
  for (int i = 0; i < kOutcomes; ++i) {
    for (const Context& c : kContexts) {
      const Eigen::Index row = FeasibilityProblem::born_row(i, c, size);
      const RationalVector w = joint_weights(c.j == 1 ? rho1 : rho2, c.k == 1 ? rho1 : rho2);
      p.A.block(row, i * cells, 1, cells) = w.transpose();
      p.b[row] = targets(c.index(), i);
      p.row_labels.push_back("born[" + std::to_string(i + 1) + "][" + c.label() + "]");
    }
  }
  for (int i = 0; i < kOutcomes; ++i) {
    for (Eigen::Index l = 0; l < size; ++l) {
      for (Eigen::Index lp = 0; lp < size; ++lp) {
        p.col_labels.push_back("x[" + std::to_string(i + 1) + "][" + std::to_string(l) + "][" +
                               std::to_string(lp) + "]");
      }
    }
  }
  return p;
}

FeasibilityOutcome solve_feasibility(const FeasibilityProblem& problem) {
  const lp::PhaseOneResult result = lp::find_feasible_point(problem.A, problem.b);
  FeasibilityOutcome out;
  out.pivots = result.pivots;
  if (!result.feasible) {
    if (!verify_certificate(problem, result.certificate)) {
      throw std::logic_error("phase-1 certificate failed the Farkas audit");
    }
    out.verdict = Infeasible{result.certificate};
    return out;
  }
  if (problem.A * result.point != problem.b) {
    throw std::logic_error("phase-1 point violates an equality row");
  }
  const Eigen::Index size = problem.lambda_size;
  ExactResponse witness(size);
  for (int i = 0; i < kOutcomes; ++i) {
    for (Eigen::Index cell = 0; cell < size * size; ++cell) {
      witness.p(i, cell) = result.point[i * size * size + cell];
    }
  }
  out.verdict = Feasible{std::move(witness)};
  return out;
}

bool verify_certificate(const FeasibilityProblem& problem, const RationalVector& y) {
  return lp::verify_farkas(problem.A, problem.b, y);
}

std::string ContradictionProof::conclusion() const {
  return "sum_i P(xi_i|lambda*,lambda*) = " + to_string(forced_sum) +
         " != " + to_string(required_sum);
}

std::vector<std::string> ContradictionProof::lines() const {
  std::vector<std::string> out;
  const std::string ls = std::to_string(lambda_star);
  out.push_back("lambda* = " + ls + " lies in both supports");
  for (const auto& s : steps) {
    out.push_back("xi_" + std::to_string(s.outcome) + ": context (" + std::to_string(s.context.j) +
                  "," + std::to_string(s.context.k) + ") has target " + to_string(s.target) +
                  " and weight rho_" + std::to_string(s.context.j) + "(" + ls + ")rho_" +
                  std::to_string(s.context.k) + "(" + ls + ") = " + to_string(s.weight) +
                  " > 0, so P(xi_" + std::to_string(s.outcome) + "|" + ls + "," + ls + ") = 0");
  }
  out.push_back(conclusion());
  return out;
}

ContradictionResult derive_contradiction(const ExactState& rho1, const ExactState& rho2,
                                         const ExactTargets& targets) {
  auto report = ontology::validate_distributions(rho1, rho2);
  for (auto& issue : ontology::validate_targets(targets).issues) report.issues.push_back(issue);
  if (!report.ok()) ontology::throw_invalid(report);

  std::array<int, kOutcomes> zero_context{};
  for (int i = 0; i < kOutcomes; ++i) {
    zero_context[i] = -1;
    for (const Context& c : kContexts) {
      if (targets(c.index(), i) == 0) {
        zero_context[i] = c.index();
        break;
      }
    }
    if (zero_context[i] < 0) {
      throw PreconditionError("outcome xi_" + std::to_string(i + 1) +
                              " has no context with Born target 0; the zero-forcing argument "
                              "does not apply");
    }
  }

  Eigen::Index lambda_star = -1;
  for (Eigen::Index l = 0; l < rho1.size(); ++l) {
    if (rho1[l] > 0 && rho2[l] > 0) {
      lambda_star = l;
      break;
    }
  }
  if (lambda_star < 0) return NoOverlap{};

  ContradictionProof proof;
  proof.lambda_star = lambda_star;
  for (int i = 0; i < kOutcomes; ++i) {
    const Context c = Context::from_index(zero_context[i]);
    const Rational weight = (c.j == 1 ? rho1 : rho2)[lambda_star] *
                            (c.k == 1 ? rho1 : rho2)[lambda_star];
    // target ≥ P(ξᵢ|λ*,λ*)·weight with weight > 0 and target = 0.
    proof.steps[i] = ForcingStep{i + 1, c, weight, targets(c.index(), i)};
  }
  proof.forced_sum = 0;
  proof.required_sum = 1;
  return proof;
}

ContradictionResult derive_contradiction(const ExactModel& model) {
  if (auto report = ontology::validate_model(model); !report.ok()) ontology::throw_invalid(report);
  return derive_contradiction(model.rho1, model.rho2, model.born_targets);
}

ContradictionResult derive_contradiction(const ontology::OntologicalModel<double>&) {
  throw std::invalid_argument(
      "contradiction proofs need exact arithmetic; float-mode models are refused");
}

}  // namespace pbr::nogo
