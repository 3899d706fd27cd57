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
#include <optional>
#include <string>

#include "pbr/context.hpp"
#include "pbr/ontology.hpp"

namespace pbr::contextual {

using ontology::EpistemicState;
using ontology::LambdaSpace;
using ontology::OutcomeVector;
using ontology::ResponseTable;
using ontology::Targets;
using ontology::ValidationReport;

/// P(ξᵢ|Ψⱼ,Ψₖ,λ,λ′): one response slice per preparation context.
template <typename T>
struct ContextualResponseTable {
  std::array<ResponseTable<T>, 4> slices;

  ResponseTable<T>& slice(Context c) { return slices[static_cast<std::size_t>(c.index())]; }
  const ResponseTable<T>& slice(Context c) const {
    return slices[static_cast<std::size_t>(c.index())];
  }

  static ContextualResponseTable uniform_slices(const ResponseTable<T>& table) {
    return {{table, table, table, table}};
  }
};

template <typename T>
struct ContextualModel {
  LambdaSpace lambda_space;
  EpistemicState<T> rho1;
  EpistemicState<T> rho2;
  ContextualResponseTable<T> response;
  Targets<T> born_targets;

  const EpistemicState<T>& rho(int which) const { return which == 1 ? rho1 : rho2; }
};

template <typename T>
ValidationReport validate_model(const ContextualModel<T>& m) {
  ValidationReport report;
  const Eigen::Index size = m.lambda_space.size;
  if (size < 1) {
    report.add("lambda_size", "lambda_size must be >= 1");
    return report;
  }
  ontology::detail::check_distribution(report, "rho1", m.rho1, size);
  ontology::detail::check_distribution(report, "rho2", m.rho2, size);
  for (const Context& c : kContexts) {
    ontology::detail::check_response(report, "response." + c.label(), m.response.slice(c), size);
  }
  ontology::detail::check_targets(report, m.born_targets);
  return report;
}

/// Σ_{λ,λ′} p[(j,k)][i][λ][λ′] ρⱼ(λ)ρₖ(λ′).
template <typename T>
OutcomeVector<T> predict_contextual(const ContextualModel<T>& m, Context context) {
  if (auto report = validate_model(m); !report.ok()) ontology::throw_invalid(report);
  return ontology::predict_with(m.response.slice(context), m.rho(context.j), m.rho(context.k));
}

/// Generalized inverse-CDF construction. For each context the cells are laid
/// end to end on [0,1) with widths ρⱼ(λ)ρₖ(λ′) in cell order, [0,1) is split
/// into consecutive intervals of lengths q[(j,k)][1..4], and each cell's
/// outcome distribution is the fraction of it covered by each interval.
/// Zero-width cells copy the targets so every column stays stochastic.
template <typename T>
ContextualModel<T> build_weighted_interval_model(const EpistemicState<T>& rho1,
                                                 const EpistemicState<T>& rho2,
                                                 const Targets<T>& targets) {
  auto report = ontology::validate_distributions(rho1, rho2);
  for (auto& issue : ontology::validate_targets(targets).issues) report.issues.push_back(issue);
  if (!report.ok()) ontology::throw_invalid(report);

  const Eigen::Index size = rho1.size();
  ContextualModel<T> m{LambdaSpace{size}, rho1, rho2, {}, targets};
  for (const Context& c : kContexts) {
    const Vector<T> widths = ontology::joint_weights(m.rho(c.j), m.rho(c.k));
    ResponseTable<T> table(size);
    T cell_start(0);
    for (Eigen::Index cell = 0; cell < widths.size(); ++cell) {
      const T& width = widths[cell];
      const T cell_end = cell_start + width;
      if (!Arith<T>::positive(width)) {
        table.p.col(cell) = targets.row(c.index()).transpose();
        cell_start = cell_end;
        continue;
      }
      T interval_start(0);
      for (int i = 0; i < kOutcomes; ++i) {
        const T interval_end = interval_start + targets(c.index(), i);
        const T lo = cell_start > interval_start ? cell_start : interval_start;
        const T hi = cell_end < interval_end ? cell_end : interval_end;
        table.p(i, cell) = hi > lo ? T((hi - lo) / width) : T(0);
        interval_start = interval_end;
      }
      cell_start = cell_end;
    }
    m.response.slice(c) = std::move(table);
  }
  return m;
}

/// ρ₁ = ρ₂ = uniform(L): every cell has width 1/L², so entries are
/// L² × |cell ∩ interval|.
template <typename T>
ContextualModel<T> build_interval_model(Eigen::Index lambda_size, const Targets<T>& targets) {
  if (lambda_size < 1) throw ValidationError("lambda_size must be >= 1");
  const auto rho = ontology::uniform<T>(lambda_size);
  return build_weighted_interval_model(rho, rho, targets);
}

/// The noncontextual model carried by a context-independent table, if any.
template <typename T>
std::optional<ontology::OntologicalModel<T>> as_noncontextual(const ContextualModel<T>& m) {
  const auto& first = m.response.slices[0];
  for (const auto& s : m.response.slices) {
    if (s.lambda_size != first.lambda_size || s.p.cols() != first.p.cols()) return std::nullopt;
    for (Eigen::Index c = 0; c < s.p.cols(); ++c) {
      for (int i = 0; i < kOutcomes; ++i) {
        if (!Arith<T>::equal(s.p(i, c), first.p(i, c))) return std::nullopt;
      }
    }
  }
  return ontology::OntologicalModel<T>{m.lambda_space, m.rho1, m.rho2, first, m.born_targets};
}

template <typename T>
struct RefutationReport {
  bool born_reproduced = false;
  T overlap_mass{0};
  bool eq2_violated = false;
  bool collapse_affirmed = false;
  std::array<OutcomeVector<T>, 4> predictions;
  std::string verdict;
};

/// Collapse is affirmed only when the model reproduces every Born target
/// and the two epistemic states share support.
template <typename T>
RefutationReport<T> refutation_report(const ContextualModel<T>& m) {
  RefutationReport<T> r;
  r.born_reproduced = true;
  for (const Context& c : kContexts) {
    auto& pred = r.predictions[static_cast<std::size_t>(c.index())];
    pred = predict_contextual(m, c);
    for (int i = 0; i < kOutcomes; ++i) {
      if (!Arith<T>::equal(pred[i], m.born_targets(c.index(), i))) r.born_reproduced = false;
    }
  }
  const auto overlap = ontology::support_overlap(m.rho1, m.rho2);
  r.overlap_mass = overlap.overlap_mass;
  r.eq2_violated = !overlap.disjoint;
  r.collapse_affirmed = r.born_reproduced && r.eq2_violated;
  if (r.collapse_affirmed) {
    r.verdict =
        "collapse affirmed: a state-dependent response reproduces every Born target while "
        "rho1 and rho2 overlap (overlap mass " + Arith<T>::format(r.overlap_mass) + ")";
  } else if (!r.born_reproduced) {
    r.verdict = "no collapse claim: the model does not reproduce the Born targets";
  } else {
    r.verdict = "no collapse claim: rho1 and rho2 have disjoint supports";
  }
  return r;
}

template <typename T>
ontology::OutcomeCounts sample_contextual(const ContextualModel<T>& m, Context context,
                                          std::uint64_t n, std::uint64_t seed) {
  if (auto report = validate_model(m); !report.ok()) ontology::throw_invalid(report);
  return ontology::sample_with(m.response.slice(context), m.rho(context.j), m.rho(context.k), n,
                               seed);
}

}  // namespace pbr::contextual
