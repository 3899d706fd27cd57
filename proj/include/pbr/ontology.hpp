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
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "pbr/context.hpp"
#include "pbr/rational.hpp"

namespace pbr::ontology {

/// Discrete hidden-variable space {0, ..., size-1}.
struct LambdaSpace {
  Eigen::Index size = 1;
};

/// Distribution ρ(λ) over a LambdaSpace. Plain data: invariants are
/// checked by validate_model so that malformed inputs can be reported.
template <typename T>
struct EpistemicState {
  Vector<T> weights;

  Eigen::Index size() const { return weights.size(); }
  const T& operator[](Eigen::Index i) const { return weights[i]; }
};

template <typename T>
EpistemicState<T> uniform(Eigen::Index size) {
  return {Vector<T>::Constant(size, T(1) / T(static_cast<long>(size)))};
}

template <typename T>
EpistemicState<T> point_mass(Eigen::Index size, Eigen::Index at) {
  EpistemicState<T> s{Vector<T>::Zero(size)};
  s.weights[at] = T(1);
  return s;
}

/// Cell index of (λ, λ′): row-major, λ·L + λ′.
inline Eigen::Index cell_index(Eigen::Index lambda, Eigen::Index lambda_prime, Eigen::Index size) {
  return lambda * size + lambda_prime;
}

/// Product weights ρⱼ(λ)ρₖ(λ′) laid out in cell order.
template <typename T>
Vector<T> joint_weights(const EpistemicState<T>& first, const EpistemicState<T>& second) {
  Vector<T> out(first.size() * second.size());
  for (Eigen::Index a = 0; a < first.size(); ++a) {
    for (Eigen::Index b = 0; b < second.size(); ++b) {
      out[a * second.size() + b] = first[a] * second[b];
    }
  }
  return out;
}

/// Response probabilities P(ξᵢ|λ,λ′): row = outcome (0-based), column = cell.
template <typename T>
struct ResponseTable {
  using Table = Eigen::Matrix<T, kOutcomes, Eigen::Dynamic>;

  Eigen::Index lambda_size = 1;
  Table p;

  ResponseTable() = default;
  explicit ResponseTable(Eigen::Index size)
      : lambda_size(size), p(Table::Zero(kOutcomes, size * size)) {}

  T& at(int outcome, Eigen::Index lambda, Eigen::Index lambda_prime) {
    return p(outcome, cell_index(lambda, lambda_prime, lambda_size));
  }
  const T& at(int outcome, Eigen::Index lambda, Eigen::Index lambda_prime) const {
    return p(outcome, cell_index(lambda, lambda_prime, lambda_size));
  }

  /// Same outcome distribution in every cell.
  static ResponseTable constant(Eigen::Index size, const Eigen::Matrix<T, kOutcomes, 1>& column) {
    ResponseTable r(size);
    r.p.colwise() = column;
    return r;
  }
};

/// Born targets indexed (context, outcome); row c holds the four
/// probabilities the model has to reproduce in context kContexts[c].
template <typename T>
using Targets = Eigen::Matrix<T, 4, kOutcomes>;

template <typename T>
using OutcomeVector = Eigen::Matrix<T, kOutcomes, 1>;

/// Preparation-independent, noncontextual model:
///   P(ξᵢ|Ψⱼ⊗Ψₖ) = Σ_{λ,λ′} P(ξᵢ|λ,λ′) ρⱼ(λ) ρₖ(λ′).
template <typename T>
struct OntologicalModel {
  LambdaSpace lambda_space;
  EpistemicState<T> rho1;
  EpistemicState<T> rho2;
  ResponseTable<T> response;
  Targets<T> born_targets;

  const EpistemicState<T>& rho(int which) const { return which == 1 ? rho1 : rho2; }
};

struct Issue {
  std::string code;
  std::string message;
};

struct ValidationReport {
  std::vector<Issue> issues;

  bool ok() const { return issues.empty(); }
  void add(std::string code, std::string message) {
    issues.push_back({std::move(code), std::move(message)});
  }
  /// Issues joined with "; ".
  std::string summary() const;
};

[[noreturn]] void throw_invalid(const ValidationReport& report);

namespace detail {

inline std::string idx(Eigen::Index i) { return std::to_string(i); }

template <typename T>
void check_distribution(ValidationReport& report, const std::string& name,
                        const EpistemicState<T>& state, Eigen::Index size) {
  using A = Arith<T>;
  if (state.size() != size) {
    report.add(name + ".size", name + " has " + idx(state.size()) + " weights, lambda_size is " +
                                   idx(size));
    return;
  }
  T total(0);
  for (Eigen::Index l = 0; l < state.size(); ++l) {
    if (A::negative(state[l])) {
      report.add(name + ".negative",
                 name + "[" + idx(l) + "] = " + A::format(state[l]) + " is negative");
    }
    total += state[l];
  }
  if (!A::equal(total, T(1))) {
    report.add(name + ".sum", name + " sums to " + A::format(total) + " (deficit " +
                                  A::format(T(1) - total) + ")");
  }
}

template <typename T>
void check_response(ValidationReport& report, const std::string& name,
                    const ResponseTable<T>& table, Eigen::Index size) {
  using A = Arith<T>;
  if (table.lambda_size != size || table.p.cols() != size * size) {
    report.add(name + ".shape", name + " does not cover " + idx(size) + "x" + idx(size) +
                                    " cells");
    return;
  }
  for (Eigen::Index l = 0; l < size; ++l) {
    for (Eigen::Index lp = 0; lp < size; ++lp) {
      T total(0);
      for (int i = 0; i < kOutcomes; ++i) {
        const T& v = table.at(i, l, lp);
        if (A::negative(v) || A::negative(T(1) - v)) {
          report.add(name + ".range", name + "[" + std::to_string(i + 1) + "][" + idx(l) + "][" +
                                          idx(lp) + "] = " + A::format(v) + " outside [0,1]");
        }
        total += v;
      }
      if (!A::equal(total, T(1))) {
        report.add(name + ".normalization",
                   name + " at (lambda=" + idx(l) + ", lambda'=" + idx(lp) + ") sums to " +
                       A::format(total) + " (deficit " + A::format(T(1) - total) + ")");
      }
    }
  }
}

template <typename T>
void check_targets(ValidationReport& report, const Targets<T>& targets) {
  using A = Arith<T>;
  for (const Context& c : kContexts) {
    T total(0);
    for (int i = 0; i < kOutcomes; ++i) {
      const T& v = targets(c.index(), i);
      if (A::negative(v) || A::negative(T(1) - v)) {
        report.add("born_targets.range", "born_targets[" + c.label() + "][" +
                                             std::to_string(i + 1) + "] = " + A::format(v) +
                                             " outside [0,1]");
      }
      total += v;
    }
    if (!A::equal(total, T(1))) {
      report.add("born_targets.sum", "born_targets row " + c.label() + " sums to " +
                                         A::format(total) + " (deficit " +
                                         A::format(T(1) - total) + ")");
    }
  }
}

}  // namespace detail

template <typename T>
ValidationReport validate_distributions(const EpistemicState<T>& rho1,
                                        const EpistemicState<T>& rho2) {
  ValidationReport report;
  if (rho1.size() < 1) report.add("lambda_size", "lambda_size must be >= 1");
  detail::check_distribution(report, "rho1", rho1, rho1.size());
  detail::check_distribution(report, "rho2", rho2, rho1.size());
  return report;
}

template <typename T>
ValidationReport validate_targets(const Targets<T>& targets) {
  ValidationReport report;
  detail::check_targets(report, targets);
  return report;
}

/// Every violated invariant, with indices. Empty iff the model is valid.
template <typename T>
ValidationReport validate_model(const OntologicalModel<T>& m) {
  ValidationReport report;
  const Eigen::Index size = m.lambda_space.size;
  if (size < 1) {
    report.add("lambda_size", "lambda_size must be >= 1");
    return report;
  }
  detail::check_distribution(report, "rho1", m.rho1, size);
  detail::check_distribution(report, "rho2", m.rho2, size);
  detail::check_response(report, "response", m.response, size);
  detail::check_targets(report, m.born_targets);
  return report;
}

/// Σ_{λ,λ′} table(i, cell) ρⱼ(λ)ρₖ(λ′) for the four outcomes.
template <typename T>
OutcomeVector<T> predict_with(const ResponseTable<T>& table, const EpistemicState<T>& first,
                              const EpistemicState<T>& second) {
  return table.p * joint_weights(first, second);
}

template <typename T>
OutcomeVector<T> predict(const OntologicalModel<T>& m, Context context) {
  if (auto report = validate_model(m); !report.ok()) throw_invalid(report);
  return predict_with(m.response, m.rho(context.j), m.rho(context.k));
}

template <typename T>
struct Overlap {
  bool disjoint = true;
  T overlap_mass{0};
};

/// disjoint ⇔ r1(λ)·r2(λ) = 0 for all λ; mass = Σ_λ min(r1(λ), r2(λ)).
template <typename T>
Overlap<T> support_overlap(const EpistemicState<T>& r1, const EpistemicState<T>& r2) {
  if (r1.size() != r2.size()) {
    throw DimensionError("support_overlap of lengths " + std::to_string(r1.size()) + " and " +
                         std::to_string(r2.size()));
  }
  Overlap<T> out;
  for (Eigen::Index l = 0; l < r1.size(); ++l) {
    const T lo = r1[l] < r2[l] ? r1[l] : r2[l];
    if (Arith<T>::positive(lo)) out.disjoint = false;
    out.overlap_mass += lo;
  }
  return out;
}

// --- Monte Carlo -----------------------------------------------------------

/// Name of the generator recorded in reports. Draws use the raw 64-bit
/// output mapped to [0,1) as (x >> 11)·2⁻⁵³, so counts are reproducible
/// across standard libraries.
inline constexpr const char* kGeneratorName = "mt19937_64/top53-inverse-cdf";

struct OutcomeCounts {
  std::array<std::uint64_t, kOutcomes> counts{};
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
};

namespace detail {

class CategoricalDraw {
 public:
  explicit CategoricalDraw(std::vector<double> weights);
  /// Index of the first cumulative bound exceeding u ∈ [0,1).
  std::size_t operator()(double u) const;

 private:
  std::vector<double> cdf_;
};

inline double unit_draw(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

template <typename T>
std::vector<double> as_doubles(const Eigen::Ref<const Vector<T>>& v) {
  std::vector<double> out(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(i)] = to_double(v[i]);
  return out;
}

}  // namespace detail

/// λ ~ first, λ′ ~ second, outcome ~ table(·, cell), independently per trial.
template <typename T>
OutcomeCounts sample_with(const ResponseTable<T>& table, const EpistemicState<T>& first,
                          const EpistemicState<T>& second, std::uint64_t n, std::uint64_t seed) {
  const detail::CategoricalDraw draw_first(detail::as_doubles<T>(first.weights));
  const detail::CategoricalDraw draw_second(detail::as_doubles<T>(second.weights));
  std::vector<detail::CategoricalDraw> columns;
  columns.reserve(static_cast<std::size_t>(table.p.cols()));
  for (Eigen::Index c = 0; c < table.p.cols(); ++c) {
    Vector<T> col = table.p.col(c);
    columns.emplace_back(detail::as_doubles<T>(col));
  }
  std::mt19937_64 gen(seed);
  OutcomeCounts out;
  out.n = n;
  out.seed = seed;
  for (std::uint64_t t = 0; t < n; ++t) {
    const auto l = static_cast<Eigen::Index>(draw_first(detail::unit_draw(gen)));
    const auto lp = static_cast<Eigen::Index>(draw_second(detail::unit_draw(gen)));
    const auto cell = static_cast<std::size_t>(cell_index(l, lp, table.lambda_size));
    ++out.counts[columns[cell](detail::unit_draw(gen))];
  }
  return out;
}

template <typename T>
OutcomeCounts sample(const OntologicalModel<T>& m, Context context, std::uint64_t n,
                     std::uint64_t seed) {
  if (auto report = validate_model(m); !report.ok()) throw_invalid(report);
  return sample_with(m.response, m.rho(context.j), m.rho(context.k), n, seed);
}

/// Pearson statistic Σ (O − np)²/(np) over outcomes with p > 0. An
/// observation on a zero-probability outcome gives +∞.
double chi_square(const OutcomeCounts& counts, const std::array<double, kOutcomes>& probs);

/// ½ Σ |O/n − p|; zero when n = 0.
double total_variation(const OutcomeCounts& counts, const std::array<double, kOutcomes>& probs);

/// 0.999 quantile of χ² with 3 degrees of freedom.
inline constexpr double kChiSquare3Dof999 = 16.27;

template <typename T>
std::array<double, kOutcomes> to_double_array(const OutcomeVector<T>& v) {
  std::array<double, kOutcomes> out{};
  for (int i = 0; i < kOutcomes; ++i) out[static_cast<std::size_t>(i)] = to_double(v[i]);
  return out;
}

}  // namespace pbr::ontology
