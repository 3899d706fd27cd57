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

#include "pbr/ontology.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pbr::ontology {

std::string ValidationReport::summary() const {
  std::string out;
  for (const auto& issue : issues) {
    if (!out.empty()) out += "; ";
    out += issue.message;
  }
  return out;
}

void throw_invalid(const ValidationReport& report) {
  throw ValidationError("invalid model: " + report.summary());
}

namespace detail {

CategoricalDraw::CategoricalDraw(std::vector<double> weights) : cdf_(std::move(weights)) {
  std::partial_sum(cdf_.begin(), cdf_.end(), cdf_.begin());
}

std::size_t CategoricalDraw::operator()(double u) const {
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  if (it != cdf_.end()) return static_cast<std::size_t>(it - cdf_.begin());
  // Rounding left the total just below u: take the last index with mass.
  for (std::size_t i = cdf_.size(); i-- > 0;) {
    if (i == 0 || cdf_[i] > cdf_[i - 1]) return i;
  }
  return 0;
}

}  // namespace detail

double chi_square(const OutcomeCounts& counts, const std::array<double, kOutcomes>& probs) {
  if (counts.n == 0) return 0.0;
  const double n = static_cast<double>(counts.n);
  double stat = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const double observed = static_cast<double>(counts.counts[i]);
    const double expected = n * probs[i];
    if (expected <= 0.0) {
      if (observed > 0.0) return std::numeric_limits<double>::infinity();
      continue;
    }
    stat += (observed - expected) * (observed - expected) / expected;
  }
  return stat;
}

double total_variation(const OutcomeCounts& counts, const std::array<double, kOutcomes>& probs) {
  if (counts.n == 0) return 0.0;
  const double n = static_cast<double>(counts.n);
  double tv = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    tv += std::abs(static_cast<double>(counts.counts[i]) / n - probs[i]);
  }
  return tv / 2.0;
}

}  // namespace pbr::ontology
