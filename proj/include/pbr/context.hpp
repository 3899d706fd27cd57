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
#include <stdexcept>
#include <string>

namespace pbr {

/// Preparation context (j, k): system one prepared in Ψⱼ, system two in Ψₖ,
/// with j, k ∈ {1, 2}. Contexts are ordered (1,1), (1,2), (2,1), (2,2).
struct Context {
  int j = 1;
  int k = 1;

  constexpr int index() const { return (j - 1) * 2 + (k - 1); }
  std::string label() const { return std::to_string(j) + std::to_string(k); }

  static constexpr Context from_index(int index) { return {index / 2 + 1, index % 2 + 1}; }
  /// Parses "11", "12", "21" or "22".
  static Context parse(const std::string& label);

  friend constexpr bool operator==(const Context&, const Context&) = default;
};

inline constexpr std::array<Context, 4> kContexts = {
    Context{1, 1}, Context{1, 2}, Context{2, 1}, Context{2, 2}};

inline constexpr int kOutcomes = 4;

inline Context Context::parse(const std::string& label) {
  if (label.size() == 2 && (label[0] == '1' || label[0] == '2') &&
      (label[1] == '1' || label[1] == '2')) {
    return {label[0] - '0', label[1] - '0'};
  }
  throw std::invalid_argument("context must be one of 11, 12, 21, 22 (got '" + label + "')");
}

}  // namespace pbr
