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

#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "pbr/contextual.hpp"
#include "pbr/hilbert.hpp"
#include "pbr/nogo.hpp"
#include "pbr/ontology.hpp"

namespace pbr::io {

using Json = nlohmann::json;

/// Structurally malformed input (wrong JSON shape, unparsable number).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using AnyModel = std::variant<ontology::OntologicalModel<Rational>,
                              ontology::OntologicalModel<double>,
                              contextual::ContextualModel<Rational>,
                              contextual::ContextualModel<double>>;

/// Exact numbers travel as "num/den" strings.
Json encode(const Rational& q);
/// Float-mode numbers travel as JSON numbers.
Json encode(double x);

Rational decode_rational(const Json& j);
double decode_double(const Json& j);

template <typename T>
T decode(const Json& j) {
  if constexpr (std::is_same_v<T, Rational>) {
    return decode_rational(j);
  } else {
    return decode_double(j);
  }
}

/// {"num","den","snum","sden"} for a + b·√2 with a = num/den, b = snum/sden.
Json encode(const hilbert::QSqrt2& x);
hilbert::QSqrt2 decode_field(const Json& j);
/// Array of {"re": field, "im": field} records.
Json encode(const hilbert::ExactState& s);
hilbert::ExactState decode_state(const Json& j);
/// Human-readable exact scalar, e.g. "1/2*sqrt2" or "0".
std::string format_scalar(const hilbert::ComplexQ2& z);

template <typename T>
Json encode(const Vector<T>& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(encode(v[i]));
  return out;
}

template <typename T>
Json encode(const ontology::EpistemicState<T>& s) {
  return encode(s.weights);
}

/// [4][L][L] nested arrays, indexed [outcome][λ][λ′].
template <typename T>
Json encode(const ontology::ResponseTable<T>& r) {
  Json out = Json::array();
  for (int i = 0; i < kOutcomes; ++i) {
    Json rows = Json::array();
    for (Eigen::Index l = 0; l < r.lambda_size; ++l) {
      Json row = Json::array();
      for (Eigen::Index lp = 0; lp < r.lambda_size; ++lp) row.push_back(encode(r.at(i, l, lp)));
      rows.push_back(std::move(row));
    }
    out.push_back(std::move(rows));
  }
  return out;
}

/// [4][4] indexed [context][outcome].
template <typename T>
Json encode_targets(const ontology::Targets<T>& t) {
  Json out = Json::array();
  for (int c = 0; c < 4; ++c) {
    Json row = Json::array();
    for (int i = 0; i < kOutcomes; ++i) row.push_back(encode(t(c, i)));
    out.push_back(std::move(row));
  }
  return out;
}

/// {"11": [...], "12": [...], ...} keyed by context label.
template <typename T>
Json encode_targets_by_context(const ontology::Targets<T>& t) {
  Json out = Json::object();
  for (const Context& c : kContexts) {
    Json row = Json::array();
    for (int i = 0; i < kOutcomes; ++i) row.push_back(encode(t(c.index(), i)));
    out[c.label()] = std::move(row);
  }
  return out;
}

template <typename T>
Json encode(const ontology::OntologicalModel<T>& m) {
  return Json{{"mode", Arith<T>::mode},
              {"lambda_size", m.lambda_space.size},
              {"rho1", encode(m.rho1)},
              {"rho2", encode(m.rho2)},
              {"response", {{"kind", "noncontextual"}, {"p", encode(m.response)}}},
              {"born_targets", encode_targets(m.born_targets)}};
}

template <typename T>
Json encode(const contextual::ContextualModel<T>& m) {
  Json p = Json::object();
  for (const Context& c : kContexts) p[c.label()] = encode(m.response.slice(c));
  return Json{{"mode", Arith<T>::mode},
              {"lambda_size", m.lambda_space.size},
              {"rho1", encode(m.rho1)},
              {"rho2", encode(m.rho2)},
              {"response", {{"kind", "contextual"}, {"p", std::move(p)}}},
              {"born_targets", encode_targets(m.born_targets)}};
}

Json encode(const AnyModel& m);

/// Parses the model schema. Shape errors throw ParseError; value-level
/// problems (negative weights, bad sums) are left for validate_model.
AnyModel decode_model(const Json& j);

/// {"mode": ..., "rho1": [...], "rho2": [...]}; exact mode is required.
struct DistributionPair {
  nogo::ExactState rho1;
  nogo::ExactState rho2;
};
DistributionPair decode_distributions(const Json& j);

Json encode(const nogo::FeasibilityProblem& p);
nogo::FeasibilityProblem decode_problem(const Json& j);

/// Reads {"y": [...]} or any report carrying {"certificate": {"y": [...]}}.
RationalVector decode_certificate(const Json& j);

/// Reads and parses a JSON file; I/O and syntax failures throw ParseError.
Json read_json_file(const std::string& path);

}  // namespace pbr::io
