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

#include "pbr/io.hpp"

#include <fstream>
#include <sstream>

namespace pbr::io {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

const Json& require_array(const Json& j, std::size_t size, const std::string& what) {
  if (!j.is_array() || j.size() != size) {
    throw ParseError(what + " must be an array of length " + std::to_string(size));
  }
  return j;
}

enum class Mode { kExact, kFloat };

Mode decode_mode(const Json& j) {
  const Json& mode = require(j, "mode");
  if (mode == "exact") return Mode::kExact;
  if (mode == "float") return Mode::kFloat;
  throw ParseError("mode must be \"exact\" or \"float\"");
}

Eigen::Index decode_lambda_size(const Json& j) {
  const Json& size = require(j, "lambda_size");
  if (!size.is_number_integer()) throw ParseError("lambda_size must be an integer");
  const auto value = size.get<long long>();
  if (value < 1) throw ParseError("lambda_size must be >= 1");
  return static_cast<Eigen::Index>(value);
}

template <typename T>
ontology::EpistemicState<T> decode_weights(const Json& j, Eigen::Index size,
                                           const std::string& name) {
  require_array(j, static_cast<std::size_t>(size), name);
  ontology::EpistemicState<T> s{Vector<T>(size)};
  for (Eigen::Index l = 0; l < size; ++l) s.weights[l] = decode<T>(j[static_cast<std::size_t>(l)]);
  return s;
}

template <typename T>
ontology::ResponseTable<T> decode_table(const Json& j, Eigen::Index size,
                                        const std::string& name) {
  const auto n = static_cast<std::size_t>(size);
  require_array(j, kOutcomes, name);
  ontology::ResponseTable<T> r(size);
  for (std::size_t i = 0; i < kOutcomes; ++i) {
    require_array(j[i], n, name + "[" + std::to_string(i) + "]");
    for (std::size_t l = 0; l < n; ++l) {
      require_array(j[i][l], n, name + "[" + std::to_string(i) + "][" + std::to_string(l) + "]");
      for (std::size_t lp = 0; lp < n; ++lp) {
        r.at(static_cast<int>(i), static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(lp)) =
            decode<T>(j[i][l][lp]);
      }
    }
  }
  return r;
}

template <typename T>
ontology::Targets<T> decode_targets(const Json& j) {
  require_array(j, 4, "born_targets");
  ontology::Targets<T> t;
  for (std::size_t c = 0; c < 4; ++c) {
    require_array(j[c], kOutcomes, "born_targets[" + std::to_string(c) + "]");
    for (std::size_t i = 0; i < kOutcomes; ++i) {
      t(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(i)) = decode<T>(j[c][i]);
    }
  }
  return t;
}

template <typename T>
AnyModel decode_model_as(const Json& j) {
  const Eigen::Index size = decode_lambda_size(j);
  auto rho1 = decode_weights<T>(require(j, "rho1"), size, "rho1");
  auto rho2 = decode_weights<T>(require(j, "rho2"), size, "rho2");
  auto targets = decode_targets<T>(require(j, "born_targets"));
  const Json& response = require(j, "response");
  const Json& kind = require(response, "kind");
  const Json& p = require(response, "p");
  if (kind == "noncontextual") {
    return ontology::OntologicalModel<T>{ontology::LambdaSpace{size}, std::move(rho1),
                                         std::move(rho2), decode_table<T>(p, size, "response.p"),
                                         targets};
  }
  if (kind == "contextual") {
    if (!p.is_object()) throw ParseError("contextual response.p must be an object");
    contextual::ContextualResponseTable<T> table;
    for (const Context& c : kContexts) {
      table.slice(c) = decode_table<T>(require(p, c.label().c_str()), size,
                                       "response.p." + c.label());
    }
    return contextual::ContextualModel<T>{ontology::LambdaSpace{size}, std::move(rho1),
                                          std::move(rho2), std::move(table), targets};
  }
  throw ParseError("response.kind must be \"noncontextual\" or \"contextual\"");
}

}  // namespace

Json encode(const Rational& q) { return to_string(q); }
Json encode(double x) { return x; }

Rational decode_rational(const Json& j) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
  throw ParseError("exact numbers must be \"num/den\" strings (got " + j.dump() + ")");
}

double decode_double(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    try {
      return to_double(parse_rational(j.get<std::string>()));
    } catch (const ValidationError& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("expected a number (got " + j.dump() + ")");
}

Json encode(const hilbert::QSqrt2& x) {
  namespace mp = boost::multiprecision;
  return Json{{"num", mp::numerator(x.rational_part()).str()},
              {"den", mp::denominator(x.rational_part()).str()},
              {"snum", mp::numerator(x.sqrt2_part()).str()},
              {"sden", mp::denominator(x.sqrt2_part()).str()}};
}

hilbert::QSqrt2 decode_field(const Json& j) {
  auto part = [&](const char* num, const char* den) {
    const Json& n = require(j, num);
    const Json& d = require(j, den);
    if (!n.is_string() || !d.is_string()) throw ParseError("field parts must be strings");
    return decode_rational(Json(n.get<std::string>() + "/" + d.get<std::string>()));
  };
  return {part("num", "den"), part("snum", "sden")};
}

Json encode(const hilbert::ExactState& s) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < s.dim(); ++i) {
    out.push_back(Json{{"re", encode(s[i].real())}, {"im", encode(s[i].imag())}});
  }
  return out;
}

hilbert::ExactState decode_state(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("state must be a nonempty array");
  Vector<hilbert::ComplexQ2> v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v[static_cast<Eigen::Index>(i)] = {decode_field(require(j[i], "re")),
                                       decode_field(require(j[i], "im"))};
  }
  return hilbert::ExactState(std::move(v));
}

std::string format_scalar(const hilbert::ComplexQ2& z) {
  std::ostringstream os;
  os << z;
  return os.str();
}

Json encode(const AnyModel& m) {
  return std::visit([](const auto& model) { return encode(model); }, m);
}

AnyModel decode_model(const Json& j) {
  if (!j.is_object()) throw ParseError("model must be a JSON object");
  return decode_mode(j) == Mode::kExact ? decode_model_as<Rational>(j)
                                        : decode_model_as<double>(j);
}

DistributionPair decode_distributions(const Json& j) {
  if (!j.is_object()) throw ParseError("distribution file must be a JSON object");
  if (j.contains("mode") && decode_mode(j) != Mode::kExact) {
    throw ParseError("distribution file must use exact mode");
  }
  const Json& r1 = require(j, "rho1");
  const Json& r2 = require(j, "rho2");
  if (!r1.is_array() || r1.empty()) throw ParseError("rho1 must be a nonempty array");
  const auto size = static_cast<Eigen::Index>(r1.size());
  return {decode_weights<Rational>(r1, size, "rho1"), decode_weights<Rational>(r2, size, "rho2")};
}

Json encode(const nogo::FeasibilityProblem& p) {
  Json A = Json::array();
  for (Eigen::Index r = 0; r < p.A.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < p.A.cols(); ++c) row.push_back(encode(p.A(r, c)));
    A.push_back(std::move(row));
  }
  return Json{{"lambda_size", p.lambda_size},
              {"rows", p.A.rows()},
              {"cols", p.A.cols()},
              {"A", std::move(A)},
              {"b", encode(p.b)},
              {"row_labels", p.row_labels},
              {"col_labels", p.col_labels}};
}

nogo::FeasibilityProblem decode_problem(const Json& j) {
  nogo::FeasibilityProblem p;
  p.lambda_size = decode_lambda_size(j);
  const Json& A = require(j, "A");
  const Json& b = require(j, "b");
  if (!A.is_array() || !b.is_array() || A.size() != b.size()) {
    throw ParseError("A and b must be arrays with one entry per row");
  }
  const std::size_t rows = A.size();
  const std::size_t cols = rows == 0 ? 0 : A[0].size();
  p.A = RationalMatrix(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  p.b = RationalVector(static_cast<Eigen::Index>(rows));
  for (std::size_t r = 0; r < rows; ++r) {
    require_array(A[r], cols, "A[" + std::to_string(r) + "]");
    for (std::size_t c = 0; c < cols; ++c) {
      p.A(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = decode_rational(A[r][c]);
    }
    p.b[static_cast<Eigen::Index>(r)] = decode_rational(b[r]);
  }
  if (j.contains("row_labels")) p.row_labels = j.at("row_labels").get<std::vector<std::string>>();
  if (j.contains("col_labels")) p.col_labels = j.at("col_labels").get<std::vector<std::string>>();
  return p;
}

RationalVector decode_certificate(const Json& j) {
  const Json* y = nullptr;
  if (j.is_object() && j.contains("y")) {
    y = &j.at("y");
  } else if (j.is_object() && j.contains("certificate")) {
    y = &require(j.at("certificate"), "y");
  } else {
    throw ParseError("certificate must carry a 'y' array");
  }
  if (!y->is_array()) throw ParseError("certificate y must be an array");
  RationalVector out(static_cast<Eigen::Index>(y->size()));
  for (std::size_t i = 0; i < y->size(); ++i) {
    out[static_cast<Eigen::Index>(i)] = decode_rational((*y)[i]);
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace pbr::io
