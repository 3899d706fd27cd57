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

#include "pbr/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "pbr/contextual.hpp"
#include "pbr/hilbert.hpp"
#include "pbr/io.hpp"
#include "pbr/nogo.hpp"
#include "pbr/ontology.hpp"

namespace pbr::cli {

namespace {

using io::Json;
using Clock = std::chrono::steady_clock;

/// Input failure that maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommonFlags {
  bool json = false;
  bool timings = false;
};

double six_digits(double x) {
  if (!std::isfinite(x)) return x;
  return std::stod(Arith<double>::format(x));
}

Json encode_stat(double x) {
  if (!std::isfinite(x)) return nullptr;
  return six_digits(x);
}

std::string read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_bytes(const std::string& bytes, const std::string& path) {
  try {
    return Json::parse(bytes);
  } catch (const Json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

Json base_report(const std::string& command, const std::string& mode, const std::string& digest) {
  return Json{{"command", command},
              {"tool_version", kToolVersion},
              {"arithmetic_mode", mode},
              {"inputs_digest", "sha256:" + sha256_hex(digest)}};
}

void finish(Json& report, const CommonFlags& flags, Clock::time_point start) {
  if (flags.timings) {
    const auto us =
        std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
    report["timings"] = {{"total_ms", six_digits(static_cast<double>(us) / 1000.0)}};
  }
}

void emit_json(std::ostream& out, const Json& report) { out << report.dump(2) << '\n'; }

std::string join(const Json& values) {
  std::string s = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ", ";
    s += values[i].is_string() ? values[i].get<std::string>() : values[i].dump();
  }
  return s + ")";
}

void check_lambda_size(long long size) {
  if (size < 1) throw InputError("lambda_size must be ≥ 1");
}

nogo::ExactTargets targets() { return hilbert::pbr_targets(); }

io::DistributionPair load_distributions(const std::optional<std::string>& path, long long size) {
  if (!path) {
    const auto rho = ontology::uniform<Rational>(size);
    return {rho, rho};
  }
  io::DistributionPair pair;
  try {
    pair = io::decode_distributions(parse_bytes(read_bytes(*path), *path));
  } catch (const io::ParseError& e) {
    throw InputError(e.what());
  }
  if (pair.rho1.size() != size || pair.rho2.size() != size) {
    throw InputError("distribution file has " + std::to_string(pair.rho1.size()) + "/" +
                     std::to_string(pair.rho2.size()) + " weights but lambda_size is " +
                     std::to_string(size));
  }
  if (auto report = ontology::validate_distributions(pair.rho1, pair.rho2); !report.ok()) {
    throw InputError("invalid distributions: " + report.summary());
  }
  return pair;
}

io::AnyModel load_model(const std::string& path, std::string* bytes_out) {
  std::string bytes = read_bytes(path);
  try {
    io::AnyModel m = io::decode_model(parse_bytes(bytes, path));
    if (bytes_out) *bytes_out = std::move(bytes);
    return m;
  } catch (const io::ParseError& e) {
    throw InputError("malformed model '" + path + "': " + e.what());
  }
}

ontology::ValidationReport validate_any(const io::AnyModel& m) {
  return std::visit(
      [](const auto& model) {
        using M = std::decay_t<decltype(model)>;
        if constexpr (std::is_same_v<M, ontology::OntologicalModel<Rational>> ||
                      std::is_same_v<M, ontology::OntologicalModel<double>>) {
          return ontology::validate_model(model);
        } else {
          return contextual::validate_model(model);
        }
      },
      m);
}

const char* kind_of(const io::AnyModel& m) {
  return (m.index() <= 1) ? "noncontextual" : "contextual";
}

const char* mode_of(const io::AnyModel& m) { return (m.index() % 2 == 0) ? "exact" : "float"; }

// --- basis -----------------------------------------------------------------

int cmd_basis(const CommonFlags& flags, std::ostream& out) {
  const auto start = Clock::now();
  const auto& basis = hilbert::pbr_basis();
  Json report = base_report("basis", "exact", "basis");

  Json effects = Json::array();
  for (int i = 0; i < 4; ++i) {
    Json text = Json::array();
    for (Eigen::Index a = 0; a < 4; ++a) text.push_back(io::format_scalar(basis[i][a]));
    effects.push_back(Json{{"label", "xi_" + std::to_string(i + 1)},
                           {"amplitudes", io::encode(basis[i])},
                           {"amplitudes_text", std::move(text)}});
  }
  const auto gram = basis.gram();
  Json gram_json = Json::array();
  bool identity = true;
  for (int r = 0; r < 4; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 4; ++c) {
      row.push_back(io::format_scalar(gram(r, c)));
      identity = identity && gram(r, c) == hilbert::ComplexQ2(r == c ? 1 : 0);
    }
    gram_json.push_back(std::move(row));
  }
  Json anchors = Json::array();
  for (int i = 0; i < 4; ++i) {
    const Context c = kContexts[i];
    anchors.push_back(
        Json{{"effect", "xi_" + std::to_string(i + 1)},
             {"context", c.label()},
             {"probability", io::encode(hilbert::born(basis[i], hilbert::product_state(c)))}});
  }
  report["preparations"] = {{"psi1", io::encode(hilbert::psi(1))},
                            {"psi2", io::encode(hilbert::psi(2))}};
  report["basis"] = std::move(effects);
  report["gram"] = std::move(gram_json);
  report["gram_is_identity"] = identity;
  report["anchors"] = std::move(anchors);
  report["targets"] = io::encode_targets_by_context(targets());
  finish(report, flags, start);

  if (flags.json) {
    emit_json(out, report);
    return kOk;
  }
  out << "measurement basis (Psi1 = |0>, Psi2 = (|0>+|1>)/sqrt2):\n";
  for (const auto& e : report["basis"]) {
    out << "  " << e["label"].get<std::string>() << " = " << join(e["amplitudes_text"]) << "\n";
  }
  out << "gram matrix" << (identity ? " (exact identity)" : "") << ":\n";
  for (const auto& row : report["gram"]) out << "  " << join(row) << "\n";
  out << "orthogonality anchors:\n";
  for (const auto& a : report["anchors"]) {
    out << "  born(" << a["effect"].get<std::string>() << ", context "
        << a["context"].get<std::string>() << ") = " << a["probability"].get<std::string>()
        << "\n";
  }
  out << "Born targets (context: xi_1..xi_4):\n";
  for (const auto& [label, row] : report["targets"].items()) {
    out << "  " << label << ": " << join(row) << "\n";
  }
  return kOk;
}

// --- nogo ------------------------------------------------------------------

struct NogoArgs {
  long long lambda_size = 0;
  std::optional<std::string> rho_file;
  std::optional<std::string> problem_out;
};

int cmd_nogo(const NogoArgs& args, const CommonFlags& flags, std::ostream& out) {
  const auto start = Clock::now();
  check_lambda_size(args.lambda_size);
  const auto rho = load_distributions(args.rho_file, args.lambda_size);
  const auto q = targets();

  const Json inputs{{"lambda_size", args.lambda_size},
                    {"rho1", io::encode(rho.rho1)},
                    {"rho2", io::encode(rho.rho2)},
                    {"targets", io::encode_targets(q)}};
  Json report = base_report("nogo", "exact", inputs.dump());

  const auto problem = nogo::build_feasibility(rho.rho1, rho.rho2, q);
  if (args.problem_out) write_file(*args.problem_out, io::encode(problem).dump(2) + "\n");
  const auto outcome = nogo::solve_feasibility(problem);
  const auto overlap = ontology::support_overlap(rho.rho1, rho.rho2);
  const char* expected = overlap.disjoint ? "feasible" : "infeasible";
  const char* verdict = outcome.feasible() ? "feasible" : "infeasible";

  bool checks_pass = true;
  report["lambda_size"] = args.lambda_size;
  report["rho1"] = io::encode(rho.rho1);
  report["rho2"] = io::encode(rho.rho2);
  report["overlap"] = {{"disjoint", overlap.disjoint},
                       {"overlap_mass", io::encode(overlap.overlap_mass)}};
  report["targets"] = io::encode_targets_by_context(q);
  report["problem"] = {
      {"rows", problem.num_rows()},
      {"cols", problem.num_vars()},
      {"row_order", "normalization rows (lambda, lambda') first, then Born rows outcome-major, "
                    "context-minor"},
      {"col_order", "x[i][lambda][lambda'] at i*L^2 + lambda*L + lambda'"}};
  report["verdict"] = verdict;
  report["expected_verdict"] = expected;
  report["pivots"] = outcome.pivots;
  if (outcome.feasible()) {
    const auto& witness = outcome.as_feasible().witness;
    ontology::OntologicalModel<Rational> model{ontology::LambdaSpace{args.lambda_size}, rho.rho1,
                                               rho.rho2, witness, q};
    bool reproduces = ontology::validate_model(model).ok();
    if (reproduces) {
      for (const Context& c : kContexts) {
        reproduces = reproduces && ontology::predict(model, c) == q.row(c.index()).transpose();
      }
    }
    checks_pass = reproduces;
    report["witness"] = {{"p", io::encode(witness)}, {"reproduces_targets", reproduces}};
  } else {
    const auto& y = outcome.as_infeasible().certificate;
    const bool verified = nogo::verify_certificate(problem, y);
    Rational yb = 0;
    for (Eigen::Index r = 0; r < y.size(); ++r) yb += y[r] * problem.b[r];
    checks_pass = verified;
    report["certificate"] = {{"y", io::encode(y)}, {"y_dot_b", io::encode(yb)},
                             {"verified", verified}};
  }
  const bool as_expected = checks_pass && std::string(verdict) == expected;
  report["matches_expectation"] = as_expected;
  finish(report, flags, start);

  if (flags.json) {
    emit_json(out, report);
  } else {
    out << "lambda_size: " << args.lambda_size << "\n"
        << "rho1: " << join(report["rho1"]) << "\n"
        << "rho2: " << join(report["rho2"]) << "\n"
        << "supports " << (overlap.disjoint ? "disjoint" : "overlap") << " (overlap mass "
        << to_string(overlap.overlap_mass) << ")\n"
        << "problem: " << problem.num_rows() << " rows x " << problem.num_vars() << " columns\n"
        << "verdict: " << verdict << " (expected " << expected << ")\n";
    if (outcome.feasible()) {
      out << "witness reproduces targets: "
          << (report["witness"]["reproduces_targets"].get<bool>() ? "yes" : "NO") << "\n";
    } else {
      out << "Farkas certificate y (rows in problem order):\n  " << join(report["certificate"]["y"])
          << "\n"
          << "y.b = " << report["certificate"]["y_dot_b"].get<std::string>()
          << ", certificate verified: "
          << (report["certificate"]["verified"].get<bool>() ? "yes" : "NO") << "\n";
    }
  }
  return as_expected ? kOk : kUnexpectedVerdict;
}

// --- contradiction ---------------------------------------------------------

int cmd_contradiction(const std::string& path, const CommonFlags& flags, std::ostream& out,
                      std::ostream& err) {
  const auto start = Clock::now();
  std::string bytes;
  const io::AnyModel model = load_model(path, &bytes);
  if (model.index() >= 2) {
    throw InputError("the contradiction argument needs a noncontextual response table");
  }
  if (model.index() == 1) {
    throw InputError("contradiction proofs need exact arithmetic; float-mode models are refused");
  }
  const auto& exact = std::get<0>(model);
  if (auto report = ontology::validate_model(exact); !report.ok()) {
    throw InputError("invalid model: " + report.summary());
  }
  Json report = base_report("contradiction", "exact", bytes);
  report["model_file"] = path;

  int code = kOk;
  try {
    const auto result = nogo::derive_contradiction(exact);
    if (const auto* proof = std::get_if<nogo::ContradictionProof>(&result)) {
      Json steps = Json::array();
      for (const auto& s : proof->steps) {
        steps.push_back(Json{{"outcome", s.outcome},
                             {"context", s.context.label()},
                             {"target", io::encode(s.target)},
                             {"weight", io::encode(s.weight)},
                             {"forces", "P(xi_" + std::to_string(s.outcome) + "|" +
                                            std::to_string(proof->lambda_star) + "," +
                                            std::to_string(proof->lambda_star) + ") = 0"}});
      }
      report["result"] = "proof";
      report["proof"] = {{"lambda_star", proof->lambda_star},
                         {"steps", std::move(steps)},
                         {"forced_sum", io::encode(proof->forced_sum)},
                         {"required_sum", io::encode(proof->required_sum)},
                         {"conclusion", proof->conclusion()},
                         {"lines", proof->lines()}};
    } else {
      report["result"] = "no_overlap";
      report["message"] = "rho1 and rho2 have disjoint supports; nothing to contradict";
      code = kArgumentInapplicable;
    }
  } catch (const nogo::PreconditionError& e) {
    report["result"] = "inapplicable";
    report["message"] = e.what();
    code = kArgumentInapplicable;
  }
  finish(report, flags, start);

  if (flags.json) {
    emit_json(out, report);
  } else if (report["result"] == "proof") {
    for (const auto& line : report["proof"]["lines"]) out << line.get<std::string>() << "\n";
  } else {
    (code == kOk ? out : err) << report["message"].get<std::string>() << "\n";
  }
  return code;
}

// --- refute ----------------------------------------------------------------

struct RefuteArgs {
  long long lambda_size = 0;
  std::optional<std::string> rho_file;
  std::optional<std::string> out_file;
};

int cmd_refute(const RefuteArgs& args, const CommonFlags& flags, std::ostream& out) {
  const auto start = Clock::now();
  check_lambda_size(args.lambda_size);
  const auto rho = load_distributions(args.rho_file, args.lambda_size);
  const auto q = targets();
  const Json inputs{{"lambda_size", args.lambda_size},
                    {"rho1", io::encode(rho.rho1)},
                    {"rho2", io::encode(rho.rho2)},
                    {"targets", io::encode_targets(q)}};
  Json report = base_report("refute", "exact", inputs.dump());

  const auto model = args.rho_file
                         ? contextual::build_weighted_interval_model(rho.rho1, rho.rho2, q)
                         : contextual::build_interval_model<Rational>(args.lambda_size, q);
  const Json model_json = io::encode(model);
  if (args.out_file) write_file(*args.out_file, model_json.dump(2) + "\n");
  const auto r = contextual::refutation_report(model);

  // Same distributions and targets against a state-independent response.
  const auto problem = nogo::build_feasibility(rho.rho1, rho.rho2, q);
  const auto outcome = nogo::solve_feasibility(problem);
  const bool cert_ok =
      !outcome.feasible() && nogo::verify_certificate(problem, outcome.as_infeasible().certificate);

  Json predictions = Json::object();
  for (const Context& c : kContexts) {
    predictions[c.label()] = io::encode(Vector<Rational>(r.predictions[c.index()]));
  }
  report["lambda_size"] = args.lambda_size;
  report["rho1"] = io::encode(rho.rho1);
  report["rho2"] = io::encode(rho.rho2);
  report["born_reproduced"] = r.born_reproduced;
  report["overlap_mass"] = io::encode(r.overlap_mass);
  report["eq2_violated"] = r.eq2_violated;
  report["collapse_affirmed"] = r.collapse_affirmed;
  report["verdict"] = r.verdict;
  report["predictions"] = std::move(predictions);
  report["targets"] = io::encode_targets_by_context(q);
  report["noncontextual"] = {{"verdict", outcome.feasible() ? "feasible" : "infeasible"},
                             {"certificate_verified", cert_ok}};
  report["model"] = model_json;
  if (args.out_file) report["model_file"] = *args.out_file;
  finish(report, flags, start);

  if (flags.json) {
    emit_json(out, report);
  } else {
    out << "lambda_size: " << args.lambda_size << "\n"
        << "born_reproduced: " << (r.born_reproduced ? "true" : "false") << "\n"
        << "overlap_mass: " << to_string(r.overlap_mass) << "\n"
        << "eq2_violated: " << (r.eq2_violated ? "true" : "false") << "\n"
        << "noncontextual model on the same inputs: "
        << report["noncontextual"]["verdict"].get<std::string>()
        << (cert_ok ? " (certificate verified)" : "") << "\n"
        << r.verdict << "\n";
  }
  if (r.collapse_affirmed) return kOk;
  return r.eq2_violated ? kUnexpectedVerdict : kArgumentInapplicable;
}

// --- check -----------------------------------------------------------------

int cmd_check(const std::string& path, const CommonFlags& flags, std::ostream& out) {
  const auto start = Clock::now();
  std::string bytes;
  const io::AnyModel model = load_model(path, &bytes);
  const auto validation = validate_any(model);
  Json report = base_report("check", mode_of(model), bytes);
  Json issues = Json::array();
  for (const auto& issue : validation.issues) {
    issues.push_back(Json{{"code", issue.code}, {"message", issue.message}});
  }
  report["model_file"] = path;
  report["kind"] = kind_of(model);
  report["valid"] = validation.ok();
  report["issues"] = std::move(issues);
  finish(report, flags, start);
  if (flags.json) {
    emit_json(out, report);
  } else {
    out << path << ": " << (validation.ok() ? "valid" : "INVALID") << " (" << kind_of(model)
        << ", " << mode_of(model) << ")\n";
    for (const auto& issue : validation.issues) {
      out << "  [" << issue.code << "] " << issue.message << "\n";
    }
  }
  return validation.ok() ? kOk : kInvalidInput;
}

// --- sample ----------------------------------------------------------------

struct SampleArgs {
  std::string model_file;
  std::string context = "11";
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

int cmd_sample(const SampleArgs& args, const CommonFlags& flags, std::ostream& out) {
  const auto start = Clock::now();
  Context context;
  try {
    context = Context::parse(args.context);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  std::string bytes;
  const io::AnyModel model = load_model(args.model_file, &bytes);
  if (auto report = validate_any(model); !report.ok()) {
    throw InputError("invalid model: " + report.summary());
  }

  ontology::OutcomeCounts counts;
  std::array<double, kOutcomes> probs{};
  Json predicted = Json::array();
  std::visit(
      [&](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        using T = typename std::decay_t<decltype(m.born_targets)>::Scalar;
        ontology::OutcomeVector<T> p;
        if constexpr (std::is_same_v<M, ontology::OntologicalModel<Rational>> ||
                      std::is_same_v<M, ontology::OntologicalModel<double>>) {
          p = ontology::predict(m, context);
          counts = ontology::sample(m, context, args.trials, args.seed);
        } else {
          p = contextual::predict_contextual(m, context);
          counts = contextual::sample_contextual(m, context, args.trials, args.seed);
        }
        probs = ontology::to_double_array(p);
        for (int i = 0; i < kOutcomes; ++i) {
          if constexpr (std::is_same_v<T, Rational>) {
            predicted.push_back(io::encode(p[i]));
          } else {
            predicted.push_back(six_digits(p[i]));
          }
        }
      },
      model);

  const double chi2 = ontology::chi_square(counts, probs);
  const double tv = ontology::total_variation(counts, probs);
  Json frequencies = Json::array();
  for (std::size_t i = 0; i < kOutcomes; ++i) {
    frequencies.push_back(counts.n == 0 ? 0.0
                                        : six_digits(static_cast<double>(counts.counts[i]) /
                                                     static_cast<double>(counts.n)));
  }

  const std::string digest = bytes + "|" + context.label() + "|" + std::to_string(args.trials) +
                             "|" + std::to_string(args.seed);
  Json report = base_report("sample", mode_of(model), digest);
  report["model_file"] = args.model_file;
  report["kind"] = kind_of(model);
  report["context"] = context.label();
  report["trials"] = counts.n;
  report["seed"] = counts.seed;
  report["generator"] = ontology::kGeneratorName;
  report["counts"] = counts.counts;
  report["predicted"] = std::move(predicted);
  report["frequencies"] = std::move(frequencies);
  report["chi_square"] = encode_stat(chi2);
  report["chi_square_threshold"] = ontology::kChiSquare3Dof999;
  report["chi_square_pass"] = chi2 < ontology::kChiSquare3Dof999;
  report["total_variation"] = encode_stat(tv);
  finish(report, flags, start);

  if (flags.json) {
    emit_json(out, report);
  } else {
    out << "context " << context.label() << ", " << counts.n << " trials, seed " << counts.seed
        << " (" << ontology::kGeneratorName << ")\n"
        << "counts:      " << join(report["counts"]) << "\n"
        << "predicted:   " << join(report["predicted"]) << "\n"
        << "frequencies: " << join(report["frequencies"]) << "\n"
        << "chi-square:  " << Arith<double>::format(chi2) << " (threshold "
        << ontology::kChiSquare3Dof999 << ", 3 dof, 0.999)\n"
        << "total variation: " << Arith<double>::format(tv) << "\n";
  }
  return kOk;
}

// --- verify ----------------------------------------------------------------

int cmd_verify(const std::string& problem_path, const std::string& cert_path,
               const CommonFlags& flags, std::ostream& out) {
  const auto start = Clock::now();
  const std::string problem_bytes = read_bytes(problem_path);
  const std::string cert_bytes = read_bytes(cert_path);
  nogo::FeasibilityProblem problem;
  RationalVector y;
  try {
    problem = io::decode_problem(parse_bytes(problem_bytes, problem_path));
    y = io::decode_certificate(parse_bytes(cert_bytes, cert_path));
  } catch (const io::ParseError& e) {
    throw InputError(e.what());
  }
  bool accepted = false;
  try {
    accepted = nogo::verify_certificate(problem, y);
  } catch (const DimensionError& e) {
    throw InputError(e.what());
  }
  Json report = base_report("verify", "exact", problem_bytes + "|" + cert_bytes);
  report["problem_file"] = problem_path;
  report["certificate_file"] = cert_path;
  report["accepted"] = accepted;
  finish(report, flags, start);
  if (flags.json) {
    emit_json(out, report);
  } else {
    out << "certificate " << (accepted ? "accepted" : "rejected")
        << ": {Ax = b, x >= 0} " << (accepted ? "has no solution" : "is not refuted") << "\n";
  }
  return accepted ? kOk : kCertificateRejected;
}

void add_common(CLI::App* sub, CommonFlags& flags) {
  sub->add_flag("--json", flags.json, "Print a machine-readable JSON report");
  sub->add_flag("--timings", flags.timings, "Include wall-clock timings in the report");
}

}  // namespace

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) {
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite hidden-variable models of two-qubit preparations", "pbr"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  CommonFlags flags;
  auto* basis = app.add_subcommand("basis", "Print the measurement basis and Born targets");
  add_common(basis, flags);

  NogoArgs nogo_args;
  auto* nogo = app.add_subcommand("nogo", "Decide LP feasibility of a noncontextual model");
  nogo->add_option("--lambda-size", nogo_args.lambda_size, "Number of hidden states L")
      ->required();
  nogo->add_option("--rho", nogo_args.rho_file, "JSON file with rho1 and rho2");
  nogo->add_option("--problem-out", nogo_args.problem_out, "Write the LP as JSON");
  add_common(nogo, flags);

  std::string model_file;
  auto* contra = app.add_subcommand("contradiction", "Derive the zero-forcing contradiction");
  contra->add_option("--model", model_file, "Model JSON file")->required();
  add_common(contra, flags);

  RefuteArgs refute_args;
  auto* refute = app.add_subcommand("refute", "Build and check a state-dependent interval model");
  refute->add_option("--lambda-size", refute_args.lambda_size, "Number of hidden states L")
      ->required();
  refute->add_option("--rho", refute_args.rho_file,
                     "Use these distributions instead of uniform ones (weighted cells)");
  refute->add_option("--out", refute_args.out_file, "Write the model JSON here");
  add_common(refute, flags);

  std::string check_file;
  auto* check = app.add_subcommand("check", "Validate a model file");
  check->add_option("--model", check_file, "Model JSON file")->required();
  add_common(check, flags);

  SampleArgs sample_args;
  auto* sample = app.add_subcommand("sample", "Monte Carlo outcome counts for one context");
  sample->add_option("--model", sample_args.model_file, "Model JSON file")->required();
  sample->add_option("--context", sample_args.context, "Preparation context: 11, 12, 21 or 22");
  sample->add_option("--trials,-n", sample_args.trials, "Number of trials")->required();
  sample->add_option("--seed", sample_args.seed, "Generator seed");
  add_common(sample, flags);

  std::string problem_file, cert_file;
  auto* verify = app.add_subcommand("verify", "Re-check a Farkas certificate against an LP");
  verify->add_option("--problem", problem_file, "Problem JSON (from nogo --problem-out)")
      ->required();
  verify->add_option("--certificate", cert_file, "Certificate JSON or nogo report")->required();
  add_common(verify, flags);

  std::vector<std::string> argv_store{"pbr"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (basis->parsed()) return cmd_basis(flags, out);
    if (nogo->parsed()) return cmd_nogo(nogo_args, flags, out);
    if (contra->parsed()) return cmd_contradiction(model_file, flags, out, err);
    if (refute->parsed()) return cmd_refute(refute_args, flags, out);
    if (check->parsed()) return cmd_check(check_file, flags, out);
    if (sample->parsed()) return cmd_sample(sample_args, flags, out);
    if (verify->parsed()) return cmd_verify(problem_file, cert_file, flags, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kUnexpectedVerdict;
  }
  return kInvalidInput;
}

}  // namespace pbr::cli
