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

// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Usage: pbr_acceptance <path-to-pbr-binary> <scratch-dir>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles/born_oracle.hpp"
#include "oracles/model_oracle.hpp"
#include "pbr/cli.hpp"
#include "pbr/contextual.hpp"
#include "pbr/hilbert.hpp"
#include "pbr/io.hpp"
#include "pbr/nogo.hpp"
#include "support/generators.hpp"

namespace {

using namespace pbr;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += "FAILED: " + what;
    }
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3fs", s);
  return buf;
}

nogo::ExactTargets targets() { return hilbert::pbr_targets(); }

bool reproduces(const nogo::ExactModel& m) {
  if (!ontology::validate_model(m).ok()) return false;
  for (const Context& c : kContexts) {
    if (ontology::predict(m, c) != m.born_targets.row(c.index()).transpose()) return false;
  }
  return true;
}

Outcome basis_correctness() {
  Outcome o;
  const auto start = Clock::now();
  const auto& basis = hilbert::pbr_basis();
  const auto gram = basis.gram();
  bool identity = true;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) identity = identity && gram(r, c) == hilbert::ComplexQ2(r == c ? 1 : 0);
  }
  bool anchors = true;
  for (int i = 0; i < 4; ++i) {
    anchors = anchors && hilbert::born(basis[i], hilbert::product_state(kContexts[i])) == 0;
  }
  const double elapsed = seconds_since(start);
  o.require(identity, "Gram matrix is not the exact identity");
  o.require(anchors, "an orthogonality anchor is nonzero");
  o.require(elapsed < 0.1, "runtime " + fmt_seconds(elapsed) + " >= 0.1s");
  o.note("gram exact identity, 4 anchors = 0, " + fmt_seconds(elapsed));
  return o;
}

Outcome born_completeness() {
  Outcome o;
  const auto q = targets();
  for (const Context& c : kContexts) {
    o.require(q.row(c.index()).sum() == 1, "context " + c.label() + " does not sum to 1");
  }
  // Independent route: complex-double inner products, snapped to the
  // nearest small-denominator rational.
  const auto oracle = testing::oracle_targets();
  bool match = true;
  std::string row;
  for (int i = 0; i < 4; ++i) {
    const Rational snapped = from_double(oracle[0][static_cast<std::size_t>(i)], 64);
    match = match && snapped == q(0, i);
    row += (i ? "," : "") + to_string(q(0, i));
  }
  const Rational expected[4] = {0, Rational(1, 4), Rational(1, 4), Rational(1, 2)};
  for (int i = 0; i < 4; ++i) match = match && q(0, i) == expected[i];
  o.require(match, "context (1,1) vector differs from the inner-product oracle");
  o.note("all 4 contexts sum to 1; (1,1) = (" + row + ")");
  return o;
}

Outcome theorem_instances() {
  Outcome o;
  const auto start = Clock::now();
  for (Eigen::Index size = 1; size <= 4; ++size) {
    const auto rho = ontology::uniform<Rational>(size);
    const auto p = nogo::build_feasibility(rho, rho, targets());
    const auto out = nogo::solve_feasibility(p);
    const std::string tag = "L=" + std::to_string(size);
    o.require(!out.feasible(), tag + " returned Feasible");
    if (!out.feasible()) {
      o.require(nogo::verify_certificate(p, out.as_infeasible().certificate),
                tag + " certificate rejected");
    }
  }
  const double elapsed = seconds_since(start);
  for (const char* size : {"1", "2", "3", "4"}) {
    std::ostringstream out, err;
    const int code = cli::run({"nogo", "--lambda-size", size, "--json"}, out, err);
    const auto j = io::Json::parse(out.str());
    o.require(code == cli::kOk && j["verdict"] == "infeasible" &&
                  j["certificate"]["verified"].get<bool>(),
              std::string("pbr nogo --lambda-size ") + size);
  }
  o.require(elapsed < 5.0, "runtime " + fmt_seconds(elapsed) + " >= 5s");
  o.note("L=1..4 infeasible, certificates verified, " + fmt_seconds(elapsed));
  return o;
}

Outcome feasible_control() {
  Outcome o;
  struct Case {
    std::string name;
    ontology::EpistemicState<Rational> rho1, rho2;
  };
  ontology::EpistemicState<Rational> left{RationalVector(4)}, right{RationalVector(4)};
  left.weights << Rational(1, 2), Rational(1, 2), 0, 0;
  right.weights << 0, 0, Rational(1, 2), Rational(1, 2);
  const std::vector<Case> cases = {
      {"point masses (0|1) L=2", ontology::point_mass<Rational>(2, 0),
       ontology::point_mass<Rational>(2, 1)},
      {"point masses (1|0) L=2", ontology::point_mass<Rational>(2, 1),
       ontology::point_mass<Rational>(2, 0)},
      {"point masses (0|3) L=4", ontology::point_mass<Rational>(4, 0),
       ontology::point_mass<Rational>(4, 3)},
      {"block-disjoint uniforms L=4", left, right},
  };
  for (const auto& c : cases) {
    const auto out = nogo::solve_feasibility(nogo::build_feasibility(c.rho1, c.rho2, targets()));
    o.require(out.feasible(), c.name + " returned Infeasible");
    if (out.feasible()) {
      nogo::ExactModel m{ontology::LambdaSpace{c.rho1.size()}, c.rho1, c.rho2,
                         out.as_feasible().witness, targets()};
      o.require(reproduces(m), c.name + " witness does not reproduce targets exactly");
    }
  }
  o.note(std::to_string(cases.size()) + " disjoint cases feasible, witnesses exact in all contexts");
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto start = Clock::now();
  testing::Gen gen(20260101);
  int overlapping = 0, disjoint = 0, agree = 0;
  auto check = [&](const ontology::EpistemicState<Rational>& r1,
                   const ontology::EpistemicState<Rational>& r2) {
    const auto oracle = testing::vertex_feasible(r1, r2, targets());
    const auto out = nogo::solve_feasibility(nogo::build_feasibility(r1, r2, targets()));
    o.require(oracle.audit_passed, "vertex oracle self-audit failed");
    const bool same = oracle.feasible == out.feasible();
    o.require(same, "verdict mismatch");
    agree += same;
    (ontology::support_overlap(r1, r2).disjoint ? disjoint : overlapping)++;
  };
  check(ontology::uniform<Rational>(1), ontology::uniform<Rational>(1));
  check(ontology::uniform<Rational>(2), ontology::uniform<Rational>(2));
  const int canonical_overlap = overlapping;
  while (overlapping < canonical_overlap + 10) {
    const Eigen::Index size = gen.integer(1, 2);
    const auto r1 = gen.distribution(size), r2 = gen.distribution(size);
    if (!ontology::support_overlap(r1, r2).disjoint) check(r1, r2);
  }
  while (disjoint < 10) {
    const int first = gen.integer(0, 1);
    check(ontology::point_mass<Rational>(2, first), ontology::point_mass<Rational>(2, 1 - first));
  }
  const double elapsed = seconds_since(start);
  o.require(elapsed < 60.0, "runtime " + fmt_seconds(elapsed) + " >= 60s");
  o.note(std::to_string(agree) + "/" + std::to_string(overlapping + disjoint) +
         " verdicts agree (" + std::to_string(overlapping) + " overlapping incl. canonical, " +
         std::to_string(disjoint) + " disjoint), " + fmt_seconds(elapsed));
  return o;
}

Outcome contradiction_proof() {
  Outcome o;
  const auto rho = ontology::uniform<Rational>(2);
  nogo::ExactModel m{ontology::LambdaSpace{2}, rho, rho,
                     ontology::ResponseTable<Rational>::constant(2, targets().row(0).transpose()),
                     targets()};
  const auto result = nogo::derive_contradiction(m);
  const auto* proof = std::get_if<nogo::ContradictionProof>(&result);
  o.require(proof != nullptr, "no proof on uniform L=2");
  if (proof) {
    std::set<std::string> contexts;
    bool zeros = true;
    for (const auto& s : proof->steps) {
      contexts.insert(s.context.label());
      zeros = zeros && s.target == 0 && s.weight > 0;
    }
    o.require(contexts == std::set<std::string>{"11", "12", "21", "22"},
              "forcing steps do not cite the four zero-target contexts");
    o.require(zeros, "a forcing step lacks zero target or positive weight");
    o.require(proof->forced_sum == 0 && proof->required_sum == 1, "conclusion is not 0 != 1");
    o.note("lambda*=" + std::to_string(proof->lambda_star) + ", steps 11/12/21/22, " +
           proof->conclusion());
  }
  nogo::ExactModel d = m;
  d.rho1 = ontology::point_mass<Rational>(2, 0);
  d.rho2 = ontology::point_mass<Rational>(2, 1);
  o.require(std::holds_alternative<nogo::NoOverlap>(nogo::derive_contradiction(d)),
            "disjoint model did not return NoOverlap");
  return o;
}

Outcome collapse_demonstration() {
  Outcome o;
  for (Eigen::Index size : {1, 2, 3, 5}) {
    const std::string tag = "L=" + std::to_string(size);
    const auto m = contextual::build_interval_model<Rational>(size, targets());
    const auto r = contextual::refutation_report(m);
    o.require(r.overlap_mass == 1, tag + " overlap_mass != 1");
    o.require(r.born_reproduced, tag + " Born targets not reproduced exactly");
    o.require(r.collapse_affirmed, tag + " collapse not affirmed");
    const auto p = nogo::build_feasibility(m.rho1, m.rho2, m.born_targets);
    const auto out = nogo::solve_feasibility(p);
    o.require(!out.feasible() && nogo::verify_certificate(p, out.as_infeasible().certificate),
              tag + " noncontextual LP on the same inputs is not certified infeasible");
  }
  o.note("L=1,2,3,5: overlap 1, exact reproduction, collapse affirmed; noncontextual LP infeasible");
  return o;
}

Outcome statistical_consistency() {
  Outcome o;
  const auto m = contextual::build_interval_model<Rational>(2, targets());
  std::string stats;
  for (const Context& c : kContexts) {
    const auto counts = contextual::sample_contextual(m, c, 100000, 42);
    const auto again = contextual::sample_contextual(m, c, 100000, 42);
    const double chi2 = ontology::chi_square(
        counts, ontology::to_double_array(contextual::predict_contextual(m, c)));
    o.require(chi2 < 16.27, "context " + c.label() + " chi-square " + std::to_string(chi2));
    o.require(counts.counts == again.counts, "context " + c.label() + " counts not reproducible");
    stats += (stats.empty() ? "" : ", ") + c.label() + ":" + Arith<double>::format(chi2);
  }
  // Byte-level reproducibility of the report.
  const std::string path = std::string(PBR_MODELS_DIR) + "/interval_l2.json";
  std::ostringstream a, b, e;
  cli::run({"sample", "--model", path, "--context", "12", "--trials", "100000", "--seed", "42",
            "--json"},
           a, e);
  cli::run({"sample", "--model", path, "--context", "12", "--trials", "100000", "--seed", "42",
            "--json"},
           b, e);
  o.require(!a.str().empty() && a.str() == b.str(), "sample reports differ between runs");
  o.note("chi-square " + stats + " (< 16.27), reruns identical");
  return o;
}

std::string run_binary(const std::string& binary, const std::string& args, int* status) {
  const std::string cmd = "\"" + binary + "\" " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    *status = -1;
    return {};
  }
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  *status = pclose(pipe);
  return out;
}

Outcome cli_golden(const std::string& binary, const std::string& scratch) {
  Outcome o;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"basis", "basis --json"},
      {"nogo", "nogo --lambda-size 2 --json"},
      {"refute", "refute --lambda-size 2 --json"}};
  for (const auto& [name, args] : commands) {
    int s1 = 0, s2 = 0;
    const std::string first = run_binary(binary, args, &s1);
    const std::string second = run_binary(binary, args, &s2);
    o.require(s1 == 0 && s2 == 0, name + " exited nonzero");
    o.require(!first.empty() && first == second, name + " output differs between runs");
    std::ofstream(scratch + "/golden_" + name + ".json", std::ios::binary) << first;
    try {
      const auto j = io::Json::parse(first);
      o.require(j.dump(2) + "\n" == first, name + " does not re-serialize byte-identically");
      if (name == "basis") {
        for (const auto& [label, row] : j["targets"].items()) {
          for (const auto& v : row) io::decode_rational(v);
        }
        for (const auto& e : j["basis"]) io::decode_state(e["amplitudes"]);
      } else if (name == "nogo") {
        const auto rho = ontology::uniform<Rational>(2);
        const auto problem = nogo::build_feasibility(rho, rho, targets());
        o.require(nogo::verify_certificate(problem, io::decode_certificate(j)),
                  "nogo certificate fails to re-verify from JSON");
      } else {
        const auto model = io::decode_model(j["model"]);
        o.require(io::encode(model) == j["model"], "refute model does not round-trip");
        const auto& cm = std::get<contextual::ContextualModel<Rational>>(model);
        o.require(contextual::refutation_report(cm).collapse_affirmed,
                  "decoded refute model no longer affirms collapse");
      }
    } catch (const std::exception& e) {
      o.require(false, name + " schema round-trip threw: " + e.what());
    }
  }
  o.note("basis/nogo/refute --json byte-stable over two runs and schema round-trips");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: pbr_acceptance <pbr-binary> <scratch-dir>\n";
    return 2;
  }
  const std::string binary = argv[1];
  const std::string scratch = argv[2];

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"basis correctness", basis_correctness},
      {"Born completeness", born_completeness},
      {"theorem instances", theorem_instances},
      {"feasible control", feasible_control},
      {"oracle equivalence", oracle_equivalence},
      {"contradiction proof", contradiction_proof},
      {"collapse demonstration", collapse_demonstration},
      {"statistical consistency", statistical_consistency},
      {"CLI golden files", [&] { return cli_golden(binary, scratch); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": "
              << o.detail << "\n";
  }
  std::cout << (failures ? "acceptance FAILED (" + std::to_string(failures) + ")" : "acceptance passed")
            << "\n";
  return failures ? 1 : 0;
}
