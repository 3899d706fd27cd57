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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "pbr/io.hpp"

namespace pbr::cli {
namespace {

using io::Json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result pbr(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string model(const std::string& name) { return std::string(PBR_MODELS_DIR) + "/" + name; }

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("pbr_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(file(name)) << text;
    return file(name);
  }

 private:
  std::filesystem::path path_;
};

TEST(CliBasis, JsonCarriesTargetsAndIdentityGram) {
  const auto r = pbr({"basis", "--json"});
  ASSERT_EQ(r.code, kOk);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["targets"]["11"][0], "0");
  EXPECT_EQ(j["targets"]["11"], (Json{"0", "1/4", "1/4", "1/2"}));
  EXPECT_TRUE(j["gram_is_identity"].get<bool>());
  EXPECT_EQ(j["gram"][0], (Json{"1", "0", "0", "0"}));
  for (const auto& a : j["anchors"]) EXPECT_EQ(a["probability"], "0");
  EXPECT_EQ(j["tool_version"], kToolVersion);
  EXPECT_EQ(j.dump(2) + "\n", r.out);
}

TEST(CliBasis, TextOutput) {
  const auto r = pbr({"basis"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("exact identity"), std::string::npos);
  EXPECT_NE(r.out.find("11: (0, 1/4, 1/4, 1/2)"), std::string::npos);
}

TEST(CliNogo, UniformIsInfeasibleWithVerifiedCertificate) {
  const auto r = pbr({"nogo", "--lambda-size", "2", "--json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["verdict"], "infeasible");
  EXPECT_TRUE(j["certificate"]["verified"].get<bool>());
  EXPECT_EQ(j["certificate"]["y"].size(), 20u);
  EXPECT_FALSE(j.contains("timings"));
}

TEST(CliNogo, DisjointRhoFileIsFeasible) {
  const auto r = pbr({"nogo", "--lambda-size", "2", "--rho", model("distributions/disjoint_l2.json"),
                      "--json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["verdict"], "feasible");
  EXPECT_TRUE(j["witness"]["reproduces_targets"].get<bool>());
}

TEST(CliNogo, InputErrors) {
  const auto zero = pbr({"nogo", "--lambda-size", "0"});
  EXPECT_EQ(zero.code, kInvalidInput);
  EXPECT_NE(zero.err.find("lambda_size must be ≥ 1"), std::string::npos);
  EXPECT_EQ(pbr({"nogo", "--lambda-size", "3", "--rho", model("distributions/disjoint_l2.json")}).code,
            kInvalidInput);
  TempDir tmp;
  EXPECT_EQ(pbr({"nogo", "--lambda-size", "2", "--rho", tmp.write("bad.json", "{not json")}).code,
            kInvalidInput);
  EXPECT_EQ(pbr({"nogo", "--lambda-size", "2", "--rho",
                 tmp.write("neg.json", R"({"rho1":["2","-1"],"rho2":["1/2","1/2"]})")})
                .code,
            kInvalidInput);
  EXPECT_EQ(pbr({"nogo"}).code, kInvalidInput);
  EXPECT_EQ(pbr({}).code, kInvalidInput);
  EXPECT_EQ(pbr({"--help"}).code, kOk);
}

TEST(CliNogo, TimingsAreOptIn) {
  const Json j = Json::parse(pbr({"nogo", "--lambda-size", "1", "--json", "--timings"}).out);
  EXPECT_TRUE(j.contains("timings"));
}

TEST(CliVerify, ThirdPartyRecheckOfCertificate) {
  TempDir tmp;
  const auto report = pbr({"nogo", "--lambda-size", "3", "--json", "--problem-out",
                           tmp.file("problem.json")});
  ASSERT_EQ(report.code, kOk);
  const auto cert = tmp.write("report.json", report.out);
  EXPECT_EQ(pbr({"verify", "--problem", tmp.file("problem.json"), "--certificate", cert}).code, kOk);
  const auto zero = tmp.write("zero.json", Json{{"y", Json(std::vector<std::string>(25, "0"))}}.dump());
  EXPECT_EQ(pbr({"verify", "--problem", tmp.file("problem.json"), "--certificate", zero}).code,
            kCertificateRejected);
  const auto short_y = tmp.write("short.json", R"({"y":["1"]})");
  EXPECT_EQ(pbr({"verify", "--problem", tmp.file("problem.json"), "--certificate", short_y}).code,
            kInvalidInput);
}

TEST(CliContradiction, ProofNoOverlapAndInapplicable) {
  const auto proof = pbr({"contradiction", "--model", model("uniform_overlap_l2.json"), "--json"});
  ASSERT_EQ(proof.code, kOk) << proof.err;
  const Json j = Json::parse(proof.out);
  EXPECT_EQ(j["result"], "proof");
  EXPECT_EQ(j["proof"]["lambda_star"], 0);
  EXPECT_EQ(j["proof"]["steps"].size(), 4u);
  EXPECT_EQ(j["proof"]["steps"][2]["context"], "21");
  EXPECT_EQ(j["proof"]["forced_sum"], "0");

  EXPECT_EQ(pbr({"contradiction", "--model", model("disjoint_witness_l2.json")}).code,
            kArgumentInapplicable);
  const auto nozero = pbr({"contradiction", "--model", model("no_zero_targets_l2.json")});
  EXPECT_EQ(nozero.code, kArgumentInapplicable);
  EXPECT_NE(nozero.err.find("xi_1"), std::string::npos);
}

TEST(CliContradiction, RejectsContextualFloatAndInvalidModels) {
  EXPECT_EQ(pbr({"contradiction", "--model", model("interval_l2.json")}).code, kInvalidInput);
  TempDir tmp;
  Json m = io::read_json_file(model("uniform_overlap_l2.json"));
  m["mode"] = "float";
  EXPECT_EQ(pbr({"contradiction", "--model", tmp.write("f.json", m.dump())}).code, kInvalidInput);
  m = io::read_json_file(model("uniform_overlap_l2.json"));
  m["rho1"] = {"1", "1"};
  EXPECT_EQ(pbr({"contradiction", "--model", tmp.write("bad.json", m.dump())}).code, kInvalidInput);
  EXPECT_EQ(pbr({"contradiction", "--model", tmp.file("missing.json")}).code, kInvalidInput);
}

TEST(CliRefute, AffirmsForSmallSizes) {
  TempDir tmp;
  for (const char* size : {"1", "2", "3"}) {
    const auto r = pbr({"refute", "--lambda-size", size, "--json", "--out", tmp.file("m.json")});
    ASSERT_EQ(r.code, kOk) << size << r.err;
    const Json j = Json::parse(r.out);
    EXPECT_TRUE(j["born_reproduced"].get<bool>());
    EXPECT_EQ(j["overlap_mass"], "1");
    EXPECT_TRUE(j["collapse_affirmed"].get<bool>());
    EXPECT_EQ(j["noncontextual"]["verdict"], "infeasible");
    EXPECT_EQ(pbr({"check", "--model", tmp.file("m.json")}).code, kOk);
    EXPECT_EQ(io::read_json_file(tmp.file("m.json")), j["model"]);
  }
}

TEST(CliRefute, WeightedAndDisjointDistributions) {
  EXPECT_EQ(pbr({"refute", "--lambda-size", "3", "--rho", model("distributions/overlap_l3.json")}).code,
            kOk);
  EXPECT_EQ(pbr({"refute", "--lambda-size", "2", "--rho", model("distributions/disjoint_l2.json")}).code,
            kArgumentInapplicable);
}

TEST(CliCheck, ValidAndInvalidModels) {
  for (const char* name : {"interval_l1.json", "interval_l2.json", "interval_l3_float.json",
                           "disjoint_witness_l2.json", "uniform_overlap_l2.json"}) {
    EXPECT_EQ(pbr({"check", "--model", model(name)}).code, kOk) << name;
  }
  TempDir tmp;
  Json m = io::read_json_file(model("interval_l2.json"));
  m["response"]["p"]["12"][0][0][1] = "1/2";
  const auto r = pbr({"check", "--model", tmp.write("bad.json", m.dump()), "--json"});
  EXPECT_EQ(r.code, kInvalidInput);
  const Json j = Json::parse(r.out);
  EXPECT_FALSE(j["valid"].get<bool>());
  EXPECT_EQ(j["issues"][0]["code"], "response.12.normalization");
}

TEST(CliSample, ZeroTrialsAndFrozenSeedChiSquare) {
  const auto zero = pbr({"sample", "--model", model("interval_l2.json"), "--context", "12",
                         "--trials", "0", "--seed", "42", "--json"});
  ASSERT_EQ(zero.code, kOk) << zero.err;
  EXPECT_EQ(Json::parse(zero.out)["counts"], (Json{0, 0, 0, 0}));

  const auto big = pbr({"sample", "--model", model("interval_l2.json"), "--context", "12",
                        "--trials", "100000", "--seed", "42", "--json"});
  ASSERT_EQ(big.code, kOk);
  const Json j = Json::parse(big.out);
  EXPECT_LT(j["chi_square"].get<double>(), 16.27);
  EXPECT_TRUE(j["chi_square_pass"].get<bool>());
  EXPECT_EQ(j["predicted"], (Json{"1/4", "0", "1/2", "1/4"}));
  EXPECT_EQ(j.dump(2) + "\n", big.out);
  EXPECT_EQ(big.out, pbr({"sample", "--model", model("interval_l2.json"), "--context", "12",
                          "--trials", "100000", "--seed", "42", "--json"})
                         .out);
}

TEST(CliSample, FloatModelAndBadContext) {
  EXPECT_EQ(pbr({"sample", "--model", model("interval_l3_float.json"), "--trials", "1000"}).code,
            kOk);
  EXPECT_EQ(pbr({"sample", "--model", model("interval_l2.json"), "--context", "13", "--trials",
                 "10"})
                .code,
            kInvalidInput);
}

TEST(CliJson, ReportsRoundTripByteForByte) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"basis", "--json"},
           {"nogo", "--lambda-size", "2", "--json"},
           {"refute", "--lambda-size", "2", "--json"},
           {"contradiction", "--model", model("uniform_overlap_l2.json"), "--json"},
           {"check", "--model", model("interval_l2.json"), "--json"}}) {
    const auto first = pbr(args);
    EXPECT_EQ(Json::parse(first.out).dump(2) + "\n", first.out) << args[0];
    EXPECT_EQ(first.out, pbr(args).out) << args[0];
  }
}

TEST(Sha256, KnownVector) {
  EXPECT_EQ(sha256_hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

}  // namespace
}  // namespace pbr::cli
