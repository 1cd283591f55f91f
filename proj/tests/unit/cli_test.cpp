// Copyright 2026 The Complementarity Authors
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

#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "test_support.hpp"

namespace complementarity::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "complementarity");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(CliTest, SimulateReportsAkViolation) {
  const Result r = invoke({"simulate", "--gamma", "22.5", "--rh", "0.1244", "--rv", "0.4645",
                           "--theta", "90", "--phi", "180", "--estimator", "both"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto reports = nlohmann::ordered_json::parse(r.out);
  ASSERT_EQ(reports.size(), 2u);
  for (const auto& rep : reports) {
    EXPECT_FALSE(rep["flags"]["ak_satisfied"].get<bool>());
    EXPECT_TRUE(rep["flags"]["hall_satisfied"].get<bool>());
    EXPECT_TRUE(rep["flags"]["ozawa_satisfied"].get<bool>());
    EXPECT_TRUE(rep["flags"]["new_satisfied"].get<bool>());
  }
  EXPECT_EQ(reports[1]["scenario"]["estimator"], "optimal");
}

TEST(CliTest, SweepCsv) {
  const Result r = invoke({"sweep", "--gamma", "22.5", "--phi", "135,157.5,180,202.5,225",
                           "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 6);
  const Result range = invoke({"sweep", "--gamma", "22.5", "--phi", "135:225:22.5",
                               "--format", "csv"});
  EXPECT_EQ(range.out, r.out);
}

TEST(CliTest, AnalyzeMeasuredData) {
  const Result r = invoke({"analyze", "--dist-file", test::data_path("measured_phi180.csv"),
                           "--state-file", test::data_path("tomographic_state.csv"),
                           "--c-half", "0.711", "--delta-x", "0.998", "--delta-y", "0.9998",
                           "--estimator", "optimal"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rep = nlohmann::ordered_json::parse(r.out);
  EXPECT_FALSE(rep["flags"]["ak_satisfied"].get<bool>());
  EXPECT_TRUE(rep["flags"]["new_satisfied"].get<bool>());
  EXPECT_EQ(rep["bound"].get<double>(), 0.711);
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"simulate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"simulate", "--gamma", "10", "--state-file", "x.csv"}).code, kExitUsage);
  EXPECT_EQ(invoke({"simulate", "--gamma", "10", "--phi", "1,2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"simulate", "--gamma", "abc"}).code, kExitUsage);
  EXPECT_EQ(invoke({"simulate", "--gamma", "10", "--estimator", "best"}).code, kExitUsage);
  EXPECT_EQ(invoke({"simulate", "--gamma", "10", "--rh", "1.5"}).code, kExitUsage);
  EXPECT_EQ(invoke({"simulate", "--gamma", "10", "--rh", "0.3", "--rv", "0.3"}).code,
            kExitData);
  EXPECT_EQ(invoke({"sweep", "--gamma", "10"}).code, kExitUsage);
  EXPECT_EQ(invoke({"sweep", "--gamma", "10", "--phi", "5:1:1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"analyze"}).code, kExitUsage);
  EXPECT_EQ(invoke({"analyze", "--dist-file", test::data_path("measured_phi180.csv"),
                    "--estimator", "optimal"})
                .code,
            kExitUsage);
  EXPECT_EQ(invoke({"analyze", "--dist-file", test::data_path("measured_phi135.csv")}).code,
            kExitData);
  EXPECT_EQ(invoke({"analyze", "--dist-file", "/nonexistent/file.csv"}).code, kExitData);
  EXPECT_EQ(invoke({"simulate", "--state-file", test::data_path("measured_phi180.csv")}).code,
            kExitData);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(CliTest, VerifyIsDeterministic) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto a = dir / "complementarity_verify_a.json";
  const auto b = dir / "complementarity_verify_b.json";
  ASSERT_EQ(invoke({"verify", "--trials", "150", "--seed", "42", "--out", a.string()}).code,
            kExitOk);
  ASSERT_EQ(invoke({"verify", "--trials", "150", "--seed", "42", "--out", b.string()}).code,
            kExitOk);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_FALSE(slurp(a).empty());
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST(CliTest, SimulateFromStateFile) {
  const Result r = invoke({"simulate", "--state-file", test::data_path("tomographic_state.csv"),
                           "--estimator", "optimal", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("state_source", 0), 0u);
  EXPECT_NE(r.out.find("\nfile,,0.1244,0.4645,90,180,optimal,"), std::string::npos) << r.out;
}

TEST(PhiListTest, Parsing) {
  EXPECT_EQ(parse_phi_list("180"), std::vector<double>{180.0});
  EXPECT_EQ(parse_phi_list("1, 2.5,3"), (std::vector<double>{1.0, 2.5, 3.0}));
  EXPECT_EQ(parse_phi_list("0:1:0.25"), (std::vector<double>{0, 0.25, 0.5, 0.75, 1.0}));
  EXPECT_EQ(parse_phi_list("0:0.3:0.1").size(), 4u);
  EXPECT_THROW(parse_phi_list("1,,2"), UsageError);
  EXPECT_THROW(parse_phi_list("0:1"), UsageError);
  EXPECT_THROW(parse_phi_list("0:1:0"), UsageError);
  EXPECT_THROW(parse_phi_list("nan"), UsageError);
}

TEST(ValidateTest, Conflicts) {
  RunConfig c;
  c.mode = Mode::verify;
  EXPECT_NO_THROW(validate(c));
  c.gamma_deg = 10;
  EXPECT_THROW(validate(c), UsageError);
  c = RunConfig{};
  c.mode = Mode::simulate;
  c.gamma_deg = 10;
  c.overrides.c_half = 0.5;
  EXPECT_THROW(validate(c), UsageError);
  c.overrides.c_half.reset();
  c.tolerance_profile = "fuzzy";
  EXPECT_THROW(validate(c), std::exception);
}

}  // namespace
}  // namespace complementarity::cli
