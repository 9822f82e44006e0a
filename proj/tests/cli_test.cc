// Copyright 2026 The Choquet-Jensen Authors. All Rights Reserved.
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

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "choquet/io.h"
#include "test_util.h"

namespace choquet::cli {
namespace {

using ::choquet::testing::DataPath;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result RunCli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path TempDir(const std::string& name) {
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / ("choquet_cli_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

TEST(CliTest, IntegrateWorkedExample) {
  const Result r = RunCli({"integrate", "--mu", DataPath("m.json"), "--nu", DataPath("n.json"),
                           "--x", "[4,-2]"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const std::vector<std::string> lines = Lines(r.out);
  ASSERT_FALSE(lines.empty());
  EXPECT_NEAR(std::stod(lines[0]), -0.2, 1e-15);
}

TEST(CliTest, IntegrateModesAndOracle) {
  const Result choquet =
      RunCli({"integrate", "--mu", DataPath("m.json"), "--x", "[1,3]", "--mode", "choquet"});
  ASSERT_EQ(choquet.code, kExitOk) << choquet.err;
  EXPECT_EQ(std::stod(Lines(choquet.out)[0]), 2.0);

  const Result oracle = RunCli({"integrate", "--mu", DataPath("m.json"), "--nu",
                                DataPath("n.json"), "--x", "[4,-2]", "--oracle-step", "1e-5"});
  ASSERT_EQ(oracle.code, kExitOk) << oracle.err;
  const std::vector<std::string> lines = Lines(oracle.out);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[1].rfind("oracle ", 0), 0u);
}

TEST(CliTest, IntegrateGroundSetMismatch) {
  const Result r = RunCli({"integrate", "--mu", DataPath("m.json"), "--x", "[1,2,3]"});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("GroundSetMismatch"), std::string::npos) << r.err;
  EXPECT_EQ(Lines(r.err).size(), 1u);
}

TEST(CliTest, CheckCapacityRejectsNonMonotoneTable) {
  const Result r = RunCli({"check-capacity", DataPath("bad.json")});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("NotMonotone"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("mu({1}) = 0.6 > mu({1,2}) = 0.5"), std::string::npos) << r.err;
  EXPECT_EQ(Lines(r.err).size(), 1u);
}

TEST(CliTest, CheckCapacityRoundTrip) {
  const std::filesystem::path dir = TempDir("roundtrip");
  const std::string first = (dir / "first.json").string();
  const std::string second = (dir / "second.json").string();
  ASSERT_EQ(RunCli({"check-capacity", DataPath("pl.json"), "--write", first}).code, kExitOk);
  ASSERT_EQ(RunCli({"check-capacity", first, "--write", second}).code, kExitOk);
  EXPECT_EQ(ReadFile(first), ReadFile(second));
  EXPECT_TRUE(LoadCapacity(first) == LoadCapacity(DataPath("pl.json")));

  const std::string dual = (dir / "dual.json").string();
  ASSERT_EQ(RunCli({"check-capacity", DataPath("m.json"), "--dual", "--write", dual}).code,
            kExitOk);
  EXPECT_TRUE(LoadCapacity(dual) == LoadCapacity(DataPath("n.json")));
}

TEST(CliTest, PremiumScenario) {
  const Result r = RunCli({"premium", DataPath("scenario_linear.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const std::vector<std::string> lines = Lines(r.out);
  ASSERT_GE(lines.size(), 3u);
  EXPECT_NEAR(std::stod(lines[0].substr(lines[0].find(' '))), 0.2, 1e-15);

  const Result e = RunCli({"premium", DataPath("scenario_exp.json")});
  ASSERT_EQ(e.code, kExitOk) << e.err;
  const std::string line = Lines(e.out)[0];
  EXPECT_NEAR(std::stod(line.substr(line.find(' '))), 0.43378083048302719, 1e-14);
}

TEST(CliTest, CompareAgents) {
  const Result r = RunCli({"compare", "--u", "exp:2", "--v", "exp:1", "--mu", DataPath("n.json"),
                           "--nu", DataPath("m.json"), "--samples", "200"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("agree true"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("premium_order_holds true"), std::string::npos) << r.out;
}

TEST(CliTest, FiguresKahnemanTversky) {
  const std::filesystem::path dir = TempDir("figures");
  const Result r = RunCli({"figures", "--family", "kt", "--g", "0.61", "--h", "0.69",
                           "--out-dir", dir.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const std::vector<std::string> csv = Lines(ReadFile(dir / "figure1.csv"));
  ASSERT_EQ(csv.size(), 1002u);
  EXPECT_EQ(csv[0], "p,g,h_bar");
  EXPECT_EQ(csv[1], "0,0,0");
  EXPECT_NE(r.out.find("rows=1001"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("dominance="), std::string::npos) << r.out;
}

TEST(CliTest, FiguresAreByteIdentical) {
  const std::filesystem::path a = TempDir("fig_a");
  const std::filesystem::path b = TempDir("fig_b");
  ASSERT_EQ(RunCli({"figures", "--family", "all", "--out-dir", a.string()}).code, kExitOk);
  ASSERT_EQ(RunCli({"figures", "--family", "all", "--out-dir", b.string()}).code, kExitOk);
  for (const char* name : {"figure1.csv", "figure2.csv", "figure3.csv"}) {
    EXPECT_EQ(ReadFile(a / name), ReadFile(b / name)) << name;
  }
}

TEST(CliTest, VerifySmallSweep) {
  const std::filesystem::path dir = TempDir("verify");
  const std::string report = (dir / "report.json").string();
  const Result r = RunCli({"verify", "--n", "2", "--levels", "0,1", "--seed", "42", "--out",
                           report, "--expect-clean"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  const std::string first = ReadFile(report);
  ASSERT_EQ(RunCli({"verify", "--n", "2", "--levels", "0,1", "--seed", "42", "--out", report})
                .code,
            kExitOk);
  EXPECT_EQ(ReadFile(report), first);
  EXPECT_NE(first.find("\"swept_pairs\": 16"), std::string::npos);
}

TEST(CliTest, RejectsUnknownFlagsAndSubcommands) {
  EXPECT_EQ(RunCli({"integrate", "--mu", DataPath("m.json"), "--x", "[1,2]", "--bogus"}).code,
            kExitError);
  EXPECT_EQ(RunCli({"frobnicate"}).code, kExitError);
  EXPECT_EQ(RunCli({}).code, kExitError);
  EXPECT_EQ(RunCli({"verify", "--n", "4"}).code, kExitError);
  EXPECT_EQ(RunCli({"verify", "--theorem", "7"}).code, kExitError);
}

TEST(CliTest, HelpDocumentsSchemas) {
  const Result r = RunCli({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("mu_file"), std::string::npos);
  EXPECT_NE(r.out.find("check-capacity"), std::string::npos);
}

TEST(CliTest, MalformedJsonIsOneLine) {
  const std::filesystem::path dir = TempDir("malformed");
  std::ofstream(dir / "broken.json") << "{\"n\": 2, \"table\": [0, 0.3";
  const Result r = RunCli({"check-capacity", (dir / "broken.json").string()});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("ParseError"), std::string::npos) << r.err;
  EXPECT_EQ(Lines(r.err).size(), 1u) << r.err;
}

}  // namespace
}  // namespace choquet::cli
