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

#include "choquet/io.h"

#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "choquet/error.h"
#include "choquet/sampling.h"
#include "test_util.h"

namespace choquet {
namespace {

using ::choquet::testing::DataPath;
using ::choquet::testing::WorkedMu;
using json = nlohmann::json;

TEST(CapacityJsonTest, LoadsWorkedTables) {
  EXPECT_TRUE(LoadCapacity(DataPath("m.json")) == WorkedMu());
  EXPECT_TRUE(LoadCapacity(DataPath("n.json")) == Dual(WorkedMu()));
}

TEST(CapacityJsonTest, NonMonotoneFileNamesPathAndPair) {
  try {
    LoadCapacity(DataPath("bad.json"));
    FAIL() << "expected NotMonotone";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotMonotone);
    const std::string what = e.what();
    EXPECT_NE(what.find("bad.json"), std::string::npos) << what;
    EXPECT_NE(what.find("{1}"), std::string::npos) << what;
    EXPECT_NE(what.find("{1,2}"), std::string::npos) << what;
    EXPECT_EQ(what.find("NotMonotone", 1), std::string::npos) << what;
  }
}

TEST(CapacityJsonTest, KeyForms) {
  const Capacity expected = WorkedMu();
  EXPECT_TRUE(CapacityFromJson(json::parse(R"({"n":2,"table":[0,0.3,0.5,1]})")) == expected);
  EXPECT_TRUE(CapacityFromJson(json::parse(
                  R"({"n":2,"table":{"0":0,"1":0.3,"2":0.5,"3":1}})")) == expected);
  EXPECT_TRUE(CapacityFromJson(json::parse(
                  R"({"labels":["a","b"],"table":{"{}":0,"{a}":0.3,"{b}":0.5,"{a,b}":1}})"))
                  .table()[1] == 0.3);
}

TEST(CapacityJsonTest, Constructs) {
  const Capacity pl = LoadCapacity(DataPath("pl.json"));
  EXPECT_EQ(pl(0b01), 1.0);
  EXPECT_EQ(pl(0b10), 0.5);
  const Capacity kt = CapacityFromJson(json::parse(
      R"({"construct":{"kind":"distortion","weights":[0.5,0.5],"g":"kt:0.61"}})"));
  EXPECT_NEAR(kt(0b01), 0.42063935433575615, 1e-15);
  const Capacity u = CapacityFromJson(
      json::parse(R"({"n":3,"construct":{"kind":"unanimity","coalition":[1,3]}})"));
  EXPECT_EQ(u(0b101), 1.0);
  EXPECT_EQ(u(0b011), 0.0);
  const Capacity d = CapacityFromJson(json::parse(
      R"({"construct":{"kind":"dual","of":{"n":2,"table":[0,0.3,0.5,1]}}})"));
  EXPECT_TRUE(d == Dual(WorkedMu()));
  const Capacity cr =
      CapacityFromJson(json::parse(R"({"construct":{"kind":"credibility","v":[1,1]}})"));
  EXPECT_EQ(cr(0b01), 0.5);
}

TEST(CapacityJsonTest, ParseErrorsNameTheField) {
  auto code_of = [](const char* text) {
    try {
      CapacityFromJson(json::parse(text));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  EXPECT_EQ(code_of(R"({"n":2})"), ErrorCode::kParseError);
  EXPECT_EQ(code_of(R"({"n":2,"table":{"{}":0,"{1}":0.3,"{1,2}":1}})"), ErrorCode::kParseError);
  EXPECT_EQ(code_of(R"({"n":2,"table":{"{}":0,"{3}":0.3,"{2}":0.5,"{1,2}":1}})"),
            ErrorCode::kParseError);
  EXPECT_EQ(code_of(R"({"construct":{"kind":"magic"}})"), ErrorCode::kParseError);
  EXPECT_EQ(code_of(R"({"n":2,"table":[0,0.3,0.5,1,1]})"), ErrorCode::kParseError);
  EXPECT_THROWS_CODE(ReadJsonFile(DataPath("missing.json")), ErrorCode::kParseError);
}

TEST(CapacityJsonTest, RoundTripIsEntrywiseIdentical) {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Capacity mu = RandomCapacity(1 + trial % 6, rng);
    const std::string text = CapacityToJson(mu).dump();
    const Capacity back = CapacityFromJson(json::parse(text));
    ASSERT_EQ(back.table().size(), mu.table().size());
    for (std::size_t a = 0; a < mu.table().size(); ++a) EXPECT_EQ(back.table()[a], mu.table()[a]);
  }
}

TEST(CapacityJsonTest, WriterUsesBitmaskOrder) {
  const std::string text = CapacityToJson(WorkedMu()).dump();
  EXPECT_EQ(text, R"({"n":2,"table":{"{}":0.0,"{1}":0.3,"{2}":0.5,"{1,2}":1.0}})");
}

TEST(RandomVariableJsonTest, Parses) {
  EXPECT_EQ(ParseRandomVariable("[4,-2]"), RandomVariable({4.0, -2.0}));
  EXPECT_THROWS_CODE(ParseRandomVariable("[4,"), ErrorCode::kParseError);
  EXPECT_THROWS_CODE(ParseRandomVariable("[\"a\"]"), ErrorCode::kParseError);
  EXPECT_THROWS_CODE(ParseRandomVariable("[]"), ErrorCode::kParseError);
}

TEST(ScenarioJsonTest, DefaultsNuToDual) {
  const Scenario s = LoadScenario(DataPath("scenario_linear.json"));
  EXPECT_EQ(s.wealth, 0.0);
  EXPECT_TRUE(s.nu == Dual(s.mu));
  EXPECT_EQ(s.u.ToString(), "linear");
}

TEST(ScenarioJsonTest, MismatchedGroundSets) {
  const json doc = json::parse(
      R"({"w":1,"X":[1,2,3],"mu":{"n":2,"table":[0,0.3,0.5,1]},"utility":"exp:1"})");
  EXPECT_THROWS_CODE(ScenarioFromJson(doc, "."), ErrorCode::kGroundSetMismatch);
}

TEST(ReportJsonTest, ContainsTalliesAndWitnesses) {
  ReportOptions options;
  options.levels = {0.0, 0.5, 1.0};
  const json doc = ReportToJson(RunFullReport(options));
  EXPECT_EQ(doc["swept_pairs"], 81);
  EXPECT_EQ(doc["unexpected"], 0);
  EXPECT_TRUE(doc["tallies"].contains("theorem-1"));
  EXPECT_FALSE(doc["witnesses"].empty());
  EXPECT_EQ(doc.dump(), ReportToJson(RunFullReport(options)).dump());
}

}  // namespace
}  // namespace choquet
