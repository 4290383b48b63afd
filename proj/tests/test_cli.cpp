// Copyright 2026 The binomdet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"

using namespace binomdet;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, DetText) {
  const auto r = call({"det", "--rows", "2..3", "--cols", "0,2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2\n");
}

TEST(Cli, DetJson) {
  const auto r = call({"det", "--rows", "3,5,7,8", "--cols", "0,3,5,7", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"det\":\"791\",\"method\":\"size_reduction\",\"rows\":[3,5,7,8],\"cols\":[0,3,5,7],\"pi\":\"1\"}\n");
}

TEST(Cli, JsonRoundTrip) {
  const auto r = call({"det", "--rows", "4,9,11,13", "--cols", "1,2,6,9", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  const IndexSet rows = indexset_from_json(j["rows"]);
  const IndexSet cols = indexset_from_json(j["cols"]);
  EXPECT_EQ(j["det"].get<std::string>(), oracle_det(rows, cols).str());
  const auto again = call({"det", "--rows", rows.str(), "--cols", cols.str(), "--format", "json"});
  EXPECT_EQ(again.out, r.out);
}

TEST(Cli, Nullspace) {
  EXPECT_EQ(call({"nullspace", "--rows", "0..3", "--cols", "0..2"}).out, "1,-3,3,-1\n");
  EXPECT_EQ(call({"nullspace", "--rows", "0..3", "--cols", "0..2", "--format", "json"}).out,
            "{\"coeffs\":[\"1\",\"-3\",\"3\",\"-1\"],\"integral_coeffs\":[\"1\",\"-3\",\"3\",\"-1\"]}\n");
  const auto lam = call({"nullspace", "--rows", "1..4", "--cols", "0,2,3", "--method", "lambda", "--format", "json"});
  EXPECT_EQ(lam.code, 0);
  EXPECT_EQ(Json::parse(lam.out)["lambda"], "3");
  EXPECT_EQ(call({"nullspace", "--rows", "0..2", "--cols", "5,6"}).code, 1);
}

TEST(Cli, ExpandSumsToDet) {
  const auto r = call({"expand", "--rows", "1,5,7,8", "--cols", "0,3,5,7", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["term_count"], 8);
  EXPECT_EQ(j["terms"].size(), 8u);
  EXPECT_EQ(j["det"], "896");
  EXPECT_EQ(call({"det", "--rows", "1,5,7,8", "--cols", "0,3,5,7"}).out, "896\n");
  EXPECT_EQ(call({"expand", "--rows", "0,10,20,30", "--cols", "0,1,2,3", "--term-cap", "10"}).code, 1);
}

TEST(Cli, PiAndInterchange) {
  EXPECT_EQ(call({"pi", "--rows", "4..5", "--cols", "1,3"}).out, "20/3\n");
  const auto r = call({"interchange", "--rows", "2..4", "--cols", "0,1,3", "--n", "6", "--m", "8", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["new_rows"], Json::parse("[3,5,6]"));
  EXPECT_EQ(j["new_cols"], Json::parse("[2,3,4]"));
  EXPECT_EQ(call({"interchange", "--rows", "1,4", "--cols", "2,3", "--n", "6"}).code, 1);
}

TEST(Cli, Pretty) {
  EXPECT_EQ(cli::group_digits("17175130931200"), "17,175,130,931,200");
  EXPECT_EQ(cli::group_digits("-1234/56"), "-1,234/56");
  EXPECT_EQ(cli::group_digits("999"), "999");
  const auto r = call({"det", "--rows", "0,4,8,12,16,20", "--cols", "0,1,3,6,10,15", "--pretty"});
  EXPECT_EQ(r.out, "17,175,130,931,200\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"det", "--rows", "1,2"}).code, 2);
  EXPECT_EQ(call({"det", "--rows", "3,2", "--cols", "0,1"}).code, 2);
  EXPECT_EQ(call({"det", "--rows", "1,x", "--cols", "0,1"}).code, 2);
  EXPECT_EQ(call({"det", "--rows", "1,2", "--cols", "0,1", "--method", "bogus"}).code, 2);
  EXPECT_EQ(call({"det", "--rows", "1,2", "--cols", "0,1", "--format", "xml"}).code, 2);
  EXPECT_EQ(call({"det", "--rows", "1,2", "--cols", "1,3", "--method", "moh"}).code, 1);
  EXPECT_EQ(call({"verify", "--suite", "nope"}).code, 2);
  const auto bad = call({"det", "--rows", "1,2", "--cols", "0"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_FALSE(bad.err.empty());
  EXPECT_TRUE(bad.out.empty());
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Cli, Verify) {
  const auto r = call({"verify", "--suite", "counterexample-fixtures"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("PASS counterexample-fixtures", 0), 0u);
  const auto j = call({"verify", "--suite", "interchange", "--trials", "20", "--seed", "3", "--format", "json"});
  EXPECT_EQ(j.code, 0);
  EXPECT_EQ(Json::parse(j.out)[0]["trials"], 20);
}
