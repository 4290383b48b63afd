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

#include "binomdet/json_io.hpp"
#include "binomdet/verify.hpp"

using namespace binomdet;

TEST(InstanceGen, DeterministicPerCounter) {
  InstanceGen g{42, 6, 20, Shape::J_leq_I};
  for (std::uint64_t t = 0; t < 50; ++t) {
    const Instance a = g.draw(t);
    const Instance b = g.draw(t);
    EXPECT_EQ(a.rows, b.rows);
    EXPECT_EQ(a.cols, b.cols);
    EXPECT_EQ(a.n, b.n);
  }
  InstanceGen other = g;
  other.seed = 43;
  bool differs = false;
  for (std::uint64_t t = 0; t < 20; ++t) differs = differs || !(g.draw(t).rows == other.draw(t).rows);
  EXPECT_TRUE(differs);
}

TEST(InstanceGen, ShapesHoldTheirInvariants) {
  for (const auto& [shape, name] : kShapeNames) {
    InstanceGen g{3, 6, 20, shape};
    for (std::uint64_t t = 0; t < 200; ++t) {
      const Instance x = g.draw(t);
      if (shape == Shape::nullspace_family)
        ASSERT_LE(x.rows.front(), 20) << name;
      else
        ASSERT_LE(std::max(x.rows.back(), x.cols.back()), 20) << name;
      ASSERT_GE(x.m, x.n);
      ASSERT_GE(x.n, std::max(x.rows.back(), x.cols.back()));
      switch (shape) {
        case Shape::general:
          ASSERT_EQ(x.rows.size(), x.cols.size());
          break;
        case Shape::J_leq_I:
          ASSERT_TRUE(leq(x.cols, x.rows));
          break;
        case Shape::rows_interval:
          ASSERT_TRUE(x.rows.is_interval() && leq(x.cols, x.rows));
          break;
        case Shape::cols_interval:
          ASSERT_TRUE(x.cols.is_interval() && leq(x.cols, x.rows));
          break;
        case Shape::both_intervals:
          ASSERT_TRUE(x.rows.is_interval() && x.cols.is_interval() && leq(x.cols, x.rows));
          break;
        case Shape::punctured_rows:
          ASSERT_TRUE(match_almost_rows_cols(x.rows, x.cols).has_value()) << x.str();
          break;
        case Shape::punctured_cols:
          ASSERT_TRUE(match_rows_almost_cols(x.rows, x.cols).has_value()) << x.str();
          break;
        case Shape::nullspace_family:
          ASSERT_EQ(x.rows.size(), x.cols.size() + 1);
          ASSERT_EQ(x.cols[0], 0);
          break;
      }
    }
  }
}

TEST(RunSuite, EverySuitePassesSmall) {
  InstanceGen g{1, 5, 14, Shape::J_leq_I};
  for (const auto& name : suite_names()) {
    const SuiteReport r = run_suite(name, g, 40);
    EXPECT_TRUE(r.passed()) << name << ": " << to_json(r).dump();
    EXPECT_GT(r.checks, 0u) << name;
  }
}

TEST(RunSuite, ThreadCountDoesNotChangeTheReport) {
  InstanceGen g{9, 6, 20, Shape::J_leq_I};
  const SuiteReport a = run_suite("oracle-equivalence", g, 120, 1);
  const SuiteReport b = run_suite("oracle-equivalence", g, 120, 4);
  EXPECT_EQ(a.checks, b.checks);
  EXPECT_EQ(a.notes, b.notes);
}

TEST(RunSuite, FixturesAndUnknownNames) {
  const SuiteReport r = run_suite("counterexample-fixtures", InstanceGen{}, 0);
  EXPECT_TRUE(r.passed());
  EXPECT_THROW(run_suite("nope", InstanceGen{}, 1), std::invalid_argument);
}

TEST(RunSuite, PiProductReportsReadings) {
  const SuiteReport r = run_suite("pi-product", InstanceGen{5, 6, 20, Shape::rows_interval}, 30);
  ASSERT_EQ(r.notes.size(), 3u);
  EXPECT_EQ(r.notes[2], "reading vandermonde matched 30/30");
}

TEST(SuiteJson, FailureCarriesReplay) {
  SuiteReport r;
  r.suite = "x";
  r.failures.push_back({"rows=1 cols=0", "1", "2", "binomdet det --rows 1 --cols 0"});
  const Json j = to_json(r);
  EXPECT_EQ(j["passed"], false);
  EXPECT_EQ(j["failures"][0]["replay"], "binomdet det --rows 1 --cols 0");
}
