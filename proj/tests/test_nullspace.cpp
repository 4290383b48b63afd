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

#include "binomdet/nullspace.hpp"

using namespace binomdet;

namespace {
std::vector<ExactInt> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }
}  // namespace

TEST(Cramer, AlternatingBinomialRow) {
  const NullVector v = nullspace_cramer(IndexSet::interval(0, 3), IndexSet::interval(0, 2));
  EXPECT_EQ(v.integral_coeffs(), ints({1, -3, 3, -1}));
  EXPECT_TRUE(annihilates(v, IndexSet::interval(0, 3), IndexSet::interval(0, 2)));
}

TEST(Cramer, UnitDifference) {
  for (index_t d = 3; d <= 6; ++d) {
    std::vector<index_t> c{0};
    for (index_t v = 2; v <= d - 1; ++v) c.push_back(v);
    const NullVector v = nullspace_cramer(IndexSet::interval(0, d - 1), IndexSet::from(c));
    std::vector<ExactInt> want(static_cast<std::size_t>(d), 0);
    want[0] = 1;
    want[1] = -1;
    EXPECT_EQ(v.integral_coeffs(), want) << "d=" << d;
  }
}

TEST(Cramer, RawCoefficientsAreSignedMinors) {
  const IndexSet rows = IndexSet::from({2, 5, 7});
  const IndexSet cols = IndexSet::from({1, 3});
  const NullVector v = nullspace_cramer(rows, cols);
  ASSERT_EQ(v.coeffs.size(), 3u);
  EXPECT_EQ(v.coeffs[0], ExactRat(oracle_det(IndexSet::from({5, 7}), cols)));
  EXPECT_EQ(v.coeffs[1], ExactRat(-oracle_det(IndexSet::from({2, 7}), cols)));
  EXPECT_EQ(v.coeffs[2], ExactRat(oracle_det(IndexSet::from({2, 5}), cols)));
}

TEST(Cramer, RejectsBadShapesAndLowRank) {
  EXPECT_THROW(nullspace_cramer(IndexSet::interval(0, 3), IndexSet::interval(0, 1)), PreconditionError);
  try {
    // columns 5, 6 vanish on rows 0..2
    nullspace_cramer(IndexSet::interval(0, 2), IndexSet::from({5, 6}));
    FAIL();
  } catch (const RankError& e) {
    EXPECT_EQ(e.rank(), 0u);
  }
}

TEST(Lambda, WorkedPatterns) {
  for (index_t d = 3; d <= 7; ++d) {
    std::vector<ExactInt> alt;
    for (index_t r = 1; r <= d; ++r) alt.push_back(r % 2 ? binom(d - 1, r - 1) : ExactInt(-binom(d - 1, r - 1)));
    EXPECT_EQ(nullspace_lambda(0, d, 1).vector.integral_coeffs(), alt);

    std::vector<ExactInt> second{binom(d - 1, 1)};
    for (index_t r = 2; r <= d; ++r) second.push_back(r % 2 ? binom(d, r) : ExactInt(-binom(d, r)));
    EXPECT_EQ(nullspace_lambda(1, d, 2).vector.integral_coeffs(), second);
  }
}

TEST(Lambda, RationalFormAndScalar) {
  const LambdaNullspace r = nullspace_lambda(1, 4, 2);
  EXPECT_EQ(r.form.lambda, ExactRat(3));
  ASSERT_EQ(r.vector.coeffs.size(), 4u);
  EXPECT_EQ(r.vector.coeffs[0], ExactRat(1));
  EXPECT_EQ(r.vector.coeffs[1], ExactRat(-2));
  EXPECT_EQ(r.vector.coeffs[2], ExactRat(4, 3));
  EXPECT_EQ(r.vector.coeffs[3], ExactRat(-1, 3));
  EXPECT_EQ(r.vector.integral_coeffs(), ints({3, -6, 4, -1}));
}

TEST(Lambda, AnnihilatesAndMatchesCramer) {
  for (index_t i = 0; i <= 8; ++i) {
    for (index_t d = 3; d <= 6; ++d) {
      for (index_t j = 1; j <= i + 1; ++j) {
        const auto [rows, cols] = lambda_family(i, d, j);
        const LambdaNullspace lam = nullspace_lambda(i, d, j);
        ASSERT_TRUE(annihilates(lam.vector, rows, cols));
        ASSERT_TRUE(proportional(lam.vector, nullspace_cramer(rows, cols)));
      }
    }
  }
  const auto [rows, cols] = lambda_family(3, 4, 2);
  EXPECT_TRUE(annihilates(nullspace_lambda(3, 4, 2).vector, rows, cols));
}

TEST(Lambda, Preconditions) {
  EXPECT_THROW(nullspace_lambda(3, 2, 1), PreconditionError);
  EXPECT_THROW(nullspace_lambda(3, 4, 0), PreconditionError);
  EXPECT_THROW(nullspace_lambda(1, 4, 3), PreconditionError);
}

TEST(NullVector, Helpers) {
  NullVector a{{ExactRat(1, 2), ExactRat(-1, 3)}};
  EXPECT_EQ(a.integral_coeffs(), ints({3, -2}));
  NullVector b{{ExactRat(3), ExactRat(-2)}};
  EXPECT_TRUE(proportional(a, b));
  NullVector z{{ExactRat(0), ExactRat(0)}};
  EXPECT_TRUE(z.is_zero());
  EXPECT_FALSE(proportional(a, z));
}
