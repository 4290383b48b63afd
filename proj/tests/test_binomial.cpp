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

#include "binomdet/binomial.hpp"
#include "support.hpp"

using namespace binomdet;

TEST(Binom, SmallAndZero) {
  EXPECT_EQ(binom(4, 2), 6);
  EXPECT_EQ(binom(3, 5), 0);
  EXPECT_EQ(binom(0, 0), 1);
  EXPECT_THROW(binom(-1, 0), PreconditionError);
}

TEST(Binom, MatchesPascalTable) {
  EXPECT_EQ(binom(60, 30), ExactInt("118264581564861424"));
  for (index_t i = 0; i <= 120; ++i)
    for (index_t j = 0; j <= i + 2; ++j) ASSERT_EQ(binom(i, j), testsupport::pascal_binom(i, j)) << i << "," << j;
}

TEST(Submatrix, Entries) {
  const auto m = submatrix(IndexSet::from({2, 3}), IndexSet::from({0, 2}));
  EXPECT_EQ(m.entries, ExactMatrix({{1, 1}, {1, 3}}));
  EXPECT_EQ(submatrix(IndexSet::from({5}), IndexSet::from({7})).entries, ExactMatrix({{0}}));
  const auto t = submatrix(IndexSet::interval(0, 4), IndexSet::interval(0, 4)).entries;
  for (std::size_t r = 0; r < 5; ++r) {
    EXPECT_EQ(t(r, r), 1);
    for (std::size_t c = r + 1; c < 5; ++c) EXPECT_EQ(t(r, c), 0);
  }
}

TEST(Pi, PublishedValues) {
  EXPECT_EQ(pi(IndexSet::from({1, 3}), IndexSet::interval(1, 2)), ExactRat(3, 2));
  EXPECT_EQ(pi(IndexSet::interval(4, 5), IndexSet::from({1, 3})), ExactRat(20, 3));
  EXPECT_EQ(pi(IndexSet::from({4, 9, 11}), IndexSet::from({0, 5, 6})), ExactRat(1));
  EXPECT_EQ(pi(IndexSet::from({4, 9}), IndexSet::from({4, 9})), ExactRat(1));
}

TEST(QQuotient, Values) {
  EXPECT_EQ(q_quotient(IndexSet::from({0}), IndexSet::from({2}), 4), ExactRat(1, 6));
  const IndexSet i = IndexSet::from({3, 5, 7, 8});
  const IndexSet j = IndexSet::from({0, 3, 5, 7});
  EXPECT_EQ(q_quotient(i, i, 9), ExactRat(1));
  EXPECT_EQ(q_quotient(j, i, 10) * q_quotient(i, j, 10), ExactRat(1));
  EXPECT_THROW(q_quotient(j, i, 7), PreconditionError);
}
