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

#include <random>

#include "binomdet/interchange.hpp"
#include "support.hpp"

using namespace binomdet;

TEST(Interchange, SelfPairIsTrivial) {
  const IndexSet i = IndexSet::from({2, 5, 6});
  const auto r = interchange(i, i, 9);
  EXPECT_EQ(r.q_factor, ExactRat(1));
  EXPECT_EQ(r.new_rows, reflect(i, 9));
  EXPECT_EQ(r.new_cols, reflect(i, 9));
}

TEST(Interchange, RandomPairsAgainstLeibniz) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d = 1 + trial % 5;
    std::vector<index_t> pool(15);
    for (index_t v = 0; v < 15; ++v) pool[static_cast<std::size_t>(v)] = v;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<index_t> iv(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(d));
    std::sort(iv.begin(), iv.end());
    std::vector<index_t> jv;
    index_t prev = -1;
    for (index_t x : iv) {
      prev = std::uniform_int_distribution<index_t>(prev + 1, x)(rng);
      jv.push_back(prev);
    }
    const IndexSet i = IndexSet::from(iv);
    const IndexSet j = IndexSet::from(jv);
    const index_t n = i.back() + trial % 4;
    const auto r = interchange(i, j, n);
    ASSERT_EQ(r.q_factor * ExactRat(testsupport::leibniz_det(r.new_rows, r.new_cols)),
              ExactRat(testsupport::leibniz_det(i, j)));
    const auto s = interchange_shift(i, j, n, n + trial % 3);
    ASSERT_EQ(s.factor * ExactRat(testsupport::leibniz_det(s.rows, s.cols)), ExactRat(testsupport::leibniz_det(i, j)));
  }
}

TEST(Interchange, Preconditions) {
  EXPECT_THROW(interchange(IndexSet::from({1, 4}), IndexSet::from({2, 3}), 5), PreconditionError);
  EXPECT_THROW(interchange(IndexSet::from({1, 4}), IndexSet::from({0, 3}), 3), PreconditionError);
  EXPECT_THROW(interchange_shift(IndexSet::from({1, 4}), IndexSet::from({0, 3}), 6, 5), PreconditionError);
}

TEST(PiProduct, PrefixColumnsGiveOne) {
  for (index_t d = 1; d <= 5; ++d) {
    const auto r = pi_product_identity(3, d, IndexSet::interval(0, d - 1), 3 + d + 2);
    EXPECT_EQ(r.lhs, ExactRat(1));
    EXPECT_EQ(r.determinant, 1);
    EXPECT_TRUE(r.holds());
  }
}

TEST(PiProduct, ReadingsOnPublishedShape) {
  const auto r = pi_product_identity(2, 3, IndexSet::from({0, 1, 3}), 6);
  EXPECT_EQ(r.lhs, ExactRat(2));
  EXPECT_EQ(r.determinant, 2);
  ASSERT_EQ(r.rhs.size(), 3u);
  EXPECT_EQ(r.rhs[0].first, ProductReading::literal);
  EXPECT_EQ(r.rhs[0].second, ExactRat(0));
  EXPECT_EQ(r.rhs[1].second, ExactRat(1, 3));
  EXPECT_EQ(r.rhs[2].second, ExactRat(2));
  ASSERT_EQ(r.matching.size(), 1u);
  EXPECT_EQ(r.matching[0], ProductReading::vandermonde);
  EXPECT_TRUE(pi_product_identity_check(2, 3, IndexSet::from({0, 1, 3}), 6));
}

TEST(PiProduct, ColumnDifferenceProducts) {
  const IndexSet j = IndexSet::from({0, 1, 3});
  EXPECT_EQ(column_difference_product(j, ProductReading::literal), 0);
  EXPECT_EQ(column_difference_product(j, ProductReading::strict), 1);
  EXPECT_EQ(column_difference_product(j, ProductReading::vandermonde), 6);
}

TEST(PiProduct, Preconditions) {
  EXPECT_THROW(pi_product_identity(2, 3, IndexSet::from({0, 1, 5}), 6), PreconditionError);
  EXPECT_THROW(pi_product_identity(2, 3, IndexSet::from({0, 1, 3}), 3), PreconditionError);
}
