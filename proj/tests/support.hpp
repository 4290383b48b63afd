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

#pragma once

// Reference values computed without the library: a Pascal table for
// binomials and the Leibniz permutation sum for determinants.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "binomdet/exact.hpp"
#include "binomdet/indexsets.hpp"

namespace testsupport {

using binomdet::ExactInt;
using binomdet::IndexSet;

inline const std::vector<std::vector<ExactInt>>& pascal() {
  static const auto table = [] {
    std::vector<std::vector<ExactInt>> t(121);
    for (std::size_t i = 0; i < t.size(); ++i) {
      t[i].assign(i + 1, 1);
      for (std::size_t j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
    }
    return t;
  }();
  return table;
}

inline ExactInt pascal_binom(std::int64_t i, std::int64_t j) {
  if (j < 0 || j > i) return 0;
  return pascal().at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
}

/// sum over permutations, d <= 8
inline ExactInt leibniz_det(const IndexSet& rows, const IndexSet& cols) {
  const std::size_t d = rows.size();
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  ExactInt total = 0;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = a + 1; b < d; ++b) inversions += perm[a] > perm[b];
    ExactInt term = 1;
    for (std::size_t r = 0; r < d && term != 0; ++r) term *= pascal_binom(rows[r], cols[perm[r]]);
    total += (inversions % 2) ? ExactInt(-term) : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline std::vector<IndexSet> subsets(std::int64_t universe, std::size_t size) {
  std::vector<IndexSet> out;
  std::vector<bool> pick(static_cast<std::size_t>(universe), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
  do {
    std::vector<std::int64_t> s;
    for (std::int64_t v = 0; v < universe; ++v)
      if (pick[static_cast<std::size_t>(v)]) s.push_back(v);
    out.push_back(IndexSet::from(s));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

}  // namespace testsupport
