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

#include <string>

#include "binomdet/errors.hpp"
#include "binomdet/exact.hpp"
#include "binomdet/indexsets.hpp"
#include "binomdet/matrix.hpp"

namespace binomdet {

/// C(i, j), zero when j > i. Running product C(i-j+t, t) over t = 1..j;
/// every partial product is itself a binomial coefficient, so each
/// division is exact.
inline ExactInt binom(index_t i, index_t j) {
  if (i < 0 || j < 0) {
    throw PreconditionError("binom: negative argument (" + std::to_string(i) + ", " +
                            std::to_string(j) + ")");
  }
  if (j > i) return 0;
  if (j > i - j) j = i - j;
  ExactInt acc = 1;
  for (index_t t = 1; t <= j; ++t) {
    acc *= (i - j + t);
    acc = exact_div(acc, ExactInt(t), "binom");
  }
  return acc;
}

/// The submatrix B^I_J of the binomial matrix.
struct BinMatrix {
  IndexSet rows;
  IndexSet cols;
  ExactMatrix entries;
};

inline BinMatrix submatrix(const IndexSet& rows, const IndexSet& cols) {
  if (rows.empty() || cols.empty()) throw PreconditionError("submatrix: empty index set");
  BinMatrix m{rows, cols, ExactMatrix(rows.size(), cols.size())};
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) m.entries(r, c) = binom(rows[r], cols[c]);
  return m;
}

/// pi^I_J = prod_t C(i_t, j_1) / prod_t C(j_t, j_1).
inline ExactRat pi(const IndexSet& rows, const IndexSet& cols) {
  if (rows.size() != cols.size()) throw PreconditionError("pi: |I| != |J|");
  if (rows.empty()) throw PreconditionError("pi: empty index set");
  const index_t j1 = cols.front();
  ExactInt num = 1;
  ExactInt den = 1;
  for (std::size_t t = 0; t < rows.size(); ++t) {
    num *= binom(rows[t], j1);
    den *= binom(cols[t], j1);
  }
  return ExactRat(num, den);
}

/// q^J_I(n) = prod_t C(n, j_t) / prod_t C(n, i_t); requires n >= max(i_d, j_d).
inline ExactRat q_quotient(const IndexSet& cols, const IndexSet& rows, index_t n) {
  if (rows.size() != cols.size()) throw PreconditionError("q_quotient: |I| != |J|");
  if (rows.empty()) throw PreconditionError("q_quotient: empty index set");
  if (n < rows.back() || n < cols.back()) {
    throw PreconditionError("q_quotient: n = " + std::to_string(n) + " below the largest index");
  }
  ExactInt num = 1;
  ExactInt den = 1;
  for (std::size_t t = 0; t < rows.size(); ++t) {
    num *= binom(n, cols[t]);
    den *= binom(n, rows[t]);
  }
  return ExactRat(num, den);
}

}  // namespace binomdet
