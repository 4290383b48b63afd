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

/*
 * Ground-truth determinant and rank for exact integer matrices.
 *
 * det_bareiss is one-step fraction-free elimination: after step k every
 * entry of the trailing block is a (k+1)x(k+1) minor of the input, so the
 * division by the previous pivot is exact. A remainder therefore means a
 * bug, and exact_div reports it as InternalError.
 *
 * det_cofactor is plain Laplace expansion along the first row, kept as an
 * independent cross-check for small matrices.
 */

#include <cstddef>
#include <string>
#include <vector>

#include "binomdet/binomial.hpp"
#include "binomdet/errors.hpp"
#include "binomdet/exact.hpp"
#include "binomdet/matrix.hpp"

namespace binomdet {

inline constexpr std::size_t kCofactorMaxDim = 8;

inline ExactInt det_bareiss(ExactMatrix m) {
  if (!m.is_square()) {
    throw PreconditionError("det_bareiss: matrix is " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()));
  }
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);

  int sign = 1;
  ExactInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // first non-zero pivot, top-down
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      m.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev, "det_bareiss");
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : ExactInt(-m(n - 1, n - 1));
}

namespace detail {

inline ExactInt cofactor_rec(const ExactMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t n = m.rows();
  if (row == n) return 1;
  ExactInt acc = 0;
  int sign = 1;
  for (std::size_t t = 0; t < cols.size(); ++t) {
    const std::size_t c = cols[t];
    if (m(row, c) != 0) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(t));
      ExactInt minor = cofactor_rec(m, cols, row + 1);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(t), c);
      if (sign > 0)
        acc += m(row, c) * minor;
      else
        acc -= m(row, c) * minor;
    }
    sign = -sign;
  }
  return acc;
}

}  // namespace detail

inline ExactInt det_cofactor(const ExactMatrix& m) {
  if (!m.is_square()) throw PreconditionError("det_cofactor: matrix is not square");
  if (m.rows() > kCofactorMaxDim) {
    throw PreconditionError("det_cofactor: dimension " + std::to_string(m.rows()) + " exceeds " +
                            std::to_string(kCofactorMaxDim));
  }
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t c = 0; c < cols.size(); ++c) cols[c] = c;
  return detail::cofactor_rec(m, cols, 0);
}

/// Rank by fraction-free row echelon reduction with row pivoting.
inline std::size_t rank(ExactMatrix m) {
  if (m.empty()) throw PreconditionError("rank: empty matrix");
  std::size_t r = 0;
  ExactInt prev = 1;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        m(i, j) = exact_div(m(i, j) * m(r, c) - m(i, c) * m(r, j), prev, "rank");
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

/// b^I_J straight from the oracle.
inline ExactInt oracle_det(const IndexSet& rows, const IndexSet& cols) {
  if (rows.size() != cols.size()) throw PreconditionError("oracle_det: |I| != |J|");
  return det_bareiss(submatrix(rows, cols).entries);
}

}  // namespace binomdet
