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
 * Row/column interchange: b^I_J = q^J_I(n) * b^{n-J}_{n-I} for J <= I and
 * n >= i_d, and the identities derived from it.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "binomdet/binomial.hpp"
#include "binomdet/errors.hpp"
#include "binomdet/exact.hpp"
#include "binomdet/formulas.hpp"
#include "binomdet/indexsets.hpp"
#include "binomdet/oracle.hpp"

namespace binomdet {

inline constexpr std::size_t kInterchangeVerifyMaxDim = 6;

struct InterchangeResult {
  ExactRat q_factor;
  IndexSet new_rows;  // n - J
  IndexSet new_cols;  // n - I
  index_t n = 0;
};

/// `verify` defaults to on for d <= 6; when on, both sides are evaluated
/// with the oracle and a mismatch raises InternalError.
inline InterchangeResult interchange(const IndexSet& rows, const IndexSet& cols, index_t n,
                                     std::optional<bool> verify = std::nullopt) {
  if (rows.size() != cols.size() || rows.empty()) throw PreconditionError("interchange: need |I| = |J| >= 1");
  if (!leq(cols, rows)) throw PreconditionError("interchange: J is not <= I");
  if (n < rows.back()) throw PreconditionError("interchange: n = " + std::to_string(n) + " < max(I)");
  InterchangeResult res{q_quotient(cols, rows, n), reflect(cols, n), reflect(rows, n), n};
  if (verify.value_or(rows.size() <= kInterchangeVerifyMaxDim)) {
    const ExactRat lhs(oracle_det(rows, cols));
    const ExactRat rhs = res.q_factor * ExactRat(oracle_det(res.new_rows, res.new_cols));
    if (!(lhs == rhs)) throw InternalError("interchange: identity failed for I = {" + rows.str() + "}");
  }
  return res;
}

/// b^I_J = q^J_I(n) q^{n-I}_{n-J}(m) b^{I+m-n}_{J+m-n}, m >= n >= i_d.
struct ShiftedInterchange {
  ExactRat factor;
  IndexSet rows;  // I + m - n
  IndexSet cols;  // J + m - n
};

inline ShiftedInterchange interchange_shift(const IndexSet& rows, const IndexSet& cols, index_t n, index_t m) {
  if (m < n) throw PreconditionError("interchange_shift: need m >= n");
  const InterchangeResult first = interchange(rows, cols, n, false);
  // second interchange of (n-J, n-I) at m: q^{n-I}_{n-J}(m)
  const ExactRat second = q_quotient(first.new_cols, first.new_rows, m);
  return {first.q_factor * second, rows.shift_up(m - n), cols.shift_up(m - n)};
}

/// Readings of the column-difference product in the pi-product identity.
enum class ProductReading {
  literal,      // 1 <= k <= l < d (includes k = l, so the product vanishes)
  strict,       // 1 <= k <  l < d
  vandermonde,  // 1 <= k <  l <= d
};

inline constexpr ProductReading kProductReadings[] = {ProductReading::literal, ProductReading::strict,
                                                      ProductReading::vandermonde};

inline std::string_view to_string(ProductReading r) {
  switch (r) {
    case ProductReading::literal:
      return "literal";
    case ProductReading::strict:
      return "strict";
    case ProductReading::vandermonde:
      return "vandermonde";
  }
  return "unknown";
}

struct PiProductReport {
  ExactRat lhs;          // prod_l pi^{I^(l)}_{J^(l)}
  ExactInt determinant;  // oracle b^I_J
  std::vector<std::pair<ProductReading, ExactRat>> rhs;
  std::vector<ProductReading> matching;

  bool lhs_equals_det() const { return lhs == ExactRat(determinant); }
  bool holds() const { return lhs_equals_det() && !matching.empty(); }
};

inline ExactInt column_difference_product(const IndexSet& cols, ProductReading reading) {
  const std::size_t d = cols.size();
  ExactInt acc = 1;
  // 1-based k, l
  for (std::size_t l = 1; l <= d; ++l) {
    for (std::size_t k = 1; k <= l; ++k) {
      bool take = false;
      switch (reading) {
        case ProductReading::literal:
          take = l < d;
          break;
        case ProductReading::strict:
          take = k < l && l < d;
          break;
        case ProductReading::vandermonde:
          take = k < l;
          break;
      }
      if (take) acc *= (cols[l - 1] - cols[k - 1]);
    }
  }
  return acc;
}

/// Evaluates prod pi^{I^(l)}_{J^(l)} = q^J_I(n) pi^{n-J}_{n-I} P / prod_{k<d} k!
/// for every reading of P, with I = [i, i+d-1].
inline PiProductReport pi_product_identity(index_t i, index_t d, const IndexSet& cols, index_t n) {
  if (d < 1) throw PreconditionError("pi_product_identity: d must be >= 1");
  const IndexSet rows = IndexSet::interval(i, i + d - 1);
  if (cols.size() != rows.size() || !leq(cols, rows)) {
    throw PreconditionError("pi_product_identity: J is not <= [i, i+d-1]");
  }
  if (n < i + d - 1) throw PreconditionError("pi_product_identity: need n >= i + d - 1");

  PiProductReport rep;
  rep.lhs = rows_interval_pi_product(i, d, cols);
  rep.determinant = oracle_det(rows, cols);
  const ExactRat prefix = q_quotient(cols, rows, n) * pi(reflect(cols, n), reflect(rows, n));
  const ExactInt sf = superfactorial(d - 1);
  for (ProductReading reading : kProductReadings) {
    ExactRat value = prefix * ExactRat(column_difference_product(cols, reading), sf);
    if (value == rep.lhs) rep.matching.push_back(reading);
    rep.rhs.emplace_back(reading, std::move(value));
  }
  return rep;
}

/// True when the pi product equals the determinant and some reading of
/// the right-hand side matches it.
inline bool pi_product_identity_check(index_t i, index_t d, const IndexSet& cols, index_t n) {
  return pi_product_identity(i, d, cols, n).holds();
}

}  // namespace binomdet
