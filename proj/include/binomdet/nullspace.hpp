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
 * Left nullspaces of d x (d-1) binomial matrices B^I_J of rank d-1.
 *
 * nullspace_cramer works for any such pair: the generator has coordinates
 * (-1)^(r-1) b^{I \ {i_r}}_J, computed with the oracle.
 *
 * nullspace_lambda is the closed form for I = [i, i+d-1] and
 * J = {0} u [j, j+d-3] with J <= [i, i+d-2]. Each Cramer coordinate equals
 * lambda times the corresponding closed-form coordinate; this is checked
 * before returning.
 */

#include <cstddef>
#include <string>
#include <vector>

#include "binomdet/binomial.hpp"
#include "binomdet/errors.hpp"
#include "binomdet/exact.hpp"
#include "binomdet/indexsets.hpp"
#include "binomdet/oracle.hpp"

namespace binomdet {

struct NullVector {
  std::vector<ExactRat> coeffs;

  /// Denominators cleared by their lcm, then divided by the gcd of the
  /// result. Signs are kept.
  std::vector<ExactInt> integral_coeffs() const {
    ExactInt lcm = 1;
    for (const auto& c : coeffs) lcm = boost::multiprecision::lcm(lcm, c.den());
    std::vector<ExactInt> out;
    out.reserve(coeffs.size());
    ExactInt g = 0;
    for (const auto& c : coeffs) {
      out.push_back(c.num() * (lcm / c.den()));
      g = boost::multiprecision::gcd(g, out.back());
    }
    if (g > 1)
      for (auto& v : out) v /= g;
    return out;
  }

  bool is_zero() const {
    for (const auto& c : coeffs)
      if (!c.is_zero()) return false;
    return true;
  }
};

/// sum_r v_r * C(i_r, j_c) == 0 for every column c.
inline bool annihilates(const NullVector& v, const IndexSet& rows, const IndexSet& cols) {
  if (v.coeffs.size() != rows.size()) return false;
  for (index_t c : cols) {
    ExactRat acc{0};
    for (std::size_t r = 0; r < rows.size(); ++r) acc += v.coeffs[r] * ExactRat(binom(rows[r], c));
    if (!acc.is_zero()) return false;
  }
  return true;
}

/// True if a = s * b for some non-zero rational s (both non-zero).
inline bool proportional(const NullVector& a, const NullVector& b) {
  if (a.coeffs.size() != b.coeffs.size() || a.is_zero() || b.is_zero()) return false;
  std::size_t t = 0;
  while (b.coeffs[t].is_zero()) ++t;
  if (a.coeffs[t].is_zero()) return false;
  const ExactRat scale = a.coeffs[t] / b.coeffs[t];
  for (std::size_t r = 0; r < a.coeffs.size(); ++r)
    if (!(a.coeffs[r] == scale * b.coeffs[r])) return false;
  return true;
}

/// Cramer generator of ker((B^I_J)^T) for |I| = d, |J| = d-1, rank d-1.
inline NullVector nullspace_cramer(const IndexSet& rows, const IndexSet& cols) {
  if (rows.size() < 2 || cols.size() + 1 != rows.size()) {
    throw PreconditionError("nullspace_cramer: need |I| = d >= 2 and |J| = d - 1 (got " +
                            std::to_string(rows.size()) + ", " + std::to_string(cols.size()) + ")");
  }
  const std::size_t rk = rank(submatrix(rows, cols).entries);
  if (rk != cols.size()) {
    throw RankError("nullspace_cramer: rank " + std::to_string(rk) + " < " + std::to_string(cols.size()) +
                        ", left nullspace has dimension > 1",
                    rk);
  }
  NullVector v;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    ExactInt minor = oracle_det(rows.without_position(r), cols);
    v.coeffs.emplace_back(r % 2 == 0 ? minor : ExactInt(-minor));
  }
  if (!annihilates(v, rows, cols)) throw InternalError("nullspace_cramer: vector does not annihilate B^I_J");
  return v;
}

struct LambdaForm {
  ExactRat lambda;
  /// t_r with b^{I \ {i+r-1}}_J = lambda * t_r.
  std::vector<ExactRat> per_index_terms;
};

struct LambdaNullspace {
  LambdaForm form;
  NullVector vector;
};

/// Rows and columns of the closed-form family for (i, d, j).
inline std::pair<IndexSet, IndexSet> lambda_family(index_t i, index_t d, index_t j) {
  if (d < 3) throw PreconditionError("nullspace_lambda: need d >= 3");
  if (i < 0 || j < 1) throw PreconditionError("nullspace_lambda: need i >= 0 and j >= 1");
  std::vector<index_t> cols{0};
  for (index_t k = 0; k <= d - 3; ++k) cols.push_back(j + k);
  IndexSet rows = IndexSet::interval(i, i + d - 1);
  IndexSet col_set = IndexSet::from(cols);
  if (!leq(col_set, IndexSet::interval(i, i + d - 2))) {
    throw PreconditionError("nullspace_lambda: J = {" + col_set.str() + "} is not <= [i, i+d-2]");
  }
  return {std::move(rows), std::move(col_set)};
}

inline LambdaNullspace nullspace_lambda(index_t i, index_t d, index_t j) {
  const auto [rows, cols] = lambda_family(i, d, j);

  ExactInt lam_num = 1;
  for (index_t k = 1; k <= d - 1; ++k) lam_num *= binom(i + k - 1, j - 1);
  ExactInt lam_den = 1;
  for (index_t k = 0; k <= d - 3; ++k) lam_den *= binom(j + k - 1, j - 1);
  if (lam_num == 0 || lam_den == 0) throw PreconditionError("nullspace_lambda: vanishing binomial in lambda");

  auto inv_binom = [&](index_t p) {
    ExactInt b = binom(p, j - 1);
    if (b == 0) throw PreconditionError("nullspace_lambda: C(" + std::to_string(p) + ", j-1) is zero");
    return ExactRat(1, b);
  };

  LambdaNullspace out;
  out.form.lambda = ExactRat(lam_num, lam_den);
  for (index_t r = 1; r <= d; ++r) {
    ExactRat t;
    if (r == 1) {
      t = inv_binom(i);
    } else if (r == d) {
      t = inv_binom(i + d - 2);
    } else {
      t = ExactRat(binom(d - 2, r - 1)) * inv_binom(i + r - 1) +
          ExactRat(binom(d - 2, r - 2)) * inv_binom(i + r - 2);
    }
    out.form.per_index_terms.push_back(t);
    out.vector.coeffs.push_back(r % 2 == 1 ? t : -t);
  }

  const NullVector cramer = nullspace_cramer(rows, cols);
  for (std::size_t r = 0; r < cramer.coeffs.size(); ++r) {
    if (!(cramer.coeffs[r] == out.form.lambda * out.vector.coeffs[r])) {
      throw InternalError("nullspace_lambda: coordinate " + std::to_string(r + 1) +
                          " is not lambda times the Cramer minor");
    }
  }
  if (!annihilates(out.vector, rows, cols)) throw InternalError("nullspace_lambda: vector does not annihilate");
  return out;
}

}  // namespace binomdet
