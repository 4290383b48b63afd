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
 * Closed forms for binomial determinants b^I_J = det(B^I_J).
 *
 * Every function here evaluates at concrete integers and returns an exact
 * value. Wherever a closed form is a rational expression that must be
 * an integer, integrality is checked and a failure raises InternalError.
 *
 * det() is the dispatcher. With Method::automatic the precedence is fixed:
 *
 *   1. zero_rule       J not <= I                      -> 0
 *   2. identity_rule   J == I                          -> 1
 *   3. moh             I and J both intervals          -> pi^I_J
 *   4. rows_interval   I interval                      -> product of pi over the derived chain
 *   5. cols_interval   J interval                      -> pi^I_J * Vandermonde(I) / sf(d-1)
 *   6. rows_almost_cols / almost_rows_cols             (punctured intervals)
 *   7. size_reduction  when the term count is small    -> pi^I_J * sum of (d-1)-determinants
 *   8. oracle
 *
 * Explicitly requested methods are applied if their hypotheses hold and
 * rejected with PreconditionError otherwise.
 */

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "binomdet/binomial.hpp"
#include "binomdet/errors.hpp"
#include "binomdet/exact.hpp"
#include "binomdet/indexsets.hpp"
#include "binomdet/oracle.hpp"

namespace binomdet {

enum class Method {
  automatic,
  oracle,
  reduce_shift,
  size_reduction,
  cols_interval,
  rows_interval,
  moh,
  rows_almost_cols,
  almost_rows_cols,
  zero_rule,
  identity_rule,
};

inline constexpr std::pair<Method, std::string_view> kMethodNames[] = {
    {Method::automatic, "auto"},
    {Method::oracle, "oracle"},
    {Method::reduce_shift, "reduce_shift"},
    {Method::size_reduction, "size_reduction"},
    {Method::cols_interval, "cols_interval"},
    {Method::rows_interval, "rows_interval"},
    {Method::moh, "moh"},
    {Method::rows_almost_cols, "rows_almost_cols"},
    {Method::almost_rows_cols, "almost_rows_cols"},
    {Method::zero_rule, "zero_rule"},
    {Method::identity_rule, "identity_rule"},
};

inline std::string_view to_string(Method m) {
  for (const auto& [method, name] : kMethodNames)
    if (method == m) return name;
  return "unknown";
}

inline std::optional<Method> method_from_string(std::string_view name) {
  for (const auto& [method, n] : kMethodNames)
    if (n == name) return method;
  return std::nullopt;
}

inline constexpr std::size_t kDefaultTermCap = 1'000'000;

struct EvalOptions {
  /// Hard cap on materialized size-reduction terms.
  std::size_t term_cap = kDefaultTermCap;
  /// Automatic dispatch only expands when the top-level term count is at
  /// most this; larger cases go to the oracle.
  std::size_t auto_expand_limit = 64;
};

struct EvalReport {
  IndexSet rows;
  IndexSet cols;
  ExactInt value;
  Method method = Method::oracle;
  ExactRat pi_factor{1};
};

/// prod_{k<l} (s_l - s_k).
inline ExactInt vandermonde(const IndexSet& s) {
  ExactInt acc = 1;
  for (std::size_t l = 0; l < s.size(); ++l)
    for (std::size_t k = 0; k < l; ++k) acc *= (s[l] - s[k]);
  return acc;
}

/// prod_{k=0..n} k!  (1 for n < 0).
inline ExactInt superfactorial(index_t n) {
  ExactInt acc = 1;
  ExactInt fact = 1;
  for (index_t k = 1; k <= n; ++k) {
    fact *= k;
    acc *= fact;
  }
  return acc;
}

namespace detail {

inline void require_square_pair(const IndexSet& rows, const IndexSet& cols, const char* who) {
  if (rows.size() != cols.size()) {
    throw PreconditionError(std::string(who) + ": |I| = " + std::to_string(rows.size()) +
                            " but |J| = " + std::to_string(cols.size()));
  }
  if (rows.empty()) throw PreconditionError(std::string(who) + ": empty index set");
}

inline void require_leq(const IndexSet& rows, const IndexSet& cols, const char* who) {
  require_square_pair(rows, cols, who);
  if (!leq(cols, rows)) {
    throw PreconditionError(std::string(who) + ": J = {" + cols.str() + "} is not <= I = {" +
                            rows.str() + "}");
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Shift to j_1 = 0

struct ShiftReduction {
  ExactRat pi;
  IndexSet rows;
  IndexSet cols;
};

/// b^I_J = pi^I_J * b^{I-j_1}_{J-j_1}.
inline ShiftReduction reduce_shift(const IndexSet& rows, const IndexSet& cols) {
  detail::require_leq(rows, cols, "reduce_shift");
  const index_t j1 = cols.front();
  return {pi(rows, cols), shift_down(rows, j1), shift_down(cols, j1)};
}

// ---------------------------------------------------------------------------
// Size reduction

/// One summand of the size-reduction expansion: b^{ks}_{reduced_cols}.
struct ExpansionTerm {
  IndexSet ks;
  IndexSet reduced_rows;
  IndexSet reduced_cols;
};

/// prod_{s=2..d} (i_s - i_{s-1}), saturating at SIZE_MAX.
inline std::size_t expansion_term_count(const IndexSet& rows) {
  std::size_t count = 1;
  for (std::size_t s = 1; s < rows.size(); ++s) {
    const auto gap = static_cast<std::size_t>(rows[s] - rows[s - 1]);
    if (count > std::numeric_limits<std::size_t>::max() / gap) return std::numeric_limits<std::size_t>::max();
    count *= gap;
  }
  return count;
}

/// Terms indexed by (k_2,...,k_d) in
/// [i_1-j_1, i_2-j_1-1] x ... x [i_{d-1}-j_1, i_d-j_1-1], first coordinate
/// slowest. The coordinate ranges are disjoint and increasing, so each
/// tuple is a valid index set.
inline std::vector<ExpansionTerm> size_reduction_expand(const IndexSet& rows, const IndexSet& cols,
                                                        std::size_t cap = kDefaultTermCap) {
  detail::require_leq(rows, cols, "size_reduction_expand");
  const std::size_t d = rows.size();
  if (d < 2) throw PreconditionError("size_reduction_expand: needs d >= 2");
  const std::size_t count = expansion_term_count(rows);
  if (count > cap) {
    throw CapExceeded("size_reduction_expand: " +
                      (count == std::numeric_limits<std::size_t>::max() ? std::string("overflowing")
                                                                        : std::to_string(count)) +
                      " terms exceed cap " + std::to_string(cap));
  }
  const index_t j1 = cols.front();
  std::vector<index_t> reduced;
  for (std::size_t s = 1; s < d; ++s) reduced.push_back(cols[s] - j1 - 1);
  const IndexSet reduced_cols = IndexSet::from(reduced);

  std::vector<index_t> lo(d - 1);
  std::vector<index_t> hi(d - 1);
  for (std::size_t s = 1; s < d; ++s) {
    lo[s - 1] = rows[s - 1] - j1;
    hi[s - 1] = rows[s] - j1 - 1;
  }
  std::vector<ExpansionTerm> terms;
  terms.reserve(count);
  std::vector<index_t> k = lo;
  while (true) {
    IndexSet ks = IndexSet::from(k);  // throws if the ranges ever overlap
    terms.push_back({ks, ks, reduced_cols});
    std::size_t pos = d - 1;
    while (pos > 0 && k[pos - 1] == hi[pos - 1]) {
      k[pos - 1] = lo[pos - 1];
      --pos;
    }
    if (pos == 0) break;
    ++k[pos - 1];
  }
  if (terms.size() != count) throw InternalError("size_reduction_expand: term count mismatch");
  return terms;
}

// ---------------------------------------------------------------------------
// Consecutive columns

/// J = [j, j+d-1], d = |I|:  pi^I_J * Vandermonde(I) / prod_{k<d} k!.
inline ExactInt det_cols_interval(const IndexSet& rows, index_t j) {
  if (rows.empty()) throw PreconditionError("det_cols_interval: empty row set");
  if (j < 0) throw PreconditionError("det_cols_interval: negative column start");
  const auto d = static_cast<index_t>(rows.size());
  const IndexSet cols = IndexSet::interval(j, j + d - 1);
  const ExactInt quotient =
      exact_div(vandermonde(rows), superfactorial(d - 1), "det_cols_interval Vandermonde quotient");
  return (pi(rows, cols) * ExactRat(quotient)).to_integer("det_cols_interval");
}

// ---------------------------------------------------------------------------
// Consecutive rows

/// I = [i, i+d-1], J <= I:  prod_{l=0..d-1} pi^{I^(l)}_{J^(l)}.
inline ExactRat rows_interval_pi_product(index_t i, index_t d, const IndexSet& cols) {
  if (d < 1) throw PreconditionError("rows_interval: d must be >= 1");
  const IntervalSpec rows(i, i + d - 1);
  detail::require_leq(rows.materialize(), cols, "rows_interval");
  ExactRat acc{1};
  for (std::size_t l = 0; l < static_cast<std::size_t>(d); ++l) {
    const DerivedPair dp = derived_pair(rows, cols, l);
    acc *= pi(dp.rows, dp.cols);
  }
  return acc;
}

inline ExactInt det_rows_interval(index_t i, index_t d, const IndexSet& cols) {
  return rows_interval_pi_product(i, d, cols).to_integer("det_rows_interval");
}

/// I = [i, i+d-1], J = [j, j+d-1]: 0 when i < j, else pi^I_J.
inline ExactInt det_moh(index_t i, index_t j, index_t d) {
  if (d < 1) throw PreconditionError("det_moh: d must be >= 1");
  if (i < 0 || j < 0) throw PreconditionError("det_moh: negative start");
  if (i < j) return 0;
  return pi(IndexSet::interval(i, i + d - 1), IndexSet::interval(j, j + d - 1)).to_integer("det_moh");
}

// ---------------------------------------------------------------------------
// Consecutive rows, almost consecutive columns

/// Rows [i, i+d-2], columns [0, d-1] minus {r-1}:  C(i+d-r-1, d-r).
inline ExactInt det_punctured_prefix(index_t i, index_t d, index_t r) {
  if (d < 2 || i < 1 || r < 1 || r > d) {
    throw PreconditionError("det_punctured_prefix: need d >= 2, i >= 1, 1 <= r <= d (got i=" +
                            std::to_string(i) + ", d=" + std::to_string(d) + ", r=" + std::to_string(r) +
                            ")");
  }
  return binom(i + d - r - 1, d - r);
}

/// Rows [i, i+d-2], columns [j, j+d-1] minus {j+r-1}, j <= i-1.
inline ExactInt det_rows_interval_cols_punctured(index_t i, index_t d, index_t j, index_t r) {
  if (d < 2 || j < 0 || r < 1 || r > d) {
    throw PreconditionError("det_rows_interval_cols_punctured: need d >= 2, j >= 0, 1 <= r <= d");
  }
  if (j >= i) throw PreconditionError("det_rows_interval_cols_punctured: need j <= i - 1");
  const IndexSet rows = IndexSet::interval(i, i + d - 2);
  const IndexSet cols = IntervalSpec(j, j + d - 1, j + r - 1).materialize();
  const ExactRat p = pi(rows, cols);
  if (r == 1 || r == d) return p.to_integer("det_rows_interval_cols_punctured");
  return (p * ExactRat(binom(i + d - j - r - 1, d - r))).to_integer("det_rows_interval_cols_punctured");
}

// ---------------------------------------------------------------------------
// Almost consecutive rows, consecutive columns

/// Rows [i, i+d-1] minus {i+r-1}, columns [j, j+d-2], j <= i:
/// pi * C(d-1, r-1).
inline ExactInt det_rows_punctured_cols_interval(index_t i, index_t d, index_t j, index_t r) {
  if (d < 2 || j < 0 || r < 1 || r > d) {
    throw PreconditionError("det_rows_punctured_cols_interval: need d >= 2, j >= 0, 1 <= r <= d");
  }
  if (j > i) throw PreconditionError("det_rows_punctured_cols_interval: need j <= i");
  const IndexSet rows = IntervalSpec(i, i + d - 1, i + r - 1).materialize();
  const IndexSet cols = IndexSet::interval(j, j + d - 2);
  return (pi(rows, cols) * ExactRat(binom(d - 1, r - 1))).to_integer("det_rows_punctured_cols_interval");
}

/// The (rows, cols) pairs whose determinants add up to b^{[i,i+d-1]\{i+r-1}}_J
/// for J = {0, j_2, ..., j_{d-1}} <= [i, i+d-2]. Two pairs for 2 <= r <= d-1,
/// a single pair for r = 1 and r = d.
inline std::vector<std::pair<IndexSet, IndexSet>> binomial_sum_split(index_t i, index_t d,
                                                                     const IndexSet& cols, index_t r) {
  if (d < 3) throw PreconditionError("binomial_sum_split: need d >= 3");
  if (r < 1 || r > d) throw PreconditionError("binomial_sum_split: r outside [1, d]");
  if (cols.size() != static_cast<std::size_t>(d - 1)) {
    throw PreconditionError("binomial_sum_split: |J| must be d - 1");
  }
  if (cols.front() != 0) throw PreconditionError("binomial_sum_split: j_1 must be 0");
  if (!leq(cols, IndexSet::interval(i, i + d - 2))) {
    throw PreconditionError("binomial_sum_split: J is not <= [i, i+d-2]");
  }
  const IndexSet tail = shift_down(cols.tail(1), 1);
  if (r == 1) return {{IndexSet::interval(i + 1, i + d - 2), tail}};
  if (r == d) return {{IndexSet::interval(i, i + d - 3), tail}};
  const IndexSet base = IndexSet::interval(i, i + d - 2);
  return {{base.without(i + r - 1), tail}, {base.without(i + r - 2), tail}};
}

// ---------------------------------------------------------------------------
// Nested tuple count

namespace detail {

inline ExactInt count_chains(const std::vector<index_t>& seq) {
  const std::size_t m = seq.size();
  if (m <= 1) return 1;
  // last level: k_{d-1,d} ranges over [a, b-1]
  if (m == 2) return seq[1] - seq[0];
  std::vector<index_t> k(m - 1);
  for (std::size_t s = 0; s + 1 < m; ++s) k[s] = seq[s];
  ExactInt total = 0;
  while (true) {
    total += count_chains(k);
    std::size_t pos = m - 1;
    while (pos > 0 && k[pos - 1] == seq[pos] - 1) {
      k[pos - 1] = seq[pos - 1];
      --pos;
    }
    if (pos == 0) break;
    ++k[pos - 1];
  }
  return total;
}

}  // namespace detail

/// Counts nested tuple chains: level one ranges over
/// [i_1, i_2-1] x ... x [i_{d-1}, i_d-1], each further level over the gaps
/// of the previous tuple, down to a single coordinate.
inline ExactInt counting_identity_lhs(const IndexSet& rows, std::size_t cap = kDefaultTermCap) {
  if (rows.empty()) throw PreconditionError("counting_identity_lhs: empty set");
  // every later level is no wider than the first
  if (expansion_term_count(rows) > cap) {
    throw CapExceeded("counting_identity_lhs: " + std::to_string(expansion_term_count(rows)) +
                      " first-level tuples exceed cap " + std::to_string(cap));
  }
  return detail::count_chains(std::vector<index_t>(rows.begin(), rows.end()));
}

/// Vandermonde(I) / prod_{k<d} k!.
inline ExactInt counting_identity_rhs(const IndexSet& rows) {
  return exact_div(vandermonde(rows), superfactorial(static_cast<index_t>(rows.size()) - 1),
                   "counting_identity_rhs");
}

// ---------------------------------------------------------------------------
// Shape recognition for the punctured formulas

/// Parameters (i, d, j, r) of a punctured-interval formula.
struct PuncturedParams {
  index_t i = 0;
  index_t d = 0;
  index_t j = 0;
  index_t r = 0;
};

/// rows = [i, i+d-2], cols = [j, j+d-1] \ {j+r-1}, j <= i-1.
inline std::optional<PuncturedParams> match_rows_almost_cols(const IndexSet& rows, const IndexSet& cols) {
  if (rows.size() != cols.size() || rows.empty() || !rows.is_interval()) return std::nullopt;
  const index_t i = rows.front();
  const auto d = static_cast<index_t>(rows.size()) + 1;
  std::vector<PuncturedParams> candidates;
  if (auto spec = IntervalSpec::recognize(cols)) {
    if (spec->punctured_at) {
      candidates.push_back({i, d, spec->lo, *spec->punctured_at - spec->lo + 1});
    } else {
      candidates.push_back({i, d, spec->lo, d});
      if (spec->lo >= 1) candidates.push_back({i, d, spec->lo - 1, 1});
    }
  }
  for (const auto& c : candidates)
    if (c.j <= c.i - 1) return c;
  return std::nullopt;
}

/// rows = [i, i+d-1] \ {i+r-1}, cols = [j, j+d-2], j <= i.
inline std::optional<PuncturedParams> match_almost_rows_cols(const IndexSet& rows, const IndexSet& cols) {
  if (rows.size() != cols.size() || rows.empty() || !cols.is_interval()) return std::nullopt;
  const index_t j = cols.front();
  const auto d = static_cast<index_t>(cols.size()) + 1;
  std::vector<PuncturedParams> candidates;
  if (auto spec = IntervalSpec::recognize(rows)) {
    if (spec->punctured_at) {
      candidates.push_back({spec->lo, d, j, *spec->punctured_at - spec->lo + 1});
    } else {
      candidates.push_back({spec->lo, d, j, d});
      if (spec->lo >= 1) candidates.push_back({spec->lo - 1, d, j, 1});
    }
  }
  for (const auto& c : candidates)
    if (c.j <= c.i) return c;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Dispatcher

inline bool method_applicable(Method m, const IndexSet& rows, const IndexSet& cols,
                              const EvalOptions& opts = {}) {
  if (rows.size() != cols.size() || rows.empty()) return false;
  switch (m) {
    case Method::automatic:
    case Method::oracle:
      return true;
    case Method::zero_rule:
      return !leq(cols, rows);
    case Method::identity_rule:
      return rows == cols;
    case Method::reduce_shift:
      return leq(cols, rows);
    case Method::size_reduction:
      return rows.size() >= 2 && leq(cols, rows) && expansion_term_count(rows) <= opts.term_cap;
    case Method::cols_interval:
      return cols.is_interval();
    case Method::rows_interval:
      return rows.is_interval() && leq(cols, rows);
    case Method::moh:
      return rows.is_interval() && cols.is_interval();
    case Method::rows_almost_cols:
      return match_rows_almost_cols(rows, cols).has_value();
    case Method::almost_rows_cols:
      return match_almost_rows_cols(rows, cols).has_value();
  }
  return false;
}

inline Method choose_method(const IndexSet& rows, const IndexSet& cols, const EvalOptions& opts = {}) {
  if (!leq(cols, rows)) return Method::zero_rule;
  if (rows == cols) return Method::identity_rule;
  if (rows.is_interval() && cols.is_interval()) return Method::moh;
  if (rows.is_interval()) return Method::rows_interval;
  if (cols.is_interval()) return Method::cols_interval;
  if (match_rows_almost_cols(rows, cols)) return Method::rows_almost_cols;
  if (match_almost_rows_cols(rows, cols)) return Method::almost_rows_cols;
  if (rows.size() >= 2 && expansion_term_count(rows) <= opts.auto_expand_limit) return Method::size_reduction;
  return Method::oracle;
}

/// b^I_J by the requested (or automatically chosen) method.
inline EvalReport det(const IndexSet& rows, const IndexSet& cols, Method method = Method::automatic,
                      const EvalOptions& opts = {}) {
  detail::require_square_pair(rows, cols, "det");
  if (method == Method::automatic) {
    method = choose_method(rows, cols, opts);
  } else if (!method_applicable(method, rows, cols, opts)) {
    throw PreconditionError("det: method " + std::string(to_string(method)) + " does not apply to I = {" +
                            rows.str() + "}, J = {" + cols.str() + "}");
  }

  EvalReport rep{rows, cols, 0, method, ExactRat{1}};
  const auto d = static_cast<index_t>(rows.size());
  switch (method) {
    case Method::automatic:
      break;
    case Method::oracle:
      rep.value = oracle_det(rows, cols);
      break;
    case Method::zero_rule:
      rep.value = 0;
      break;
    case Method::identity_rule:
      rep.value = 1;
      break;
    case Method::reduce_shift: {
      const ShiftReduction sr = reduce_shift(rows, cols);
      rep.pi_factor = sr.pi;
      rep.value = (sr.pi * ExactRat(det(sr.rows, sr.cols, Method::automatic, opts).value))
                      .to_integer("reduce_shift");
      break;
    }
    case Method::size_reduction: {
      rep.pi_factor = pi(rows, cols);
      ExactInt sum = 0;
      for (const auto& term : size_reduction_expand(rows, cols, opts.term_cap))
        sum += det(term.reduced_rows, term.reduced_cols, Method::automatic, opts).value;
      rep.value = (rep.pi_factor * ExactRat(sum)).to_integer("size_reduction");
      break;
    }
    case Method::cols_interval:
      rep.pi_factor = pi(rows, cols);
      rep.value = det_cols_interval(rows, cols.front());
      break;
    case Method::rows_interval:
      rep.pi_factor = pi(rows, cols);
      rep.value = det_rows_interval(rows.front(), d, cols);
      break;
    case Method::moh:
      rep.pi_factor = pi(rows, cols);
      rep.value = det_moh(rows.front(), cols.front(), d);
      break;
    case Method::rows_almost_cols: {
      const auto p = *match_rows_almost_cols(rows, cols);
      rep.pi_factor = pi(rows, cols);
      rep.value = det_rows_interval_cols_punctured(p.i, p.d, p.j, p.r);
      break;
    }
    case Method::almost_rows_cols: {
      const auto p = *match_almost_rows_cols(rows, cols);
      rep.pi_factor = pi(rows, cols);
      rep.value = det_rows_punctured_cols_interval(p.i, p.d, p.j, p.r);
      break;
    }
  }
  return rep;
}

}  // namespace binomdet
