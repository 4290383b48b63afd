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
 * Seeded identity checks against the oracle.
 *
 * Every random instance is a pure function of (seed, shape, draw counter),
 * so trials can run on any number of threads and a failure can be
 * replayed from its printed command line alone. Reports list failures in
 * draw-counter order regardless of scheduling.
 *
 * Suites:
 *   oracle-equivalence       every applicable closed form == det_bareiss
 *   positivity               det >= 0, and det > 0 iff J <= I (plus an exhaustive sweep)
 *   size-reduction-sum       pi * sum of expansion terms == det
 *   max-rank                 d x d minors of B^{[i,i+d-1]}_{[0,i+d-1]} are non-zero
 *   nullspace-annihilation   Cramer and lambda generators annihilate and agree
 *   interchange              q^J_I(n) b^{n-J}_{n-I} == b^I_J and the shifted form
 *   pi-product               pi product == det; which column-product reading matches
 *   counting-identity        nested tuple count == Vandermonde / superfactorial
 *   counterexample-fixtures  fixed reference values
 */

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "binomdet/binomial.hpp"
#include "binomdet/errors.hpp"
#include "binomdet/exact.hpp"
#include "binomdet/formulas.hpp"
#include "binomdet/indexsets.hpp"
#include "binomdet/interchange.hpp"
#include "binomdet/nullspace.hpp"
#include "binomdet/oracle.hpp"

namespace binomdet {

enum class Shape {
  general,
  J_leq_I,
  rows_interval,
  cols_interval,
  both_intervals,
  punctured_rows,
  punctured_cols,
  nullspace_family,
};

inline constexpr std::pair<Shape, std::string_view> kShapeNames[] = {
    {Shape::general, "general"},
    {Shape::J_leq_I, "J_leq_I"},
    {Shape::rows_interval, "rows_interval"},
    {Shape::cols_interval, "cols_interval"},
    {Shape::both_intervals, "both_intervals"},
    {Shape::punctured_rows, "punctured_rows"},
    {Shape::punctured_cols, "punctured_cols"},
    {Shape::nullspace_family, "nullspace_family"},
};

inline std::string_view to_string(Shape s) {
  for (const auto& [shape, name] : kShapeNames)
    if (shape == s) return name;
  return "unknown";
}

inline std::optional<Shape> shape_from_string(std::string_view name) {
  for (const auto& [shape, n] : kShapeNames)
    if (n == name) return shape;
  return std::nullopt;
}

/// One generated problem. `n` and `m` satisfy m >= n >= max(I, J).
struct Instance {
  Shape shape = Shape::general;
  std::uint64_t counter = 0;
  IndexSet rows;
  IndexSet cols;
  index_t n = 0;
  index_t m = 0;

  std::string str() const {
    return "rows=" + rows.str() + " cols=" + cols.str() + " n=" + std::to_string(n) + " m=" + std::to_string(m);
  }
};

/// Indices stay within [0, max_index], except for nullspace_family where
/// max_index bounds the family parameter i (rows run to i + d - 1).
struct InstanceGen {
  std::uint64_t seed = 1;
  index_t max_d = 6;
  index_t max_index = 20;
  Shape shape = Shape::J_leq_I;

  Instance draw(std::uint64_t counter) const { return draw(shape, counter); }

  /// Deterministic in (seed, shape, counter).
  Instance draw(Shape s, std::uint64_t counter) const {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(counter),
                      static_cast<std::uint32_t>(counter >> 32)};
    std::mt19937_64 rng(seq);
    auto uniform = [&](index_t lo, index_t hi) {
      return std::uniform_int_distribution<index_t>(lo, std::max(lo, hi))(rng);
    };
    const index_t top = std::max<index_t>(max_index, 1);
    const index_t dmax = std::clamp<index_t>(max_d, 1, top + 1);

    auto subset = [&](index_t d) {
      std::vector<index_t> pool(static_cast<std::size_t>(top + 1));
      for (index_t v = 0; v <= top; ++v) pool[static_cast<std::size_t>(v)] = v;
      for (index_t t = 0; t < d; ++t) {
        const index_t pick = uniform(t, top);
        std::swap(pool[static_cast<std::size_t>(t)], pool[static_cast<std::size_t>(pick)]);
      }
      std::vector<index_t> out(pool.begin(), pool.begin() + d);
      std::sort(out.begin(), out.end());
      return IndexSet::from(out);
    };
    // J componentwise in [previous + 1, i_t]
    auto below = [&](const IndexSet& rows) {
      std::vector<index_t> out;
      index_t prev = -1;
      for (index_t i : rows) {
        prev = uniform(prev + 1, i);
        out.push_back(prev);
      }
      return IndexSet::from(out);
    };

    Instance inst;
    inst.shape = s;
    inst.counter = counter;
    switch (s) {
      case Shape::general: {
        const index_t d = uniform(1, dmax);
        inst.rows = subset(d);
        inst.cols = subset(d);
        break;
      }
      case Shape::J_leq_I: {
        inst.rows = subset(uniform(1, dmax));
        inst.cols = below(inst.rows);
        break;
      }
      case Shape::rows_interval: {
        const index_t d = uniform(1, dmax);
        const index_t i = uniform(0, top - d + 1);
        inst.rows = IndexSet::interval(i, i + d - 1);
        inst.cols = below(inst.rows);
        break;
      }
      case Shape::cols_interval: {
        inst.rows = subset(uniform(1, dmax));
        const index_t j = uniform(0, inst.rows.front());
        inst.cols = IndexSet::interval(j, j + static_cast<index_t>(inst.rows.size()) - 1);
        break;
      }
      case Shape::both_intervals: {
        const index_t d = uniform(1, dmax);
        const index_t i = uniform(0, top - d + 1);
        const index_t j = uniform(0, i);
        inst.rows = IndexSet::interval(i, i + d - 1);
        inst.cols = IndexSet::interval(j, j + d - 1);
        break;
      }
      case Shape::punctured_rows: {
        // [i, i+d-1] \ {i+r-1} against [j, j+d-2], j <= i
        const index_t d = uniform(2, std::max<index_t>(2, std::min(dmax + 1, top + 1)));
        const index_t i = uniform(0, std::max<index_t>(0, top - d + 1));
        const index_t r = uniform(1, d);
        const index_t j = uniform(0, i);
        inst.rows = IntervalSpec(i, i + d - 1, i + r - 1).materialize();
        inst.cols = IndexSet::interval(j, j + d - 2);
        break;
      }
      case Shape::punctured_cols: {
        // [i, i+d-2] against [j, j+d-1] \ {j+r-1}, j <= i-1
        const index_t d = uniform(2, std::max<index_t>(2, std::min(dmax + 1, top)));
        const index_t i = uniform(1, std::max<index_t>(1, top - d + 2));
        const index_t r = uniform(1, d);
        const index_t j = uniform(0, i - 1);
        inst.rows = IndexSet::interval(i, i + d - 2);
        inst.cols = IntervalSpec(j, j + d - 1, j + r - 1).materialize();
        break;
      }
      case Shape::nullspace_family: {
        // [i, i+d-1] against {0} u [j, j+d-3], 1 <= j <= i+1
        const index_t d = uniform(3, std::max<index_t>(3, dmax));
        const index_t i = uniform(0, top);
        const index_t j = uniform(1, i + 1);
        auto [rows, cols] = lambda_family(i, d, j);
        inst.rows = std::move(rows);
        inst.cols = std::move(cols);
        break;
      }
    }
    const index_t hi = std::max(inst.rows.back(), inst.cols.back());
    inst.n = uniform(hi, hi + 5);
    inst.m = uniform(inst.n, inst.n + 5);
    return inst;
  }
};

struct SuiteFailure {
  std::string instance;
  std::string expected;
  std::string got;
  std::string replay;
};

struct SuiteReport {
  std::string suite;
  std::size_t trials = 0;
  std::size_t checks = 0;
  std::vector<SuiteFailure> failures;
  std::vector<std::string> notes;
  double elapsed_ms = 0;

  bool passed() const { return failures.empty(); }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "oracle-equivalence", "positivity",  "size-reduction-sum", "max-rank",
      "nullspace-annihilation", "interchange", "pi-product", "counting-identity",
      "counterexample-fixtures"};
  return names;
}

/// Trial counts used when none is given.
inline std::size_t default_trials(std::string_view suite) {
  if (suite == "oracle-equivalence") return 1000;
  if (suite == "nullspace-annihilation") return 300;
  if (suite == "pi-product") return 100;
  if (suite == "counterexample-fixtures") return 0;
  return 500;
}

namespace detail {

inline std::string det_replay(const IndexSet& rows, const IndexSet& cols, std::string_view method = "auto") {
  return "binomdet det --rows " + rows.str() + " --cols " + cols.str() + " --method " + std::string(method) +
         " --format json";
}

/// Collects outcomes of one trial (or one fixed check).
struct Checker {
  std::vector<SuiteFailure> failures;
  std::size_t checks = 0;
  std::map<std::string, std::size_t> tallies;

  template <typename A, typename B>
  void expect_eq(const A& expected, const B& got, const std::string& instance, const std::string& replay) {
    ++checks;
    if (!(expected == got)) failures.push_back({instance, to_text(expected), to_text(got), replay});
  }
  void expect(bool ok, const std::string& instance, const std::string& expected, const std::string& got,
              const std::string& replay) {
    ++checks;
    if (!ok) failures.push_back({instance, expected, got, replay});
  }

  static std::string to_text(const ExactInt& v) { return v.str(); }
  static std::string to_text(const ExactRat& v) { return v.str(); }
  static std::string to_text(bool v) { return v ? "true" : "false"; }
  static std::string to_text(std::size_t v) { return std::to_string(v); }
  static std::string to_text(const std::string& v) { return v; }
  static std::string to_text(const IndexSet& v) { return "{" + v.str() + "}"; }
};

using TrialFn = std::function<void(std::uint64_t counter, Checker&)>;

/// Runs fn for counters 0..trials-1 on `threads` workers and merges the
/// results in counter order.
inline void run_trials(std::size_t trials, unsigned threads, const TrialFn& fn, SuiteReport& report,
                       std::map<std::string, std::size_t>& tallies) {
  std::vector<Checker> results(trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < trials; t = next++) {
      try {
        fn(t, results[t]);
      } catch (const std::exception& e) {
        results[t].failures.push_back({"trial " + std::to_string(t), "no exception", e.what(), ""});
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(trials, 1))));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& r : results) {
    report.checks += r.checks;
    for (auto& f : r.failures) report.failures.push_back(std::move(f));
    for (const auto& [k, v] : r.tallies) tallies[k] += v;
  }
}

inline void merge(Checker& c, SuiteReport& report, std::map<std::string, std::size_t>& tallies) {
  report.checks += c.checks;
  for (auto& f : c.failures) report.failures.push_back(std::move(f));
  for (const auto& [k, v] : c.tallies) tallies[k] += v;
}

// --- oracle-equivalence -----------------------------------------------------

inline constexpr Shape kMixedShapes[] = {Shape::J_leq_I,      Shape::rows_interval,  Shape::cols_interval,
                                         Shape::both_intervals, Shape::punctured_rows, Shape::punctured_cols};

inline void check_oracle_equivalence(const Instance& inst, Checker& c) {
  const IndexSet& rows = inst.rows;
  const IndexSet& cols = inst.cols;
  const ExactInt expected = oracle_det(rows, cols);
  const std::string where = inst.str();
  for (const auto& [method, name] : kMethodNames) {
    if (method == Method::oracle) continue;
    if (!method_applicable(method, rows, cols)) continue;
    const EvalReport rep = det(rows, cols, method);
    c.expect_eq(expected, rep.value, where + " method=" + std::string(name), det_replay(rows, cols, name));
    ++c.tallies[std::string(method == Method::automatic ? "auto:" + std::string(to_string(rep.method)) : name)];
  }
  // parameterised forms, called directly
  if (rows.is_interval() && cols.is_interval()) {
    c.expect_eq(expected, det_moh(rows.front(), cols.front(), static_cast<index_t>(rows.size())),
                where + " det_moh", det_replay(rows, cols, "moh"));
  }
  if (rows.is_interval()) {
    c.expect_eq(expected, det_rows_interval(rows.front(), static_cast<index_t>(rows.size()), cols),
                where + " det_rows_interval", det_replay(rows, cols, "rows_interval"));
  }
  if (cols.is_interval()) {
    c.expect_eq(expected, det_cols_interval(rows, cols.front()), where + " det_cols_interval",
                det_replay(rows, cols, "cols_interval"));
  }
  if (auto p = match_rows_almost_cols(rows, cols)) {
    c.expect_eq(expected, det_rows_interval_cols_punctured(p->i, p->d, p->j, p->r),
                where + " det_rows_interval_cols_punctured", det_replay(rows, cols, "rows_almost_cols"));
    if (p->j == 0 && p->i >= 1) {
      c.expect_eq(expected, det_punctured_prefix(p->i, p->d, p->r), where + " det_punctured_prefix",
                  det_replay(rows, cols, "oracle"));
      ++c.tallies["det_punctured_prefix"];
    }
  }
  if (auto p = match_almost_rows_cols(rows, cols)) {
    c.expect_eq(expected, det_rows_punctured_cols_interval(p->i, p->d, p->j, p->r),
                where + " det_rows_punctured_cols_interval", det_replay(rows, cols, "almost_rows_cols"));
    if (p->j == 0 && p->d >= 3) {
      ExactInt sum = 0;
      for (const auto& [r2, c2] : binomial_sum_split(p->i, p->d, cols, p->r)) sum += oracle_det(r2, c2);
      c.expect_eq(expected, sum, where + " binomial_sum_split", det_replay(rows, cols, "oracle"));
      ++c.tallies["binomial_sum_split"];
    }
  }
}

// --- positivity ---------------------------------------------------------------

inline void check_positivity(const IndexSet& rows, const IndexSet& cols, Checker& c) {
  const ExactInt via_oracle = oracle_det(rows, cols);
  const ExactInt via_auto = det(rows, cols).value;
  const bool below = leq(cols, rows);
  const std::string where = "rows=" + rows.str() + " cols=" + cols.str();
  c.expect_eq(via_oracle, via_auto, where + " auto vs oracle", det_replay(rows, cols));
  c.expect(via_oracle >= 0, where, ">= 0", via_oracle.str(), det_replay(rows, cols, "oracle"));
  c.expect((via_oracle > 0) == below, where, below ? "> 0 (J <= I)" : "0 (J not <= I)", via_oracle.str(),
           det_replay(rows, cols, "oracle"));
}

inline std::vector<IndexSet> all_subsets(index_t universe, std::size_t size) {
  std::vector<IndexSet> out;
  std::vector<index_t> cur;
  std::function<void(index_t)> rec = [&](index_t start) {
    if (cur.size() == size) {
      out.push_back(IndexSet::from(cur));
      return;
    }
    for (index_t v = start; v < universe; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

inline constexpr int kCountingEnumerationLimit = 2'000'000;
inline constexpr index_t kPositivitySweepUniverse = 8;  // indices < 8
inline constexpr std::size_t kPositivitySweepMaxD = 4;

// --- nullspace ----------------------------------------------------------------

inline std::vector<ExactInt> to_ints(const std::vector<index_t>& v) { return {v.begin(), v.end()}; }

inline std::string ints_text(const std::vector<ExactInt>& v) {
  std::string s;
  for (std::size_t t = 0; t < v.size(); ++t) s += (t ? "," : "") + v[t].str();
  return s;
}

inline std::string nullspace_replay(const IndexSet& rows, const IndexSet& cols) {
  return "binomdet nullspace --rows " + rows.str() + " --cols " + cols.str() + " --format json";
}

/// The three worked generator patterns for 2 <= d <= max_d + 1.
inline void check_worked_nullspace_examples(index_t max_d, Checker& c) {
  for (index_t d = 2; d <= max_d; ++d) {
    // I = [0, d-1], J = [0, d-2]: (-1)^(r-1) C(d-1, r-1)
    {
      const IndexSet rows = IndexSet::interval(0, d - 1);
      const IndexSet cols = IndexSet::interval(0, d - 2);
      std::vector<ExactInt> want;
      for (index_t r = 1; r <= d; ++r) want.push_back(r % 2 ? binom(d - 1, r - 1) : ExactInt(-binom(d - 1, r - 1)));
      const auto got = nullspace_cramer(rows, cols).integral_coeffs();
      c.expect(got == want, "alternating row d=" + std::to_string(d), ints_text(want), ints_text(got),
               nullspace_replay(rows, cols));
      if (d >= 3) {
        const auto lam = nullspace_lambda(0, d, 1).vector.integral_coeffs();
        c.expect(lam == want, "alternating row (lambda) d=" + std::to_string(d), ints_text(want), ints_text(lam),
                 nullspace_replay(rows, cols));
      }
    }
    // I = [1, d], J = {0} u [2, d-1]: C(d-1,1) u_1 + sum_{r>=2} (-1)^(r-1) C(d, r) u_r
    if (d >= 3) {
      const auto lam = nullspace_lambda(1, d, 2);
      std::vector<ExactInt> want{binom(d - 1, 1)};
      for (index_t r = 2; r <= d; ++r) want.push_back(r % 2 ? binom(d, r) : ExactInt(-binom(d, r)));
      const auto got = lam.vector.integral_coeffs();
      const auto [rows, cols] = lambda_family(1, d, 2);
      c.expect(got == want, "b_{d-1,1}/b_{d,r} pattern d=" + std::to_string(d), ints_text(want), ints_text(got),
               nullspace_replay(rows, cols));
    }
    // I = [0, d-1], J = {0} u [2, d-1]: u_1 - u_2
    {
      const IndexSet rows = IndexSet::interval(0, d - 1);
      std::vector<index_t> cv{0};
      for (index_t v = 2; v <= d - 1; ++v) cv.push_back(v);
      const IndexSet cols = IndexSet::from(cv);
      std::vector<ExactInt> want(static_cast<std::size_t>(d), 0);
      want[0] = 1;
      want[1] = -1;
      const auto got = nullspace_cramer(rows, cols).integral_coeffs();
      c.expect(got == want, "u1 - u2 d=" + std::to_string(d), ints_text(want), ints_text(got),
               nullspace_replay(rows, cols));
    }
  }
}

// --- fixtures -------------------------------------------------------------------

inline void check_fixtures(Checker& c) {
  const auto D = [](std::initializer_list<index_t> r, std::initializer_list<index_t> k) {
    return det(IndexSet::from(r), IndexSet::from(k)).value;
  };
  const auto replay = [](std::string_view r, std::string_view k) {
    return "binomdet det --rows " + std::string(r) + " --cols " + std::string(k) + " --format json";
  };
  c.expect_eq(ExactInt(2), D({2, 3}, {0, 2}), "b^{[2,3]}_{{0,2}}", replay("2..3", "0,2"));
  c.expect_eq(ExactInt(2), D({1, 3}, {0, 1}), "b^{{1,3}}_{[0,1]}", replay("1,3", "0..1"));
  c.expect_eq(ExactInt(1), D({3}, {0}), "b^{{3}}_{{0}}", replay("3", "0"));
  c.expect(D({2, 3}, {0, 2}) != D({3}, {0}), "interval-difference identity must fail off intervals", "2 != 1",
           D({2, 3}, {0, 2}).str() + " vs " + D({3}, {0}).str(), "");
  c.expect_eq(ExactRat(3, 2), pi(IndexSet::from({1, 3}), IndexSet::interval(1, 2)), "pi^{{1,3}}_{[1,2]}", "");
  c.expect_eq(ExactRat(20, 3), pi(IndexSet::interval(4, 5), IndexSet::from({1, 3})), "pi^{[4,5]}_{{1,3}}", "");
  for (index_t i = 1; i <= 5; ++i) {
    for (index_t d = 1; d <= 5; ++d) {
      const IndexSet rows = IndexSet::interval(i, i + d - 1);
      const IndexSet cols = IndexSet::interval(1, d);
      c.expect_eq(binom(i + d - 1, d), det(rows, cols).value,
                  "b^{[" + std::to_string(i) + "," + std::to_string(i + d - 1) + "]}_{[1," + std::to_string(d) + "]}",
                  det_replay(rows, cols));
    }
  }
  {
    const auto terms = size_reduction_expand(IndexSet::from({3, 5, 7, 8}), IndexSet::from({0, 3, 5, 7}));
    std::vector<IndexSet> got;
    for (const auto& t : terms) got.push_back(t.ks);
    const std::vector<IndexSet> want{IndexSet::from({3, 5, 7}), IndexSet::from({3, 6, 7}), IndexSet::from({4, 5, 7}),
                                     IndexSet::from({4, 6, 7})};
    c.expect(got == want, "expansion of (3,5,7,8 / 0,3,5,7)", "(3,5,7),(3,6,7),(4,5,7),(4,6,7)",
             std::to_string(got.size()) + " terms", "binomdet expand --rows 3,5,7,8 --cols 0,3,5,7");
    bool cols_ok = true;
    for (const auto& t : terms) cols_ok = cols_ok && t.reduced_cols == IndexSet::from({2, 4, 6});
    c.expect(cols_ok, "expansion columns", "{2,4,6}", cols_ok ? "{2,4,6}" : "other", "");
  }
  {
    const auto terms = size_reduction_expand(IndexSet::from({1, 5, 7, 8}), IndexSet::from({0, 3, 5, 7}));
    c.expect_eq(std::size_t{8}, terms.size(), "expansion of (1,5,7,8 / 0,3,5,7) term count",
                "binomdet expand --rows 1,5,7,8 --cols 0,3,5,7");
    if (terms.size() == 8) {
      c.expect_eq(ExactInt(0), det(terms[0].ks, terms[0].reduced_cols).value, "first summand", "");
      c.expect_eq(ExactInt(0), det(terms[1].ks, terms[1].reduced_cols).value, "second summand", "");
      bool rest_positive = true;
      for (std::size_t t = 2; t < 8; ++t) rest_positive = rest_positive && det(terms[t].ks, terms[t].reduced_cols).value > 0;
      c.expect(rest_positive, "remaining summands", "> 0", rest_positive ? "> 0" : "some zero", "");
    }
  }
}

}  // namespace detail

/// Runs the named suite. `trials` drives the random part; exhaustive and
/// fixed parts of a suite always run in full. Unknown names throw
/// std::invalid_argument.
inline SuiteReport run_suite(std::string_view name, const InstanceGen& gen, std::size_t trials,
                             unsigned threads = 1) {
  using detail::Checker;
  SuiteReport report;
  report.suite = std::string(name);
  report.trials = trials;
  std::map<std::string, std::size_t> tallies;
  const auto start = std::chrono::steady_clock::now();

  if (name == "oracle-equivalence") {
    detail::run_trials(
        trials, threads,
        [&](std::uint64_t t, Checker& c) {
          const Shape s = detail::kMixedShapes[t % std::size(detail::kMixedShapes)];
          detail::check_oracle_equivalence(gen.draw(s, t), c);
        },
        report, tallies);
  } else if (name == "positivity") {
    Checker sweep;
    for (std::size_t d = 1; d <= detail::kPositivitySweepMaxD; ++d) {
      const auto sets = detail::all_subsets(detail::kPositivitySweepUniverse, d);
      for (const auto& rows : sets)
        for (const auto& cols : sets) detail::check_positivity(rows, cols, sweep);
    }
    detail::merge(sweep, report, tallies);
    report.notes.push_back("exhaustive sweep: indices < " + std::to_string(detail::kPositivitySweepUniverse) +
                           ", d <= " + std::to_string(detail::kPositivitySweepMaxD));
    detail::run_trials(
        trials, threads,
        [&](std::uint64_t t, Checker& c) {
          const Instance inst = gen.draw(t % 2 ? Shape::J_leq_I : Shape::general, t);
          detail::check_positivity(inst.rows, inst.cols, c);
        },
        report, tallies);
  } else if (name == "size-reduction-sum") {
    detail::run_trials(
        trials, threads,
        [&](std::uint64_t t, Checker& c) {
          Instance inst = gen.draw(Shape::J_leq_I, t);
          if (inst.rows.size() < 2) return;
          if (expansion_term_count(inst.rows) > kDefaultTermCap) return;
          ExactInt sum = 0;
          for (const auto& term : size_reduction_expand(inst.rows, inst.cols))
            sum += oracle_det(term.reduced_rows, term.reduced_cols);
          const ExactRat lhs = pi(inst.rows, inst.cols) * ExactRat(sum);
          c.expect_eq(ExactRat(oracle_det(inst.rows, inst.cols)), lhs, inst.str(),
                      "binomdet expand --rows " + inst.rows.str() + " --cols " + inst.cols.str() + " --format json");
        },
        report, tallies);
  } else if (name == "max-rank") {
    Checker sweep;
    for (index_t i = 0; i <= 8; ++i) {
      for (index_t d = 1; d <= 4; ++d) {
        const IndexSet rows = IndexSet::interval(i, i + d - 1);
        for (const auto& cols : detail::all_subsets(i + d, static_cast<std::size_t>(d))) {
          const ExactInt v = oracle_det(rows, cols);
          sweep.expect(v > 0, "rows=" + rows.str() + " cols=" + cols.str(), "> 0", v.str(),
                       detail::det_replay(rows, cols, "oracle"));
        }
      }
    }
    detail::merge(sweep, report, tallies);
    report.notes.push_back("exhaustive: every d x d minor for i <= 8, d <= 4");
    detail::run_trials(
        trials, threads,
        [&](std::uint64_t t, Checker& c) {
          std::seed_seq seq{static_cast<std::uint32_t>(gen.seed), static_cast<std::uint32_t>(t), 0x5eedu};
          std::mt19937_64 rng(seq);
          const index_t d = std::uniform_int_distribution<index_t>(1, std::max<index_t>(1, gen.max_d))(rng);
          const index_t i = std::uniform_int_distribution<index_t>(0, std::min<index_t>(gen.max_index, 10))(rng);
          const IndexSet rows = IndexSet::interval(i, i + d - 1);
          const auto full = submatrix(rows, IndexSet::interval(0, i + d - 1));
          c.expect_eq(static_cast<std::size_t>(d), rank(full.entries),
                      "rank B^{[" + std::to_string(i) + "," + std::to_string(i + d - 1) + "]}_{[0," +
                          std::to_string(i + d - 1) + "]}",
                      "");
        },
        report, tallies);
  } else if (name == "nullspace-annihilation") {
    Checker fixed;
    detail::check_worked_nullspace_examples(std::max<index_t>(gen.max_d, 7), fixed);
    detail::merge(fixed, report, tallies);
    detail::run_trials(
        trials, threads,
        [&](std::uint64_t t, Checker& c) {
          const Instance inst = gen.draw(Shape::nullspace_family, t);
          const auto i = inst.rows.front();
          const auto d = static_cast<index_t>(inst.rows.size());
          const auto j = inst.cols[1];
          const NullVector cramer = nullspace_cramer(inst.rows, inst.cols);
          const LambdaNullspace lam = nullspace_lambda(i, d, j);
          const std::string replay = detail::nullspace_replay(inst.rows, inst.cols);
          c.expect(annihilates(cramer, inst.rows, inst.cols), inst.str(), "cramer annihilates", "non-zero product",
                   replay);
          c.expect(annihilates(lam.vector, inst.rows, inst.cols), inst.str(), "lambda annihilates",
                   "non-zero product", replay);
          c.expect(proportional(cramer, lam.vector), inst.str(), "proportional", "not proportional", replay);
        },
        report, tallies);
  } else if (name == "interchange") {
    detail::run_trials(
        trials, threads,
        [&](std::uint64_t t, Checker& c) {
          const Instance inst = gen.draw(Shape::J_leq_I, t);
          const std::string replay = "binomdet interchange --rows " + inst.rows.str() + " --cols " +
                                     inst.cols.str() + " --n " + std::to_string(inst.n) + " --m " +
                                     std::to_string(inst.m) + " --format json";
          const ExactRat lhs(oracle_det(inst.rows, inst.cols));
          const InterchangeResult x = interchange(inst.rows, inst.cols, inst.n, false);
          c.expect_eq(lhs, x.q_factor * ExactRat(oracle_det(x.new_rows, x.new_cols)), inst.str() + " interchange",
                      replay);
          const ShiftedInterchange s = interchange_shift(inst.rows, inst.cols, inst.n, inst.m);
          c.expect_eq(lhs, s.factor * ExactRat(oracle_det(s.rows, s.cols)), inst.str() + " shifted", replay);
          c.expect_eq(ExactRat(1),
                      q_quotient(inst.cols, inst.rows, inst.n) * q_quotient(inst.rows, inst.cols, inst.n),
                      inst.str() + " q(J,I,n) q(I,J,n)", replay);
        },
        report, tallies);
  } else if (name == "pi-product") {
    detail::run_trials(
        trials, threads,
        [&](std::uint64_t t, Checker& c) {
          const Instance inst = gen.draw(Shape::rows_interval, t);
          const auto d = static_cast<index_t>(inst.rows.size());
          const PiProductReport rep = pi_product_identity(inst.rows.front(), d, inst.cols, inst.n);
          c.expect_eq(ExactRat(rep.determinant), rep.lhs, inst.str() + " product of pi vs det", "");
          c.expect(!rep.matching.empty(), inst.str(), "some reading matches", "none", "");
          for (const auto reading : rep.matching) ++c.tallies[std::string(to_string(reading))];
        },
        report, tallies);
    for (const auto reading : kProductReadings) {
      report.notes.push_back("reading " + std::string(to_string(reading)) + " matched " +
                             std::to_string(tallies[std::string(to_string(reading))]) + "/" +
                             std::to_string(trials));
    }
  } else if (name == "counting-identity") {
    Checker sweep;
    for (std::size_t d = 1; d <= 4; ++d) {
      for (const auto& rows : detail::all_subsets(13, d)) {
        sweep.expect_eq(counting_identity_rhs(rows), counting_identity_lhs(rows), "I=" + rows.str(), "");
      }
    }
    detail::merge(sweep, report, tallies);
    report.notes.push_back("exhaustive: d <= 4, indices <= 12");
    detail::run_trials(
        trials, threads,
        [&](std::uint64_t t, Checker& c) {
          const Instance inst = gen.draw(Shape::general, t);
          const IndexSet& rows = inst.rows;
          // enumeration visits about rhs / (i_d - i_{d-1}) leaves
          if (counting_identity_rhs(rows) > detail::kCountingEnumerationLimit) return;
          const ExactInt lhs = counting_identity_lhs(rows);
          c.expect_eq(counting_identity_rhs(rows), lhs, "I=" + rows.str(), "");
          const IndexSet cols = IndexSet::interval(0, static_cast<index_t>(rows.size()) - 1);
          c.expect_eq(oracle_det(rows, cols), lhs, "I=" + rows.str() + " vs det", detail::det_replay(rows, cols));
        },
        report, tallies);
  } else if (name == "counterexample-fixtures") {
    Checker fixed;
    detail::check_fixtures(fixed);
    detail::merge(fixed, report, tallies);
  } else {
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  }

  if (name == "oracle-equivalence") {
    for (const auto& [k, v] : tallies) report.notes.push_back(k + ": " + std::to_string(v));
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace binomdet
