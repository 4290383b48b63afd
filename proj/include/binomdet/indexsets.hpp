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
 * Index sets: strictly increasing lists of non-negative integers naming
 * rows or columns of the infinite binomial matrix (0-based).
 *
 * Text grammar (no whitespace):
 *
 *     set       := list | interval | punctured
 *     list      := int ("," int)*        "0,3,5,7"
 *     interval  := int ".." int          "2..6"   inclusive, empty if lo > hi
 *     punctured := interval "/" int      "2..6/4" one element removed
 */

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "binomdet/errors.hpp"
#include "binomdet/exact.hpp"

namespace binomdet {

class IndexSet {
 public:
  IndexSet() = default;

  /// Validating constructor; see make_indexset.
  static IndexSet from(std::span<const index_t> values) {
    for (std::size_t t = 0; t < values.size(); ++t) {
      if (values[t] < 0) {
        throw ValidationError("negative index " + std::to_string(values[t]) + " at position " +
                                  std::to_string(t),
                              t);
      }
      if (t > 0 && values[t] == values[t - 1]) {
        throw ValidationError("duplicate index " + std::to_string(values[t]) + " at position " +
                                  std::to_string(t),
                              t);
      }
      if (t > 0 && values[t] < values[t - 1]) {
        throw ValidationError("index " + std::to_string(values[t]) + " at position " +
                                  std::to_string(t) + " is not increasing",
                              t);
      }
    }
    IndexSet s;
    s.elems_.assign(values.begin(), values.end());
    return s;
  }
  static IndexSet from(std::initializer_list<index_t> values) {
    return from(std::span<const index_t>(values.begin(), values.size()));
  }

  /// [lo, hi]; empty when lo > hi.
  static IndexSet interval(index_t lo, index_t hi) {
    if (lo < 0) throw ValidationError("negative interval bound", 0);
    IndexSet s;
    for (index_t v = lo; v <= hi; ++v) s.elems_.push_back(v);
    return s;
  }

  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  index_t operator[](std::size_t t) const { return elems_[t]; }
  index_t front() const { return elems_.front(); }
  index_t back() const { return elems_.back(); }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }
  std::span<const index_t> values() const { return elems_; }

  bool contains(index_t v) const { return std::binary_search(elems_.begin(), elems_.end(), v); }

  /// True for a non-empty run of consecutive integers.
  bool is_interval() const {
    return !elems_.empty() &&
           elems_.back() - elems_.front() + 1 == static_cast<index_t>(elems_.size());
  }

  /// Copy with `v` removed; `v` must be a member.
  IndexSet without(index_t v) const {
    if (!contains(v)) throw PreconditionError("index " + std::to_string(v) + " not in set");
    IndexSet s;
    for (index_t e : elems_)
      if (e != v) s.elems_.push_back(e);
    return s;
  }

  /// Copy without the element at position t (0-based).
  IndexSet without_position(std::size_t t) const { return without(elems_.at(t)); }

  /// Elements [from, size) as a new set.
  IndexSet tail(std::size_t from) const {
    IndexSet s;
    if (from < elems_.size()) s.elems_.assign(elems_.begin() + static_cast<std::ptrdiff_t>(from), elems_.end());
    return s;
  }

  /// Each element increased by p.
  IndexSet shift_up(index_t p) const {
    if (p < 0) throw PreconditionError("negative shift");
    IndexSet s = *this;
    for (auto& e : s.elems_) e += p;
    return s;
  }

  /// Canonical list form "a,b,c" (empty string for the empty set).
  std::string str() const {
    std::string out;
    for (std::size_t t = 0; t < elems_.size(); ++t) {
      if (t) out += ',';
      out += std::to_string(elems_[t]);
    }
    return out;
  }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<index_t> elems_;
};

/// Builds an IndexSet from values that must already be strictly increasing
/// and non-negative; nothing is sorted.
inline IndexSet make_indexset(std::span<const index_t> values) { return IndexSet::from(values); }
inline IndexSet make_indexset(std::initializer_list<index_t> values) { return IndexSet::from(values); }

/// [lo, hi] with an optional single element removed.
struct IntervalSpec {
  index_t lo = 0;
  index_t hi = -1;
  std::optional<index_t> punctured_at;

  IntervalSpec() = default;
  IntervalSpec(index_t lo_, index_t hi_, std::optional<index_t> punct = std::nullopt)
      : lo(lo_), hi(hi_), punctured_at(punct) {
    if (lo < 0 || hi < -1) throw ValidationError("negative interval bound", 0);
    if (punctured_at && (*punctured_at < lo || *punctured_at > hi)) {
      throw ValidationError("puncture " + std::to_string(*punctured_at) + " outside [" +
                                std::to_string(lo) + "," + std::to_string(hi) + "]",
                            0);
    }
  }

  /// Number of elements before the puncture is removed.
  index_t width() const { return hi >= lo ? hi - lo + 1 : 0; }

  IndexSet materialize() const {
    IndexSet s = IndexSet::interval(lo, hi);
    return punctured_at ? s.without(*punctured_at) : s;
  }

  /// Inverse of materialize for sets that are intervals or intervals with
  /// one interior hole. An interval is always returned unpunctured.
  static std::optional<IntervalSpec> recognize(const IndexSet& s) {
    if (s.empty()) return std::nullopt;
    const auto n = static_cast<index_t>(s.size());
    const index_t span = s.back() - s.front() + 1;
    if (span == n) return IntervalSpec(s.front(), s.back());
    if (span != n + 1) return std::nullopt;
    index_t expect = s.front();
    for (index_t v : s) {
      if (v != expect) return IntervalSpec(s.front(), s.back(), expect);
      ++expect;
    }
    return std::nullopt;
  }

  friend bool operator==(const IntervalSpec&, const IntervalSpec&) = default;
};

/// J <= I: equal sizes and j_t <= i_t for every t.
inline bool leq(const IndexSet& j, const IndexSet& i) {
  if (j.size() != i.size()) {
    throw PreconditionError("leq: size mismatch (" + std::to_string(j.size()) + " vs " +
                            std::to_string(i.size()) + ")");
  }
  for (std::size_t t = 0; t < i.size(); ++t)
    if (j[t] > i[t]) return false;
  return true;
}

/// S - p: every element decreased by p, requires p <= min(S).
inline IndexSet shift_down(const IndexSet& s, index_t p) {
  if (p < 0) throw PreconditionError("shift_down: negative shift");
  if (!s.empty() && p > s.front()) {
    throw PreconditionError("shift_down: shift " + std::to_string(p) + " exceeds minimum " +
                            std::to_string(s.front()));
  }
  std::vector<index_t> out(s.begin(), s.end());
  for (auto& e : out) e -= p;
  return IndexSet::from(out);
}

/// q - S, re-sorted increasing; requires q >= max(S).
inline IndexSet reflect(const IndexSet& s, index_t q) {
  if (!s.empty() && q < s.back()) {
    throw PreconditionError("reflect: " + std::to_string(q) + " below maximum " +
                            std::to_string(s.back()));
  }
  std::vector<index_t> out;
  out.reserve(s.size());
  for (auto it = s.values().rbegin(); it != s.values().rend(); ++it) out.push_back(q - *it);
  return IndexSet::from(out);
}

/// Level k of the row-interval reduction chain for I = [i, i+d-1].
struct DerivedPair {
  std::size_t level = 0;
  IndexSet rows;
  IndexSet cols;

  friend bool operator==(const DerivedPair&, const DerivedPair&) = default;
};

/// rows = [i+k-1, i+d-2] - j_k, cols = {j_{k+1},...,j_d} - j_k - 1 (1-based j).
/// Level 0 returns the input pair.
inline DerivedPair derived_pair(const IntervalSpec& rows, const IndexSet& cols, std::size_t k) {
  if (rows.punctured_at) throw PreconditionError("derived_pair: rows must be an unpunctured interval");
  const auto d = static_cast<std::size_t>(rows.width());
  if (d == 0) throw PreconditionError("derived_pair: empty row interval");
  const IndexSet row_set = rows.materialize();
  if (cols.size() != d) throw PreconditionError("derived_pair: |J| != |I|");
  if (!leq(cols, row_set)) throw PreconditionError("derived_pair: J is not <= I");
  if (k >= d) {
    throw PreconditionError("derived_pair: level " + std::to_string(k) + " outside [0," +
                            std::to_string(d - 1) + "]");
  }
  if (k == 0) return {0, row_set, cols};
  const index_t jk = cols[k - 1];
  const auto kk = static_cast<index_t>(k);
  const auto dd = static_cast<index_t>(d);
  IndexSet new_rows = IndexSet::interval(rows.lo + kk - 1 - jk, rows.lo + dd - 2 - jk);
  IndexSet new_cols = shift_down(cols.tail(k), jk + 1);
  return {k, std::move(new_rows), std::move(new_cols)};
}

inline DerivedPair derived_pair(const IndexSet& rows, const IndexSet& cols, std::size_t k) {
  if (!rows.is_interval()) throw PreconditionError("derived_pair: rows must be an interval");
  return derived_pair(IntervalSpec(rows.front(), rows.back()), cols, k);
}

namespace detail {

inline index_t parse_uint(std::string_view text, std::size_t& pos) {
  const std::size_t start = pos;
  if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') {
    throw ParseError("expected digit at offset " + std::to_string(pos), pos);
  }
  index_t v = 0;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    if (v > (std::numeric_limits<index_t>::max() - 9) / 10) throw ParseError("integer too large at offset " + std::to_string(start), start);
    v = v * 10 + (text[pos] - '0');
    ++pos;
  }
  return v;
}

}  // namespace detail

/// Parses the index-set grammar; errors carry the byte offset.
inline IndexSet parse_indexset(std::string_view text) {
  std::size_t pos = 0;
  const index_t first = detail::parse_uint(text, pos);
  if (text.substr(pos, 2) == "..") {
    pos += 2;
    const index_t hi = detail::parse_uint(text, pos);
    std::optional<index_t> punct;
    std::size_t punct_pos = 0;
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      punct_pos = pos;
      punct = detail::parse_uint(text, pos);
    }
    if (pos != text.size()) throw ParseError("unexpected character at offset " + std::to_string(pos), pos);
    if (punct && (*punct < first || *punct > hi)) {
      throw ParseError("puncture outside interval at offset " + std::to_string(punct_pos), punct_pos);
    }
    return IntervalSpec(first, std::max<index_t>(hi, first - 1), punct).materialize();
  }
  std::vector<index_t> values{first};
  std::vector<std::size_t> offsets{0};
  while (pos < text.size()) {
    if (text[pos] != ',') throw ParseError("unexpected character at offset " + std::to_string(pos), pos);
    ++pos;
    offsets.push_back(pos);
    values.push_back(detail::parse_uint(text, pos));
  }
  try {
    return IndexSet::from(values);
  } catch (const ValidationError& e) {
    const std::size_t off = offsets[e.position()];
    throw ParseError(std::string(e.what()) + " (offset " + std::to_string(off) + ")", off);
  }
}

}  // namespace binomdet
