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

// JSON views of the result types. Numbers are always decimal strings
// ("n" or "n/d"); index sets are arrays of plain integers.

#include <string>
#include <vector>

#include "json.hpp"

#include "binomdet/formulas.hpp"
#include "binomdet/interchange.hpp"
#include "binomdet/nullspace.hpp"
#include "binomdet/verify.hpp"

namespace binomdet {

using Json = nlohmann::ordered_json;

inline Json to_json(const IndexSet& s) { return Json(std::vector<index_t>(s.begin(), s.end())); }

inline Json to_json(const EvalReport& r) {
  return Json{{"det", r.value.str()},
              {"method", std::string(to_string(r.method))},
              {"rows", to_json(r.rows)},
              {"cols", to_json(r.cols)},
              {"pi", r.pi_factor.str()}};
}

inline Json to_json(const NullVector& v) {
  Json coeffs = Json::array();
  for (const auto& c : v.coeffs) coeffs.push_back(c.str());
  Json ints = Json::array();
  for (const auto& c : v.integral_coeffs()) ints.push_back(c.str());
  return Json{{"coeffs", coeffs}, {"integral_coeffs", ints}};
}

inline Json to_json(const InterchangeResult& r) {
  return Json{{"q_factor", r.q_factor.str()},
              {"new_rows", to_json(r.new_rows)},
              {"new_cols", to_json(r.new_cols)},
              {"n", r.n}};
}

inline Json to_json(const ShiftedInterchange& s) {
  return Json{{"factor", s.factor.str()}, {"rows", to_json(s.rows)}, {"cols", to_json(s.cols)}};
}

inline Json to_json(const SuiteReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    failures.push_back(
        Json{{"instance", f.instance}, {"expected", f.expected}, {"got", f.got}, {"replay", f.replay}});
  }
  return Json{{"suite", r.suite},         {"trials", r.trials},     {"checks", r.checks},
              {"passed", r.passed()},     {"failures", failures},   {"notes", r.notes},
              {"elapsed_ms", r.elapsed_ms}};
}

/// Inverse of to_json(IndexSet); throws ValidationError on bad input.
inline IndexSet indexset_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("expected an array of indices", 0);
  std::vector<index_t> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ValidationError("expected an integer index", out.size());
    out.push_back(v.get<index_t>());
  }
  return IndexSet::from(out);
}

}  // namespace binomdet
