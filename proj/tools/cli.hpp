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

// Command dispatch for the binomdet tool. run() never exits the process,
// so tests drive it in-process with string streams.
//
// Exit codes: 0 success, 1 domain error or failed verification,
// 2 usage or parse error.

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "binomdet/binomdet.hpp"
#include "binomdet/json_io.hpp"

namespace binomdet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// "1234567" -> "1,234,567"; signs and fractions are handled piecewise.
inline std::string group_digits(const std::string& s) {
  const auto slash = s.find('/');
  if (slash != std::string::npos) return group_digits(s.substr(0, slash)) + "/" + group_digits(s.substr(slash + 1));
  const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  std::string out = s.substr(0, start);
  const std::size_t len = s.size() - start;
  for (std::size_t t = 0; t < len; ++t) {
    if (t > 0 && (len - t) % 3 == 0) out += ',';
    out += s[start + t];
  }
  return out;
}

namespace detail {

struct Options {
  std::string rows;
  std::string cols;
  std::string method = "auto";
  std::string format = "text";
  bool pretty = false;
  index_t n = -1;
  index_t m = -1;
  std::uint64_t seed = 1;
  std::size_t trials = 0;
  bool trials_set = false;
  index_t max_d = 6;
  index_t max_index = 20;
  std::size_t term_cap = kDefaultTermCap;
  std::string suite = "all";
  unsigned threads = 1;
};

class Printer {
 public:
  Printer(std::ostream& out, const Options& o) : out_(out), opts_(o) {}

  bool json() const { return opts_.format == "json"; }
  std::string num(const std::string& s) const { return opts_.pretty ? group_digits(s) : s; }
  void emit(const Json& j) const { out_ << (opts_.pretty ? j.dump(2) : j.dump()) << '\n'; }
  std::ostream& text() const { return out_; }

 private:
  std::ostream& out_;
  const Options& opts_;
};

inline int cmd_det(const Options& o, const Printer& p) {
  const IndexSet rows = parse_indexset(o.rows);
  const IndexSet cols = parse_indexset(o.cols);
  const auto method = method_from_string(o.method);
  if (!method) throw ValidationError("unknown method '" + o.method + "'", 0);
  EvalOptions eo;
  eo.term_cap = o.term_cap;
  const EvalReport rep = det(rows, cols, *method, eo);
  if (p.json())
    p.emit(to_json(rep));
  else
    p.text() << p.num(rep.value.str()) << '\n';
  return kExitOk;
}

inline int cmd_pi(const Options& o, const Printer& p) {
  const IndexSet rows = parse_indexset(o.rows);
  const IndexSet cols = parse_indexset(o.cols);
  const ExactRat v = pi(rows, cols);
  if (p.json())
    p.emit(Json{{"pi", v.str()}, {"rows", to_json(rows)}, {"cols", to_json(cols)}});
  else
    p.text() << p.num(v.str()) << '\n';
  return kExitOk;
}

inline int cmd_expand(const Options& o, const Printer& p) {
  const IndexSet rows = parse_indexset(o.rows);
  const IndexSet cols = parse_indexset(o.cols);
  const auto terms = size_reduction_expand(rows, cols, o.term_cap);
  const ExactRat factor = pi(rows, cols);
  ExactInt sum = 0;
  std::vector<ExactInt> values;
  values.reserve(terms.size());
  for (const auto& t : terms) {
    values.push_back(det(t.reduced_rows, t.reduced_cols).value);
    sum += values.back();
  }
  const ExactInt total = (factor * ExactRat(sum)).to_integer("expand");
  if (p.json()) {
    Json list = Json::array();
    for (std::size_t t = 0; t < terms.size(); ++t) {
      list.push_back(Json{{"ks", to_json(terms[t].ks)},
                          {"rows", to_json(terms[t].reduced_rows)},
                          {"cols", to_json(terms[t].reduced_cols)},
                          {"det", values[t].str()}});
    }
    p.emit(Json{{"rows", to_json(rows)},
                {"cols", to_json(cols)},
                {"pi", factor.str()},
                {"term_count", terms.size()},
                {"terms", list},
                {"sum", sum.str()},
                {"det", total.str()}});
  } else {
    for (std::size_t t = 0; t < terms.size(); ++t)
      p.text() << terms[t].ks.str() << "  " << p.num(values[t].str()) << '\n';
    p.text() << "pi " << p.num(factor.str()) << '\n';
    p.text() << "det " << p.num(total.str()) << '\n';
  }
  return kExitOk;
}

inline int cmd_nullspace(const Options& o, const Printer& p) {
  const IndexSet rows = parse_indexset(o.rows);
  const IndexSet cols = parse_indexset(o.cols);
  NullVector v;
  std::optional<ExactRat> lambda;
  if (o.method == "cramer" || o.method == "auto") {
    v = nullspace_cramer(rows, cols);
  } else if (o.method == "lambda") {
    // rows [i, i+d-1], cols {0} u [j, j+d-3]
    const auto d = static_cast<index_t>(rows.size());
    if (d < 3 || !rows.is_interval() || cols.size() + 1 != rows.size() || cols[0] != 0 ||
        !cols.tail(1).is_interval()) {
      throw PreconditionError("nullspace --method lambda: need rows [i,i+d-1] and cols {0} u [j,j+d-3], d >= 3");
    }
    const LambdaNullspace res = nullspace_lambda(rows.front(), d, cols[1]);
    v = res.vector;
    lambda = res.form.lambda;
  } else {
    throw ValidationError("unknown nullspace method '" + o.method + "' (cramer|lambda)", 0);
  }
  if (p.json()) {
    Json j = to_json(v);
    if (lambda) j["lambda"] = lambda->str();
    p.emit(j);
  } else {
    const auto ints = v.integral_coeffs();
    for (std::size_t t = 0; t < ints.size(); ++t) p.text() << (t ? "," : "") << p.num(ints[t].str());
    p.text() << '\n';
  }
  return kExitOk;
}

inline int cmd_interchange(const Options& o, const Printer& p) {
  const IndexSet rows = parse_indexset(o.rows);
  const IndexSet cols = parse_indexset(o.cols);
  const InterchangeResult res = interchange(rows, cols, o.n);
  std::optional<ShiftedInterchange> shifted;
  if (o.m >= 0) shifted = interchange_shift(rows, cols, o.n, o.m);
  if (p.json()) {
    Json j = to_json(res);
    if (shifted) {
      j["m"] = o.m;
      j["shifted"] = to_json(*shifted);
    }
    p.emit(j);
  } else {
    p.text() << "q " << p.num(res.q_factor.str()) << '\n';
    p.text() << "rows " << res.new_rows.str() << '\n';
    p.text() << "cols " << res.new_cols.str() << '\n';
    if (shifted) {
      p.text() << "shift_factor " << p.num(shifted->factor.str()) << '\n';
      p.text() << "shift_rows " << shifted->rows.str() << '\n';
      p.text() << "shift_cols " << shifted->cols.str() << '\n';
    }
  }
  return kExitOk;
}

inline int cmd_verify(const Options& o, const Printer& p) {
  std::vector<std::string> suites;
  if (o.suite == "all") {
    suites = suite_names();
  } else {
    if (std::find(suite_names().begin(), suite_names().end(), o.suite) == suite_names().end())
      throw ValidationError("unknown suite '" + o.suite + "'", 0);
    suites.push_back(o.suite);
  }
  InstanceGen gen;
  gen.seed = o.seed;
  gen.max_d = o.max_d;
  gen.max_index = o.max_index;
  bool ok = true;
  Json all = Json::array();
  for (const auto& name : suites) {
    const std::size_t trials = o.trials_set ? o.trials : default_trials(name);
    const SuiteReport rep = run_suite(name, gen, trials, o.threads);
    ok = ok && rep.passed();
    if (p.json()) {
      all.push_back(to_json(rep));
      continue;
    }
    p.text() << (rep.passed() ? "PASS " : "FAIL ") << rep.suite << " trials=" << rep.trials
             << " checks=" << rep.checks << " failures=" << rep.failures.size() << " elapsed_ms="
             << static_cast<long long>(rep.elapsed_ms) << '\n';
    for (const auto& note : rep.notes) p.text() << "  " << note << '\n';
    for (const auto& f : rep.failures) {
      p.text() << "  failure: " << f.instance << " expected=" << f.expected << " got=" << f.got << '\n';
      if (!f.replay.empty()) p.text() << "    replay: " << f.replay << '\n';
    }
  }
  if (p.json()) p.emit(all);
  return ok ? kExitOk : kExitDomain;
}

}  // namespace detail

/// Runs one invocation; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  detail::Options o;
  CLI::App app{"Exact binomial determinants", "binomdet"};
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--pretty", o.pretty, "group digits in text, indent JSON");
  };
  auto add_sets = [&](CLI::App* sub) {
    sub->add_option("--rows", o.rows, "row set: list, a..b, or a..b/p")->required();
    sub->add_option("--cols", o.cols, "column set: list, a..b, or a..b/p")->required();
  };

  CLI::App* det_cmd = app.add_subcommand("det", "determinant b^I_J");
  add_sets(det_cmd);
  det_cmd->add_option("--method", o.method, "auto|oracle|size_reduction|moh|...");
  det_cmd->add_option("--term-cap", o.term_cap, "size-reduction term cap");
  add_format(det_cmd);

  CLI::App* pi_cmd = app.add_subcommand("pi", "column-shift quotient pi^I_J");
  add_sets(pi_cmd);
  add_format(pi_cmd);

  CLI::App* expand_cmd = app.add_subcommand("expand", "size-reduction expansion");
  add_sets(expand_cmd);
  expand_cmd->add_option("--term-cap", o.term_cap, "maximum number of terms");
  add_format(expand_cmd);

  CLI::App* null_cmd = app.add_subcommand("nullspace", "left nullspace of a d x (d-1) matrix");
  add_sets(null_cmd);
  null_cmd->add_option("--method", o.method, "cramer (default) or lambda");
  add_format(null_cmd);

  CLI::App* inter_cmd = app.add_subcommand("interchange", "row/column interchange");
  add_sets(inter_cmd);
  inter_cmd->add_option("--n", o.n, "reflection point, n >= max(I)")->required();
  inter_cmd->add_option("--m", o.m, "second reflection point, m >= n");
  add_format(inter_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "seeded identity checks");
  verify_cmd->add_option("--suite", o.suite, "suite name or all");
  verify_cmd->add_option("--seed", o.seed);
  auto* trials_opt = verify_cmd->add_option("--trials", o.trials, "random trials per suite");
  verify_cmd->add_option("--max-d", o.max_d)->check(CLI::Range(1, 64));
  verify_cmd->add_option("--max-index", o.max_index)->check(CLI::Range(1, 1000));
  verify_cmd->add_option("--threads", o.threads)->check(CLI::Range(1, 256));
  add_format(verify_cmd);

  std::vector<const char*> argv{"binomdet"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  o.trials_set = trials_opt->count() > 0;

  const detail::Printer p(out, o);
  try {
    if (*det_cmd) return detail::cmd_det(o, p);
    if (*pi_cmd) return detail::cmd_pi(o, p);
    if (*expand_cmd) return detail::cmd_expand(o, p);
    if (*null_cmd) return detail::cmd_nullspace(o, p);
    if (*inter_cmd) return detail::cmd_interchange(o, p);
    if (*verify_cmd) return detail::cmd_verify(o, p);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace binomdet::cli
