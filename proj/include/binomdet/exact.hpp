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
 * Exact integers and rationals.
 *
 * ExactInt is boost's arbitrary precision cpp_int. ExactRat is a small
 * normalized fraction over it: the denominator is always positive and
 * coprime to the numerator, so two equal values compare equal
 * structurally.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "binomdet/errors.hpp"

namespace binomdet {

using ExactInt = boost::multiprecision::cpp_int;

/// Integer index into the binomial matrix. Signed so that negative input
/// can be detected and rejected instead of wrapping around.
using index_t = std::int64_t;

inline std::string to_string(const ExactInt& v) { return v.str(); }

/// Divides `num` by `den`, throwing InternalError when the remainder is
/// non-zero. Used wherever a division is known to be exact.
inline ExactInt exact_div(const ExactInt& num, const ExactInt& den, const char* what) {
  if (den == 0) throw InternalError(std::string(what) + ": division by zero");
  ExactInt q;
  ExactInt r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) {
    throw InternalError(std::string(what) + ": inexact division " + num.str() + " / " +
                        den.str());
  }
  return q;
}

class ExactRat {
 public:
  ExactRat() = default;
  ExactRat(std::int64_t v) : num_(v) {}  // NOLINT(google-explicit-constructor)
  ExactRat(ExactInt v) : num_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  ExactRat(ExactInt num, ExactInt den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  const ExactInt& num() const { return num_; }
  const ExactInt& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_.sign(); }

  /// The integer value; throws InternalError if the value is not integral.
  ExactInt to_integer(const char* what = "ExactRat::to_integer") const {
    if (den_ != 1) throw InternalError(std::string(what) + ": " + str() + " is not an integer");
    return num_;
  }

  /// "n" for integers, "n/d" otherwise.
  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  /// Parses "n" or "n/d" (optional leading '-' on the numerator).
  static ExactRat parse(std::string_view text) {
    auto slash = text.find('/');
    auto parse_int = [&](std::string_view s) {
      if (s.empty()) throw std::invalid_argument("empty integer in rational '" + std::string(text) + "'");
      std::size_t start = (s.front() == '-') ? 1 : 0;
      if (start == s.size()) throw std::invalid_argument("bad rational '" + std::string(text) + "'");
      for (std::size_t t = start; t < s.size(); ++t) {
        if (s[t] < '0' || s[t] > '9') {
          throw std::invalid_argument("bad rational '" + std::string(text) + "'");
        }
      }
      return ExactInt(std::string(s));
    };
    if (slash == std::string_view::npos) return ExactRat(parse_int(text));
    ExactInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return ExactRat(parse_int(text.substr(0, slash)), std::move(den));
  }

  ExactRat operator-() const {
    ExactRat r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend ExactRat operator+(const ExactRat& a, const ExactRat& b) {
    return ExactRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend ExactRat operator-(const ExactRat& a, const ExactRat& b) { return a + (-b); }
  friend ExactRat operator*(const ExactRat& a, const ExactRat& b) {
    return ExactRat(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend ExactRat operator/(const ExactRat& a, const ExactRat& b) {
    if (b.num_ == 0) throw std::domain_error("ExactRat: division by zero");
    return ExactRat(a.num_ * b.den_, a.den_ * b.num_);
  }
  ExactRat& operator+=(const ExactRat& o) { return *this = *this + o; }
  ExactRat& operator-=(const ExactRat& o) { return *this = *this - o; }
  ExactRat& operator*=(const ExactRat& o) { return *this = *this * o; }
  ExactRat& operator/=(const ExactRat& o) { return *this = *this / o; }

  friend bool operator==(const ExactRat& a, const ExactRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const ExactRat& a, const ExactRat& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactRat& r) { return os << r.str(); }

 private:
  void normalize() {
    if (den_ == 0) throw std::domain_error("ExactRat: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    ExactInt g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  ExactInt num_{0};
  ExactInt den_{1};
};

}  // namespace binomdet
