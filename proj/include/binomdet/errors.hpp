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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace binomdet {

/// Malformed index-set input. `position` is the offending element index
/// (for list construction) or byte offset (for text parsing).
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Text that does not match the index-set grammar.
class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A mathematically well-formed request whose preconditions do not hold,
/// e.g. J not below I where a formula requires it.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Nullspace requested for a matrix whose corank is not one.
class RankError : public PreconditionError {
 public:
  RankError(const std::string& what, std::size_t rank) : PreconditionError(what), rank_(rank) {}
  std::size_t rank() const noexcept { return rank_; }

 private:
  std::size_t rank_;
};

/// Expansion would produce more terms than the caller allowed.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A self-check failed: an exact division left a remainder, or a closed
/// form disagreed with the oracle. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace binomdet
