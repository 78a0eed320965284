// Copyright 2026 The eternal-guard Authors
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
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace eternal {

/// Malformed input object (e.g. a Roman configuration holding three guards
/// on one vertex). Distinct from a well-formed object that fails a predicate.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Precondition on the mathematical domain failed (disconnected graph,
/// mismatched totals, core that is not connected-dominating, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The instance is larger than the configured brute-force budget.
class CapabilityError : public std::runtime_error {
 public:
  CapabilityError(const std::string& what, double estimate)
      : std::runtime_error(what), estimate_(estimate) {}

  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

/// A defense move that breaks the movement rules. Carries the first
/// offending (from, to) pair, or (-1, -1) when the fault is global.
class IllegalMoveError : public std::invalid_argument {
 public:
  IllegalMoveError(const std::string& what, int from, int to)
      : std::invalid_argument(what), from_(from), to_(to) {}

  std::pair<int, int> offending() const noexcept { return {from_, to_}; }

 private:
  int from_;
  int to_;
};

/// Attack on a vertex that already holds a guard.
class IllegalAttackError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a property that must always hold is observed broken.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace eternal
