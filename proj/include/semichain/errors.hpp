// Copyright 2026 The semichain Authors
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

#ifndef SEMICHAIN_ERRORS_HPP
#define SEMICHAIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace semichain {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a table or relation is not a semilattice (operation not
/// associative/symmetric/idempotent, or some pair has no join).
class NotSemilattice : public Error {
 public:
  using Error::Error;
};

/// Raised when a Hasse diagram is not a rooted binary tree.
class NotBinaryTree : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// Raised when an exhaustive routine is asked for a size beyond its bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class NotAssociative : public Error {
 public:
  using Error::Error;
};

/// Raised by kary::reduce when re-extending the reduced operation does not
/// give back the input table.
class ReductionMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed input; `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace semichain

#endif  // SEMICHAIN_ERRORS_HPP
