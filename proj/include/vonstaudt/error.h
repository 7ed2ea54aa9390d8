// Copyright 2026 The Authors.
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

#ifndef VONSTAUDT_ERROR_H_
#define VONSTAUDT_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vonstaudt {

// Base class of every error thrown by the library. `code()` is a stable
// machine-readable identifier used by the CLI error JSON.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
  virtual const char* code() const noexcept { return "error"; }
};

// Text input that does not match a grammar. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  const char* code() const noexcept override { return "parse_error"; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Structurally malformed input: wrong JSON shape, truncated matrices, etc.
class FormatError : public Error {
 public:
  using Error::Error;
  const char* code() const noexcept override { return "malformed_input"; }
};

// Arguments that violate an operation's precondition (non-prime modulus,
// size mismatch, unassigned variable, search guard exceeded, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
  const char* code() const noexcept override { return "invalid_argument"; }
};

// Attempted division by zero or inversion of a singular matrix.
class DivisionByZero : public Error {
 public:
  using Error::Error;
  const char* code() const noexcept override { return "division_by_zero"; }
};

// Valid input for which a required mathematical property is false: an
// assignment that is not a solution, an inconsistent representation, a
// degenerate projective frame.
class VerificationError : public Error {
 public:
  using Error::Error;
  const char* code() const noexcept override { return "verification_failed"; }
};

}  // namespace vonstaudt

#endif  // VONSTAUDT_ERROR_H_
