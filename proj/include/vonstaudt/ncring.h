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

// Polynomials with integer coefficients in noncommuting variables, systems of
// equations between them, a line-oriented text format, and evaluation at
// square-matrix assignments.

#ifndef VONSTAUDT_NCRING_H_
#define VONSTAUDT_NCRING_H_

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vonstaudt/field.h"
#include "vonstaudt/matrix.h"

namespace vonstaudt {

// A monomial: variable indices in multiplication order. Empty is the unit.
using Word = std::vector<std::uint32_t>;

// Graded lexicographic order: shorter words first, then lexicographic.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

class NCPolynomial {
 public:
  using TermMap = std::map<Word, mpz_class, WordLess>;

  NCPolynomial() = default;
  static NCPolynomial Constant(const mpz_class& c);
  static NCPolynomial Variable(std::uint32_t index);
  static NCPolynomial Monomial(Word word, const mpz_class& c = 1);

  // Terms in graded lexicographic order; coefficients are never zero.
  const TermMap& terms() const { return terms_; }
  bool IsZero() const { return terms_.empty(); }
  // Largest variable index plus one; 0 for constants.
  std::uint32_t VariableBound() const;

  void AddTerm(const Word& word, const mpz_class& c);

  NCPolynomial operator+(const NCPolynomial& o) const;
  NCPolynomial operator-(const NCPolynomial& o) const;
  NCPolynomial operator*(const NCPolynomial& o) const;
  NCPolynomial operator-() const;
  bool operator==(const NCPolynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const NCPolynomial& o) const { return !(*this == o); }

 private:
  TermMap terms_;
};

struct NCEquation {
  NCPolynomial lhs;
  NCPolynomial rhs;
  // lhs - rhs, formed on demand.
  NCPolynomial Difference() const { return lhs - rhs; }
};

// Variables carry names; ParseSystem numbers them in byte-wise lexicographic
// order of their names.
// Equality compares equations through names, so systems that differ only in
// index assignment compare equal.
class NCSystem {
 public:
  NCSystem() = default;
  // Throws InvalidArgument on duplicate or malformed names, or an equation
  // that references an index >= names.size().
  NCSystem(std::vector<std::string> names, std::vector<NCEquation> equations);

  std::size_t num_vars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<NCEquation>& equations() const { return equations_; }
  std::optional<std::uint32_t> IndexOf(std::string_view name) const;

  bool operator==(const NCSystem& o) const;
  bool operator!=(const NCSystem& o) const { return !(*this == o); }

 private:
  std::vector<std::string> names_;
  std::vector<NCEquation> equations_;
};

bool IsIdentifier(std::string_view name);

// One equation per line, `lhs = rhs`, `#` starts a comment, blank lines are
// ignored. Expressions use integers, identifiers, `+`, `-`, `*`, parentheses
// and natural exponents `^n`. Throws ParseError with line and column.
NCSystem ParseSystem(std::string_view text);
// Parses an expression over the variables of `names`, appending unseen names.
NCPolynomial ParsePolynomial(std::string_view text,
                             std::vector<std::string>& names);

// Canonical text: expanded terms in graded lexicographic order, one equation
// per line with a trailing newline.
std::string SerializePolynomial(const NCPolynomial& p,
                                const std::vector<std::string>& names);
std::string SerializeSystem(const NCSystem& s);

// Square matrices of one size over one field, indexed by variable.
class Assignment {
 public:
  Assignment(FieldSpec field, std::size_t block_size)
      : field_(std::move(field)), c_(block_size) {}

  const FieldSpec& field() const { return field_; }
  std::size_t block_size() const { return c_; }
  // Number of slots; slots beyond those set are unassigned.
  std::size_t size() const { return values_.size(); }

  // Throws InvalidArgument if `m` is not c x c over field().
  void Set(std::size_t var, Matrix m);
  bool Has(std::size_t var) const {
    return var < values_.size() && values_[var].has_value();
  }
  // Throws InvalidArgument if the variable is unassigned.
  const Matrix& Get(std::size_t var) const;

  bool operator==(const Assignment& o) const {
    return field_ == o.field_ && c_ == o.c_ && values_ == o.values_;
  }

 private:
  FieldSpec field_;
  std::size_t c_;
  std::vector<std::optional<Matrix>> values_;
};

// Sum over terms of coefficient times the ordered matrix product; the empty
// word evaluates to the identity.
Matrix Evaluate(const NCPolynomial& p, const Assignment& values);
bool IsSolution(const NCSystem& s, const Assignment& values);

}  // namespace vonstaudt

#endif  // VONSTAUDT_NCRING_H_
