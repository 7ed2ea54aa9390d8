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

#include "vonstaudt/ncring.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <utility>

#include "vonstaudt/error.h"

namespace vonstaudt {

NCPolynomial NCPolynomial::Constant(const mpz_class& c) {
  return Monomial({}, c);
}

NCPolynomial NCPolynomial::Variable(std::uint32_t index) {
  return Monomial({index}, 1);
}

NCPolynomial NCPolynomial::Monomial(Word word, const mpz_class& c) {
  NCPolynomial p;
  p.AddTerm(word, c);
  return p;
}

std::uint32_t NCPolynomial::VariableBound() const {
  std::uint32_t bound = 0;
  for (const auto& [w, c] : terms_) {
    for (std::uint32_t v : w) bound = std::max(bound, v + 1);
  }
  return bound;
}

void NCPolynomial::AddTerm(const Word& word, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(word, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

NCPolynomial NCPolynomial::operator+(const NCPolynomial& o) const {
  NCPolynomial r = *this;
  for (const auto& [w, c] : o.terms_) r.AddTerm(w, c);
  return r;
}

NCPolynomial NCPolynomial::operator-(const NCPolynomial& o) const {
  NCPolynomial r = *this;
  for (const auto& [w, c] : o.terms_) r.AddTerm(w, -c);
  return r;
}

NCPolynomial NCPolynomial::operator-() const {
  NCPolynomial r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

NCPolynomial NCPolynomial::operator*(const NCPolynomial& o) const {
  NCPolynomial r;
  for (const auto& [w1, c1] : terms_) {
    for (const auto& [w2, c2] : o.terms_) {
      Word w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      r.AddTerm(w, c1 * c2);
    }
  }
  return r;
}

bool IsIdentifier(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) {
    return false;
  }
  for (char ch : name) {
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_' && ch != '\'') {
      return false;
    }
  }
  return true;
}

NCSystem::NCSystem(std::vector<std::string> names, std::vector<NCEquation> equations)
    : names_(std::move(names)), equations_(std::move(equations)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!IsIdentifier(n)) throw InvalidArgument("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) {
      throw InvalidArgument("duplicate variable name '" + n + "'");
    }
  }
  for (const auto& eq : equations_) {
    if (eq.lhs.VariableBound() > names_.size() ||
        eq.rhs.VariableBound() > names_.size()) {
      throw InvalidArgument("equation references an undeclared variable");
    }
  }
}

std::optional<std::uint32_t> NCSystem::IndexOf(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<std::uint32_t>(i);
  }
  return std::nullopt;
}

namespace {

using NamedTerms = std::map<std::vector<std::string>, mpz_class>;

NamedTerms ByName(const NCPolynomial& p, const std::vector<std::string>& names) {
  NamedTerms out;
  for (const auto& [w, c] : p.terms()) {
    std::vector<std::string> key;
    for (std::uint32_t v : w) key.push_back(names[v]);
    out.emplace(std::move(key), c);
  }
  return out;
}

}  // namespace

bool NCSystem::operator==(const NCSystem& o) const {
  if (equations_.size() != o.equations_.size()) return false;
  if (std::set<std::string>(names_.begin(), names_.end()) !=
      std::set<std::string>(o.names_.begin(), o.names_.end())) {
    return false;
  }
  for (std::size_t e = 0; e < equations_.size(); ++e) {
    if (ByName(equations_[e].lhs, names_) != ByName(o.equations_[e].lhs, o.names_) ||
        ByName(equations_[e].rhs, names_) != ByName(o.equations_[e].rhs, o.names_)) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- parser

namespace {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, std::size_t line,
                   std::vector<std::string>& names)
      : s_(text), line_(line), names_(names) {}

  NCPolynomial ParseExpression() {
    SkipSpace();
    NCPolynomial result;
    bool negate = false;
    if (Peek() == '+' || Peek() == '-') {
      negate = Get() == '-';
    }
    NCPolynomial t = ParseProduct();
    result = negate ? -t : t;
    for (;;) {
      SkipSpace();
      char ch = Peek();
      if (ch != '+' && ch != '-') break;
      Get();
      t = ParseProduct();
      result = ch == '+' ? result + t : result - t;
    }
    return result;
  }

  bool AtEnd() {
    SkipSpace();
    return pos_ >= s_.size();
  }
  char Peek() {
    SkipSpace();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  char Get() { return s_[pos_++]; }
  [[noreturn]] void Fail(const std::string& what) const {
    throw ParseError(what, line_, pos_ + 1);
  }

 private:
  void SkipSpace() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) {
      ++pos_;
    }
  }

  NCPolynomial ParseProduct() {
    NCPolynomial result = ParseUnary();
    while (Peek() == '*') {
      Get();
      result = result * ParseUnary();
    }
    return result;
  }

  NCPolynomial ParseUnary() {
    if (Peek() == '-') {
      Get();
      return -ParseUnary();
    }
    NCPolynomial base = ParseAtom();
    if (Peek() == '^') {
      Get();
      SkipSpace();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) Fail("expected a natural exponent after '^'");
      if (pos_ - start > 4) Fail("exponent too large");
      int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      NCPolynomial r = NCPolynomial::Constant(1);
      for (int i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  NCPolynomial ParseAtom() {
    char ch = Peek();
    if (ch == '(') {
      Get();
      NCPolynomial inner = ParseExpression();
      if (Peek() != ')') Fail("expected ')'");
      Get();
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return NCPolynomial::Constant(mpz_class(std::string(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
              s_[pos_] == '\'')) {
        ++pos_;
      }
      std::string name(s_.substr(start, pos_ - start));
      auto it = std::find(names_.begin(), names_.end(), name);
      std::uint32_t index = static_cast<std::uint32_t>(it - names_.begin());
      if (it == names_.end()) names_.push_back(name);
      return NCPolynomial::Variable(index);
    }
    if (ch == '\0') Fail("unexpected end of expression");
    Fail(std::string("unexpected character '") + ch + "'");
  }

  std::string_view s_;
  std::size_t line_;
  std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace

NCPolynomial ParsePolynomial(std::string_view text, std::vector<std::string>& names) {
  ExpressionParser p(text, 1, names);
  NCPolynomial r = p.ParseExpression();
  if (!p.AtEnd()) p.Fail(std::string("unexpected character '") + p.Peek() + "'");
  return r;
}

NCSystem ParseSystem(std::string_view text) {
  std::vector<std::string> names;
  std::vector<NCEquation> equations;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;

    ExpressionParser p(line, line_no, names);
    NCEquation eq;
    eq.lhs = p.ParseExpression();
    if (p.Peek() != '=') {
      if (p.AtEnd()) p.Fail("expected '='");
      p.Fail(std::string("unexpected character '") + p.Peek() + "'");
    }
    p.Get();
    eq.rhs = p.ParseExpression();
    if (!p.AtEnd()) p.Fail(std::string("unexpected character '") + p.Peek() + "'");
    equations.push_back(std::move(eq));
  }
  std::vector<std::string> sorted = names;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::uint32_t> index(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    index[i] = static_cast<std::uint32_t>(
        std::lower_bound(sorted.begin(), sorted.end(), names[i]) - sorted.begin());
  }
  auto renumber = [&](const NCPolynomial& poly) {
    NCPolynomial out;
    for (const auto& [w, c] : poly.terms()) {
      Word mapped;
      for (auto v : w) mapped.push_back(index[v]);
      out.AddTerm(mapped, c);
    }
    return out;
  };
  for (auto& eq : equations) {
    eq.lhs = renumber(eq.lhs);
    eq.rhs = renumber(eq.rhs);
  }
  return NCSystem(std::move(sorted), std::move(equations));
}

// ---------------------------------------------------------------- printing

std::string SerializePolynomial(const NCPolynomial& p,
                                const std::vector<std::string>& names) {
  if (p.IsZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    bool negative = c < 0;
    mpz_class magnitude = abs(c);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (w.empty()) {
      os << magnitude.get_str();
      continue;
    }
    if (magnitude != 1) os << magnitude.get_str() << "*";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) os << "*";
      os << names.at(w[i]);
    }
  }
  return os.str();
}

std::string SerializeSystem(const NCSystem& s) {
  std::string out;
  for (const auto& eq : s.equations()) {
    out += SerializePolynomial(eq.lhs, s.names()) + " = " +
           SerializePolynomial(eq.rhs, s.names()) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------- evaluation

void Assignment::Set(std::size_t var, Matrix m) {
  if (m.field() != field_) {
    throw InvalidArgument("assignment matrix over " + m.field().ToString() +
                          ", expected " + field_.ToString());
  }
  if (m.rows() != c_ || m.cols() != c_) {
    throw InvalidArgument("assignment matrix of size " + std::to_string(m.rows()) +
                          "x" + std::to_string(m.cols()) + ", expected " +
                          std::to_string(c_) + "x" + std::to_string(c_));
  }
  if (values_.size() <= var) values_.resize(var + 1);
  values_[var] = std::move(m);
}

const Matrix& Assignment::Get(std::size_t var) const {
  if (!Has(var)) throw InvalidArgument("unassigned variable " + std::to_string(var));
  return *values_[var];
}

Matrix Evaluate(const NCPolynomial& p, const Assignment& values) {
  const FieldSpec& f = values.field();
  std::size_t c = values.block_size();
  Matrix sum(f, c, c);
  for (const auto& [w, coeff] : p.terms()) {
    Matrix prod = Matrix::Identity(f, c);
    for (std::size_t i = 0; i < w.size(); ++i) {
      prod = i == 0 ? values.Get(w[0]) : prod * values.Get(w[i]);
    }
    sum = sum + prod.Scaled(Scalar::FromInteger(f, coeff));
  }
  return sum;
}

bool IsSolution(const NCSystem& s, const Assignment& values) {
  for (const auto& eq : s.equations()) {
    if (Evaluate(eq.lhs, values) != Evaluate(eq.rhs, values)) return false;
  }
  return true;
}

}  // namespace vonstaudt
