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

#include "vonstaudt/field.h"

#include <cctype>
#include <string>
#include <string_view>
#include <utility>

#include "vonstaudt/error.h"

namespace vonstaudt {

// ---------------------------------------------------------------- FieldSpec

FieldSpec FieldSpec::Rationals() {
  return FieldSpec(FieldKind::kRationals, 0, {"", ""});
}

FieldSpec FieldSpec::PrimeField(std::uint32_t p) {
  if (!IsPrime(p) || p >= (1u << 31)) {
    throw InvalidArgument("field modulus " + std::to_string(p) +
                          " is not a supported prime");
  }
  return FieldSpec(FieldKind::kPrimeField, p, {"", ""});
}

FieldSpec FieldSpec::RationalFunctions(std::uint32_t p, std::string x,
                                       std::string y) {
  if (!IsPrime(p) || p >= (1u << 31)) {
    throw InvalidArgument("field modulus " + std::to_string(p) +
                          " is not a supported prime");
  }
  auto valid = [](const std::string& v) {
    if (v.empty() || !std::isalpha(static_cast<unsigned char>(v[0]))) {
      return false;
    }
    for (char c : v) {
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
  };
  if (!valid(x) || !valid(y) || x == y) {
    throw InvalidArgument("invalid rational-function variable names");
  }
  return FieldSpec(FieldKind::kRationalFunctions, p, {std::move(x), std::move(y)});
}

FieldSpec FieldSpec::Parse(std::string_view text) {
  if (text == "Q") return Rationals();
  if (text.size() < 2 || text[0] != 'F') {
    throw InvalidArgument("unknown field '" + std::string(text) + "'");
  }
  std::size_t pos = 1;
  std::uint64_t p = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    p = p * 10 + static_cast<std::uint64_t>(text[pos] - '0');
    if (p >= (1ull << 31)) throw InvalidArgument("field modulus too large");
    ++pos;
  }
  if (pos == 1) throw InvalidArgument("unknown field '" + std::string(text) + "'");
  if (pos == text.size()) return PrimeField(static_cast<std::uint32_t>(p));
  if (text[pos] != '(' || text.back() != ')') {
    throw InvalidArgument("unknown field '" + std::string(text) + "'");
  }
  std::string_view inner = text.substr(pos + 1, text.size() - pos - 2);
  auto comma = inner.find(',');
  if (comma == std::string_view::npos) {
    throw InvalidArgument("rational-function field needs two variables");
  }
  return RationalFunctions(static_cast<std::uint32_t>(p),
                           std::string(inner.substr(0, comma)),
                           std::string(inner.substr(comma + 1)));
}

std::string FieldSpec::ToString() const {
  switch (kind_) {
    case FieldKind::kRationals:
      return "Q";
    case FieldKind::kPrimeField:
      return "F" + std::to_string(p_);
    case FieldKind::kRationalFunctions:
      return "F" + std::to_string(p_) + "(" + vars_[0] + "," + vars_[1] + ")";
  }
  return "?";
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(BiPoly num)
    : num_(std::move(num)), den_(BiPoly::Constant(num_.modulus(), 1)) {}

RatFunc::RatFunc(BiPoly num, BiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.IsZero()) throw DivisionByZero("rational function with zero denominator");
  if (num_.modulus() != den_.modulus()) {
    throw InvalidArgument("numerator and denominator over different fields");
  }
  Normalize();
}

void RatFunc::Normalize() {
  std::uint32_t p = num_.modulus();
  if (num_.IsZero()) {
    den_ = BiPoly::Constant(p, 1);
    return;
  }
  if (!den_.IsConstant()) {
    BiPoly g = BiPoly::Gcd(num_, den_);
    if (!g.IsOne()) {
      num_ = num_.DivideExact(g);
      den_ = den_.DivideExact(g);
    }
  }
  std::uint32_t lc = den_.LeadingTerm().c;
  if (lc != 1) {
    std::uint32_t inv = ModInv(lc, p);
    num_ = num_.Scaled(inv);
    den_ = den_.Scaled(inv);
  }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (modulus() != o.modulus()) throw InvalidArgument("field mismatch");
  if (IsPolynomial() && o.IsPolynomial()) return RatFunc(num_ + o.num_);
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (modulus() != o.modulus()) throw InvalidArgument("field mismatch");
  if (IsPolynomial() && o.IsPolynomial()) return RatFunc(num_ * o.num_);
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::Inverse() const {
  if (IsZero()) throw DivisionByZero("inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (modulus() != o.modulus()) throw InvalidArgument("field mismatch");
  if (o.IsZero()) throw DivisionByZero("division by zero rational function");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

std::uint32_t RatFunc::Evaluate(std::uint32_t x, std::uint32_t y) const {
  std::uint32_t d = den_.Evaluate(x, y);
  if (d == 0) throw DivisionByZero("denominator vanishes at evaluation point");
  return ModMul(num_.Evaluate(x, y), ModInv(d, modulus()), modulus());
}

std::string RatFunc::ToString(const std::string& x, const std::string& y) const {
  if (IsPolynomial()) return num_.ToString(x, y);
  return "(" + num_.ToString(x, y) + ")/(" + den_.ToString(x, y) + ")";
}

// ---------------------------------------------------------------- Scalar

Scalar Scalar::Zero(const FieldSpec& f) { return FromInteger(f, 0); }

Scalar Scalar::One(const FieldSpec& f) { return FromInteger(f, 1); }

Scalar Scalar::FromInteger(const FieldSpec& f, const mpz_class& n) {
  switch (f.kind()) {
    case FieldKind::kRationals:
      return Scalar(mpq_class(n));
    case FieldKind::kPrimeField: {
      mpz_class r = n % f.characteristic();
      if (r < 0) r += f.characteristic();
      return Scalar(ModP{static_cast<std::uint32_t>(r.get_ui()), f.characteristic()});
    }
    case FieldKind::kRationalFunctions: {
      mpz_class r = n % f.characteristic();
      if (r < 0) r += f.characteristic();
      return Scalar(RatFunc(BiPoly::Constant(f.characteristic(),
                                             static_cast<std::uint32_t>(r.get_ui()))));
    }
  }
  throw InvalidArgument("unknown field kind");
}

FieldKind Scalar::kind() const {
  switch (value_.index()) {
    case 0:
      return FieldKind::kRationals;
    case 1:
      return FieldKind::kPrimeField;
    default:
      return FieldKind::kRationalFunctions;
  }
}

bool Scalar::BelongsTo(const FieldSpec& f) const {
  if (kind() != f.kind()) return false;
  switch (f.kind()) {
    case FieldKind::kRationals:
      return true;
    case FieldKind::kPrimeField:
      return mod_p().p == f.characteristic();
    case FieldKind::kRationalFunctions:
      return ratfunc().modulus() == f.characteristic();
  }
  return false;
}

bool Scalar::IsZero() const {
  switch (value_.index()) {
    case 0:
      return sgn(rational()) == 0;
    case 1:
      return mod_p().v == 0;
    default:
      return ratfunc().IsZero();
  }
}

bool Scalar::IsOne() const {
  switch (value_.index()) {
    case 0:
      return rational() == 1;
    case 1:
      return mod_p().v == 1;
    default:
      return ratfunc().IsPolynomial() && ratfunc().num().IsOne();
  }
}

namespace {

[[noreturn]] void Mismatch() {
  throw InvalidArgument("arithmetic between elements of different fields");
}

}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
  if (value_.index() != o.value_.index()) Mismatch();
  switch (value_.index()) {
    case 0:
      return Scalar(mpq_class(rational() + o.rational()));
    case 1:
      if (mod_p().p != o.mod_p().p) Mismatch();
      return Scalar(ModP{ModAdd(mod_p().v, o.mod_p().v, mod_p().p), mod_p().p});
    default:
      return Scalar(ratfunc() + o.ratfunc());
  }
}

Scalar Scalar::operator-(const Scalar& o) const {
  if (value_.index() != o.value_.index()) Mismatch();
  switch (value_.index()) {
    case 0:
      return Scalar(mpq_class(rational() - o.rational()));
    case 1:
      if (mod_p().p != o.mod_p().p) Mismatch();
      return Scalar(ModP{ModSub(mod_p().v, o.mod_p().v, mod_p().p), mod_p().p});
    default:
      return Scalar(ratfunc() - o.ratfunc());
  }
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (value_.index() != o.value_.index()) Mismatch();
  switch (value_.index()) {
    case 0:
      return Scalar(mpq_class(rational() * o.rational()));
    case 1:
      if (mod_p().p != o.mod_p().p) Mismatch();
      return Scalar(ModP{ModMul(mod_p().v, o.mod_p().v, mod_p().p), mod_p().p});
    default:
      return Scalar(ratfunc() * o.ratfunc());
  }
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (value_.index() != o.value_.index()) Mismatch();
  if (o.IsZero()) throw DivisionByZero("division by zero");
  switch (value_.index()) {
    case 0:
      return Scalar(mpq_class(rational() / o.rational()));
    case 1:
      if (mod_p().p != o.mod_p().p) Mismatch();
      return Scalar(ModP{ModMul(mod_p().v, ModInv(o.mod_p().v, mod_p().p), mod_p().p),
                         mod_p().p});
    default:
      return Scalar(ratfunc() / o.ratfunc());
  }
}

Scalar Scalar::operator-() const {
  switch (value_.index()) {
    case 0:
      return Scalar(mpq_class(-rational()));
    case 1:
      return Scalar(ModP{ModNeg(mod_p().v, mod_p().p), mod_p().p});
    default:
      return Scalar(-ratfunc());
  }
}

Scalar Scalar::Inverse() const {
  if (IsZero()) throw DivisionByZero("inverse of zero");
  switch (value_.index()) {
    case 0:
      return Scalar(mpq_class(1 / rational()));
    case 1:
      return Scalar(ModP{ModInv(mod_p().v, mod_p().p), mod_p().p});
    default:
      return Scalar(ratfunc().Inverse());
  }
}

bool Scalar::operator==(const Scalar& o) const {
  if (value_.index() != o.value_.index()) return false;
  switch (value_.index()) {
    case 0:
      return rational() == o.rational();
    case 1:
      return mod_p() == o.mod_p();
    default:
      return ratfunc() == o.ratfunc();
  }
}

std::string Scalar::ToString(const FieldSpec& f) const {
  switch (value_.index()) {
    case 0:
      return rational().get_str();
    case 1:
      return std::to_string(mod_p().v);
    default:
      return ratfunc().ToString(f.vars()[0], f.vars()[1]);
  }
}

// Entry grammar shared by all three fields:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := power (('*'|'/') power)*
//   power  := atom ['^' digits]
//   atom   := digits | variable | '(' expr ')'
namespace {

class EntryParser {
 public:
  EntryParser(const FieldSpec& f, std::string_view text) : f_(f), s_(text) {}

  Scalar ParseAll() {
    Scalar v = Expr();
    Skip();
    if (pos_ != s_.size()) Fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void Fail(const std::string& what) {
    throw ParseError(what + " in field element '" + std::string(s_) + "'", 1,
                     pos_ + 1);
  }
  void Skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
  }
  bool Accept(char c) {
    Skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar Expr() {
    bool negate = false;
    if (Accept('-')) {
      negate = true;
    } else {
      Accept('+');
    }
    Scalar acc = Term();
    if (negate) acc = -acc;
    while (true) {
      if (Accept('+')) {
        acc = acc + Term();
      } else if (Accept('-')) {
        acc = acc - Term();
      } else {
        return acc;
      }
    }
  }

  Scalar Term() {
    Scalar acc = Power();
    while (true) {
      if (Accept('*')) {
        acc = acc * Power();
      } else if (Accept('/')) {
        Scalar d = Power();
        if (d.IsZero()) Fail("division by zero");
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  Scalar Power() {
    Scalar base = Atom();
    if (!Accept('^')) return base;
    Skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) Fail("expected exponent");
    unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
    Scalar r = Scalar::One(f_);
    for (unsigned long k = 0; k < e; ++k) r = r * base;
    return r;
  }

  Scalar Atom() {
    Skip();
    if (pos_ >= s_.size()) Fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = Expr();
      if (!Accept(')')) Fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      }
      return Scalar::FromInteger(f_, mpz_class(std::string(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                  s_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(s_.substr(start, pos_ - start));
      if (f_.kind() == FieldKind::kRationalFunctions) {
        std::uint32_t p = f_.characteristic();
        if (name == f_.vars()[0]) return Scalar(RatFunc(BiPoly::Monomial(p, 1, 1, 0)));
        if (name == f_.vars()[1]) return Scalar(RatFunc(BiPoly::Monomial(p, 1, 0, 1)));
      }
      pos_ = start;
      Fail("unknown variable '" + name + "'");
    }
    Fail("unexpected character");
  }

  const FieldSpec& f_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::Parse(const FieldSpec& f, std::string_view text) {
  return EntryParser(f, text).ParseAll();
}

}  // namespace vonstaudt
