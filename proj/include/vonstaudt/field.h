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

// The exact fields supported by the library: Q, F_p and F_p(l, m).

#ifndef VONSTAUDT_FIELD_H_
#define VONSTAUDT_FIELD_H_

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "vonstaudt/bipoly.h"

namespace vonstaudt {

enum class FieldKind { kRationals, kPrimeField, kRationalFunctions };

class FieldSpec {
 public:
  static FieldSpec Rationals();
  // Throws InvalidArgument unless p is a prime below 2^31.
  static FieldSpec PrimeField(std::uint32_t p);
  static FieldSpec RationalFunctions(std::uint32_t p, std::string x = "l",
                                     std::string y = "m");
  // Accepts "Q", "F<p>", "F<p>(x,y)" as produced by ToString().
  static FieldSpec Parse(std::string_view text);

  FieldKind kind() const { return kind_; }
  // 0 for Q.
  std::uint32_t characteristic() const { return p_; }
  const std::array<std::string, 2>& vars() const { return vars_; }
  std::string ToString() const;

  bool operator==(const FieldSpec& o) const {
    return kind_ == o.kind_ && p_ == o.p_ && vars_ == o.vars_;
  }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

 private:
  FieldSpec(FieldKind kind, std::uint32_t p, std::array<std::string, 2> vars)
      : kind_(kind), p_(p), vars_(std::move(vars)) {}
  FieldKind kind_;
  std::uint32_t p_;
  std::array<std::string, 2> vars_;
};

// Element of F_p(l, m) in canonical form: numerator and denominator coprime,
// denominator monic in graded-lex order. Zero is 0/1.
class RatFunc {
 public:
  explicit RatFunc(std::uint32_t p)
      : num_(p), den_(BiPoly::Constant(p, 1)) {}
  explicit RatFunc(BiPoly num);
  RatFunc(BiPoly num, BiPoly den);

  std::uint32_t modulus() const { return num_.modulus(); }
  const BiPoly& num() const { return num_; }
  const BiPoly& den() const { return den_; }
  bool IsZero() const { return num_.IsZero(); }
  bool IsPolynomial() const { return den_.IsOne(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc Inverse() const;
  bool operator==(const RatFunc& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  // Substitutes field values for both variables. Throws DivisionByZero if
  // the denominator vanishes there.
  std::uint32_t Evaluate(std::uint32_t x, std::uint32_t y) const;
  std::string ToString(const std::string& x, const std::string& y) const;

 private:
  void Normalize();
  BiPoly num_;
  BiPoly den_;
};

// Element of an exact field. The field is carried by the value (as modulus),
// not by variable names; arithmetic between elements of different fields
// throws InvalidArgument.
class Scalar {
 public:
  struct ModP {
    std::uint32_t v;
    std::uint32_t p;
    bool operator==(const ModP& o) const { return v == o.v && p == o.p; }
  };

  Scalar() : value_(mpq_class(0)) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}
  explicit Scalar(ModP x) : value_(x) {}
  explicit Scalar(RatFunc f) : value_(std::move(f)) {}

  static Scalar Zero(const FieldSpec& f);
  static Scalar One(const FieldSpec& f);
  static Scalar FromInteger(const FieldSpec& f, const mpz_class& n);
  // Parses an entry string in the field's text form ("-3/4", "2",
  // "(l*m+1)/(l+1)"). Throws ParseError on bad input.
  static Scalar Parse(const FieldSpec& f, std::string_view text);

  FieldKind kind() const;
  bool IsZero() const;
  bool IsOne() const;
  bool BelongsTo(const FieldSpec& f) const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar Inverse() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  const ModP& mod_p() const { return std::get<ModP>(value_); }
  const RatFunc& ratfunc() const { return std::get<RatFunc>(value_); }

  std::string ToString(const FieldSpec& f) const;

 private:
  std::variant<mpq_class, ModP, RatFunc> value_;
};

}  // namespace vonstaudt

#endif  // VONSTAUDT_FIELD_H_
