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

// Polynomials over prime fields: dense univariate F_p[t] and sparse bivariate
// F_p[l, m]. These carry the rational-function field F_p(l, m) used for the
// symbolic matrix models.

#ifndef VONSTAUDT_BIPOLY_H_
#define VONSTAUDT_BIPOLY_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace vonstaudt {

bool IsPrime(std::uint64_t n);

// Arithmetic in Z/pZ for p < 2^31.
inline std::uint32_t ModAdd(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}
inline std::uint32_t ModSub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p - b);
}
inline std::uint32_t ModMul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}
inline std::uint32_t ModNeg(std::uint32_t a, std::uint32_t p) {
  return a == 0 ? 0 : p - a;
}
// Throws DivisionByZero when a == 0 mod p.
std::uint32_t ModInv(std::uint32_t a, std::uint32_t p);
// Reduces an arbitrary signed value into [0, p).
std::uint32_t ModReduce(std::int64_t a, std::uint32_t p);

// Dense polynomial in one variable over F_p, coefficients low to high degree.
// The zero polynomial has no coefficients; otherwise the top coefficient is
// nonzero.
class UPoly {
 public:
  explicit UPoly(std::uint32_t p) : p_(p) {}
  UPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs);
  static UPoly Constant(std::uint32_t p, std::uint32_t c);

  std::uint32_t modulus() const { return p_; }
  bool IsZero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1.
  int Degree() const { return static_cast<int>(c_.size()) - 1; }
  std::uint32_t Leading() const { return c_.empty() ? 0 : c_.back(); }
  std::uint32_t Coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly Scaled(std::uint32_t s) const;
  bool operator==(const UPoly& o) const { return p_ == o.p_ && c_ == o.c_; }

  // Quotient and remainder; divisor must be nonzero.
  std::pair<UPoly, UPoly> DivMod(const UPoly& d) const;
  UPoly Monic() const;

  static UPoly Gcd(UPoly a, UPoly b);

 private:
  void Trim();
  std::uint32_t p_;
  std::vector<std::uint32_t> c_;
};

// Sparse polynomial in two variables over F_p. Terms are kept sorted in
// descending graded-lexicographic order (total degree, then degree in the
// first variable) with no zero coefficients, so equality is structural.
class BiPoly {
 public:
  struct Term {
    std::uint32_t i;  // exponent of the first variable
    std::uint32_t j;  // exponent of the second variable
    std::uint32_t c;  // nonzero coefficient in [1, p)
    bool operator==(const Term& o) const {
      return i == o.i && j == o.j && c == o.c;
    }
  };

  explicit BiPoly(std::uint32_t p) : p_(p) {}
  static BiPoly Constant(std::uint32_t p, std::uint32_t c);
  static BiPoly Monomial(std::uint32_t p, std::uint32_t c, std::uint32_t i,
                         std::uint32_t j);
  // Builds from unsorted terms; merges duplicates and drops zeros.
  static BiPoly FromTerms(std::uint32_t p, std::vector<Term> terms);

  std::uint32_t modulus() const { return p_; }
  bool IsZero() const { return terms_.empty(); }
  bool IsConstant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].i == 0 &&
                              terms_[0].j == 0);
  }
  bool IsOne() const {
    return terms_.size() == 1 && terms_[0].i == 0 && terms_[0].j == 0 &&
           terms_[0].c == 1;
  }
  // Constant coefficient (0 when absent).
  std::uint32_t ConstantTerm() const;
  const std::vector<Term>& terms() const { return terms_; }
  const Term& LeadingTerm() const { return terms_.front(); }
  std::uint32_t DegreeFirst() const;
  std::uint32_t DegreeSecond() const;

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator-() const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly Scaled(std::uint32_t s) const;
  bool operator==(const BiPoly& o) const {
    return p_ == o.p_ && terms_ == o.terms_;
  }
  bool operator!=(const BiPoly& o) const { return !(*this == o); }

  // Exact quotient; throws InvalidArgument if `d` does not divide *this.
  BiPoly DivideExact(const BiPoly& d) const;
  // Scales so the leading coefficient is 1. Zero stays zero.
  BiPoly Monic() const;

  std::uint32_t Evaluate(std::uint32_t x, std::uint32_t y) const;

  // Canonical text, e.g. "l^2*m+2*l+1" with the given variable names.
  std::string ToString(const std::string& x, const std::string& y) const;

  // Monic greatest common divisor. Throws InvalidArgument if both are zero.
  static BiPoly Gcd(const BiPoly& a, const BiPoly& b);

 private:
  std::uint32_t p_;
  std::vector<Term> terms_;
};

}  // namespace vonstaudt

#endif  // VONSTAUDT_BIPOLY_H_
