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

#include "vonstaudt/bipoly.h"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vonstaudt/error.h"

namespace vonstaudt {

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint32_t ModInv(std::uint32_t a, std::uint32_t p) {
  a %= p;
  if (a == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(p));
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t ModReduce(std::int64_t a, std::uint32_t p) {
  std::int64_t r = a % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs)
    : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  Trim();
}

UPoly UPoly::Constant(std::uint32_t p, std::uint32_t c) {
  return UPoly(p, {c});
}

void UPoly::Trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::operator+(const UPoly& o) const {
  UPoly r(p_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    r.c_[i] = ModAdd(Coeff(i), o.Coeff(i), p_);
  }
  r.Trim();
  return r;
}

UPoly UPoly::operator-(const UPoly& o) const {
  UPoly r(p_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    r.c_[i] = ModSub(Coeff(i), o.Coeff(i), p_);
  }
  r.Trim();
  return r;
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (IsZero() || o.IsZero()) return UPoly(p_);
  UPoly r(p_);
  r.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      r.c_[i + j] = ModAdd(r.c_[i + j], ModMul(c_[i], o.c_[j], p_), p_);
    }
  }
  r.Trim();
  return r;
}

UPoly UPoly::Scaled(std::uint32_t s) const {
  UPoly r(p_);
  r.c_ = c_;
  for (auto& c : r.c_) c = ModMul(c, s, p_);
  r.Trim();
  return r;
}

std::pair<UPoly, UPoly> UPoly::DivMod(const UPoly& d) const {
  if (d.IsZero()) throw DivisionByZero("polynomial division by zero");
  UPoly q(p_), r = *this;
  if (Degree() < d.Degree()) return {q, r};
  q.c_.assign(c_.size() - d.c_.size() + 1, 0);
  std::uint32_t inv = ModInv(d.Leading(), p_);
  while (!r.IsZero() && r.Degree() >= d.Degree()) {
    std::size_t shift = r.c_.size() - d.c_.size();
    std::uint32_t f = ModMul(r.Leading(), inv, p_);
    q.c_[shift] = f;
    for (std::size_t i = 0; i < d.c_.size(); ++i) {
      r.c_[i + shift] = ModSub(r.c_[i + shift], ModMul(f, d.c_[i], p_), p_);
    }
    r.Trim();
  }
  q.Trim();
  return {q, r};
}

UPoly UPoly::Monic() const {
  if (IsZero()) return *this;
  return Scaled(ModInv(Leading(), p_));
}

UPoly UPoly::Gcd(UPoly a, UPoly b) {
  while (!b.IsZero()) {
    UPoly r = a.DivMod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.Monic();
}

// ---------------------------------------------------------------- BiPoly

namespace {

// Descending graded-lex order: true when a precedes b.
bool TermBefore(std::uint32_t ai, std::uint32_t aj, std::uint32_t bi,
                std::uint32_t bj) {
  std::uint32_t da = ai + aj, db = bi + bj;
  if (da != db) return da > db;
  return ai > bi;
}

// A bivariate polynomial viewed as a polynomial in the first variable with
// coefficients in F_p[second variable]; index = degree in the first variable.
using LambdaPoly = std::vector<UPoly>;

void TrimLambda(LambdaPoly& a) {
  while (!a.empty() && a.back().IsZero()) a.pop_back();
}

LambdaPoly ToLambda(const BiPoly& a) {
  LambdaPoly out;
  if (a.IsZero()) return out;
  std::uint32_t p = a.modulus();
  std::vector<std::vector<std::uint32_t>> dense(a.DegreeFirst() + 1);
  for (const auto& t : a.terms()) {
    auto& row = dense[t.i];
    if (row.size() <= t.j) row.resize(t.j + 1, 0);
    row[t.j] = t.c;
  }
  out.reserve(dense.size());
  for (auto& row : dense) out.emplace_back(p, std::move(row));
  TrimLambda(out);
  return out;
}

BiPoly FromLambda(std::uint32_t p, const LambdaPoly& a) {
  std::vector<BiPoly::Term> terms;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& cs = a[i].coeffs();
    for (std::size_t j = 0; j < cs.size(); ++j) {
      if (cs[j] != 0) {
        terms.push_back({static_cast<std::uint32_t>(i),
                         static_cast<std::uint32_t>(j), cs[j]});
      }
    }
  }
  return BiPoly::FromTerms(p, std::move(terms));
}

UPoly Content(std::uint32_t p, const LambdaPoly& a) {
  UPoly g(p);
  for (const auto& c : a) {
    g = UPoly::Gcd(g, c);
    if (g.Degree() == 0) break;
  }
  return g;
}

LambdaPoly PrimitivePart(std::uint32_t p, const LambdaPoly& a) {
  if (a.empty()) return a;
  UPoly c = Content(p, a);
  LambdaPoly out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(x.DivMod(c).first);
  return out;
}

// lc(b)^e * a mod b in F_p[m][l], for a multiple of the true pseudo-remainder.
LambdaPoly PseudoRemainder(std::uint32_t p, LambdaPoly a, const LambdaPoly& b) {
  const UPoly& lb = b.back();
  int db = static_cast<int>(b.size()) - 1;
  while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
    UPoly la = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& x : a) x = x * lb;
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[i + shift] = a[i + shift] - la * b[i];
    }
    TrimLambda(a);
  }
  (void)p;
  return a;
}

}  // namespace

BiPoly BiPoly::Constant(std::uint32_t p, std::uint32_t c) {
  return Monomial(p, c, 0, 0);
}

BiPoly BiPoly::Monomial(std::uint32_t p, std::uint32_t c, std::uint32_t i,
                        std::uint32_t j) {
  BiPoly r(p);
  c %= p;
  if (c != 0) r.terms_.push_back({i, j, c});
  return r;
}

BiPoly BiPoly::FromTerms(std::uint32_t p, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return TermBefore(a.i, a.j, b.i, b.j);
  });
  BiPoly r(p);
  for (const auto& t : terms) {
    std::uint32_t c = t.c % p;
    if (!r.terms_.empty() && r.terms_.back().i == t.i &&
        r.terms_.back().j == t.j) {
      r.terms_.back().c = ModAdd(r.terms_.back().c, c, p);
    } else {
      r.terms_.push_back({t.i, t.j, c});
    }
  }
  r.terms_.erase(std::remove_if(r.terms_.begin(), r.terms_.end(),
                                [](const Term& t) { return t.c == 0; }),
                 r.terms_.end());
  return r;
}

std::uint32_t BiPoly::ConstantTerm() const {
  if (!terms_.empty() && terms_.back().i == 0 && terms_.back().j == 0) {
    return terms_.back().c;
  }
  return 0;
}

std::uint32_t BiPoly::DegreeFirst() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.i);
  return d;
}

std::uint32_t BiPoly::DegreeSecond() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.j);
  return d;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  BiPoly r(p_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t a = 0, b = 0;
  while (a < terms_.size() || b < o.terms_.size()) {
    if (b == o.terms_.size() ||
        (a < terms_.size() && TermBefore(terms_[a].i, terms_[a].j,
                                         o.terms_[b].i, o.terms_[b].j))) {
      r.terms_.push_back(terms_[a++]);
    } else if (a == terms_.size() ||
               TermBefore(o.terms_[b].i, o.terms_[b].j, terms_[a].i,
                          terms_[a].j)) {
      r.terms_.push_back(o.terms_[b++]);
    } else {
      std::uint32_t c = ModAdd(terms_[a].c, o.terms_[b].c, p_);
      if (c != 0) r.terms_.push_back({terms_[a].i, terms_[a].j, c});
      ++a;
      ++b;
    }
  }
  return r;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& t : r.terms_) t.c = ModNeg(t.c, p_);
  return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator*(const BiPoly& o) const {
  BiPoly r(p_);
  if (IsZero() || o.IsZero()) return r;
  if (o.IsConstant()) return Scaled(o.terms_[0].c);
  if (IsConstant()) return o.Scaled(terms_[0].c);
  std::uint32_t max_i = DegreeFirst() + o.DegreeFirst();
  std::uint32_t max_j = DegreeSecond() + o.DegreeSecond();
  std::size_t width = max_j + 1;
  std::vector<std::uint32_t> dense((max_i + 1) * width, 0);
  for (const auto& s : terms_) {
    for (const auto& t : o.terms_) {
      auto& slot = dense[(s.i + t.i) * width + (s.j + t.j)];
      slot = ModAdd(slot, ModMul(s.c, t.c, p_), p_);
    }
  }
  // Emit in descending graded-lex order directly.
  for (std::int64_t d = max_i + max_j; d >= 0; --d) {
    std::int64_t hi = std::min<std::int64_t>(d, max_i);
    std::int64_t lo = std::max<std::int64_t>(0, d - max_j);
    for (std::int64_t i = hi; i >= lo; --i) {
      std::int64_t j = d - i;
      std::uint32_t c = dense[i * width + j];
      if (c != 0) {
        r.terms_.push_back({static_cast<std::uint32_t>(i),
                            static_cast<std::uint32_t>(j), c});
      }
    }
  }
  return r;
}

BiPoly BiPoly::Scaled(std::uint32_t s) const {
  s %= p_;
  BiPoly r(p_);
  if (s == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.c = ModMul(t.c, s, p_);
  return r;
}

BiPoly BiPoly::DivideExact(const BiPoly& d) const {
  if (d.IsZero()) throw DivisionByZero("bivariate division by zero");
  if (d.IsConstant()) return Scaled(ModInv(d.terms_[0].c, p_));
  BiPoly q(p_), r = *this;
  const Term& lt = d.LeadingTerm();
  std::uint32_t inv = ModInv(lt.c, p_);
  std::vector<Term> quotient;
  while (!r.IsZero()) {
    const Term& rt = r.LeadingTerm();
    if (rt.i < lt.i || rt.j < lt.j) {
      throw InvalidArgument("bivariate division is not exact");
    }
    Term t{rt.i - lt.i, rt.j - lt.j, ModMul(rt.c, inv, p_)};
    quotient.push_back(t);
    r = r - d * Monomial(p_, t.c, t.i, t.j);
  }
  return FromTerms(p_, std::move(quotient));
}

BiPoly BiPoly::Monic() const {
  if (IsZero()) return *this;
  return Scaled(ModInv(terms_.front().c, p_));
}

std::uint32_t BiPoly::Evaluate(std::uint32_t x, std::uint32_t y) const {
  std::uint32_t acc = 0;
  for (const auto& t : terms_) {
    std::uint32_t v = t.c;
    for (std::uint32_t k = 0; k < t.i; ++k) v = ModMul(v, x, p_);
    for (std::uint32_t k = 0; k < t.j; ++k) v = ModMul(v, y, p_);
    acc = ModAdd(acc, v, p_);
  }
  return acc;
}

std::string BiPoly::ToString(const std::string& x, const std::string& y) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t n = 0; n < terms_.size(); ++n) {
    const Term& t = terms_[n];
    if (n > 0) out += "+";
    std::string mono;
    auto append_var = [&mono](const std::string& name, std::uint32_t e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += name;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    append_var(x, t.i);
    append_var(y, t.j);
    if (mono.empty()) {
      out += std::to_string(t.c);
    } else if (t.c == 1) {
      out += mono;
    } else {
      out += std::to_string(t.c) + "*" + mono;
    }
  }
  return out;
}

BiPoly BiPoly::Gcd(const BiPoly& a, const BiPoly& b) {
  if (a.IsZero() && b.IsZero()) {
    throw InvalidArgument("gcd of two zero polynomials");
  }
  std::uint32_t p = a.modulus();
  if (a.IsZero()) return b.Monic();
  if (b.IsZero()) return a.Monic();
  if (a.IsConstant() || b.IsConstant()) return Constant(p, 1);

  LambdaPoly la = ToLambda(a), lb = ToLambda(b);
  UPoly ca = Content(p, la), cb = Content(p, lb);
  UPoly content_gcd = UPoly::Gcd(ca, cb);
  LambdaPoly pa = PrimitivePart(p, la), pb = PrimitivePart(p, lb);
  if (pa.size() < pb.size()) std::swap(pa, pb);
  while (!pb.empty()) {
    LambdaPoly r = PseudoRemainder(p, pa, pb);
    pa = std::move(pb);
    pb = PrimitivePart(p, r);
  }
  LambdaPoly g = PrimitivePart(p, pa);
  for (auto& c : g) c = c * content_gcd;
  return FromLambda(p, g).Monic();
}

}  // namespace vonstaudt
