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

#include "vonstaudt/atomic.h"

#include <algorithm>
#include <optional>
#include <set>

#include "vonstaudt/error.h"

namespace vonstaudt {

std::string AtomicEquation::ToString() const {
  return "X" + std::to_string(i) + " = X" + std::to_string(j) +
         (op == Op::kAdd ? "+X" : "*X") + std::to_string(k);
}

AtomicSystem::AtomicSystem(std::uint32_t n, std::vector<AtomicEquation> equations,
                           std::vector<std::pair<std::string, std::uint32_t>> origin)
    : n_(n), equations_(std::move(equations)), origin_(std::move(origin)) {
  if (n_ < 1) throw InvalidArgument("atomic system needs N >= 1");
  for (const auto& e : equations_) {
    std::uint32_t lo = e.op == AtomicEquation::Op::kMul ? 1 : 0;
    if (e.i < 1 || e.i > n_ || e.j < lo || e.j > n_ || e.k < lo || e.k > n_) {
      throw InvalidArgument("atomic equation " + e.ToString() +
                            " has an index out of range for N=" + std::to_string(n_));
    }
  }
  std::sort(origin_.begin(), origin_.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  std::set<std::string> names;
  for (std::size_t t = 0; t < origin_.size(); ++t) {
    const auto& [name, idx] = origin_[t];
    if (idx < 2 || idx > n_) {
      throw InvalidArgument("origin index " + std::to_string(idx) + " out of range");
    }
    if (t > 0 && origin_[t - 1].second == idx) {
      throw InvalidArgument("origin index " + std::to_string(idx) + " used twice");
    }
    if (!IsIdentifier(name) || !names.insert(name).second) {
      throw InvalidArgument("bad or duplicate origin name '" + name + "'");
    }
  }
}

std::vector<std::uint32_t> AtomicSystem::AddThirdSlots() const {
  std::set<std::uint32_t> ks;
  for (const auto& e : equations_) {
    if (e.op == AtomicEquation::Op::kAdd) ks.insert(e.k);
  }
  return {ks.begin(), ks.end()};
}

namespace {

class ChainBuilder {
 public:
  explicit ChainBuilder(std::uint32_t last) : last_(last) {}

  std::uint32_t last() const { return last_; }
  std::vector<AtomicEquation>& equations() { return eqs_; }

  // Reduces a polynomial with positive coefficients to one variable. When
  // `target` is set and at least one step is needed, the final step writes
  // into `target`. Returns the variable and whether a step was emitted.
  std::pair<std::uint32_t, bool> Reduce(const NCPolynomial& p,
                                        std::optional<std::uint32_t> target) {
    if (p.IsZero()) return {0, false};
    if (p.terms().size() == 1 && p.terms().begin()->second == 1) {
      return ReduceWord(p.terms().begin()->first, target);
    }
    std::vector<std::uint32_t> items;
    for (const auto& [w, c] : p.terms()) {
      std::uint32_t v = ReduceWord(w, std::nullopt).first;
      for (mpz_class n = 0; n < c; ++n) items.push_back(v);
    }
    std::uint32_t acc = items[0];
    for (std::size_t t = 1; t < items.size(); ++t) {
      std::uint32_t out = (t + 1 == items.size() && target) ? *target : Fresh();
      eqs_.push_back(AtomicEquation::Add(out, acc, items[t]));
      acc = out;
    }
    return {acc, true};
  }

 private:
  std::uint32_t Fresh() { return ++last_; }

  std::pair<std::uint32_t, bool> ReduceWord(const Word& w,
                                            std::optional<std::uint32_t> target) {
    if (w.empty()) return {1, false};
    std::uint32_t acc = w[0] + 2;
    for (std::size_t t = 1; t < w.size(); ++t) {
      std::uint32_t out = (t + 1 == w.size() && target) ? *target : Fresh();
      eqs_.push_back(AtomicEquation::Mul(out, acc, w[t] + 2));
      acc = out;
    }
    return {acc, w.size() > 1};
  }

  std::uint32_t last_;
  std::vector<AtomicEquation> eqs_;
};

}  // namespace

AtomicSystem Atomicize(const NCSystem& s) {
  std::uint32_t n = static_cast<std::uint32_t>(s.num_vars()) + 1;
  ChainBuilder b(n);
  for (const auto& eq : s.equations()) {
    NCPolynomial left, right;
    for (const auto& [w, c] : eq.lhs.terms()) {
      (c > 0 ? left : right).AddTerm(w, abs(c));
    }
    for (const auto& [w, c] : eq.rhs.terms()) {
      (c > 0 ? right : left).AddTerm(w, abs(c));
    }
    auto [l, l_fresh] = b.Reduce(left, std::nullopt);
    auto [r, r_stepped] =
        b.Reduce(right, l_fresh ? std::optional<std::uint32_t>(l) : std::nullopt);
    if (l_fresh && r_stepped) continue;
    if (l == r) continue;
    if (l == 0) std::swap(l, r);
    b.equations().push_back(AtomicEquation::Add(l, r, 0));
  }
  std::vector<std::pair<std::string, std::uint32_t>> origin;
  for (std::size_t v = 0; v < s.num_vars(); ++v) {
    origin.emplace_back(s.names()[v], static_cast<std::uint32_t>(v + 2));
  }
  return AtomicSystem(b.last(), std::move(b.equations()), std::move(origin));
}

namespace {

Matrix Apply(const AtomicEquation& e, const Assignment& v) {
  return e.op == AtomicEquation::Op::kAdd ? v.Get(e.j) + v.Get(e.k)
                                          : v.Get(e.j) * v.Get(e.k);
}

}  // namespace

bool IsSolution(const AtomicSystem& a, const Assignment& values) {
  for (std::uint32_t v = 0; v <= a.N(); ++v) {
    if (!values.Has(v)) throw InvalidArgument("unassigned variable " + std::to_string(v));
  }
  if (!values.Get(0).IsZero() || !values.Get(1).IsIdentity()) return false;
  for (const auto& e : a.equations()) {
    if (values.Get(e.i) != Apply(e, values)) return false;
  }
  return true;
}

Assignment LiftSolution(const NCSystem& s, const AtomicSystem& a,
                        const Assignment& values) {
  if (!IsSolution(s, values)) {
    throw VerificationError("assignment does not solve the system");
  }
  const FieldSpec& f = values.field();
  std::size_t c = values.block_size();
  Assignment out(f, c);
  out.Set(0, Matrix(f, c, c));
  out.Set(1, Matrix::Identity(f, c));
  for (const auto& [name, idx] : a.origin()) {
    auto v = s.IndexOf(name);
    if (!v) throw InvalidArgument("origin variable '" + name + "' not in the system");
    out.Set(idx, values.Get(*v));
  }
  for (const auto& e : a.equations()) {
    if (!out.Has(e.i)) out.Set(e.i, Apply(e, out));
  }
  for (std::uint32_t v = 0; v <= a.N(); ++v) {
    if (!out.Has(v)) out.Set(v, Matrix(f, c, c));
  }
  if (!IsSolution(a, out)) {
    throw VerificationError("lifted assignment does not solve the atomic system");
  }
  return out;
}

Assignment ProjectSolution(const AtomicSystem& a, const Assignment& values) {
  if (!IsSolution(a, values)) {
    throw VerificationError("assignment does not solve the atomic system");
  }
  Assignment out(values.field(), values.block_size());
  for (std::size_t t = 0; t < a.origin().size(); ++t) {
    out.Set(t, values.Get(a.origin()[t].second));
  }
  return out;
}

}  // namespace vonstaudt
