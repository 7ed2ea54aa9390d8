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

// Atomic systems: every equation is X_i = X_j + X_k or X_i = X_j * X_k, with
// X_0 = 0 and X_1 = 1 implicit. Conversion from arbitrary systems and
// translation of matrix solutions in both directions.

#ifndef VONSTAUDT_ATOMIC_H_
#define VONSTAUDT_ATOMIC_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vonstaudt/ncring.h"

namespace vonstaudt {

struct AtomicEquation {
  enum class Op { kAdd, kMul };

  static AtomicEquation Add(std::uint32_t i, std::uint32_t j, std::uint32_t k) {
    return {Op::kAdd, i, j, k};
  }
  static AtomicEquation Mul(std::uint32_t i, std::uint32_t j, std::uint32_t k) {
    return {Op::kMul, i, j, k};
  }

  Op op;
  std::uint32_t i;
  std::uint32_t j;
  std::uint32_t k;

  bool operator==(const AtomicEquation& o) const {
    return op == o.op && i == o.i && j == o.j && k == o.k;
  }
  // "X4 = X2*X3" or "X4 = X1+X5".
  std::string ToString() const;
};

class AtomicSystem {
 public:
  // The empty system over X_0, X_1.
  AtomicSystem() = default;
  // `origin` lists (original name, atomic index). Throws InvalidArgument if
  // an index is out of range: i, and every Mul operand, lies in [1, n]; Add
  // operands lie in [0, n]; origin indices are distinct and in [2, n].
  AtomicSystem(std::uint32_t n, std::vector<AtomicEquation> equations,
               std::vector<std::pair<std::string, std::uint32_t>> origin = {});

  // Highest variable index.
  std::uint32_t N() const { return n_; }
  const std::vector<AtomicEquation>& equations() const { return equations_; }
  // Ordered by atomic index.
  const std::vector<std::pair<std::string, std::uint32_t>>& origin() const {
    return origin_;
  }
  // Distinct third slots of Add equations, ascending.
  std::vector<std::uint32_t> AddThirdSlots() const;

  bool operator==(const AtomicSystem& o) const {
    return n_ == o.n_ && equations_ == o.equations_ && origin_ == o.origin_;
  }

 private:
  std::uint32_t n_ = 1;
  std::vector<AtomicEquation> equations_;
  std::vector<std::pair<std::string, std::uint32_t>> origin_;
};

// Original variable v receives atomic index v + 2. For each equation, terms
// with negative coefficients move to the other side; each side becomes a
// chain of fresh products (per monomial) and fresh sums (per unit of
// coefficient, constants as copies of X_1, zero as X_0). Equal sides are then
// tied by the last chain step or by X_l = X_r + X_0.
AtomicSystem Atomicize(const NCSystem& s);

// Requires slots 0..N assigned, X_0 zero and X_1 the identity.
bool IsSolution(const AtomicSystem& a, const Assignment& values);

// Extends a solution of `s` (indexed by original variable) to all atomic
// variables. Throws VerificationError if `values` does not solve `s`.
Assignment LiftSolution(const NCSystem& s, const AtomicSystem& a,
                        const Assignment& values);

// Restricts a solution of `a` to the original variables, in origin order.
// Throws VerificationError if `values` does not solve `a`.
Assignment ProjectSolution(const AtomicSystem& a, const Assignment& values);

}  // namespace vonstaudt

#endif  // VONSTAUDT_ATOMIC_H_
