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

// The rank-3 circuit family attached to an atomic system (points on two axes
// and a line at infinity encoding sums and products), matroid axiom checks
// and membership in the family of matroids the system determines.

#ifndef VONSTAUDT_STAUDT_H_
#define VONSTAUDT_STAUDT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vonstaudt/atomic.h"

namespace vonstaudt {

struct GroundElement {
  enum class Kind : std::uint8_t { kO, kXInf, kYInf, kX, kY, kZ, kR };

  Kind kind;
  std::uint32_t index = 0;  // used by kX, kY, kZ, kR

  static GroundElement O() { return {Kind::kO, 0}; }
  static GroundElement XInf() { return {Kind::kXInf, 0}; }
  static GroundElement YInf() { return {Kind::kYInf, 0}; }
  static GroundElement X(std::uint32_t i) { return {Kind::kX, i}; }
  static GroundElement Y(std::uint32_t i) { return {Kind::kY, i}; }
  static GroundElement Z(std::uint32_t i) { return {Kind::kZ, i}; }
  static GroundElement R(std::uint32_t k) { return {Kind::kR, k}; }

  // "O", "xinf", "yinf", "x3", "y3", "z3", "r5".
  std::string Name() const;
  // Throws FormatError on anything else.
  static GroundElement Parse(std::string_view name);

  bool operator==(const GroundElement& o) const {
    return kind == o.kind && index == o.index;
  }
  bool operator<(const GroundElement& o) const {
    return kind != o.kind ? kind < o.kind : index < o.index;
  }
};

// Sorted positions into a ground list.
using Circuit = std::vector<std::uint32_t>;

// A finite family of circuits on an ordered ground list. With `rank3_closure`
// set, every 4-subset containing no listed circuit is an additional
// (implicit) circuit, so all sets of size >= 4 are dependent.
class Matroid {
 public:
  Matroid() = default;
  // Sorts and deduplicates circuits. Throws InvalidArgument on an empty
  // circuit, an out-of-range position or repeated ground elements.
  Matroid(std::vector<GroundElement> ground, std::vector<Circuit> circuits,
          bool rank3_closure);

  const std::vector<GroundElement>& ground() const { return ground_; }
  // Explicit circuits ordered by size, then lexicographically.
  const std::vector<Circuit>& circuits() const { return circuits_; }
  bool rank3_closure() const { return closure_; }
  std::optional<std::uint32_t> Position(const GroundElement& e) const;
  // Throws InvalidArgument if absent.
  std::uint32_t PositionOrThrow(const GroundElement& e) const;

  // `subset` is a sorted list of positions.
  bool IsDependent(const Circuit& subset) const;
  bool IsCircuit(const Circuit& subset) const;
  std::string Describe(const Circuit& c) const;

  bool operator==(const Matroid& o) const {
    return ground_ == o.ground_ && circuits_ == o.circuits_ && closure_ == o.closure_;
  }

 private:
  std::vector<GroundElement> ground_;
  std::vector<Circuit> circuits_;
  bool closure_ = false;
};

using CircuitFamily = Matroid;

// O, xinf, yinf, x1..xN, y1..yN, z1..zN, then r_k for each Add third slot k.
std::vector<GroundElement> StaudtGround(const AtomicSystem& p);

// Which identities with X_1 contribute circuits for every index i, as if the
// equations were part of the system: kRightUnit adds {x_i, y1, z_i}
// (X_i = X_i*X_1), kLeftUnit adds {x_i, y_i, z1} (X_i = X_1*X_i).
enum class UnitCircuits { kNone, kRightUnit, kLeftUnit, kBoth };

// Three lines ({O, xinf, x_i}, {O, yinf, y_i}, {xinf, yinf, z_i}) with all
// their 3-subsets; {x_i, y_k, z_j} per Mul{i,j,k}; {y1, r_k, xinf},
// {x_k, r_k, yinf}, {x_i, r_k, z_j} per Add{i,j,k}; the unit circuits; then
// the rank-3 closure. Index 0 stands for O on the axes (x_0 = y_0 = O) and
// for yinf on the line at infinity.
CircuitFamily BuildCircuits(const AtomicSystem& p,
                            UnitCircuits unit = UnitCircuits::kRightUnit);

struct MatroidCheck {
  bool is_matroid = true;
  // Set on failure. For a containment violation `first` is properly inside
  // `second` and `pivots` is empty. For an elimination violation `pivots`
  // lists every shared element e such that (first u second) - e contains no
  // circuit; `first` < `second` is the lexicographically first such pair.
  std::optional<Circuit> first;
  std::optional<Circuit> second;
  std::vector<std::uint32_t> pivots;
};

MatroidCheck CheckMatroid(const CircuitFamily& c);
inline bool IsMatroid(const CircuitFamily& c) { return CheckMatroid(c).is_matroid; }

// Size of a largest independent subset.
std::size_t RankOf(const Matroid& m, const Circuit& subset);

// Every circuit of `of` contains a circuit of `candidate`. Throws
// InvalidArgument if the ground lists differ.
bool IsWeakImage(const Matroid& candidate, const CircuitFamily& of);

struct FamilyCheck {
  bool member = true;
  // Failed conditions: 0 not a matroidal weak image, 1 has a loop,
  // 2 frame {O, x1, y1, xinf, yinf} restricts differently, 3 some x_i is
  // parallel to xinf. Each with a message.
  std::vector<std::pair<int, std::string>> failures;
};

// Throws InvalidArgument if the ground lists differ.
FamilyCheck InFamily(const Matroid& candidate, const AtomicSystem& p,
                     UnitCircuits unit = UnitCircuits::kRightUnit);

// Keeps the first element of each parallel class. Throws InvalidArgument if
// the matroid has a loop.
Matroid Simplify(const Matroid& m);

}  // namespace vonstaudt

#endif  // VONSTAUDT_STAUDT_H_
