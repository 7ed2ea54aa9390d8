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

// Worked studies: the Weyl relation XY - YX = 1 and its order-p matrix model
// over F_p(l, m); the Baumslag-Solitar system with a desk-scale matrix
// search; and the case split turning a universal Horn sentence into
// polynomial systems.

#ifndef VONSTAUDT_CASEBOOK_H_
#define VONSTAUDT_CASEBOOK_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vonstaudt/atomic.h"
#include "vonstaudt/ncring.h"
#include "vonstaudt/represent.h"

namespace vonstaudt {

// ---------------------------------------------------------------- Weyl

// {X4 = X2*X3, X5 = X3*X2, X4 = X1+X5}, N = 5, X -> 2, Y -> 3.
AtomicSystem WeylSystem();

struct WeylPair {
  std::uint32_t p;
  Matrix a;
  Matrix b;
};

// A: diagonal l, superdiagonal 1, 2, ..., p-1. B: subdiagonal 1, top-right
// entry m. Both over F_p(l, m). Throws InvalidArgument unless p is prime and
// VerificationError if AB - BA != I.
WeylPair WeylMatrices(std::uint32_t p);

// Slots 0..5: 0, I, A, B, AB, BA.
Assignment WeylSolution(const WeylPair& w);

// The 3p x 19p block matrix of WeylSolution under the point map.
Representation WeylRepresentation(std::uint32_t p);

struct WeylReport {
  std::uint32_t p = 0;
  bool commutator_is_identity = false;
  std::size_t columns = 0;
  std::map<std::size_t, std::size_t> pair_ranks;    // rank -> count
  std::map<std::size_t, std::size_t> triple_ranks;  // rank -> count
  bool arrangement_ok = false;
  // Every 3-circuit of the system's family has rank 2p.
  bool circuit_triples_rank_2p = false;
  std::size_t circuit_triples = 0;
  // Rank of {r5, x4, z1}.
  std::size_t r5_x4_z1_rank = 0;
  // Triples of rank 2p that are not circuits of the family.
  std::vector<std::vector<std::string>> extra_dependent_triples;
  bool family_is_matroid = false;
  bool induced_in_family = false;
  bool roundtrip_exact = false;
};

WeylReport WeylStudy(std::uint32_t p, unsigned jobs = 1);

// Whether c * 1 = 0 in the field, the necessary condition for XY - YX = I_c
// obtained by taking traces.
bool TraceObstruction(std::size_t c, const FieldSpec& field);

// ---------------------------------------------------------------- BS(2,3)

// x*x' = 1, y*y' = 1, y*x^2*y' = x^3, z*(y*x*y'*x'*y*x'*y'*x - 1) = 1.
NCSystem BsSystem();

// Every invertible c x c matrix over F_p, in lexicographic order of entries.
// Throws InvalidArgument if the field is not a prime field or the group has
// more than `limit` elements.
std::vector<Matrix> GeneralLinearGroup(const FieldSpec& field, std::size_t c,
                                       std::size_t limit);

enum class SearchMode { kExhaustive, kRandom };

struct BsSearchResult {
  std::string field;
  std::size_t dim = 0;
  std::string mode;
  std::size_t group_order = 0;  // exhaustive mode only
  std::size_t pairs_examined = 0;
  // Pairs of invertible (A, B) with B A^2 B^-1 = A^3.
  std::size_t relator_pairs = 0;
  // Relator pairs whose commutator word g = B A B^-1 A^-1 B A^-1 B^-1 A is
  // not the identity, with the first few recorded.
  std::size_t nontrivial_word_pairs = 0;
  std::vector<std::pair<Matrix, Matrix>> witnesses;
  // Relator pairs with g - I invertible, i.e. solutions of BsSystem().
  std::size_t system_solutions = 0;
};

inline constexpr std::size_t kBsPairGuard = 10'000'000;

// Exhaustive mode enumerates GL_c(F_p)^2 and throws InvalidArgument above
// kBsPairGuard pairs. Random mode draws `count` pairs of invertible matrices
// (entries uniform in F_p, or in [-3, 3] over Q) from `seed`.
BsSearchResult BsSearch(const FieldSpec& field, std::size_t c, SearchMode mode,
                        std::size_t count = 0, std::uint64_t seed = 0,
                        unsigned jobs = 1);

// ---------------------------------------------------------------- Horn

// Product of variables with exponents +1 or -1; empty is the unit.
struct GroupWord {
  std::vector<std::pair<std::uint32_t, int>> letters;
  bool operator==(const GroupWord& o) const { return letters == o.letters; }
};

struct HornSentence {
  std::vector<std::string> vars;
  std::vector<std::pair<GroupWord, GroupWord>> equations;
  std::pair<GroupWord, GroupWord> implication;
};

// "x*y^-1*x", "x^2" (read as x*x), "1". Throws ParseError on bad syntax or unknown variables.
GroupWord ParseGroupWord(std::string_view text, const std::vector<std::string>& vars);
std::string FormatGroupWord(const GroupWord& w, const std::vector<std::string>& vars);

struct HornCase {
  std::vector<std::uint32_t> zero_vars;  // S, ascending
  NCSystem system;
  // Per sentence variable, the name standing for its inverse: the variable
  // itself when it is in S, a fresh primed name otherwise.
  std::vector<std::string> inverse_names;
  // The fresh variable of the implication equation.
  std::string witness_name;
  // The equations as written before expansion, one per system equation,
  // ending with "(A - B)*y = 1".
  std::vector<std::string> equations;
};

// One case per subset S of the variables, ordered by bitmask (bit i set iff
// variable i is in S). Variables in S get x = 0 and x^-1 -> x; the others
// get x*x' = 1 and x^-1 -> x'. Then the sentence's equations, then
// (A - B)*y = 1 for the implication A = B with y fresh.
std::vector<HornCase> HornReduce(const HornSentence& h);

// Searches assignments of a case over M_c(F_p): variables in S are 0, the
// others range over GL_c(F_p), primed variables are their inverses and y is
// (A - B)^-1. Returns a verified solution. Throws InvalidArgument above
// `limit` candidate assignments.
std::optional<Assignment> HornCaseSearch(const HornSentence& h, const HornCase& hc,
                                         const FieldSpec& field, std::size_t c,
                                         std::size_t limit = 10'000'000);

// Evaluates the sentence in F_p with 0^-1 = 0 over all assignments; true if
// it holds everywhere.
bool HornHoldsInPrimeField(const HornSentence& h, std::uint32_t p);

}  // namespace vonstaudt

#endif  // VONSTAUDT_CASEBOOK_H_
