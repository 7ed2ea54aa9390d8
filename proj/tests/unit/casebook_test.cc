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

#include "vonstaudt/casebook.h"

#include <gtest/gtest.h>

#include <random>

#include "vonstaudt/error.h"

namespace vonstaudt {
namespace {

TEST(WeylTest, CommutatorIsIdentity) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    WeylPair w = WeylMatrices(p);
    Matrix id = Matrix::Identity(w.a.field(), p);
    EXPECT_EQ(w.a * w.b - w.b * w.a, id) << p;
    EXPECT_TRUE(IsInvertible(w.a));
    EXPECT_TRUE(IsInvertible(w.b));
  }
}

TEST(WeylTest, MatrixShape) {
  WeylPair w = WeylMatrices(3);
  const FieldSpec& f = w.a.field();
  EXPECT_EQ(w.a, Matrix::FromEntries(f, 3, 3,
                                     {Scalar::Parse(f, "l"), Scalar::Parse(f, "1"),
                                      Scalar::Zero(f), Scalar::Zero(f), Scalar::Parse(f, "l"),
                                      Scalar::Parse(f, "2"), Scalar::Zero(f), Scalar::Zero(f),
                                      Scalar::Parse(f, "l")}));
  EXPECT_EQ(w.b(0, 2), Scalar::Parse(f, "m"));
  EXPECT_EQ(w.b(1, 0), Scalar::One(f));
  EXPECT_EQ(w.b(2, 1), Scalar::One(f));
}

TEST(WeylTest, SystemIsAtomicizedEquation) {
  EXPECT_EQ(WeylSystem(), Atomicize(ParseSystem("X*Y - Y*X = 1\n")));
  Assignment s = WeylSolution(WeylMatrices(2));
  EXPECT_TRUE(IsSolution(WeylSystem(), s));
}

TEST(WeylTest, StudyAtP2) {
  WeylReport r = WeylStudy(2, 2);
  EXPECT_TRUE(r.commutator_is_identity);
  EXPECT_EQ(r.columns, 19u);
  EXPECT_EQ(r.pair_ranks, (std::map<std::size_t, std::size_t>{{4, 171}}));
  std::size_t triples = 0;
  for (const auto& [rank, count] : r.triple_ranks) {
    EXPECT_TRUE(rank == 4 || rank == 6);
    triples += count;
  }
  EXPECT_EQ(triples, 969u);
  EXPECT_TRUE(r.arrangement_ok);
  EXPECT_TRUE(r.circuit_triples_rank_2p);
  EXPECT_EQ(r.r5_x4_z1_rank, 4u);
  EXPECT_TRUE(r.family_is_matroid);
  EXPECT_TRUE(r.induced_in_family);
  EXPECT_TRUE(r.roundtrip_exact);
}

TEST(TraceObstructionTest, OnlyWhenCharacteristicDividesSize) {
  for (std::size_t c = 1; c <= 8; ++c) {
    EXPECT_FALSE(TraceObstruction(c, FieldSpec::Rationals()));
    EXPECT_EQ(TraceObstruction(c, FieldSpec::PrimeField(3)), c % 3 == 0);
  }
  EXPECT_TRUE(TraceObstruction(2, FieldSpec::RationalFunctions(2)));
}

TEST(GeneralLinearGroupTest, Orders) {
  EXPECT_EQ(GeneralLinearGroup(FieldSpec::PrimeField(2), 2, 100).size(), 6u);
  EXPECT_EQ(GeneralLinearGroup(FieldSpec::PrimeField(3), 2, 100).size(), 48u);
  EXPECT_EQ(GeneralLinearGroup(FieldSpec::PrimeField(5), 1, 100).size(), 4u);
  EXPECT_THROW(GeneralLinearGroup(FieldSpec::PrimeField(3), 2, 10), InvalidArgument);
  EXPECT_THROW(GeneralLinearGroup(FieldSpec::Rationals(), 1, 10), InvalidArgument);
}

TEST(BsTest, SystemShape) {
  NCSystem s = BsSystem();
  EXPECT_EQ(s.names(), (std::vector<std::string>{"x", "x'", "y", "y'", "z"}));
  EXPECT_EQ(s.equations().size(), 4u);
}

// Counts relator pairs directly from the group elements.
std::size_t RelatorPairs(const FieldSpec& f, std::size_t c) {
  auto g = GeneralLinearGroup(f, c, 1000);
  std::size_t n = 0;
  for (const auto& a : g) {
    for (const auto& b : g) n += b * a * a == a * a * a * b;
  }
  return n;
}

TEST(BsTest, ExhaustiveSearchAtDeskScale) {
  for (std::uint32_t p : {2u, 3u}) {
    FieldSpec f = FieldSpec::PrimeField(p);
    BsSearchResult r = BsSearch(f, 2, SearchMode::kExhaustive, 0, 0, 2);
    std::size_t order = p == 2 ? 6 : 48;
    EXPECT_EQ(r.group_order, order);
    EXPECT_EQ(r.pairs_examined, order * order);
    EXPECT_EQ(r.relator_pairs, RelatorPairs(f, 2));
    EXPECT_EQ(r.nontrivial_word_pairs, 0u);
    EXPECT_EQ(r.system_solutions, 0u);
    EXPECT_TRUE(r.witnesses.empty());
  }
}

TEST(BsTest, RandomSearchIsDeterministic) {
  FieldSpec q = FieldSpec::Rationals();
  BsSearchResult a = BsSearch(q, 2, SearchMode::kRandom, 500, 9, 1);
  BsSearchResult b = BsSearch(q, 2, SearchMode::kRandom, 500, 9, 3);
  EXPECT_EQ(a.pairs_examined, 500u);
  EXPECT_EQ(a.relator_pairs, b.relator_pairs);
  EXPECT_EQ(a.system_solutions, 0u);
}

TEST(BsTest, ScalarCaseCommutes) {
  BsSearchResult r = BsSearch(FieldSpec::PrimeField(7), 1, SearchMode::kExhaustive);
  EXPECT_EQ(r.nontrivial_word_pairs, 0u);
  EXPECT_EQ(r.relator_pairs, RelatorPairs(FieldSpec::PrimeField(7), 1));
}

TEST(GroupWordTest, ParseAndFormat) {
  std::vector<std::string> vars = {"x", "y"};
  GroupWord w = ParseGroupWord("x*y^-1*x^2", vars);
  EXPECT_EQ(w.letters,
            (std::vector<std::pair<std::uint32_t, int>>{{0, 1}, {1, -1}, {0, 1}, {0, 1}}));
  EXPECT_EQ(FormatGroupWord(w, vars), "x*y^-1*x*x");
  EXPECT_EQ(ParseGroupWord("y^-2", vars).letters.size(), 2u);
  EXPECT_THROW(ParseGroupWord("x^0", vars), ParseError);
  EXPECT_TRUE(ParseGroupWord("1", vars).letters.empty());
  EXPECT_THROW(ParseGroupWord("x*w", vars), ParseError);
  EXPECT_THROW(ParseGroupWord("x*", vars), ParseError);
}

HornSentence Horn(std::vector<std::string> vars,
                  std::vector<std::pair<std::string, std::string>> eqs,
                  std::pair<std::string, std::string> implication) {
  HornSentence h;
  h.vars = vars;
  for (const auto& [a, b] : eqs) {
    h.equations.push_back({ParseGroupWord(a, vars), ParseGroupWord(b, vars)});
  }
  h.implication = {ParseGroupWord(implication.first, vars),
                   ParseGroupWord(implication.second, vars)};
  return h;
}

TEST(HornReduceTest, OneVariableWorkedExample) {
  HornSentence h = Horn({"x"}, {{"x", "1"}}, {"x*x", "1"});
  std::vector<HornCase> cases = HornReduce(h);
  ASSERT_EQ(cases.size(), 2u);
  EXPECT_TRUE(cases[0].zero_vars.empty());
  EXPECT_EQ(cases[0].equations,
            (std::vector<std::string>{"x*x' = 1", "x = 1", "(x*x - 1)*y = 1"}));
  EXPECT_EQ(cases[1].zero_vars, (std::vector<std::uint32_t>{0}));
  EXPECT_EQ(cases[1].equations,
            (std::vector<std::string>{"x = 0", "x = 1", "(x*x - 1)*y = 1"}));
  // The text and the expanded system agree.
  for (const auto& hc : cases) {
    std::string text;
    for (const auto& e : hc.equations) text += e + "\n";
    EXPECT_EQ(ParseSystem(text), hc.system);
  }
  for (std::uint32_t p : {2u, 3u, 5u}) {
    FieldSpec f = FieldSpec::PrimeField(p);
    EXPECT_FALSE(HornCaseSearch(h, cases[0], f, 1).has_value());
    EXPECT_FALSE(HornCaseSearch(h, cases[1], f, 1).has_value());
  }
}

TEST(HornReduceTest, FreshNamesAvoidClashes) {
  HornSentence h = Horn({"y", "y'"}, {}, {"y", "y'"});
  std::vector<HornCase> cases = HornReduce(h);
  ASSERT_EQ(cases.size(), 4u);
  EXPECT_EQ(cases[0].inverse_names, (std::vector<std::string>{"y''", "y'''"}));
  EXPECT_NE(cases[0].witness_name, "y");
  EXPECT_EQ(cases[0].system.num_vars(), 5u);
}

TEST(HornReduceTest, CommutativityFailsInGL2F2) {
  HornSentence h = Horn({"x", "y"}, {}, {"x*y", "y*x"});
  std::vector<HornCase> cases = HornReduce(h);
  ASSERT_EQ(cases.size(), 4u);
  auto sol = HornCaseSearch(h, cases[0], FieldSpec::PrimeField(2), 2);
  ASSERT_TRUE(sol.has_value());
  EXPECT_TRUE(IsSolution(cases[0].system, *sol));
  for (std::size_t i = 1; i < 4; ++i) {
    EXPECT_FALSE(HornCaseSearch(h, cases[i], FieldSpec::PrimeField(2), 2).has_value());
  }
}

// At c = 1 a case is solvable exactly when the sentence fails in F_p.
TEST(HornReduceTest, ScalarSolvabilityMatchesTruth) {
  std::mt19937 rng(51);
  const std::vector<std::string> words = {"1", "x", "y", "x*y", "x^-1", "y*x^-1", "x^2", "y^3"};
  int false_count = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::pair<std::string, std::string>> eqs;
    for (int e = rng() % 2; e > 0; --e) {
      eqs.push_back({words[rng() % words.size()], words[rng() % words.size()]});
    }
    HornSentence h = Horn({"x", "y"}, eqs,
                          {words[rng() % words.size()], words[rng() % words.size()]});
    for (std::uint32_t p : {2u, 3u, 5u}) {
      FieldSpec f = FieldSpec::PrimeField(p);
      bool solvable = false;
      for (const auto& hc : HornReduce(h)) solvable |= HornCaseSearch(h, hc, f, 1).has_value();
      EXPECT_EQ(solvable, !HornHoldsInPrimeField(h, p));
      false_count += solvable;
    }
  }
  EXPECT_GT(false_count, 0);
}

}  // namespace
}  // namespace vonstaudt
