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

#include "vonstaudt/represent.h"

#include <gtest/gtest.h>

#include <random>

#include "random_instances.h"
#include "vonstaudt/casebook.h"
#include "vonstaudt/error.h"

namespace vonstaudt {
namespace {

using testing::RandomSolvedSystem;
using testing::RandomTransform;

Assignment Scalars(const FieldSpec& f, std::vector<long> v) {
  Assignment a(f, 1);
  for (std::size_t i = 0; i < v.size(); ++i) a.Set(i, Matrix::FromIntegers(f, {{v[i]}}));
  return a;
}

TEST(BuildRepresentationTest, TrivialSystemColumns) {
  FieldSpec q = FieldSpec::Rationals();
  Representation r = BuildRepresentation(AtomicSystem(), Scalars(q, {0, 1}));
  Matrix expected = Matrix::FromIntegers(q, {{1, 0, 0, 1, 1, 0},
                                             {0, 1, 0, 1, 0, 1},
                                             {0, 0, 1, 0, 1, -1}});
  EXPECT_EQ(r.matrix().base(), expected);
  EXPECT_EQ(r.labels(), StaudtGround(AtomicSystem()));
}

TEST(BuildRepresentationTest, AdditionColumns) {
  FieldSpec q = FieldSpec::Rationals();
  AtomicSystem p(3, {AtomicEquation::Add(3, 2, 2)});
  Representation r = BuildRepresentation(p, Scalars(q, {0, 1, 5, 10}));
  EXPECT_EQ(r.Column(GroundElement::R(2)), Matrix::FromIntegers(q, {{1}, {5}, {1}}));
  EXPECT_EQ(r.Column(GroundElement::Z(3)), Matrix::FromIntegers(q, {{0}, {10}, {-1}}));
  EXPECT_THROW(r.Column(GroundElement::R(3)), InvalidArgument);
}

TEST(BuildRepresentationTest, RejectsBadSolutions) {
  FieldSpec q = FieldSpec::Rationals();
  AtomicSystem p(3, {AtomicEquation::Add(3, 2, 2)});
  EXPECT_THROW(BuildRepresentation(p, Scalars(q, {0, 1, 5, 11})), VerificationError);
  FieldSpec f = FieldSpec::PrimeField(5);
  Assignment singular(f, 2);
  singular.Set(0, Matrix(f, 2, 2));
  singular.Set(1, Matrix::Identity(f, 2));
  singular.Set(2, Matrix::FromIntegers(f, {{1, 0}, {0, 0}}));
  EXPECT_THROW(BuildRepresentation(AtomicSystem(2, {}), singular), VerificationError);
}

TEST(RepresentationTest, ShapeChecks) {
  FieldSpec q = FieldSpec::Rationals();
  auto ground = StaudtGround(AtomicSystem());
  EXPECT_THROW(Representation(BlockMatrix(Matrix(q, 2, 6), 1), ground), FormatError);
  EXPECT_THROW(Representation(BlockMatrix(Matrix(q, 3, 5), 1), ground), FormatError);
  auto repeated = ground;
  repeated[5] = repeated[4];
  EXPECT_THROW(Representation(BlockMatrix(Matrix(q, 3, 6), 1), repeated), FormatError);
}

TEST(VerifyArrangementTest, WeylP2Histograms) {
  Representation r = WeylRepresentation(2);
  ArrangementReport rep = VerifyArrangement(r, SweepDepth::kTriples, 2);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(ArrangementReport::Histogram(rep.pairs), (std::map<std::size_t, std::size_t>{{4, 171}}));
  auto triples = ArrangementReport::Histogram(rep.triples);
  EXPECT_EQ(triples.size(), 2u);
  EXPECT_EQ(triples[4] + triples[6], 969u);
}

TEST(VerifyArrangementTest, DetectsNonMultipleRank) {
  FieldSpec f = FieldSpec::PrimeField(5);
  Matrix m = Matrix::Identity(f, 6);
  m.Set(1, 1, Scalar::Zero(f));  // first block column has rank 1
  std::vector<GroundElement> labels = {GroundElement::O(), GroundElement::XInf(),
                                       GroundElement::YInf()};
  Representation r(BlockMatrix(m, 2), labels);
  ArrangementReport rep = VerifyArrangement(r, SweepDepth::kAll);
  EXPECT_FALSE(rep.ok());
  EXPECT_EQ(rep.singleton_ranks[0], 1u);
  EXPECT_THROW(InducedMatroid(r, rep), VerificationError);
}

TEST(VerifyArrangementTest, ParallelSweepMatchesSerial) {
  Representation r = WeylRepresentation(2);
  ArrangementReport a = VerifyArrangement(r, SweepDepth::kTriples, 1);
  ArrangementReport b = VerifyArrangement(r, SweepDepth::kTriples, 4);
  ASSERT_EQ(a.triples.size(), b.triples.size());
  for (std::size_t i = 0; i < a.triples.size(); ++i) {
    EXPECT_EQ(a.triples[i].subset, b.triples[i].subset);
    EXPECT_EQ(a.triples[i].rank, b.triples[i].rank);
  }
}

TEST(InducedMatroidTest, RandomSystemsGiveFamilyMembers) {
  std::mt19937_64 rng(41);
  FieldSpec q = FieldSpec::Rationals();
  for (int trial = 0; trial < 10; ++trial) {
    auto s = RandomSolvedSystem(rng, q, 1, 2, 3);
    Representation r = BuildRepresentation(s.system, s.solution);
    Matroid m = InducedMatroid(r);
    EXPECT_TRUE(IsMatroid(m));
    EXPECT_EQ(m.ground(), StaudtGround(s.system));
  }
}

TEST(ExtractSolutionTest, RoundTripOverQAndF5) {
  std::mt19937_64 rng(42);
  for (auto [field, c] : {std::pair{FieldSpec::Rationals(), std::size_t{1}},
                          std::pair{FieldSpec::PrimeField(5), std::size_t{2}}}) {
    for (int trial = 0; trial < 10; ++trial) {
      auto s = RandomSolvedSystem(rng, field, c, 2, 4);
      Representation r = BuildRepresentation(s.system, s.solution);
      EXPECT_EQ(ExtractSolution(r, s.system), s.solution);
    }
  }
}

TEST(ExtractSolutionTest, RejectsInconsistentColumns) {
  FieldSpec q = FieldSpec::Rationals();
  AtomicSystem p(2, {});
  Representation r = BuildRepresentation(p, Scalars(q, {0, 1, 3}));
  BlockMatrix m = r.matrix();
  m.SetBlock(2, *r.Position(GroundElement::Y(2)), Matrix::FromIntegers(q, {{4}}));
  EXPECT_THROW(ExtractSolution(Representation(m, r.labels()), p), VerificationError);
}

TEST(NormalizeFrameTest, UndoesRandomTransforms) {
  std::mt19937_64 rng(43);
  FieldSpec f = FieldSpec::PrimeField(5);
  for (std::size_t c : {1, 2}) {
    auto s = testing::RandomValidSystem(rng, f, c, 2, 3);
    Representation r = BuildRepresentation(s.system, s.solution);
    Matroid induced = InducedMatroid(r);
    for (int trial = 0; trial < 5; ++trial) {
      FrameTransform t = RandomTransform(rng, r);
      Representation moved = ApplyTransform(r, t);
      auto [normal, undo] = NormalizeFrame(moved);
      EXPECT_EQ(ApplyTransform(moved, undo), normal);
      for (const char* name : {"O", "x1", "y1", "xinf", "yinf"}) {
        GroundElement e = GroundElement::Parse(name);
        EXPECT_EQ(normal.Column(e), r.Column(e)) << name;
      }
      EXPECT_EQ(InducedMatroid(moved), induced);
      Assignment back = ExtractSolution(moved, s.system);
      // Right scalars act on O as S; the recovered values are S^-1 a S.
      Matrix o = t.right_scalars[*r.Position(GroundElement::O())];
      Matrix o_inv = InverseOrThrow(o);
      for (std::size_t i = 0; i < s.solution.size(); ++i) {
        EXPECT_EQ(back.Get(i), o_inv * s.solution.Get(i) * o) << i;
      }
    }
  }
}

TEST(NormalizeFrameTest, RejectsDegenerateFrame) {
  FieldSpec q = FieldSpec::Rationals();
  Representation r = BuildRepresentation(AtomicSystem(), Scalars(q, {0, 1}));
  BlockMatrix m = r.matrix();
  m.SetBlockColumn(*r.Position(GroundElement::X(1)), r.Column(GroundElement::XInf()));
  EXPECT_THROW(NormalizeFrame(Representation(m, r.labels())), VerificationError);
}

}  // namespace
}  // namespace vonstaudt
