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

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "vonstaudt/error.h"

namespace vonstaudt {
namespace {

// Scalar solutions over F_p by enumeration, for systems with few variables.
std::optional<std::vector<long>> BruteForce(const NCSystem& s, std::uint32_t p,
                                            const std::vector<long>& fixed = {}) {
  FieldSpec f = FieldSpec::PrimeField(p);
  std::size_t n = s.num_vars();
  std::vector<long> v(n, 0);
  for (std::size_t i = 0; i < fixed.size(); ++i) v[i] = fixed[i];
  for (;;) {
    Assignment a(f, 1);
    for (std::size_t i = 0; i < n; ++i) a.Set(i, Matrix::FromIntegers(f, {{v[i]}}));
    if (IsSolution(s, a)) return v;
    std::size_t i = fixed.size();
    while (i < n && ++v[i] == static_cast<long>(p)) v[i++] = 0;
    if (i == n) return std::nullopt;
  }
}

// Enumerates every F_p value of X_2..X_N.
bool AtomicSolvable(const AtomicSystem& a, std::uint32_t p) {
  FieldSpec f = FieldSpec::PrimeField(p);
  std::vector<long> v(a.N() + 1, 0);
  v[1] = 1;
  for (;;) {
    Assignment s(f, 1);
    for (std::size_t i = 0; i <= a.N(); ++i) s.Set(i, Matrix::FromIntegers(f, {{v[i]}}));
    if (IsSolution(a, s)) return true;
    std::size_t i = 2;
    while (i <= a.N() && ++v[i] == static_cast<long>(p)) v[i++] = 0;
    if (i > a.N()) return false;
  }
}

NCSystem RandomSystem(std::mt19937& rng) {
  std::uniform_int_distribution<int> nv(1, 3), neq(1, 2), nterms(1, 3), coeff(-3, 3),
      len(0, 2);
  std::uint32_t vars = nv(rng);
  std::vector<std::string> names;
  for (std::uint32_t i = 0; i < vars; ++i) names.push_back(std::string(1, "xyz"[i]));
  std::vector<NCEquation> eqs;
  for (int e = neq(rng); e > 0; --e) {
    NCPolynomial lhs, rhs;
    for (int t = nterms(rng); t > 0; --t) {
      Word w;
      for (int l = len(rng); l > 0; --l) w.push_back(rng() % vars);
      lhs.AddTerm(w, coeff(rng));
    }
    rhs.AddTerm({}, coeff(rng));
    eqs.push_back({lhs, rhs});
  }
  return NCSystem(names, eqs);
}

TEST(AtomicSystemTest, ValidatesIndices) {
  EXPECT_NO_THROW(AtomicSystem(3, {AtomicEquation::Add(2, 0, 3)}));
  EXPECT_THROW(AtomicSystem(3, {AtomicEquation::Add(4, 1, 1)}), InvalidArgument);
  EXPECT_THROW(AtomicSystem(3, {AtomicEquation::Add(0, 1, 1)}), InvalidArgument);
  EXPECT_THROW(AtomicSystem(3, {AtomicEquation::Mul(2, 0, 1)}), InvalidArgument);
  EXPECT_THROW(AtomicSystem(3, {}, {{"X", 1}}), InvalidArgument);
  EXPECT_THROW(AtomicSystem(3, {}, {{"X", 2}, {"Y", 2}}), InvalidArgument);
  AtomicSystem a(5, {AtomicEquation::Add(2, 1, 5), AtomicEquation::Add(3, 1, 4),
                     AtomicEquation::Add(4, 1, 5)});
  EXPECT_EQ(a.AddThirdSlots(), (std::vector<std::uint32_t>{4, 5}));
  EXPECT_EQ(AtomicEquation::Mul(4, 2, 3).ToString(), "X4 = X2*X3");
}

TEST(AtomicizeTest, WeylSystem) {
  AtomicSystem a = Atomicize(ParseSystem("X*Y - Y*X = 1\n"));
  AtomicSystem expected(5,
                        {AtomicEquation::Mul(4, 2, 3), AtomicEquation::Mul(5, 3, 2),
                         AtomicEquation::Add(4, 1, 5)},
                        {{"X", 2}, {"Y", 3}});
  EXPECT_EQ(a, expected);
}

TEST(AtomicizeTest, EveryEquationIsAtomic) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    NCSystem s = RandomSystem(rng);
    AtomicSystem a = Atomicize(s);
    EXPECT_EQ(a.origin().size(), s.num_vars());
    for (std::size_t v = 0; v < s.num_vars(); ++v) {
      EXPECT_EQ(a.origin()[v].first, s.names()[v]);
      EXPECT_EQ(a.origin()[v].second, v + 2);
    }
  }
}

TEST(AtomicizeTest, SolvabilityMatchesBruteForceOverF3) {
  std::mt19937 rng(22);
  int checked = 0, solvable = 0;
  while (checked < 30) {
    NCSystem s = RandomSystem(rng);
    AtomicSystem a = Atomicize(s);
    if (a.N() > 9) continue;
    auto sol = BruteForce(s, 3);
    EXPECT_EQ(sol.has_value(), AtomicSolvable(a, 3)) << SerializeSystem(s);
    ++checked;
    solvable += sol.has_value();
  }
  EXPECT_GT(solvable, 0);
  EXPECT_LT(solvable, checked);
}

TEST(LiftSolutionTest, LiftThenProjectIsIdentity) {
  std::mt19937 rng(23);
  FieldSpec f = FieldSpec::PrimeField(3);
  int lifted = 0;
  for (int trial = 0; trial < 60; ++trial) {
    NCSystem s = RandomSystem(rng);
    auto sol = BruteForce(s, 3);
    if (!sol) continue;
    Assignment v(f, 1);
    for (std::size_t i = 0; i < sol->size(); ++i) {
      v.Set(i, Matrix::FromIntegers(f, {{(*sol)[i]}}));
    }
    AtomicSystem a = Atomicize(s);
    Assignment up = LiftSolution(s, a, v);
    EXPECT_TRUE(IsSolution(a, up));
    EXPECT_EQ(ProjectSolution(a, up), v);
    ++lifted;
  }
  EXPECT_GT(lifted, 5);
}

TEST(LiftSolutionTest, MatrixSolutionOfWeyl) {
  FieldSpec f = FieldSpec::PrimeField(2);
  NCSystem s = ParseSystem("X*Y - Y*X = 1\n");
  Assignment v(f, 2);
  v.Set(0, Matrix::FromIntegers(f, {{0, 1}, {0, 0}}));
  v.Set(1, Matrix::FromIntegers(f, {{0, 0}, {1, 0}}));
  AtomicSystem a = Atomicize(s);
  Assignment up = LiftSolution(s, a, v);
  EXPECT_EQ(up.Get(4), v.Get(0) * v.Get(1));
  EXPECT_EQ(up.Get(5), v.Get(1) * v.Get(0));
  EXPECT_EQ(ProjectSolution(a, up), v);
}

TEST(LiftSolutionTest, RejectsNonSolutions) {
  FieldSpec f = FieldSpec::PrimeField(3);
  NCSystem s = ParseSystem("x*x = 2\n");
  Assignment v(f, 1);
  v.Set(0, Matrix::FromIntegers(f, {{1}}));
  EXPECT_THROW(LiftSolution(s, Atomicize(s), v), VerificationError);
  AtomicSystem a = Atomicize(s);
  Assignment w(f, 1);
  for (std::size_t i = 0; i <= a.N(); ++i) w.Set(i, Matrix::FromIntegers(f, {{1}}));
  EXPECT_THROW(ProjectSolution(a, w), VerificationError);
}

TEST(IsSolutionTest, RequiresUnitAndZero) {
  FieldSpec f = FieldSpec::Rationals();
  AtomicSystem a(2, {AtomicEquation::Add(2, 1, 0)});
  Assignment v(f, 1);
  v.Set(0, Matrix::FromIntegers(f, {{0}}));
  v.Set(1, Matrix::FromIntegers(f, {{1}}));
  v.Set(2, Matrix::FromIntegers(f, {{1}}));
  EXPECT_TRUE(IsSolution(a, v));
  v.Set(1, Matrix::FromIntegers(f, {{2}}));
  v.Set(2, Matrix::FromIntegers(f, {{2}}));
  EXPECT_FALSE(IsSolution(a, v));
}

}  // namespace
}  // namespace vonstaudt
