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

#include "vonstaudt/staudt.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "vonstaudt/casebook.h"
#include "vonstaudt/error.h"

namespace vonstaudt {
namespace {

using Mask = std::uint32_t;

std::vector<GroundElement> Points(std::uint32_t n) {
  std::vector<GroundElement> g;
  for (std::uint32_t i = 1; i <= n; ++i) g.push_back(GroundElement::X(i));
  return g;
}

Mask ToMask(const Circuit& c) {
  Mask m = 0;
  for (auto e : c) m |= 1u << e;
  return m;
}

// Decides whether `circuits` (as masks on n elements) are the circuits of a
// matroid via the independence axioms: the family must be a nonempty-member
// antichain and the sets containing none of them must satisfy exchange.
bool IndependenceOracle(std::uint32_t n, const std::vector<Mask>& circuits) {
  for (Mask a : circuits) {
    if (a == 0) return false;
    for (Mask b : circuits) {
      if (a != b && (a & b) == a) return false;
    }
  }
  std::vector<bool> indep(1u << n, true);
  for (Mask s = 0; s < (1u << n); ++s) {
    for (Mask c : circuits) {
      if ((s & c) == c) {
        indep[s] = false;
        break;
      }
    }
  }
  for (Mask a = 0; a < (1u << n); ++a) {
    if (!indep[a]) continue;
    for (Mask b = 0; b < (1u << n); ++b) {
      if (!indep[b] || std::popcount(b) <= std::popcount(a)) continue;
      bool extends = false;
      for (std::uint32_t e = 0; e < n && !extends; ++e) {
        if ((b >> e & 1) && !(a >> e & 1) && indep[a | 1u << e]) extends = true;
      }
      if (!extends) return false;
    }
  }
  return true;
}

std::vector<Mask> ExpandClosure(std::uint32_t n, const Matroid& m) {
  std::vector<Mask> out;
  for (const auto& c : m.circuits()) out.push_back(ToMask(c));
  for (Mask s = 0; s < (1u << n); ++s) {
    if (std::popcount(s) != 4) continue;
    bool contains = false;
    for (const auto& c : m.circuits()) contains |= (s & ToMask(c)) == ToMask(c);
    if (!contains) out.push_back(s);
  }
  return out;
}

Circuit Positions(const Matroid& m, std::vector<std::string> names) {
  Circuit c;
  for (const auto& n : names) c.push_back(m.PositionOrThrow(GroundElement::Parse(n)));
  std::sort(c.begin(), c.end());
  return c;
}

TEST(GroundElementTest, NamesRoundTrip) {
  for (const char* n : {"O", "xinf", "yinf", "x1", "y12", "z3", "r0", "r5"}) {
    EXPECT_EQ(GroundElement::Parse(n).Name(), n);
  }
  for (const char* n : {"", "x", "w1", "x-1", "xinf2", "r", "O1", "x01"}) {
    EXPECT_THROW(GroundElement::Parse(n), FormatError) << n;
  }
}

TEST(StaudtGroundTest, WeylOrder) {
  std::vector<std::string> names;
  for (const auto& e : StaudtGround(WeylSystem())) names.push_back(e.Name());
  EXPECT_EQ(names, (std::vector<std::string>{"O", "xinf", "yinf", "x1", "x2", "x3", "x4",
                                             "x5", "y1", "y2", "y3", "y4", "y5", "z1", "z2",
                                             "z3", "z4", "z5", "r5"}));
}

TEST(BuildCircuitsTest, SmallestInstance) {
  Matroid m = BuildCircuits(AtomicSystem());
  EXPECT_EQ(m.ground().size(), 6u);
  std::vector<std::string> described;
  for (const auto& c : m.circuits()) described.push_back(m.Describe(c));
  EXPECT_EQ(described, (std::vector<std::string>{"{O,xinf,x1}", "{O,yinf,y1}",
                                                 "{xinf,yinf,z1}", "{x1,y1,z1}"}));
  EXPECT_TRUE(m.rank3_closure());
  EXPECT_TRUE(IsMatroid(m));
}

TEST(BuildCircuitsTest, WeylCircuits) {
  Matroid m = BuildCircuits(WeylSystem());
  for (auto names : std::vector<std::vector<std::string>>{{"x4", "y3", "z2"},
                                                          {"x5", "y2", "z3"},
                                                          {"y1", "r5", "xinf"},
                                                          {"x5", "r5", "yinf"},
                                                          {"x4", "r5", "z1"},
                                                          {"O", "x2", "x5"},
                                                          {"xinf", "z3", "z5"}}) {
    EXPECT_TRUE(m.IsCircuit(Positions(m, names))) << names[0];
  }
  EXPECT_FALSE(m.IsCircuit(Positions(m, {"x4", "y4", "z1"})));
  EXPECT_TRUE(m.IsCircuit(Positions(m, {"x4", "y1", "z4"})));
  EXPECT_TRUE(m.IsDependent(Positions(m, {"x1", "x2", "y1", "y2"})));
  EXPECT_TRUE(IsMatroid(m));
}

TEST(BuildCircuitsTest, UnitCircuitOptions) {
  Matroid none = BuildCircuits(WeylSystem(), UnitCircuits::kNone);
  Matroid both = BuildCircuits(WeylSystem(), UnitCircuits::kBoth);
  EXPECT_FALSE(none.IsCircuit(Positions(none, {"x4", "y1", "z4"})));
  EXPECT_TRUE(both.IsCircuit(Positions(both, {"x4", "y4", "z1"})));
  EXPECT_TRUE(IsMatroid(none));
  // {x4,y4,z1} and {x4,r5,z1} without z1 leave {x4,y4,r5}, which holds no
  // circuit.
  MatroidCheck check = CheckMatroid(both);
  EXPECT_FALSE(check.is_matroid);
}

TEST(CheckMatroidTest, RightAbsorbingProductFailsElimination) {
  // X2 = X2 * X3 together with X2 = X2 * X1.
  AtomicSystem p(3, {AtomicEquation::Mul(2, 2, 3)});
  Matroid m = BuildCircuits(p);
  MatroidCheck check = CheckMatroid(m);
  ASSERT_FALSE(check.is_matroid);
  ASSERT_TRUE(check.first && check.second);
  std::vector<std::string> pair = {m.Describe(*check.first), m.Describe(*check.second)};
  std::sort(pair.begin(), pair.end());
  EXPECT_EQ(pair, (std::vector<std::string>{"{x2,y1,z2}", "{x2,y3,z2}"}));
  Circuit z2 = {m.PositionOrThrow(GroundElement::Z(2))};
  EXPECT_NE(std::find(check.pivots.begin(), check.pivots.end(), z2[0]), check.pivots.end());
  EXPECT_FALSE(m.IsDependent(Positions(m, {"x2", "y1", "y3"})));
}

TEST(CheckMatroidTest, ContainmentViolation) {
  Matroid m(Points(4), {{0, 1}, {0, 1, 2}}, false);
  MatroidCheck check = CheckMatroid(m);
  EXPECT_FALSE(check.is_matroid);
  EXPECT_EQ(*check.first, (Circuit{0, 1}));
  EXPECT_EQ(*check.second, (Circuit{0, 1, 2}));
  EXPECT_TRUE(check.pivots.empty());
}

TEST(CheckMatroidTest, AgreesWithIndependenceOracle) {
  std::mt19937 rng(31);
  int matroids = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::uint32_t n = 4 + rng() % 4;
    std::vector<Circuit> circuits;
    int count = 1 + rng() % 5;
    for (int t = 0; t < count; ++t) {
      Circuit c;
      for (std::uint32_t e = 0; e < n; ++e) {
        if (rng() % 2) c.push_back(e);
      }
      if (!c.empty()) circuits.push_back(c);
    }
    Matroid m(Points(n), circuits, false);
    std::vector<Mask> masks;
    for (const auto& c : m.circuits()) masks.push_back(ToMask(c));
    bool expected = IndependenceOracle(n, masks);
    EXPECT_EQ(IsMatroid(m), expected);
    matroids += expected;
  }
  EXPECT_GT(matroids, 20);
}

TEST(CheckMatroidTest, ClosureAgreesWithExpandedFamily) {
  std::mt19937 rng(32);
  int matroids = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::uint32_t n = 5 + rng() % 4;
    std::vector<Circuit> circuits;
    int count = rng() % 5;
    for (int t = 0; t < count; ++t) {
      Circuit c;
      while (c.size() < 2 + rng() % 3) {
        std::uint32_t e = rng() % n;
        if (std::find(c.begin(), c.end(), e) == c.end()) c.push_back(e);
      }
      std::sort(c.begin(), c.end());
      circuits.push_back(c);
    }
    Matroid m(Points(n), circuits, true);
    bool expected = IndependenceOracle(n, ExpandClosure(n, m));
    EXPECT_EQ(IsMatroid(m), expected);
    matroids += expected;
  }
  EXPECT_GT(matroids, 20);
}

TEST(RankOfTest, WeylLinesAndPlane) {
  Matroid m = BuildCircuits(WeylSystem());
  EXPECT_EQ(RankOf(m, Positions(m, {"O", "xinf", "x2"})), 2u);
  EXPECT_EQ(RankOf(m, Positions(m, {"O", "x2"})), 2u);
  EXPECT_EQ(RankOf(m, Positions(m, {"O", "x2", "y2"})), 3u);
  Circuit all(m.ground().size());
  for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
  EXPECT_EQ(RankOf(m, all), 3u);
  EXPECT_EQ(RankOf(m, {}), 0u);
}

TEST(WeakImageTest, FamilyIsItsOwnWeakImage) {
  Matroid m = BuildCircuits(WeylSystem());
  EXPECT_TRUE(IsWeakImage(m, m));
  Matroid free_matroid(m.ground(), {}, false);
  EXPECT_FALSE(IsWeakImage(free_matroid, m));
  Matroid uniform(m.ground(), {}, true);
  EXPECT_FALSE(IsWeakImage(uniform, m));
  EXPECT_THROW(IsWeakImage(Matroid(Points(3), {}, true), m), InvalidArgument);
}

TEST(InFamilyTest, ConditionsReported) {
  AtomicSystem p = WeylSystem();
  Matroid m = BuildCircuits(p);
  EXPECT_TRUE(InFamily(m, p).member);

  std::vector<Circuit> with_loop = m.circuits();
  with_loop.push_back({m.PositionOrThrow(GroundElement::X(3))});
  FamilyCheck loop = InFamily(Matroid(m.ground(), with_loop, true), p);
  EXPECT_FALSE(loop.member);
  bool saw_loop = false;
  for (const auto& [cond, msg] : loop.failures) saw_loop |= cond == 1;
  EXPECT_TRUE(saw_loop);

  std::vector<Circuit> parallel = m.circuits();
  parallel.push_back(Positions(m, {"xinf", "x2"}));
  FamilyCheck par = InFamily(Matroid(m.ground(), parallel, true), p);
  EXPECT_FALSE(par.member);
  bool saw_parallel = false;
  for (const auto& [cond, msg] : par.failures) saw_parallel |= cond == 3;
  EXPECT_TRUE(saw_parallel);
}

TEST(SimplifyTest, KeepsFirstOfParallelClass) {
  Matroid m(Points(4), {{0, 2}, {1, 2, 3}}, false);
  Matroid s = Simplify(m);
  EXPECT_EQ(s.ground().size(), 3u);
  EXPECT_EQ(s.ground()[0].Name(), "x1");
  EXPECT_THROW(Simplify(Matroid(Points(2), {{0}}, false)), InvalidArgument);
}

}  // namespace
}  // namespace vonstaudt
