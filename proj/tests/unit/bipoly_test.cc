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

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "vonstaudt/error.h"

namespace vonstaudt {
namespace {

constexpr std::uint32_t kP = 7;

BiPoly Mono(std::uint32_t c, std::uint32_t i, std::uint32_t j) {
  return BiPoly::Monomial(kP, c, i, j);
}

BiPoly RandomPoly(std::mt19937& rng, int max_deg, int max_terms) {
  std::uniform_int_distribution<int> deg(0, max_deg), coef(0, kP - 1),
      count(0, max_terms);
  BiPoly f(kP);
  int n = count(rng);
  for (int t = 0; t < n; ++t) {
    f = f + Mono(coef(rng), deg(rng), deg(rng));
  }
  return f;
}

TEST(ModArithmeticTest, InverseAndReduce) {
  for (std::uint32_t a = 1; a < 13; ++a) {
    EXPECT_EQ(ModMul(a, ModInv(a, 13), 13), 1u);
  }
  EXPECT_THROW(ModInv(0, 13), DivisionByZero);
  EXPECT_EQ(ModReduce(-1, 13), 12u);
  EXPECT_EQ(ModReduce(-27, 13), 12u);
  EXPECT_TRUE(IsPrime(2));
  EXPECT_TRUE(IsPrime(2147483647));
  EXPECT_FALSE(IsPrime(1));
  EXPECT_FALSE(IsPrime(91));
}

TEST(UPolyTest, DivModRecomposes) {
  UPoly a(kP, {3, 0, 2, 5, 1});
  UPoly b(kP, {1, 4});
  auto [q, r] = a.DivMod(b);
  EXPECT_LT(r.Degree(), b.Degree());
  EXPECT_EQ(q * b + r, a);
}

TEST(UPolyTest, GcdOfConstructedProducts) {
  UPoly common(kP, {2, 1});      // l + 2
  UPoly f = common * UPoly(kP, {1, 0, 1});
  UPoly g = common * UPoly(kP, {3, 1});
  EXPECT_EQ(UPoly::Gcd(f, g), common.Monic());
}

TEST(BiPolyTest, CanonicalOrderAndPrinting) {
  // 2l + l^2 m + 1, printed in descending graded order.
  BiPoly f = Mono(2, 1, 0) + Mono(1, 2, 1) + Mono(1, 0, 0);
  EXPECT_EQ(f.ToString("l", "m"), "l^2*m+2*l+1");
  EXPECT_EQ(f.LeadingTerm().i, 2u);
  EXPECT_EQ(f.DegreeFirst(), 2u);
  EXPECT_EQ(f.DegreeSecond(), 1u);
  EXPECT_EQ((f - f).ToString("l", "m"), "0");
  EXPECT_EQ((-Mono(1, 0, 1)).ToString("l", "m"), "6*m");
}

TEST(BiPolyTest, ProductMatchesHandExpansion) {
  // (l + m)(l - m) = l^2 - m^2
  BiPoly a = Mono(1, 1, 0) + Mono(1, 0, 1);
  BiPoly b = Mono(1, 1, 0) - Mono(1, 0, 1);
  EXPECT_EQ(a * b, Mono(1, 2, 0) - Mono(1, 0, 2));
}

TEST(BiPolyTest, EvaluateIsRingHomomorphism) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    BiPoly f = RandomPoly(rng, 3, 5), g = RandomPoly(rng, 3, 5);
    for (std::uint32_t x = 0; x < kP; ++x) {
      for (std::uint32_t y = 0; y < kP; y += 3) {
        EXPECT_EQ((f * g).Evaluate(x, y),
                  ModMul(f.Evaluate(x, y), g.Evaluate(x, y), kP));
        EXPECT_EQ((f + g).Evaluate(x, y),
                  ModAdd(f.Evaluate(x, y), g.Evaluate(x, y), kP));
      }
    }
  }
}

TEST(BiPolyTest, DivideExact) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    BiPoly f = RandomPoly(rng, 3, 4), g = RandomPoly(rng, 3, 4);
    if (g.IsZero()) continue;
    EXPECT_EQ((f * g).DivideExact(g), f);
  }
  EXPECT_THROW(Mono(1, 2, 0).DivideExact(Mono(1, 0, 1)), InvalidArgument);
}

TEST(BiPolyTest, GcdRecoversPlantedFactor) {
  std::mt19937 rng(3);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    BiPoly c = RandomPoly(rng, 2, 3), f = RandomPoly(rng, 2, 3),
           g = RandomPoly(rng, 2, 3);
    if (c.IsZero() || f.IsZero() || g.IsZero()) continue;
    BiPoly d = BiPoly::Gcd(c * f, c * g);
    // d is divisible by c and divides both products.
    EXPECT_NO_THROW(d.DivideExact(c.Monic()));
    EXPECT_NO_THROW((c * f).DivideExact(d));
    EXPECT_NO_THROW((c * g).DivideExact(d));
    // The cofactors share nothing beyond constants.
    BiPoly cf = (c * f).DivideExact(d), cg = (c * g).DivideExact(d);
    EXPECT_TRUE(BiPoly::Gcd(cf, cg).IsOne());
    ++checked;
  }
  EXPECT_GT(checked, 10);
}

TEST(BiPolyTest, GcdOfCoprimeLinearForms) {
  BiPoly a = Mono(1, 1, 0) + Mono(1, 0, 1);  // l + m
  BiPoly b = Mono(1, 1, 0) + Mono(2, 0, 0);  // l + 2
  EXPECT_TRUE(BiPoly::Gcd(a, b).IsOne());
  EXPECT_EQ(BiPoly::Gcd(a * a * b, a * b * b), (a * b).Monic());
  EXPECT_THROW(BiPoly::Gcd(BiPoly(kP), BiPoly(kP)), InvalidArgument);
}

}  // namespace
}  // namespace vonstaudt
