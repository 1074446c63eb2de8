// Copyright 2026 The pmcf Authors
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

#include "pmcf/lattice.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

#include "pmcf/hnf.hpp"

namespace pmcf {
namespace {

CubicField field_of(long d) { return build_field(normalize(Int(d), 3)); }

Int abs_norm(const CubicField& F, const FieldElement& x) {
  Rational n = norm(x, F);
  EXPECT_EQ(n.den, Int(1));
  return abs(n.num);
}

TEST(Lattice, FindsTrivialUnits) {
  CubicField F = field_of(2);
  std::vector<FieldElement> hits =
      norm_elements_at(F, whole_ring(), Int(1), 0.0);
  ASSERT_FALSE(hits.empty());
  bool has_one = false;
  for (const auto& x : hits) {
    EXPECT_EQ(abs_norm(F, x), Int(1));
    if (x == fe_one() || x == neg(fe_one())) has_one = true;
  }
  EXPECT_TRUE(has_one);
}

TEST(Lattice, ExactNormFilter) {
  CubicField F = field_of(10);
  for (long n : {1L, 2L, 3L, 5L, 10L}) {
    for (double tau : {-0.7, 0.0, 0.7}) {
      for (const auto& x : norm_elements_at(F, whole_ring(), Int(n), tau)) {
        EXPECT_EQ(abs_norm(F, x), Int(n)) << "n=" << n << " tau=" << tau;
        EXPECT_EQ(x.denom, Int(1));
      }
    }
  }
}

TEST(Lattice, FindsNormTwoAndThree) {
  CubicField F = field_of(2);
  // theta has norm 2; 1 + theta has norm 3.
  auto hit2 = find_norm_element(F, whole_ring(), Int(2), -0.7, 0.7);
  ASSERT_TRUE(hit2.has_value());
  EXPECT_EQ(abs_norm(F, *hit2), Int(2));
  auto hit3 = find_norm_element(F, whole_ring(), Int(3), -0.7, 0.7);
  ASSERT_TRUE(hit3.has_value());
  EXPECT_EQ(abs_norm(F, *hit3), Int(3));
}

TEST(Lattice, ProvesAbsence) {
  // In Q(cbrt(2)) the prime 7 is inert (2 is not a cube mod 7), so no
  // element of norm +-7 exists; the covering sweep must prove that.
  CubicField F = field_of(2);
  auto hit = find_norm_element(F, whole_ring(), Int(7), -2.2, 2.2);
  EXPECT_FALSE(hit.has_value());
}

TEST(Lattice, SearchInsidePrimeIdeal) {
  CubicField F = field_of(2);
  std::vector<PrimePower> fac = factor_prime(F, 2);
  ASSERT_EQ(fac.size(), 1u);
  EXPECT_EQ(fac[0].exponent, 3);
  EXPECT_EQ(fac[0].prime.residue_degree, 1);
  const FracIdeal& P2 = fac[0].prime.lat;
  auto hit = find_norm_element(F, P2, Int(2), -0.7, 0.7);
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(abs_norm(F, *hit), Int(2));
  EXPECT_TRUE(ideal_contains(P2, *hit));
  // Elements found inside P2 with norm 2 generate P2 exactly.
  EXPECT_TRUE(ideal_eq(principal_ideal(F, *hit), P2));
}

TEST(Lattice, GridCoversWideParameters) {
  // Norm-50 elements in Q(cbrt(10)): 50 = 2 * 5^2 and (theta^2/1... ) —
  // theta^2 has norm 100; use 2*theta with norm 80, or search n = 100.
  CubicField F = field_of(10);
  FieldElement th = fe_theta(F);
  FieldElement th2 = mul(th, th, F);
  Int n100 = abs_norm(F, th2);
  EXPECT_EQ(n100, Int(100));
  auto hit = find_norm_element(F, whole_ring(), n100, -1.4, 1.4);
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(abs_norm(F, *hit), Int(100));
}

}  // namespace
}  // namespace pmcf
