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

#include "pmcf/dpf.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>
#include <string>

#include "fixtures.hpp"
#include "pmcf/errors.hpp"

namespace pmcf {
namespace {

DpfClassification classify(long d) {
  CubicField F = build_field(normalize(Int(d), 3));
  UnitGroupL U = fundamental_unit(F);
  SaturationResult sat = cube_saturate_units(F, U);
  return classify_p3(F, U, sat);
}

CoarseType type_of_name(const std::string& s) {
  if (s == "alpha") return CoarseType::kAlpha;
  if (s == "beta") return CoarseType::kBeta;
  return CoarseType::kGamma;
}

TEST(Dpf, TotallyRamifiedPrimes) {
  auto primes_of = [](long d) {
    return totally_ramified_primes(build_field(normalize(Int(d), 3)));
  };
  EXPECT_EQ(primes_of(2), (std::vector<Int>{Int(2), Int(3)}));
  EXPECT_EQ(primes_of(10), (std::vector<Int>{Int(2), Int(5)}));  // TypeI: no 3
  EXPECT_EQ(primes_of(17), std::vector<Int>{Int(17)});
  EXPECT_EQ(primes_of(30), (std::vector<Int>{Int(2), Int(3), Int(5)}));
  EXPECT_EQ(primes_of(3), std::vector<Int>{Int(3)});
  EXPECT_EQ(primes_of(12), (std::vector<Int>{Int(2), Int(3)}));
}

TEST(Dpf, FullFixtureSweep) {
  for (const auto& fx : pmcf_fixtures::kFields) {
    DpfClassification c = classify(fx.d);
    EXPECT_EQ(c.inv.U, fx.U) << "d=" << fx.d;
    EXPECT_EQ(c.inv.P, fx.P) << "d=" << fx.d;
    EXPECT_EQ(c.inv.A, fx.A) << "d=" << fx.d;
    EXPECT_EQ(c.inv.R, fx.R) << "d=" << fx.d;
    EXPECT_EQ(c.type, type_of_name(fx.type)) << "d=" << fx.d;
    // Structural identities.
    EXPECT_EQ(c.inv.P, c.inv.U + 1) << fx.d;
    EXPECT_EQ(c.inv.R, c.inv.P - c.inv.A) << fx.d;
    EXPECT_GE(c.inv.A, 1) << fx.d;
    EXPECT_GE(c.inv.R, 0) << fx.d;
    EXPECT_EQ(c.ambiguous.dim, c.inv.A) << fx.d;
    EXPECT_EQ(static_cast<int>(c.ambiguous.basis.size()), c.inv.A) << fx.d;
  }
}

TEST(Dpf, TypeNames) {
  EXPECT_STREQ(coarse_type_name(CoarseType::kAlpha), "alpha");
  EXPECT_STREQ(coarse_type_name(CoarseType::kBeta), "beta");
  EXPECT_STREQ(coarse_type_name(CoarseType::kGamma), "gamma");
}

TEST(Dpf, LatticeShapes) {
  std::vector<LatticeEntry> l3 = type_lattice(3);
  std::vector<LatticeEntry> l5 = type_lattice(5);
  std::vector<LatticeEntry> l7 = type_lattice(7);
  EXPECT_EQ(l3.size(), 3u);
  EXPECT_EQ(l5.size(), 8u);
  EXPECT_EQ(l7.size(), 10u);
  auto cells = [](const std::vector<LatticeEntry>& l) {
    std::set<std::pair<int, int>> s;
    for (const auto& e : l) s.insert({e.U, e.A});
    return s.size();
  };
  EXPECT_EQ(cells(l3), 3u);
  EXPECT_EQ(cells(l5), 6u);
  EXPECT_EQ(cells(l7), 10u);
  EXPECT_THROW(type_lattice(2), InvalidPrime);
  EXPECT_THROW(type_lattice(11), InvalidPrime);
}

TEST(Dpf, LatticeLabelsDistinct) {
  for (unsigned p : {3u, 5u, 7u}) {
    std::set<std::string> labels;
    for (const auto& e : type_lattice(p)) {
      EXPECT_TRUE(labels.insert(e.label).second) << e.label;
      EXPECT_GE(e.A, 1);
      EXPECT_GE(e.U, 0);
      EXPECT_LE(e.A, e.U + 1);
    }
  }
}

TEST(Dpf, FineMarkerReproducesDiagrams) {
  // For p = 5 and 7 the filled vertices are exactly those with
  // R = U + 1 - A > 0.
  for (unsigned p : {5u, 7u}) {
    for (const auto& e : type_lattice(p)) {
      EXPECT_EQ(e.marked, fine_marker(e.U, e.A)) << "p=" << p << " " << e.label;
    }
  }
  // The p = 3 reference diagram draws all three vertices unfilled, even
  // though alpha has R = 1; the table preserves that rendering.
  for (const auto& e : type_lattice(3)) {
    EXPECT_FALSE(e.marked) << e.label;
  }
}

TEST(Dpf, NormSplitPartners) {
  std::map<std::string, std::string> partner;
  for (const auto& e : type_lattice(5)) partner[e.label] = e.norm_split_partner;
  EXPECT_EQ(partner["delta"], "zeta");
  EXPECT_EQ(partner["zeta"], "delta");
  EXPECT_EQ(partner["epsilon"], "eta");
  EXPECT_EQ(partner["eta"], "epsilon");
  EXPECT_EQ(partner["alpha"], "");
  // Partners share a (U, A) cell.
  std::map<std::string, std::pair<int, int>> cell;
  for (const auto& e : type_lattice(5)) cell[e.label] = {e.U, e.A};
  EXPECT_EQ(cell["delta"], cell["zeta"]);
  EXPECT_EQ(cell["epsilon"], cell["eta"]);
  // p = 3 and p = 7 have no split pairs.
  for (unsigned p : {3u, 7u}) {
    for (const auto& e : type_lattice(p)) EXPECT_TRUE(e.norm_split_partner.empty());
  }
}

TEST(Dpf, CoarseCellsCoverFixtures) {
  // Every classified field lands on a p = 3 lattice cell with the matching
  // label.
  std::map<std::pair<int, int>, std::string> cell_label;
  for (const auto& e : type_lattice(3)) cell_label[{e.U, e.A}] = e.label;
  for (const auto& fx : pmcf_fixtures::kFields) {
    auto it = cell_label.find({fx.U, fx.A});
    ASSERT_NE(it, cell_label.end()) << fx.d;
    EXPECT_EQ(it->second, fx.type) << fx.d;
  }
}

TEST(Dpf, AmbiguousBasisDetails) {
  // d = 7: A = 1 and theta's exponent vector (1 at 7, species II adds 3)
  // spans the principal subgroup.
  CubicField F = build_field(normalize(Int(7), 3));
  UnitGroupL U = fundamental_unit(F);
  AmbiguousResult amb = ambiguous_principal_subgroup(F, U);
  EXPECT_EQ(amb.primes, (std::vector<Int>{Int(3), Int(7)}));
  EXPECT_EQ(amb.dim, 1);
  ASSERT_EQ(amb.basis.size(), 1u);
  EXPECT_EQ(amb.basis[0].size(), 2u);
  // d = 2: A = 2, the full group (Z/3)^2 is principal (h = 1).
  CubicField F2 = build_field(normalize(Int(2), 3));
  UnitGroupL U2 = fundamental_unit(F2);
  AmbiguousResult amb2 = ambiguous_principal_subgroup(F2, U2);
  EXPECT_EQ(amb2.dim, 2);
}

}  // namespace
}  // namespace pmcf
