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

#include "pmcf/sextic.hpp"

#include <gtest/gtest.h>

#include "pmcf/errors.hpp"
#include "pmcf/units.hpp"

namespace pmcf {
namespace {

CubicField field_of(long d) { return build_field(normalize(Int(d), 3)); }

TEST(Sextic, EisensteinRing) {
  Eis om{Int(0), Int(1)};  // omega
  EXPECT_EQ(eis_mul(om, om), (Eis{Int(-1), Int(-1)}));  // omega^2 = -1-omega
  Eis om3 = eis_mul(om, eis_mul(om, om));
  EXPECT_EQ(om3, (Eis{Int(1), Int(0)}));  // omega^3 = 1
  EXPECT_EQ(eis_norm(om), Int(1));
  EXPECT_EQ(eis_norm(Eis{Int(2), Int(1)}), Int(3));  // 4 - 2 + 1
  EXPECT_EQ(eis_conj(om), (Eis{Int(-1), Int(-1)}));
  EXPECT_EQ(eis_mul(Eis{Int(1), Int(1)}, eis_conj(Eis{Int(1), Int(1)})),
            (Eis{Int(1), Int(0)}));  // zeta6 * conj(zeta6) = 1
}

TEST(Sextic, Mu6Orders) {
  EXPECT_EQ(mu6_order(zeta6_pow(0)), 1);
  EXPECT_EQ(mu6_order(zeta6_pow(1)), 6);
  EXPECT_EQ(mu6_order(zeta6_pow(2)), 3);  // zeta6^2 = omega
  EXPECT_EQ(mu6_order(zeta6_pow(3)), 2);  // -1
  EXPECT_EQ(mu6_order(zeta6_pow(4)), 3);
  EXPECT_EQ(mu6_order(zeta6_pow(5)), 6);
  EXPECT_EQ(mu6_order(Eis{Int(2), Int(0)}), 0);   // not a root of unity
  EXPECT_EQ(mu6_order(Eis{Int(1), Int(2)}), 0);   // norm 3
  EXPECT_EQ(zeta6_pow(2), (Eis{Int(0), Int(1)}));  // omega itself
  EXPECT_EQ(zeta6_pow(-1), zeta6_pow(5));
}

TEST(Sextic, GaloisActions) {
  CubicField F = field_of(5);
  SexticElement x{Eis{Int(1), Int(2)}, Eis{Int(3), Int(-1)}, Eis{Int(0), Int(1)},
                  Int(2)};
  // sigma^3 = id, tau^2 = id, tau sigma tau = sigma^2 (dihedral relation).
  EXPECT_EQ(sx_sigma(sx_sigma(sx_sigma(x))), x);
  EXPECT_EQ(sx_tau(sx_tau(x)), x);
  EXPECT_EQ(sx_tau(sx_sigma(sx_tau(x))), sx_sigma(sx_sigma(x)));
  (void)F;
}

TEST(Sextic, InverseRoundTrip) {
  CubicField F = field_of(6);
  SexticElement xs[] = {
      {Eis{Int(1), Int(0)}, Eis{Int(1), Int(0)}, Eis{Int(1), Int(0)}, Int(1)},
      {Eis{Int(2), Int(1)}, Eis{Int(0), Int(-1)}, Eis{Int(1), Int(1)}, Int(3)},
      {Eis{Int(0), Int(0)}, Eis{Int(1), Int(0)}, Eis{Int(0), Int(0)}, Int(1)},
      sx_from_mu6(1),
  };
  for (const auto& x : xs) {
    SexticElement xi = sx_inverse(F, x);
    EXPECT_EQ(sx_mul(F, x, xi), sx_one());
  }
  EXPECT_THROW(sx_inverse(F, SexticElement{}), InternalInconsistency);
}

TEST(Sextic, PowAndMulAgree) {
  CubicField F = field_of(10);
  SexticElement x{Eis{Int(1), Int(1)}, Eis{Int(1), Int(0)}, Eis{Int(0), Int(0)},
                  Int(1)};
  SexticElement p = sx_one();
  for (unsigned long e = 0; e <= 6; ++e) {
    EXPECT_EQ(sx_pow(F, x, e), p) << e;
    p = sx_mul(F, p, x);
  }
}

TEST(Sextic, RelativeNormToK) {
  CubicField F = field_of(2);
  // N(zeta6) = zeta6^3 = -1 (sigma fixes K = Q(omega) pointwise).
  EisRational n = rel_norm_K(F, sx_from_mu6(1));
  EXPECT_EQ(n.den, Int(1));
  EXPECT_EQ(n.num, zeta6_pow(3));
  // N(omega) = omega^3 = 1.
  n = rel_norm_K(F, sx_from_mu6(2));
  EXPECT_EQ(n.num, zeta6_pow(0));
  // The cubic fundamental unit has relative norm N_{L/Q}(eps) = 1.
  UnitGroupL U = fundamental_unit(F);
  n = rel_norm_K(F, sx_from_cubic(F, U.fundamental));
  EXPECT_EQ(n.den, Int(1));
  EXPECT_EQ(n.num, (Eis{Int(1), Int(0)}));
  // N(theta) = theta * (omega theta) * (omega^2 theta) = d.
  n = rel_norm_K(F, sx_from_cubic(F, fe_theta(F)));
  EXPECT_EQ(n.num, (Eis{F.d(), Int(0)}));
}

TEST(Sextic, CubicLiftIsRingMap) {
  CubicField F = field_of(12);
  FieldElement x = fe_from_uvw(F, Int(1), Int(2), Int(-1));
  FieldElement y = fe_from_uvw(F, Int(3), Int(0), Int(1));
  EXPECT_EQ(sx_mul(F, sx_from_cubic(F, x), sx_from_cubic(F, y)),
            sx_from_cubic(F, mul(x, y, F)));
  EXPECT_EQ(sx_add(sx_from_cubic(F, x), sx_from_cubic(F, y)),
            sx_from_cubic(F, add(x, y)));
  // sigma acts trivially on lifted rational-coordinate elements only when
  // the theta parts vanish; theta itself moves.
  SexticElement th = sx_from_cubic(F, fe_theta(F));
  EXPECT_NE(sx_sigma(th), th);
  SexticElement one = sx_from_cubic(F, fe_one());
  EXPECT_EQ(sx_sigma(one), one);
}

TEST(Sextic, ToStringSmoke) {
  EXPECT_FALSE(sx_to_string(sx_from_mu6(1)).empty());
}

}  // namespace
}  // namespace pmcf
