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

#include "pmcf/units.hpp"

#include <cmath>

#include "pmcf/embed.hpp"
#include "pmcf/errors.hpp"
#include "pmcf/hnf.hpp"
#include "pmcf/lattice.hpp"

namespace pmcf {

UnitGroupL fundamental_unit(const CubicField& F) {
  FracIdeal O = whole_ring();
  const Int one(1);

  bool have = false;
  FieldElement best;
  double best_s = 0.0;

  // Sweep tau upward; stop once the grid provably covers (0, best_s].
  const double kMaxTau = 200000.0;
  for (double tau = 0.0; tau <= kMaxTau; tau += kTauStep) {
    for (const FieldElement& x : norm_elements_at(F, O, one, tau)) {
      double s = r_log(r_abs(embed_real(F, x, 128))).to_double();
      if (s > 1e-6 && (!have || s < best_s)) {
        have = true;
        best = x;
        best_s = s;
      }
    }
    if (have && tau >= best_s + kTauStep) break;
  }
  if (!have)
    throw InternalInconsistency("fundamental unit sweep found no unit");

  // Normalize: real embedding > 1, hence (odd degree) norm +1.
  if (embed_real(F, best, 96).sign() < 0) best = neg(best);
  Rational nb = norm(best, F);
  if (nb.den != 1 || nb.num != 1)
    throw InternalInconsistency("normalized fundamental unit has norm != 1");

  // High-precision regulator.
  double reg = r_log(r_abs(embed_real(F, best, 256))).to_double();

  // Artin's inequality for a complex cubic field: epsilon^3 > (|disc|-27)/4.
  double absdisc = std::fabs(F.discriminant.get_d());
  if (absdisc > 27.0 + 1e-9) {
    double lower = std::log((absdisc - 27.0) / 4.0) / 3.0;
    if (reg <= lower - 1e-9)
      throw InternalInconsistency("fundamental unit violates Artin bound");
  }

  UnitGroupL U;
  U.fundamental = best;
  U.regulator = reg;
  U.torsion_order = 2;
  return U;
}

}  // namespace pmcf
