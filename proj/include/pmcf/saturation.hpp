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

#ifndef PMCF_SATURATION_HPP_
#define PMCF_SATURATION_HPP_

#include <array>
#include <vector>

#include "pmcf/sextic.hpp"
#include "pmcf/units.hpp"

namespace pmcf {

// Cube saturation of the unit group of the sextic field N = L(omega).
//
// Let V = mu_6 x <eps, sigma eps> where eps is the fundamental unit of L.
// The Galois-theoretic identity u^3 = prod_k N_{N/L_k}(u) * N_{N/K}(u) *
// N_{N/Q}(u)^{-1} shows U_N^3 is contained in V, so [U_N : V] is 1, 3 or 9
// and U_N is recovered exactly by adjoining cube roots of elements of V.
// Each candidate class zeta_3^t eps^j (sigma eps)^k of V/V^3 is tested by
// interval-certified complex embeddings: recognized roots are confirmed by
// exact cubing in N, and refutations are rigorous interval exclusions.
struct SaturationResult {
  // 1 iff zeta_3 is not a norm from U_N to K = Q(omega) (the unit-norm
  // defect); 0 iff some unit has relative norm of order 3 or 6.
  int u_invariant = 1;
  int index_exponent = 0;  // [U_N : V] = 3^index_exponent
  std::vector<SexticElement> adjoined;  // independent cube roots adjoined
  // Classes (t, j, k) with adjoined[i]^3 = zeta_3^t eps^j (sigma eps)^k.
  std::vector<std::array<int, 3>> adjoined_classes;
};

SaturationResult cube_saturate_units(const CubicField& F,
                                     const UnitGroupL& units);

// Re-runs saturation on a basis of the saturated unit group; returns true
// iff no further cube root is found (the documented fixed-point property).
bool saturation_idempotent(const CubicField& F, const UnitGroupL& units,
                           const SaturationResult& sat);

}  // namespace pmcf

#endif  // PMCF_SATURATION_HPP_
