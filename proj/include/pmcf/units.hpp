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

#ifndef PMCF_UNITS_HPP_
#define PMCF_UNITS_HPP_

#include "pmcf/cubic_field.hpp"

namespace pmcf {

// Unit group of O_L for the complex cubic field L: U = {+-1} x <epsilon>.
struct UnitGroupL {
  FieldElement fundamental;  // epsilon > 1 with N(epsilon) = +1
  double regulator = 0.0;    // log of the real embedding of epsilon
  int torsion_order = 2;     // {+-1}
};

// Certified fundamental unit computation.
//
// The weighted-ellipsoid sweep (see lattice.hpp) enumerates all units with
// logarithmic height near each grid point tau = 0, log 2, 2 log 2, ...;
// the sweep continues one full step past the smallest positive height
// found, so every unit with smaller height would have been enumerated.
// The result additionally must satisfy Artin's inequality
// epsilon^3 > (|disc| - 27)/4; violations raise InternalInconsistency.
UnitGroupL fundamental_unit(const CubicField& F);

}  // namespace pmcf

#endif  // PMCF_UNITS_HPP_
