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

#ifndef PMCF_CLASS_GROUP_HPP_
#define PMCF_CLASS_GROUP_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "pmcf/cubic_field.hpp"
#include "pmcf/hnf.hpp"
#include "pmcf/units.hpp"

namespace pmcf {

struct ClassGroupResult {
  Int h;                 // class number, unconditional
  int three_rank = 0;    // dim_F3 Cl/3Cl
  // Base prime ideals whose classes have order > 1, with their exact orders.
  std::vector<std::pair<PrimeIdeal, Int>> generators;
  Int minkowski_bound;
};

// Minkowski bound ceil((2/9)(4/pi) sqrt(|disc|)), rounded up in MPFR.
Int minkowski_bound(const CubicField& F);

// Certified principality test for an integral ideal: searches for an
// element of I of norm +-N(I) over a tau grid covering a fundamental
// domain [-R/2, R/2] of the unit action (R = regulator), expanded by one
// step on each side.  The grid is walked outward from 0 so principal
// ideals are usually detected early; exhausting the grid proves
// non-principality.
std::optional<FieldElement> principal_generator(const CubicField& F,
                                                const UnitGroupL& units,
                                                const FracIdeal& I);
bool is_principal(const CubicField& F, const UnitGroupL& units,
                  const FracIdeal& I);

// Unconditional class group computation:
//   1. factor all rational primes up to the Minkowski bound; prime ideals
//      of norm <= bound form the generating base;
//   2. collect relations (full-prime factorizations, factorizations of
//      small elements, exact class orders of each base prime);
//   3. the candidate group is Z^m modulo the relation lattice; every
//      nonzero candidate class is then verified non-principal, so the
//      returned h equals the class number with no analytic assumption.
// A truncated Euler product estimate is used only as a sanity ceiling;
// exceeding it raises RelationSearchIncomplete.
ClassGroupResult class_group(const CubicField& F, const UnitGroupL& units);

}  // namespace pmcf

#endif  // PMCF_CLASS_GROUP_HPP_
