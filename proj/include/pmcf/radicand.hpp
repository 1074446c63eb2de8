// Copyright 2026 The pmcf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PMCF_RADICAND_HPP_
#define PMCF_RADICAND_HPP_

#include "pmcf/intmath.hpp"

namespace pmcf {

// The classical Dedekind dichotomy for pure cubic fields:
// TypeI  <=> d^2 = 1 (mod 9)  (equivalently d = +-1 mod 9),
// TypeII otherwise.
enum class Species { TypeI, TypeII };

const char* species_name(Species s);

// A normalized p-th-power-free radicand.  For p = 3 it also carries the
// standard form d = a * b^2 (a, b squarefree and coprime) and the species.
struct Radicand {
  unsigned p = 3;
  Int d_raw;   // as given
  Int d;       // normalized: p-th-power free, canonical among power-conjugates
  Int a;       // p = 3 only
  Int b;       // p = 3 only
  Species species = Species::TypeII;  // p = 3 only
};

// Strips p-th powers from d_raw and, when the exponent vector of the
// stripped value is not primitive (its gcd with exponents shares a factor),
// replaces d by the smallest power-conjugate generating the same field.
// Example: 250 = 2 * 5^3 -> 2;  4 = 2^2 -> 2 (conjugate);  12 = 3 * 2^2
// stays 12 (primitive exponent vector; 18 is its distinct conjugate form).
//
// Throws DegenerateRadicand when d_raw is a perfect p-th power and
// InvalidPrime when p is not 3, 5 or 7.
Radicand normalize(const Int& d_raw, unsigned p);

// The co-radicand a^2*b of a p=3 radicand, itself normalized.  The cubic
// fields of d = a*b^2 and of a^2*b coincide (theta^2/b is a root of the
// conjugate), so scans flag min(d, conjugate) as the canonical label.
Int conjugate_radicand(const Radicand& r);

}  // namespace pmcf

#endif  // PMCF_RADICAND_HPP_
