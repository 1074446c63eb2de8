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

#ifndef PMCF_CYCLOTOMIC_HPP_
#define PMCF_CYCLOTOMIC_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "pmcf/radicand.hpp"

namespace pmcf {

// Decomposition data of a rational prime ell in the p-th cyclotomic field,
// together with the divisibility-criterion flags used by the classifier.
struct SplittingReport {
  std::uint64_t ell = 0;
  unsigned p = 3;
  unsigned e = 1;  // ramification index
  unsigned f = 1;  // residue degree
  unsigned g = 1;  // number of primes above ell; e*f*g = p-1
  bool ishida = false;            // ell == 1 (mod p)
  bool kobayashi = false;         // p == 5 and ell == -1 (mod 5)
  bool septic_two_split = false;  // p == 7 and ell in {2, 4} (mod 7)
};

// Conductor of the relative sextic extension for p = 3:
// a*b for species TypeI, 3*a*b for TypeII.
struct Conductor {
  Int value;
  std::vector<std::pair<std::uint64_t, SplittingReport>> prime_divisors;
};

// Smallest f >= 1 with ell^f == 1 (mod p); requires ell != p.
unsigned mult_order(std::uint64_t ell, unsigned p);

// Full splitting report; ell = p gives (e, f, g) = (p-1, 1, 1), otherwise
// e = 1 and f = mult_order(ell, p), g = (p-1)/f.
SplittingReport split_in_cyclotomic(std::uint64_t ell, unsigned p);

// Conductor for p = 3 with each prime divisor annotated by its p=3 report.
Conductor conductor_p3(const Radicand& r);

// All primes ell < limit with ell == 2 or 4 (mod 7), ascending.
std::vector<std::uint64_t> theorem1_radicands(std::uint64_t limit);

}  // namespace pmcf

#endif  // PMCF_CYCLOTOMIC_HPP_
