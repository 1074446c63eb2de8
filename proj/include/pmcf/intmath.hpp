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

#ifndef PMCF_INTMATH_HPP_
#define PMCF_INTMATH_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

namespace pmcf {

using Int = mpz_class;

// Deterministic Miller-Rabin, valid for all n < 3.3e24 (covers every value
// this project factors; larger inputs fall back to mpz_probab_prime_p).
bool is_prime(const Int& n);

// Factorization by trial division up to 10^6 followed by Pollard rho.
// `max_rho_iters` bounds the rho effort per composite; exceeding it raises
// FactorizationIncomplete (the tool must not silently fail on large inputs).
std::map<Int, unsigned> factorize(const Int& n,
                                  std::uint64_t max_rho_iters = 50'000'000);

// Convenience for machine-word inputs.
std::map<std::uint64_t, unsigned> factorize_u64(std::uint64_t n);

// Removes the p-th-power part of n: returns {pfree, root} with
// n = pfree * root^p and pfree p-th-power free.
struct PthFreeResult {
  Int pfree;
  Int root;
};
PthFreeResult strip_pth_powers(const Int& n, unsigned p);

// Squarefree decomposition of a cubefree integer: n = a * b^2 with a, b
// squarefree and coprime.
struct SquareFreeSplit {
  Int a;
  Int b;
};
SquareFreeSplit cubefree_to_ab(const Int& n);

// x^e mod m for machine words (m < 2^32 is enough for every caller here,
// but the implementation is safe for m < 2^63 via __int128).
std::uint64_t powmod_u64(std::uint64_t x, std::uint64_t e, std::uint64_t m);

// Smallest f >= 1 with x^f == 1 (mod m); requires gcd(x, m) = 1.
unsigned multiplicative_order(std::uint64_t x, std::uint64_t m);

// All primes < limit, ascending (simple sieve).
std::vector<std::uint64_t> primes_below(std::uint64_t limit);

// Exact integer cube and square roots (floor), and exact-power predicates.
Int isqrt(const Int& n);
bool is_perfect_power(const Int& n, unsigned p, Int* root_out = nullptr);

}  // namespace pmcf

#endif  // PMCF_INTMATH_HPP_
