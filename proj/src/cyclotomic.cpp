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

#include "pmcf/cyclotomic.hpp"

#include "pmcf/errors.hpp"

namespace pmcf {

unsigned mult_order(std::uint64_t ell, unsigned p) {
  if (ell % p == 0)
    throw InternalInconsistency("mult_order: ell and p not coprime");
  return multiplicative_order(ell % p, p);
}

SplittingReport split_in_cyclotomic(std::uint64_t ell, unsigned p) {
  if (p != 3 && p != 5 && p != 7)
    throw InvalidPrime("split_in_cyclotomic: p must be 3, 5 or 7");
  SplittingReport rep;
  rep.ell = ell;
  rep.p = p;
  if (ell == p) {
    rep.e = p - 1;  // totally (tamely) ramified at p
    rep.f = 1;
    rep.g = 1;
  } else {
    rep.e = 1;
    rep.f = mult_order(ell, p);
    rep.g = (p - 1) / rep.f;
  }
  rep.ishida = (ell % p == 1);
  rep.kobayashi = (p == 5 && ell % 5 == 4);
  std::uint64_t m7 = ell % 7;
  rep.septic_two_split = (p == 7 && (m7 == 2 || m7 == 4));
  return rep;
}

Conductor conductor_p3(const Radicand& r) {
  if (r.p != 3)
    throw InvalidPrime("conductor_p3: requires p = 3");
  Conductor c;
  c.value = r.a * r.b;
  if (r.species == Species::TypeII) c.value *= 3;
  for (const auto& [q, e] : factorize(c.value)) {
    (void)e;
    std::uint64_t ell = q.get_ui();
    c.prime_divisors.emplace_back(ell, split_in_cyclotomic(ell, 3));
  }
  return c;
}

std::vector<std::uint64_t> theorem1_radicands(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t ell : primes_below(limit)) {
    std::uint64_t m = ell % 7;
    if (m == 2 || m == 4) out.push_back(ell);
  }
  return out;
}

}  // namespace pmcf
