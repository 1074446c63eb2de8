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

#include "pmcf/radicand.hpp"

#include <numeric>

#include "pmcf/errors.hpp"

namespace pmcf {

const char* species_name(Species s) {
  return s == Species::TypeI ? "TypeI" : "TypeII";
}

namespace {

// Smallest representative among d, d^2, ..., d^(p-1), each reduced mod
// p-th powers.  All of them generate the same Kummer extension of the
// cyclotomic field; the exponent-vector gcd decides whether a strictly
// smaller conjugate exists (e.g. 4 = 2^2 -> gcd 2 -> conjugate 2).
Int canonical_conjugate(const Int& d, unsigned p) {
  auto f = factorize(d);
  unsigned g = 0;
  for (const auto& [q, e] : f) g = std::gcd(g, e);
  if (g % p == 0)
    throw InternalInconsistency("canonical_conjugate: input not p-free");
  if (g == 1) return d;  // primitive exponent vector: keep as given
  Int best = d;
  for (unsigned k = 2; k < p; ++k) {
    Int cand = 1;
    for (const auto& [q, e] : f) {
      unsigned ek = (e * k) % p;
      for (unsigned i = 0; i < ek; ++i) cand *= q;
    }
    if (cand >= 2 && cand < best) best = cand;
  }
  return best;
}

}  // namespace

Radicand normalize(const Int& d_raw, unsigned p) {
  if (p != 3 && p != 5 && p != 7)
    throw InvalidPrime("normalize: p must be 3, 5 or 7, got " +
                       std::to_string(p));
  if (d_raw < 2)
    throw DegenerateRadicand("normalize: d_raw must be >= 2");
  PthFreeResult s = strip_pth_powers(d_raw, p);
  if (s.pfree == 1)
    throw DegenerateRadicand("normalize: " + d_raw.get_str() +
                             " is a perfect " + std::to_string(p) +
                             "-th power");
  Radicand r;
  r.p = p;
  r.d_raw = d_raw;
  // Conjugate canonicalization applies to the fully classified cubic case
  // only; for p = 5, 7 each p-th-power-free value is kept as its own
  // radicand (the quintic/septic reports are presentation-wise).
  r.d = (p == 3) ? canonical_conjugate(s.pfree, p) : s.pfree;
  if (p == 3) {
    SquareFreeSplit ab = cubefree_to_ab(r.d);
    r.a = ab.a;
    r.b = ab.b;
    if (r.a * r.b * r.b != r.d)
      throw InternalInconsistency("normalize: a*b^2 != d");
    Int dsq_mod9 = (r.d * r.d) % 9;
    r.species = (dsq_mod9 == 1) ? Species::TypeI : Species::TypeII;
  }
  return r;
}

Int conjugate_radicand(const Radicand& r) {
  if (r.p != 3)
    throw InvalidPrime("conjugate_radicand: requires p = 3");
  Int co = r.a * r.a * r.b;
  return normalize(co, 3).d;
}

}  // namespace pmcf
