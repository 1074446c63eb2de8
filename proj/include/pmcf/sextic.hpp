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

#ifndef PMCF_SEXTIC_HPP_
#define PMCF_SEXTIC_HPP_

#include <string>

#include "pmcf/cubic_field.hpp"

namespace pmcf {

// Eisenstein integer p + q*omega, omega^2 = -1 - omega (omega = zeta_3).
struct Eis {
  Int p = 0, q = 0;

  bool operator==(const Eis&) const = default;
};

Eis eis_add(const Eis& x, const Eis& y);
Eis eis_sub(const Eis& x, const Eis& y);
Eis eis_neg(const Eis& x);
Eis eis_mul(const Eis& x, const Eis& y);
// Galois conjugate omega -> omega^2.
Eis eis_conj(const Eis& x);
// Norm to Z: p^2 - pq + q^2.
Int eis_norm(const Eis& x);
// Order in mu_6 = {1, zeta6, ..., zeta6^5} or 0 if x is not a sixth root
// of unity.  zeta6 = 1 + omega.
int mu6_order(const Eis& x);
// zeta6^t as an Eisenstein integer.
Eis zeta6_pow(int t);

// Element of the sextic field N = Q(omega, theta): Eisenstein-rational
// coordinates over (1, theta, theta') with a common positive denominator.
// The multiplication table is the same as in the cubic field.
struct SexticElement {
  Eis A, B, C;
  Int den = 1;

  bool operator==(const SexticElement&) const = default;
};

SexticElement sx_one();
SexticElement sx_from_mu6(int t);  // zeta6^t
// Lift of a cubic field element (rational coordinates, q-parts zero).
SexticElement sx_from_cubic(const CubicField& F, const FieldElement& x);

SexticElement sx_add(const SexticElement& x, const SexticElement& y);
SexticElement sx_sub(const SexticElement& x, const SexticElement& y);
SexticElement sx_neg(const SexticElement& x);
SexticElement sx_mul(const CubicField& F, const SexticElement& x,
                     const SexticElement& y);
// Generator of Gal(N/K): theta -> omega*theta (coefficient action
// (A, B, C) -> (A, omega B, omega^2 C)).
SexticElement sx_sigma(const SexticElement& x);
// Complex conjugation: omega -> omega^2, theta fixed.
SexticElement sx_tau(const SexticElement& x);
// Exact inverse (Cramer over Q(omega)); throws InternalInconsistency on 0.
SexticElement sx_inverse(const CubicField& F, const SexticElement& x);
SexticElement sx_pow(const CubicField& F, const SexticElement& x,
                     unsigned long e);
bool sx_is_zero(const SexticElement& x);

// N_{N/K}(x) = x * sigma(x) * sigma^2(x); the theta and theta' coordinates
// must vanish (checked), leaving an element of K = Q(omega).
struct EisRational {
  Eis num;
  Int den = 1;
};
EisRational rel_norm_K(const CubicField& F, const SexticElement& x);

std::string sx_to_string(const SexticElement& x);

}  // namespace pmcf

#endif  // PMCF_SEXTIC_HPP_
