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

#ifndef PMCF_LATTICE_HPP_
#define PMCF_LATTICE_HPP_

#include <optional>
#include <vector>

#include "pmcf/cubic_field.hpp"
#include "pmcf/hnf.hpp"

namespace pmcf {

// Weighted-ellipsoid search for elements of prescribed norm.
//
// An element x of L embeds as (x0, x1) with x0 real and x1 complex; if
// |N(x)| = n, write |x0| = n^(1/3) e^s, |x1| = n^(1/3) e^(-s/2).  The form
//   Q_tau(x) = (x0/u0)^2 + 2 |x1|^2 / u1^2,  u0 = n^(1/3) e^tau,
//   u1 = n^(1/3) e^(-tau/2)
// satisfies Q_tau(x) = e^(2(s-tau)) + 2 e^(tau-s).  For |s - tau| <=
// (log 2)/2 this is at most 2 + 2 sqrt(2) < 4.83, so enumerating
// Q_tau <= 5.5 on a grid of step log 2 finds every norm-(+-n) element whose
// logarithmic parameter s lies within step/2 of a grid point.  Enumeration
// is exhaustive per grid point (LLL reduction in high precision, then
// Fincke-Pohst), and every candidate is confirmed by an exact norm
// computation, so "not found" over a covering grid is a proof of absence.

inline constexpr double kTauStep = 0.6931471805599453;  // log 2
inline constexpr double kEllipsoidBound = 5.5;

// All lattice vectors x in I with Q_tau(x) <= bound and |N(x)| = n exactly.
std::vector<FieldElement> norm_elements_at(const CubicField& F,
                                           const FracIdeal& I, const Int& n,
                                           double tau);

// Sweeps the grid tau_lo, tau_lo + step, ..., (>= tau_hi) and returns the
// first exact hit, if any.
std::optional<FieldElement> find_norm_element(const CubicField& F,
                                              const FracIdeal& I, const Int& n,
                                              double tau_lo, double tau_hi);

}  // namespace pmcf

#endif  // PMCF_LATTICE_HPP_
