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

#ifndef PMCF_DPF_HPP_
#define PMCF_DPF_HPP_

#include <string>
#include <vector>

#include "pmcf/class_group.hpp"
#include "pmcf/cubic_field.hpp"
#include "pmcf/saturation.hpp"
#include "pmcf/units.hpp"

namespace pmcf {

// Differential principal factorization invariants of the sextic field
// N = Q(omega, theta) over K = Q(omega):
//   U  unit-norm defect: 1 iff zeta_3 is not a relative norm of a unit of N;
//   P  principal factorization dimension, P = U + 1;
//   A  dimension of the subgroup of totally ramified prime classes of L
//      that are principal (absolute principal factorizations), A >= 1;
//   R  residual dimension, R = U + 1 - A >= 0.
struct CohomologyInvariants {
  int U = 0;
  int P = 0;
  int A = 0;
  int R = 0;
};

enum class CoarseType { kAlpha, kBeta, kGamma };

// "alpha", "beta" or "gamma".
const char* coarse_type_name(CoarseType t);

// Rational primes totally ramified in L/Q, ascending: the primes dividing
// d, together with 3 for a species TypeII field with 3 not dividing d
// (3 then ramifies through the conductor).
std::vector<Int> totally_ramified_primes(const CubicField& F);

// The principal subgroup of (Z/3)^t over the t totally ramified primes:
// a vector (v_1, ..., v_t) with entries in {0,1,2} belongs to it iff
// prod P_i^{v_i} is a principal ideal of O_L.  Because each such prime is
// the unique prime above its rational prime, principality is equivalent to
// solvability of the pure norm equation |N(x)| = prod ell_i^{v_i}, which
// the certified ellipsoid search decides unconditionally.
struct AmbiguousResult {
  std::vector<Int> primes;               // totally ramified primes, ascending
  std::vector<std::vector<int>> basis;   // F_3 basis of the principal subgroup
  int dim = 0;                           // A = basis.size()
};

AmbiguousResult ambiguous_principal_subgroup(const CubicField& F,
                                             const UnitGroupL& units);

struct DpfClassification {
  CohomologyInvariants inv;
  CoarseType type = CoarseType::kAlpha;
  AmbiguousResult ambiguous;
  int saturation_index_exponent = 0;  // [U_N : <zeta_6, eps, sigma eps>] = 3^e
};

// Full p = 3 classification from precomputed units and saturation:
// A from the ambiguous principal subgroup, U from saturation, P = U + 1,
// R = U + 1 - A; type from the (U, A) cell of the p = 3 lattice.
// Throws InternalInconsistency if (U, A) falls outside the lattice.
DpfClassification classify_p3(const CubicField& F, const UnitGroupL& units,
                              const SaturationResult& sat);

// One labeled vertex of the coarse type lattice for p in {3, 5, 7}.
struct LatticeEntry {
  int U = 0;
  int A = 0;
  std::string label;           // "alpha" ... "kappa"
  bool marked = false;         // filled vertex in the reference diagram
  std::string norm_split_partner;  // p = 5 pairs {delta,zeta}, {epsilon,eta}
};

// The complete coarse type lattice: 10 entries for p = 7, 8 entries over 6
// distinct (U, A) cells for p = 5 (the norm-split pairs share cells), 3
// entries for p = 3 (diagram shows all three unfilled).  Entries are listed
// by descending U, then ascending A, split pairs adjacent.
// Throws InvalidPrime for other p.
std::vector<LatticeEntry> type_lattice(unsigned p);

// The computed marker R = U + 1 - A > 0; reproduces the filled vertices of
// the p = 5 and p = 7 diagrams.
bool fine_marker(int u_invariant, int a_invariant);

}  // namespace pmcf

#endif  // PMCF_DPF_HPP_
