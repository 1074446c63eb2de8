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

#ifndef PMCF_HNF_HPP_
#define PMCF_HNF_HPP_

#include <array>
#include <utility>
#include <vector>

#include "pmcf/cubic_field.hpp"
#include "pmcf/intmath.hpp"

namespace pmcf {

// Fractional ideal of the ring of integers of a pure cubic field,
// represented by a Z-basis in row Hermite normal form.
//
// The rows of `mat`, divided by `denom`, are coordinates over the integral
// basis (w0, w1, w2) of the field.  `mat` is upper triangular with positive
// diagonal and entries above each pivot reduced into [0, pivot).
struct FracIdeal {
  std::array<std::array<Int, 3>, 3> mat;
  Int denom = 1;
};

// Hermite normal form of the lattice spanned by the given coordinate rows.
// Throws InternalInconsistency if the span has rank < 3.
FracIdeal hnf_from_rows(std::vector<std::array<Int, 3>> rows, const Int& denom);

// The unit ideal O_L.
FracIdeal whole_ring();

// Ideal generated by the given field elements: sum of x * O_L.
FracIdeal ideal_from_elements(const CubicField& F,
                              const std::vector<FieldElement>& gens);

// Principal ideal x * O_L.  Throws InternalInconsistency if x = 0.
FracIdeal principal_ideal(const CubicField& F, const FieldElement& x);

FracIdeal ideal_mul(const CubicField& F, const FracIdeal& I, const FracIdeal& J);

// I^e for e >= 0 (binary exponentiation; e = 0 gives O_L).
FracIdeal ideal_pow(const CubicField& F, const FracIdeal& I, unsigned long e);

// Absolute norm |det(mat)| / denom^3 as an exact rational.
Rational ideal_norm(const FracIdeal& I);

// Norm of an integral ideal as an integer; throws InternalInconsistency if
// the ideal is not integral.
Int integral_ideal_norm(const FracIdeal& I);

// Membership test: is x in the lattice I?
bool ideal_contains(const FracIdeal& I, const FieldElement& x);

// Lattice inclusion I contains J.
bool ideal_contains_ideal(const FracIdeal& I, const FracIdeal& J);

bool ideal_eq(const FracIdeal& I, const FracIdeal& J);

// Row k of I as a field element (coordinates mat[k] / denom).
FieldElement ideal_basis_element(const FracIdeal& I, int k);

// Prime ideal above a rational prime ell.
struct PrimeIdeal {
  unsigned long ell = 0;
  int residue_degree = 0;  // f: N(P) = ell^f
  FracIdeal lat;
};

// One (P, e) pair in the factorization of ell * O_L.
struct PrimePower {
  PrimeIdeal prime;
  int exponent = 0;  // ramification index e
};

// Factorization of ell * O_L into prime ideals, sorted by (f, HNF matrix).
// Verifies prod P^e = (ell) and sum e*f = 3 before returning.
std::vector<PrimePower> factor_prime(const CubicField& F, unsigned long ell);

std::string ideal_to_string(const FracIdeal& I);

}  // namespace pmcf

#endif  // PMCF_HNF_HPP_
