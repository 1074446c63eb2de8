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

#ifndef PMCF_CUBIC_FIELD_HPP_
#define PMCF_CUBIC_FIELD_HPP_

#include <array>
#include <string>

#include "pmcf/radicand.hpp"

namespace pmcf {

// Exact element of L = Q(cbrt(d)): integer coordinates over the integral
// basis (w0, w1, w2) of O_L divided by a positive denominator.
struct FieldElement {
  std::array<Int, 3> coords{Int(0), Int(0), Int(0)};
  Int denom = 1;

  bool operator==(const FieldElement&) const = default;
};

// Arithmetic context for L = Q(theta), theta^3 = d = a*b^2.  The working
// coordinates are (x0, x1, x2) over (1, theta, theta') where theta' =
// theta^2/b; theta and theta' satisfy
//   theta*theta = b*theta',  theta*theta' = a*b,  theta'*theta' = a*theta.
//
// Integral basis rows are stored as integer triples over (1, theta, theta')
// scaled by basis_denominator (1 for species II, 3 for species I where the
// third basis vector is nu = (xhat + yhat*theta + theta')/3).
struct CubicField {
  Radicand radicand;
  int basis_denominator = 1;
  std::array<std::array<Int, 3>, 3> basis;  // rows: basis elements * denominator
  Int discriminant;

  // Structure constants: w_i * w_j = sum_k mult_table[i][j][k] * w_k
  // (always integers; verified at construction).
  std::array<std::array<std::array<Int, 3>, 3>, 3> mult_table;

  const Int& a() const { return radicand.a; }
  const Int& b() const { return radicand.b; }
  const Int& d() const { return radicand.d; }
  Species species() const { return radicand.species; }
};

// Builds the field context.  Construction is self-verifying:
//  - the species-I basis vector nu is found by searching the 9 candidate
//    cosets and checking integrality through its characteristic polynomial
//    (integer trace, second symmetric function and determinant);
//  - the discriminant is recomputed as det(Tr(w_i w_j)) and must equal
//    -3a^2b^2 (species I) / -27a^2b^2 (species II).
// Violations raise InternalInconsistency.
CubicField build_field(const Radicand& r);

// --- element constructors -------------------------------------------------
FieldElement fe_zero();
FieldElement fe_one();
FieldElement fe_int(const Int& n);
// theta and theta' = theta^2/b expressed over the integral basis.
FieldElement fe_theta(const CubicField& F);
FieldElement fe_theta_prime(const CubicField& F);
// Element (u + v*theta + w*theta')/den; requires that it lies in (1/den)O_L.
FieldElement fe_from_uvw(const CubicField& F, const Int& u, const Int& v,
                         const Int& w, const Int& den = Int(1));

// --- exact operations -----------------------------------------------------
FieldElement add(const FieldElement& x, const FieldElement& y);
FieldElement sub(const FieldElement& x, const FieldElement& y);
FieldElement neg(const FieldElement& x);
FieldElement mul(const FieldElement& x, const FieldElement& y,
                 const CubicField& F);
// Multiplicative inverse; throws InternalInconsistency on zero.
FieldElement inverse(const FieldElement& x, const CubicField& F);

// N_{L/Q}(x) as an exact rational, computed as the determinant of the
// multiplication-by-x matrix over the integral basis.
struct Rational {
  Int num;
  Int den;  // > 0, reduced
};
Rational norm(const FieldElement& x, const CubicField& F);
Rational trace(const FieldElement& x, const CubicField& F);

// Coordinates of x over (1, theta, theta'), as (u, v, w)/den.
struct UvwCoords {
  Int u, v, w, den;
};
UvwCoords to_uvw(const FieldElement& x, const CubicField& F);

// 27 * N((u + v theta + w theta')/3) closed form: the cubic norm form
// u^3 + a b^2 v^3 + a^2 b w^3 - 3 a b u v w.
Int norm_form(const Int& u, const Int& v, const Int& w, const Int& a,
              const Int& b);

std::string to_string(const FieldElement& x, const CubicField& F);

}  // namespace pmcf

#endif  // PMCF_CUBIC_FIELD_HPP_
