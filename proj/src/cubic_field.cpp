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

#include "pmcf/cubic_field.hpp"

#include <sstream>

#include "pmcf/errors.hpp"

namespace pmcf {

namespace {

// Product over (1, theta, theta'):
//   theta^2 = b theta', theta theta' = ab, theta'^2 = a theta.
void uvw_mul(const Int& a, const Int& b, const Int& u1, const Int& v1,
             const Int& w1, const Int& u2, const Int& v2, const Int& w2,
             Int* u, Int* v, Int* w) {
  *u = u1 * u2 + a * b * (v1 * w2 + w1 * v2);
  *v = u1 * v2 + v1 * u2 + a * w1 * w2;
  *w = u1 * w2 + w1 * u2 + b * v1 * v2;
}

void reduce(FieldElement* x) {
  Int g = gcd(gcd(x->coords[0], x->coords[1]), gcd(x->coords[2], x->denom));
  if (g > 1) {
    for (auto& c : x->coords) c /= g;
    x->denom /= g;
  }
  if (x->denom < 0) {
    x->denom = -x->denom;
    for (auto& c : x->coords) c = -c;
  }
}

void reduce_rational(Rational* r) {
  Int g = gcd(r->num, r->den);
  if (g > 1) {
    r->num /= g;
    r->den /= g;
  }
  if (r->den < 0) {
    r->den = -r->den;
    r->num = -r->num;
  }
}

// Solve c0*S0 + c1*S1 + c2*S2 = rhs over the rationals by Cramer's rule,
// where S rows are the scaled basis triples.  Returns numerators and the
// common denominator det(S).
struct Solve3 {
  std::array<Int, 3> num;
  Int den;
};

Int det3(const std::array<std::array<Int, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Solve3 solve_in_basis(const CubicField& F, const std::array<Int, 3>& rhs) {
  // Rows of the system: sum_i c_i * basis[i][j] = rhs[j].
  std::array<std::array<Int, 3>, 3> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = F.basis[j][i];
  Int D = det3(m);
  if (D == 0) throw InternalInconsistency("solve_in_basis: singular basis");
  Solve3 out;
  out.den = D;
  for (int k = 0; k < 3; ++k) {
    auto mk = m;
    for (int j = 0; j < 3; ++j) mk[j][k] = rhs[j];
    out.num[k] = det3(mk);
  }
  return out;
}

}  // namespace

Int norm_form(const Int& u, const Int& v, const Int& w, const Int& a,
              const Int& b) {
  return u * u * u + a * b * b * v * v * v + a * a * b * w * w * w -
         3 * a * b * u * v * w;
}

CubicField build_field(const Radicand& r) {
  if (r.p != 3) throw InvalidPrime("build_field: requires p = 3");
  CubicField F;
  F.radicand = r;
  const Int& a = r.a;
  const Int& b = r.b;

  if (r.species == Species::TypeII) {
    F.basis_denominator = 1;
    F.basis = {{{Int(1), Int(0), Int(0)},
                {Int(0), Int(1), Int(0)},
                {Int(0), Int(0), Int(1)}}};
  } else {
    F.basis_denominator = 3;
    // Find the coset (xhat, yhat) with nu = (xhat + yhat*theta + theta')/3
    // integral.  Integrality of nu is equivalent to its characteristic
    // polynomial having integer coefficients:
    //   trace       = 3x/3 = x                      (always integral)
    //   sym2        = 3(x^2 - ab*y)/9               needs 3 | x^2 - ab*y
    //   determinant = norm_form(x, y, 1)/27         needs 27 | norm_form
    bool found = false;
    Int xhat, yhat;
    for (Int x = 0; x < 3; ++x) {
      for (Int y = 0; y < 3; ++y) {
        if ((x * x - a * b * y) % 3 != 0) continue;
        if (norm_form(x, y, Int(1), a, b) % 27 != 0) continue;
        if (found)
          throw InternalInconsistency("build_field: nu coset not unique");
        found = true;
        xhat = x;
        yhat = y;
      }
    }
    if (!found)
      throw InternalInconsistency(
          "build_field: no integral nu for species-I radicand " +
          r.d.get_str());
    F.basis = {{{Int(3), Int(0), Int(0)},
                {Int(0), Int(3), Int(0)},
                {xhat, yhat, Int(1)}}};
  }

  // Structure constants over the integral basis; must be integers.
  const Int delta(F.basis_denominator);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Int u, v, w;
      uvw_mul(a, b, F.basis[i][0], F.basis[i][1], F.basis[i][2],
              F.basis[j][0], F.basis[j][1], F.basis[j][2], &u, &v, &w);
      // w_i w_j = (u, v, w)/delta^2; solve sum_k c_k basis[k]/delta = that.
      Solve3 s = solve_in_basis(F, {u, v, w});
      for (int k = 0; k < 3; ++k) {
        Int num = s.num[k];
        Int den = s.den * delta;  // c_k = num/(den) with the delta scaling
        if (num % den != 0)
          throw InternalInconsistency(
              "build_field: non-integral structure constant");
        F.mult_table[i][j][k] = num / den;
      }
    }
  }

  // Self-check: discriminant via the trace form det(Tr(w_i w_j)) must equal
  // the classical dichotomy value.
  std::array<std::array<Int, 3>, 3> gram;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      // w_i w_j in basis coords -> uvw -> trace = 3u/delta.
      Int u(0), v(0), w(0);
      for (int k = 0; k < 3; ++k) {
        u += F.mult_table[i][j][k] * F.basis[k][0];
        v += F.mult_table[i][j][k] * F.basis[k][1];
        w += F.mult_table[i][j][k] * F.basis[k][2];
      }
      (void)v;
      (void)w;
      Int tr3 = 3 * u;  // trace * delta
      if (tr3 % delta != 0)
        throw InternalInconsistency("build_field: non-integral trace");
      gram[i][j] = tr3 / delta;
    }
  }
  Int disc = det3(gram);
  Int expected = -3 * a * a * b * b;
  if (r.species == Species::TypeII) expected *= 9;
  if (disc != expected)
    throw InternalInconsistency("build_field: discriminant self-check failed: " +
                                disc.get_str() + " vs " + expected.get_str());
  F.discriminant = disc;
  return F;
}

FieldElement fe_zero() { return FieldElement{}; }

FieldElement fe_one() {
  FieldElement x;
  x.coords[0] = 1;
  return x;
}

FieldElement fe_int(const Int& n) {
  FieldElement x;
  x.coords[0] = n;
  return x;
}

FieldElement fe_theta(const CubicField& F) {
  FieldElement x;
  x.coords[1] = 1;
  (void)F;
  return x;
}

FieldElement fe_theta_prime(const CubicField& F) {
  // theta' = theta^2/b: equals w2 for species II; for species I,
  // theta' = 3*nu - xhat - yhat*theta = 3*w2 - xhat*w0 - yhat*w1.
  FieldElement x;
  if (F.basis_denominator == 1) {
    x.coords[2] = 1;
  } else {
    x.coords[0] = -F.basis[2][0];
    x.coords[1] = -F.basis[2][1];
    x.coords[2] = 3;
  }
  return x;
}

FieldElement fe_from_uvw(const CubicField& F, const Int& u, const Int& v,
                         const Int& w, const Int& den) {
  Solve3 s = solve_in_basis(F, {u, v, w});
  FieldElement x;
  // basis[k] = delta * w_k, so the requested element
  // (u, v, w)/den = sum_k (delta * num_k / (s.den * den)) w_k.
  const Int delta(F.basis_denominator);
  for (int k = 0; k < 3; ++k) x.coords[k] = s.num[k] * delta;
  x.denom = s.den * den;
  reduce(&x);
  UvwCoords back = to_uvw(x, F);
  if (back.u * den != u * back.den || back.v * den != v * back.den ||
      back.w * den != w * back.den)
    throw InternalInconsistency("fe_from_uvw: round-trip failed");
  return x;
}

FieldElement add(const FieldElement& x, const FieldElement& y) {
  FieldElement z;
  z.denom = x.denom * y.denom;
  for (int i = 0; i < 3; ++i)
    z.coords[i] = x.coords[i] * y.denom + y.coords[i] * x.denom;
  reduce(&z);
  return z;
}

FieldElement sub(const FieldElement& x, const FieldElement& y) {
  return add(x, neg(y));
}

FieldElement neg(const FieldElement& x) {
  FieldElement z = x;
  for (auto& c : z.coords) c = -c;
  return z;
}

FieldElement mul(const FieldElement& x, const FieldElement& y,
                 const CubicField& F) {
  FieldElement z;
  z.denom = x.denom * y.denom;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Int c = x.coords[i] * y.coords[j];
      if (c == 0) continue;
      for (int k = 0; k < 3; ++k) z.coords[k] += c * F.mult_table[i][j][k];
    }
  reduce(&z);
  return z;
}

UvwCoords to_uvw(const FieldElement& x, const CubicField& F) {
  UvwCoords c;
  c.u = 0;
  c.v = 0;
  c.w = 0;
  for (int k = 0; k < 3; ++k) {
    c.u += x.coords[k] * F.basis[k][0];
    c.v += x.coords[k] * F.basis[k][1];
    c.w += x.coords[k] * F.basis[k][2];
  }
  c.den = x.denom * F.basis_denominator;
  Int g = gcd(gcd(c.u, c.v), gcd(c.w, c.den));
  if (g > 1) {
    c.u /= g;
    c.v /= g;
    c.w /= g;
    c.den /= g;
  }
  return c;
}

Rational norm(const FieldElement& x, const CubicField& F) {
  // Determinant of the multiplication-by-x matrix over the integral basis.
  std::array<std::array<Int, 3>, 3> m;
  for (int j = 0; j < 3; ++j) {
    // x * w_j in integral-basis coordinates (numerators over x.denom).
    for (int k = 0; k < 3; ++k) m[k][j] = 0;
    for (int i = 0; i < 3; ++i) {
      if (x.coords[i] == 0) continue;
      for (int k = 0; k < 3; ++k)
        m[k][j] += x.coords[i] * F.mult_table[i][j][k];
    }
  }
  Rational r{det3(m), x.denom * x.denom * x.denom};
  reduce_rational(&r);
  return r;
}

Rational trace(const FieldElement& x, const CubicField& F) {
  UvwCoords c = to_uvw(x, F);
  Rational r{3 * c.u, c.den};
  reduce_rational(&r);
  return r;
}

FieldElement inverse(const FieldElement& x, const CubicField& F) {
  // 1/x = adj(M_x) applied to e0 over det; use x_inv = (x^2 stuff) ...
  // Solve M_x * y = e0 by Cramer.
  std::array<std::array<Int, 3>, 3> m;
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) m[k][j] = 0;
    for (int i = 0; i < 3; ++i) {
      if (x.coords[i] == 0) continue;
      for (int k = 0; k < 3; ++k)
        m[k][j] += x.coords[i] * F.mult_table[i][j][k];
    }
  }
  Int D = det3(m);
  if (D == 0) throw InternalInconsistency("inverse of zero element");
  FieldElement y;
  for (int k = 0; k < 3; ++k) {
    auto mk = m;
    for (int j = 0; j < 3; ++j) {
      mk[j][k] = (j == 0) ? Int(1) : Int(0);
    }
    y.coords[k] = det3(mk) * x.denom;
  }
  y.denom = D;
  reduce(&y);
  // Exactness check.
  FieldElement p = mul(x, y, F);
  if (!(p == fe_one()))
    throw InternalInconsistency("inverse: x * x^{-1} != 1");
  return y;
}

std::string to_string(const FieldElement& x, const CubicField& F) {
  UvwCoords c = to_uvw(x, F);
  std::ostringstream os;
  os << "(" << c.u.get_str() << " + " << c.v.get_str() << "*th + "
     << c.w.get_str() << "*th')/" << c.den.get_str();
  return os.str();
}

}  // namespace pmcf
