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

#include "pmcf/sextic.hpp"

#include <numeric>
#include <sstream>

#include "pmcf/errors.hpp"
#include "pmcf/intmath.hpp"

namespace pmcf {

Eis eis_add(const Eis& x, const Eis& y) { return {x.p + y.p, x.q + y.q}; }
Eis eis_sub(const Eis& x, const Eis& y) { return {x.p - y.p, x.q - y.q}; }
Eis eis_neg(const Eis& x) { return {-x.p, -x.q}; }

Eis eis_mul(const Eis& x, const Eis& y) {
  // (p1 + q1 w)(p2 + q2 w) with w^2 = -1 - w.
  Int qq = x.q * y.q;
  return {x.p * y.p - qq, x.p * y.q + x.q * y.p - qq};
}

Eis eis_conj(const Eis& x) { return {x.p - x.q, -x.q}; }

Int eis_norm(const Eis& x) { return x.p * x.p - x.p * x.q + x.q * x.q; }

Eis zeta6_pow(int t) {
  static const long table[6][2] = {{1, 0},  {1, 1},   {0, 1},
                                   {-1, 0}, {-1, -1}, {0, -1}};
  int k = ((t % 6) + 6) % 6;
  return {Int(table[k][0]), Int(table[k][1])};
}

int mu6_order(const Eis& x) {
  for (int t = 0; t < 6; ++t) {
    if (x == zeta6_pow(t)) {
      if (t == 0) return 1;
      return 6 / std::gcd(t, 6);
    }
  }
  return 0;
}

namespace {

void sx_reduce(SexticElement* x) {
  Int g = x->den;
  for (const Int* v : {&x->A.p, &x->A.q, &x->B.p, &x->B.q, &x->C.p, &x->C.q})
    g = gcd(g, *v);
  if (g > 1) {
    x->A.p /= g;
    x->A.q /= g;
    x->B.p /= g;
    x->B.q /= g;
    x->C.p /= g;
    x->C.q /= g;
    x->den /= g;
  }
}

Eis eis_scale(const Eis& x, const Int& s) { return {x.p * s, x.q * s}; }

}  // namespace

SexticElement sx_one() { return {{Int(1), Int(0)}, {}, {}, Int(1)}; }

SexticElement sx_from_mu6(int t) { return {zeta6_pow(t), {}, {}, Int(1)}; }

SexticElement sx_from_cubic(const CubicField& F, const FieldElement& x) {
  UvwCoords c = to_uvw(x, F);
  SexticElement s{{c.u, Int(0)}, {c.v, Int(0)}, {c.w, Int(0)}, c.den};
  sx_reduce(&s);
  return s;
}

SexticElement sx_add(const SexticElement& x, const SexticElement& y) {
  Int g = gcd(x.den, y.den);
  Int sx = y.den / g, sy = x.den / g;
  SexticElement r{eis_add(eis_scale(x.A, sx), eis_scale(y.A, sy)),
                  eis_add(eis_scale(x.B, sx), eis_scale(y.B, sy)),
                  eis_add(eis_scale(x.C, sx), eis_scale(y.C, sy)),
                  x.den * sx};
  sx_reduce(&r);
  return r;
}

SexticElement sx_sub(const SexticElement& x, const SexticElement& y) {
  return sx_add(x, sx_neg(y));
}

SexticElement sx_neg(const SexticElement& x) {
  return {eis_neg(x.A), eis_neg(x.B), eis_neg(x.C), x.den};
}

SexticElement sx_mul(const CubicField& F, const SexticElement& x,
                     const SexticElement& y) {
  const Int& a = F.a();
  const Int& b = F.b();
  Int ab = a * b;
  Eis A = eis_add(eis_mul(x.A, y.A),
                  eis_scale(eis_add(eis_mul(x.B, y.C), eis_mul(x.C, y.B)), ab));
  Eis B = eis_add(eis_add(eis_mul(x.A, y.B), eis_mul(x.B, y.A)),
                  eis_scale(eis_mul(x.C, y.C), a));
  Eis C = eis_add(eis_add(eis_mul(x.A, y.C), eis_mul(x.C, y.A)),
                  eis_scale(eis_mul(x.B, y.B), b));
  SexticElement r{A, B, C, x.den * y.den};
  sx_reduce(&r);
  return r;
}

SexticElement sx_sigma(const SexticElement& x) {
  const Eis w{Int(0), Int(1)};
  const Eis w2{Int(-1), Int(-1)};
  return {x.A, eis_mul(w, x.B), eis_mul(w2, x.C), x.den};
}

SexticElement sx_tau(const SexticElement& x) {
  return {eis_conj(x.A), eis_conj(x.B), eis_conj(x.C), x.den};
}

bool sx_is_zero(const SexticElement& x) {
  return x.A == Eis{} && x.B == Eis{} && x.C == Eis{};
}

SexticElement sx_inverse(const CubicField& F, const SexticElement& x) {
  if (sx_is_zero(x))
    throw InternalInconsistency("inverse of zero sextic element");
  // Multiplication-by-x matrix over the K-basis (1, theta, theta') acting
  // on column vectors: columns are x*1, x*theta, x*theta' without the
  // denominator.  theta*(A,B,C) = (ab C, A, b B), theta'*(A,B,C) =
  // (ab B, a C, A) by the multiplication table.
  const Int& a = F.a();
  const Int& b = F.b();
  Int ab = a * b;
  Eis M[3][3];
  M[0][0] = x.A;
  M[1][0] = x.B;
  M[2][0] = x.C;
  M[0][1] = eis_scale(x.C, ab);
  M[1][1] = x.A;
  M[2][1] = eis_scale(x.B, b);
  M[0][2] = eis_scale(x.B, ab);
  M[1][2] = eis_scale(x.C, a);
  M[2][2] = x.A;
  // Cramer: inverse first column = adj(M) e_0 / det(M).
  auto det2 = [](const Eis& p, const Eis& q, const Eis& r, const Eis& s) {
    return eis_sub(eis_mul(p, s), eis_mul(q, r));
  };
  Eis det = eis_add(
      eis_sub(eis_mul(M[0][0], det2(M[1][1], M[1][2], M[2][1], M[2][2])),
              eis_mul(M[0][1], det2(M[1][0], M[1][2], M[2][0], M[2][2]))),
      eis_mul(M[0][2], det2(M[1][0], M[1][1], M[2][0], M[2][1])));
  if (det == Eis{})
    throw InternalInconsistency("singular multiplication matrix");
  // Cofactors for the first column of the inverse.
  Eis c0 = det2(M[1][1], M[1][2], M[2][1], M[2][2]);
  Eis c1 = eis_neg(det2(M[1][0], M[1][2], M[2][0], M[2][2]));
  Eis c2 = det2(M[1][0], M[1][1], M[2][0], M[2][1]);
  // x^-1 = den * (c0, c1, c2) / det; rationalize the Eisenstein division by
  // multiplying with conj(det): u/det = u*conj(det)/norm(det).
  Eis dconj = eis_conj(det);
  Int dn = eis_norm(det);
  SexticElement r{eis_mul(c0, dconj), eis_mul(c1, dconj), eis_mul(c2, dconj),
                  dn};
  // Scale by the original denominator (x = X/den => x^-1 = den * X^-1).
  r.A = eis_scale(r.A, x.den);
  r.B = eis_scale(r.B, x.den);
  r.C = eis_scale(r.C, x.den);
  if (dn < 0) throw InternalInconsistency("negative Eisenstein norm");
  sx_reduce(&r);
  // Verify.
  SexticElement check = sx_mul(F, x, r);
  if (!(check == sx_one()))
    throw InternalInconsistency("sextic inverse verification failed");
  return r;
}

SexticElement sx_pow(const CubicField& F, const SexticElement& x,
                     unsigned long e) {
  SexticElement acc = sx_one();
  SexticElement base = x;
  while (e > 0) {
    if (e & 1UL) acc = sx_mul(F, acc, base);
    e >>= 1UL;
    if (e > 0) base = sx_mul(F, base, base);
  }
  return acc;
}

EisRational rel_norm_K(const CubicField& F, const SexticElement& x) {
  SexticElement s1 = sx_sigma(x);
  SexticElement s2 = sx_sigma(s1);
  SexticElement n = sx_mul(F, sx_mul(F, x, s1), s2);
  if (!(n.B == Eis{}) || !(n.C == Eis{}))
    throw InternalInconsistency("relative norm not in the quadratic subfield");
  return {n.A, n.den};
}

std::string sx_to_string(const SexticElement& x) {
  std::ostringstream os;
  auto eis = [](const Eis& e) {
    std::ostringstream s;
    s << "(" << e.p << (e.q >= 0 ? "+" : "") << e.q << "w)";
    return s.str();
  };
  os << "[" << eis(x.A) << " + " << eis(x.B) << "t + " << eis(x.C) << "t'] / "
     << x.den;
  return os.str();
}

}  // namespace pmcf
