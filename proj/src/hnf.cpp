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

#include "pmcf/hnf.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "pmcf/errors.hpp"

namespace pmcf {
namespace {

void xgcd(const Int& a, const Int& b, Int* g, Int* s, Int* t) {
  mpz_gcdext(g->get_mpz_t(), s->get_mpz_t(), t->get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Divides the matrix and denominator by their common gcd.
void reduce_ideal(FracIdeal* I) {
  Int g = I->denom;
  for (const auto& row : I->mat)
    for (const auto& v : row) g = gcd(g, v);
  if (g > 1) {
    for (auto& row : I->mat)
      for (auto& v : row) v /= g;
    I->denom /= g;
  }
}

}  // namespace

FracIdeal hnf_from_rows(std::vector<std::array<Int, 3>> rows,
                        const Int& denom) {
  // Triangularize with unimodular row operations: for each column, combine
  // rows by extended gcd until a single pivot remains.
  int pivot_row = 0;
  for (int col = 0; col < 3 && pivot_row < 3; ++col) {
    // Find a row with nonzero entry in this column.
    int found = -1;
    for (int r = pivot_row; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col] != 0) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;  // rank deficiency handled below
    std::swap(rows[pivot_row], rows[found]);
    for (int r = pivot_row + 1; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col] == 0) continue;
      Int g, s, t;
      xgcd(rows[pivot_row][col], rows[r][col], &g, &s, &t);
      Int u = rows[pivot_row][col] / g;
      Int v = rows[r][col] / g;
      for (int c = 0; c < 3; ++c) {
        Int np = s * rows[pivot_row][c] + t * rows[r][c];
        Int nr = u * rows[r][c] - v * rows[pivot_row][c];
        rows[pivot_row][c] = np;
        rows[r][c] = nr;
      }
    }
    if (rows[pivot_row][col] < 0)
      for (int c = 0; c < 3; ++c) rows[pivot_row][c] = -rows[pivot_row][c];
    ++pivot_row;
  }
  if (pivot_row != 3)
    throw InternalInconsistency("ideal lattice has rank < 3");

  FracIdeal I;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) I.mat[r][c] = rows[r][c];
  I.denom = denom;
  // Pivots sit on the diagonal (upper triangular).  Reduce entries above
  // each pivot into [0, pivot).
  for (int j = 1; j < 3; ++j) {
    for (int i = 0; i < j; ++i) {
      Int q = floor_div(I.mat[i][j], I.mat[j][j]);
      if (q != 0)
        for (int c = 0; c < 3; ++c) I.mat[i][c] -= q * I.mat[j][c];
    }
  }
  reduce_ideal(&I);
  return I;
}

FracIdeal whole_ring() {
  FracIdeal I;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) I.mat[r][c] = (r == c) ? 1 : 0;
  I.denom = 1;
  return I;
}

FracIdeal ideal_from_elements(const CubicField& F,
                              const std::vector<FieldElement>& gens) {
  // x * O_L is spanned over Z by {x * w_k}; accumulate rows for all
  // generators over a common denominator.
  Int common = 1;
  std::vector<FieldElement> prods;
  for (const auto& x : gens) {
    for (int k = 0; k < 3; ++k) {
      FieldElement w;
      w.coords[k] = 1;
      FieldElement p = mul(x, w, F);
      common = lcm(common, p.denom);
      prods.push_back(p);
    }
  }
  if (prods.empty()) throw InternalInconsistency("empty ideal generator set");
  std::vector<std::array<Int, 3>> rows;
  rows.reserve(prods.size());
  for (const auto& p : prods) {
    Int scale = common / p.denom;
    rows.push_back({p.coords[0] * scale, p.coords[1] * scale,
                    p.coords[2] * scale});
  }
  return hnf_from_rows(std::move(rows), common);
}

FracIdeal principal_ideal(const CubicField& F, const FieldElement& x) {
  if (x.coords[0] == 0 && x.coords[1] == 0 && x.coords[2] == 0)
    throw InternalInconsistency("principal ideal of zero");
  return ideal_from_elements(F, {x});
}

FracIdeal ideal_mul(const CubicField& F, const FracIdeal& I,
                    const FracIdeal& J) {
  std::vector<std::array<Int, 3>> rows;
  rows.reserve(9);
  for (int i = 0; i < 3; ++i) {
    FieldElement xi{{I.mat[i][0], I.mat[i][1], I.mat[i][2]}, Int(1)};
    for (int j = 0; j < 3; ++j) {
      FieldElement yj{{J.mat[j][0], J.mat[j][1], J.mat[j][2]}, Int(1)};
      FieldElement p = mul(xi, yj, F);
      if (p.denom != 1)
        throw InternalInconsistency("integer span product has denominator");
      rows.push_back(p.coords);
    }
  }
  return hnf_from_rows(std::move(rows), I.denom * J.denom);
}

FracIdeal ideal_pow(const CubicField& F, const FracIdeal& I, unsigned long e) {
  FracIdeal acc = whole_ring();
  FracIdeal base = I;
  while (e > 0) {
    if (e & 1UL) acc = ideal_mul(F, acc, base);
    e >>= 1UL;
    if (e > 0) base = ideal_mul(F, base, base);
  }
  return acc;
}

Rational ideal_norm(const FracIdeal& I) {
  Int det = I.mat[0][0] * I.mat[1][1] * I.mat[2][2];
  if (det < 0) det = -det;
  Int den = I.denom * I.denom * I.denom;
  Int g = gcd(det, den);
  return Rational{det / g, den / g};
}

Int integral_ideal_norm(const FracIdeal& I) {
  Rational n = ideal_norm(I);
  if (n.den != 1)
    throw InternalInconsistency("norm of non-integral ideal requested");
  return n.num;
}

bool ideal_contains(const FracIdeal& I, const FieldElement& x) {
  // Need integer c with c * mat = coords * denom / x.denom (row vector
  // times the upper-triangular basis matrix); forward substitution.
  std::array<Int, 3> w;
  for (int j = 0; j < 3; ++j) {
    Int num = x.coords[j] * I.denom;
    if (num % x.denom != 0) return false;
    w[j] = num / x.denom;
  }
  Int c0, c1, c2;
  if (w[0] % I.mat[0][0] != 0) return false;
  c0 = w[0] / I.mat[0][0];
  Int r1 = w[1] - c0 * I.mat[0][1];
  if (r1 % I.mat[1][1] != 0) return false;
  c1 = r1 / I.mat[1][1];
  Int r2 = w[2] - c0 * I.mat[0][2] - c1 * I.mat[1][2];
  if (r2 % I.mat[2][2] != 0) return false;
  return true;
}

bool ideal_contains_ideal(const FracIdeal& I, const FracIdeal& J) {
  for (int k = 0; k < 3; ++k) {
    FieldElement x{{J.mat[k][0], J.mat[k][1], J.mat[k][2]}, J.denom};
    if (!ideal_contains(I, x)) return false;
  }
  return true;
}

bool ideal_eq(const FracIdeal& I, const FracIdeal& J) {
  FracIdeal A = I, B = J;
  reduce_ideal(&A);
  reduce_ideal(&B);
  if (A.denom != B.denom) return false;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      if (A.mat[r][c] != B.mat[r][c]) return false;
  return true;
}

FieldElement ideal_basis_element(const FracIdeal& I, int k) {
  FieldElement x{{I.mat[k][0], I.mat[k][1], I.mat[k][2]}, I.denom};
  // Normalize gcd.
  Int g = I.denom;
  for (const auto& v : x.coords) g = gcd(g, v);
  if (g > 1) {
    for (auto& v : x.coords) v /= g;
    x.denom /= g;
  }
  return x;
}

namespace {

// ---- arithmetic mod ell (ell < 2^31) -------------------------------------

using u64 = std::uint64_t;

u64 mul_mod(u64 x, u64 y, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(x) * y) % m);
}

u64 add_mod(u64 x, u64 y, u64 m) { return (x + y) % m; }

u64 sub_mod(u64 x, u64 y, u64 m) { return (x + m - y % m) % m; }

u64 inv_mod_u64(u64 a, u64 m) {
  // Extended Euclid; requires gcd(a, m) = 1.
  std::int64_t t = 0, newt = 1;
  std::int64_t r = static_cast<std::int64_t>(m),
               newr = static_cast<std::int64_t>(a % m);
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw InternalInconsistency("inverse of non-unit mod m");
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<u64>(t);
}

// ---- dense linear algebra over F_ell (tiny matrices) ---------------------

struct FpMat {
  int rows = 0, cols = 0;
  u64 m = 0;
  std::vector<u64> a;  // row-major

  u64& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  u64 at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

FpMat fp_zero(int rows, int cols, u64 m) {
  FpMat M;
  M.rows = rows;
  M.cols = cols;
  M.m = m;
  M.a.assign(static_cast<size_t>(rows) * cols, 0);
  return M;
}

// Row echelon form in place; returns pivot column indices.
std::vector<int> fp_rref(FpMat* M) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < M->cols && r < M->rows; ++c) {
    int sel = -1;
    for (int i = r; i < M->rows; ++i)
      if (M->at(i, c) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    for (int j = 0; j < M->cols; ++j) std::swap(M->at(sel, j), M->at(r, j));
    u64 inv = inv_mod_u64(M->at(r, c), M->m);
    for (int j = 0; j < M->cols; ++j)
      M->at(r, j) = mul_mod(M->at(r, j), inv, M->m);
    for (int i = 0; i < M->rows; ++i) {
      if (i == r || M->at(i, c) == 0) continue;
      u64 f = M->at(i, c);
      for (int j = 0; j < M->cols; ++j)
        M->at(i, j) = sub_mod(M->at(i, j), mul_mod(f, M->at(r, j), M->m), M->m);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Kernel basis of M (as a map on column vectors x: M x = 0).
std::vector<std::vector<u64>> fp_kernel(FpMat M) {
  std::vector<int> pivots = fp_rref(&M);
  std::vector<bool> is_pivot(M.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<u64>> basis;
  for (int fc = 0; fc < M.cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<u64> v(M.cols, 0);
    v[fc] = 1;
    for (size_t pi = 0; pi < pivots.size(); ++pi)
      v[pivots[pi]] = sub_mod(0, M.at(static_cast<int>(pi), fc), M.m);
    basis.push_back(std::move(v));
  }
  return basis;
}

// The subspace of F_ell^3 spanned by `vecs`, returned as a reduced basis.
std::vector<std::vector<u64>> fp_span_basis(std::vector<std::vector<u64>> vecs,
                                            u64 m) {
  FpMat M = fp_zero(static_cast<int>(vecs.size()), 3, m);
  for (size_t i = 0; i < vecs.size(); ++i)
    for (int j = 0; j < 3; ++j) M.at(static_cast<int>(i), j) = vecs[i][j];
  std::vector<int> pivots = fp_rref(&M);
  std::vector<std::vector<u64>> out;
  for (size_t i = 0; i < pivots.size(); ++i)
    out.push_back({M.at(static_cast<int>(i), 0), M.at(static_cast<int>(i), 1),
                   M.at(static_cast<int>(i), 2)});
  return out;
}

// Intersection of two subspaces of F_ell^3 given by spanning sets.
std::vector<std::vector<u64>> fp_intersect(
    const std::vector<std::vector<u64>>& U,
    const std::vector<std::vector<u64>>& V, u64 m) {
  // x = U^T alpha = V^T beta: solve [U^T | -V^T] (alpha, beta) = 0.
  int cu = static_cast<int>(U.size()), cv = static_cast<int>(V.size());
  FpMat M = fp_zero(3, cu + cv, m);
  for (int j = 0; j < cu; ++j)
    for (int r = 0; r < 3; ++r) M.at(r, j) = U[j][r] % m;
  for (int j = 0; j < cv; ++j)
    for (int r = 0; r < 3; ++r) M.at(r, cu + j) = (m - V[j][r] % m) % m;
  std::vector<std::vector<u64>> ker = fp_kernel(M);
  std::vector<std::vector<u64>> vecs;
  for (const auto& k : ker) {
    std::vector<u64> x(3, 0);
    for (int j = 0; j < cu; ++j)
      for (int r = 0; r < 3; ++r)
        x[r] = add_mod(x[r], mul_mod(k[j], U[j][r] % m, m), m);
    if (x[0] || x[1] || x[2]) vecs.push_back(x);
  }
  return fp_span_basis(std::move(vecs), m);
}

// ---- the finite algebra A = O_L / ell ------------------------------------

struct ModAlgebra {
  u64 m;
  u64 T[3][3][3];  // structure constants mod ell

  std::array<u64, 3> mul(const std::array<u64, 3>& x,
                         const std::array<u64, 3>& y) const {
    std::array<u64, 3> z{0, 0, 0};
    for (int i = 0; i < 3; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < 3; ++j) {
        if (y[j] == 0) continue;
        u64 c = mul_mod(x[i], y[j], m);
        for (int k = 0; k < 3; ++k)
          z[k] = add_mod(z[k], mul_mod(c, T[i][j][k], m), m);
      }
    }
    return z;
  }

  std::array<u64, 3> pow(std::array<u64, 3> x, u64 e) const {
    std::array<u64, 3> acc{1 % m, 0, 0};  // w0 = 1
    while (e > 0) {
      if (e & 1ULL) acc = mul(acc, x);
      e >>= 1ULL;
      if (e > 0) x = mul(x, x);
    }
    return acc;
  }
};

ModAlgebra make_algebra(const CubicField& F, u64 ell) {
  ModAlgebra A;
  A.m = ell;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        A.T[i][j][k] = mpz_fdiv_ui(F.mult_table[i][j][k].get_mpz_t(), ell);
  return A;
}

FracIdeal ideal_from_mod_subspace(const std::vector<std::vector<u64>>& sub,
                                  u64 ell) {
  // Lattice generated by ell*O_L and lifts of the subspace vectors.
  std::vector<std::array<Int, 3>> rows;
  for (int k = 0; k < 3; ++k) {
    std::array<Int, 3> r{Int(0), Int(0), Int(0)};
    r[k] = Int(static_cast<unsigned long>(ell));
    rows.push_back(r);
  }
  for (const auto& v : sub)
    rows.push_back({Int(static_cast<unsigned long>(v[0])),
                    Int(static_cast<unsigned long>(v[1])),
                    Int(static_cast<unsigned long>(v[2]))});
  return hnf_from_rows(std::move(rows), Int(1));
}

// ---- cube roots mod ell --------------------------------------------------

// Cube root of a nonzero cube a mod ell where ell = 1 mod 3 and
// a^((ell-1)/3) = 1; also returns a primitive cube root of unity.
void cube_root_1mod3(u64 a, u64 ell, u64* root, u64* omega) {
  u64 t = ell - 1;
  int s = 0;
  while (t % 3 == 0) {
    t /= 3;
    ++s;
  }
  // Cube non-residue eta.
  u64 eta = 2;
  while (powmod_u64(eta, (ell - 1) / 3, ell) == 1) ++eta;
  u64 zeta = powmod_u64(eta, t, ell);  // order 3^s
  u64 e3 = (t == 1) ? 1 : inv_mod_u64(3 % t, t);
  u64 k = (3 * e3 - 1) / t;
  u64 c = powmod_u64(a, e3, ell);
  // Need zeta^(3j) = a^(-k t).
  u64 A = powmod_u64(inv_mod_u64(a, ell), (k * t) % (ell - 1), ell);
  // Discrete log of A base zeta in the cyclic 3-group of order 3^s
  // (Pohlig-Hellman, base-3 digits).
  u64 om = powmod_u64(zeta, powmod_u64(3, static_cast<u64>(s - 1),
                                       ell - 1) /* 3^(s-1) < ell-1 */,
                      ell);
  // 3^(s-1) computed exactly (it divides ell-1, no reduction occurs).
  u64 L = 0;
  u64 pow3i = 1;  // 3^i
  u64 zinv = inv_mod_u64(zeta, ell);
  for (int i = 0; i < s; ++i) {
    // (A * zeta^-L)^(3^(s-1-i)) is a power of omega.
    u64 cur = mul_mod(A, powmod_u64(zinv, L, ell), ell);
    u64 exp3 = 1;
    for (int q = 0; q < s - 1 - i; ++q) exp3 *= 3;
    u64 w = powmod_u64(cur, exp3, ell);
    u64 digit = 0;
    if (w == 1)
      digit = 0;
    else if (w == om)
      digit = 1;
    else
      digit = 2;
    L += digit * pow3i;
    pow3i *= 3;
  }
  if (L % 3 != 0)
    throw InternalInconsistency("cube root dlog not divisible by 3");
  u64 x = mul_mod(c, powmod_u64(zeta, L / 3, ell), ell);
  if (powmod_u64(x, 3, ell) != a)
    throw InternalInconsistency("cube root verification failed");
  *root = x;
  *omega = om;
}

PrimeIdeal make_prime(const CubicField& F, u64 ell,
                      const std::vector<FieldElement>& gens, int f) {
  PrimeIdeal P;
  P.ell = static_cast<unsigned long>(ell);
  P.residue_degree = f;
  P.lat = ideal_from_elements(F, gens);
  Int expect = 1;
  for (int i = 0; i < f; ++i) expect *= Int(static_cast<unsigned long>(ell));
  if (integral_ideal_norm(P.lat) != expect)
    throw InternalInconsistency("prime ideal norm mismatch");
  return P;
}

// Factorization via roots of x^3 - d mod ell; valid when ell does not
// divide 3b (then ell does not divide the index [O_L : Z[theta]]).
std::vector<PrimePower> factor_via_polynomial(const CubicField& F, u64 ell) {
  u64 dbar = mpz_fdiv_ui(F.d().get_mpz_t(), ell);
  FieldElement th = fe_theta(F);
  FieldElement lC = fe_int(Int(static_cast<unsigned long>(ell)));
  std::vector<PrimePower> out;

  if (dbar == 0) {
    // ell | a: totally ramified, triple root 0.
    out.push_back({make_prime(F, ell, {lC, th}, 1), 3});
    return out;
  }
  if (ell % 3 == 2) {
    // Cube map is a bijection: unique root, quadratic cofactor irreducible.
    u64 e = inv_mod_u64(3 % (ell - 1), ell - 1);
    u64 r = powmod_u64(dbar, e, ell);
    if (powmod_u64(r, 3, ell) != dbar)
      throw InternalInconsistency("unique cube root failed");
    Int rI(static_cast<unsigned long>(r));
    FieldElement lin = sub(th, fe_int(rI));
    // theta^2 + r theta + r^2
    FieldElement quad = add(mul(th, th, F),
                            add(mul(fe_int(rI), th, F), fe_int(rI * rI)));
    out.push_back({make_prime(F, ell, {lC, lin}, 1), 1});
    out.push_back({make_prime(F, ell, {lC, quad}, 2), 1});
    return out;
  }
  // ell = 1 mod 3.
  if (powmod_u64(dbar, (ell - 1) / 3, ell) != 1) {
    // Not a cube: x^3 - d irreducible, ell inert.
    out.push_back({make_prime(F, ell, {lC}, 3), 1});
    return out;
  }
  u64 r = 0, om = 0;
  cube_root_1mod3(dbar, ell, &r, &om);
  u64 roots[3] = {r, mul_mod(r, om, ell), mul_mod(r, mul_mod(om, om, ell), ell)};
  std::sort(roots, roots + 3);
  for (u64 ri : roots) {
    FieldElement lin = sub(th, fe_int(Int(static_cast<unsigned long>(ri))));
    out.push_back({make_prime(F, ell, {lC, lin}, 1), 1});
  }
  return out;
}

// Factorization via the structure of the finite algebra O_L/ell; valid for
// every ell (used for ell | 3b, where the polynomial route can fail).
std::vector<PrimePower> factor_via_algebra(const CubicField& F, u64 ell) {
  ModAlgebra A = make_algebra(F, ell);

  // Frobenius matrix: columns are w_i^ell.
  FpMat Frob = fp_zero(3, 3, ell);
  for (int i = 0; i < 3; ++i) {
    std::array<u64, 3> wi{0, 0, 0};
    wi[i] = 1;
    std::array<u64, 3> img = A.pow(wi, ell);
    for (int r = 0; r < 3; ++r) Frob.at(r, i) = img[r];
  }

  // Radical = kernel of Frob^m with ell^m >= 3 (nilpotency index <= 3).
  FpMat FrobM = Frob;
  if (ell == 2) {
    FpMat sq = fp_zero(3, 3, ell);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        u64 sum = 0;
        for (int k = 0; k < 3; ++k)
          sum = add_mod(sum, mul_mod(Frob.at(i, k), Frob.at(k, j), ell), ell);
        sq.at(i, j) = sum;
      }
    FrobM = sq;
  }
  std::vector<std::vector<u64>> rad = fp_kernel(FrobM);

  // Fixed points of Frobenius form the etale part, isomorphic to F_ell^g.
  FpMat FI = Frob;
  for (int i = 0; i < 3; ++i) FI.at(i, i) = sub_mod(FI.at(i, i), 1, ell);
  std::vector<std::vector<u64>> fixed = fp_kernel(FI);
  int g = static_cast<int>(fixed.size());
  if (g < 1 || g > 3)
    throw InternalInconsistency("invalid number of fixed Frobenius vectors");

  // Split A into its local components: eigenspaces of multiplication by
  // fixed (semisimple) elements.  Fixed elements act on each component as
  // exact scalars, so plain eigenspaces suffice.
  std::vector<std::vector<std::vector<u64>>> comps;
  comps.push_back(fp_span_basis({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, ell));
  for (const auto& u : fixed) {
    if (static_cast<int>(comps.size()) == g) break;
    // Multiplication-by-u matrix.
    FpMat MU = fp_zero(3, 3, ell);
    std::array<u64, 3> uv{u[0], u[1], u[2]};
    for (int j = 0; j < 3; ++j) {
      std::array<u64, 3> wj{0, 0, 0};
      wj[j] = 1;
      std::array<u64, 3> img = A.mul(uv, wj);
      for (int r = 0; r < 3; ++r) MU.at(r, j) = img[r];
    }
    std::vector<std::vector<std::vector<u64>>> next;
    for (const auto& C : comps) {
      std::vector<std::vector<std::vector<u64>>> pieces;
      for (u64 lam = 0; lam < ell; ++lam) {
        FpMat Mlam = MU;
        for (int i = 0; i < 3; ++i)
          Mlam.at(i, i) = sub_mod(Mlam.at(i, i), lam, ell);
        std::vector<std::vector<u64>> eig = fp_kernel(Mlam);
        if (eig.empty()) continue;
        std::vector<std::vector<u64>> piece = fp_intersect(C, eig, ell);
        if (!piece.empty()) pieces.push_back(std::move(piece));
      }
      if (pieces.empty()) {
        next.push_back(C);
      } else {
        for (auto& p : pieces) next.push_back(std::move(p));
      }
    }
    comps = std::move(next);
  }
  if (static_cast<int>(comps.size()) != g)
    throw InternalInconsistency("component split does not match fixed rank");

  // Maximal ideal for component i: radical + all other components.
  std::vector<PrimePower> out;
  for (int i = 0; i < g; ++i) {
    std::vector<std::vector<u64>> span = rad;
    for (int j = 0; j < g; ++j) {
      if (j == i) continue;
      for (const auto& v : comps[j]) span.push_back(v);
    }
    std::vector<std::vector<u64>> mi = fp_span_basis(std::move(span), ell);
    int f = 3 - static_cast<int>(mi.size());
    if (f < 1) throw InternalInconsistency("nonpositive residue degree");
    PrimeIdeal P;
    P.ell = static_cast<unsigned long>(ell);
    P.residue_degree = f;
    P.lat = ideal_from_mod_subspace(mi, ell);
    Int expect = 1;
    for (int q = 0; q < f; ++q) expect *= Int(static_cast<unsigned long>(ell));
    if (integral_ideal_norm(P.lat) != expect)
      throw InternalInconsistency("prime ideal norm mismatch (algebra route)");
    // Ramification index: largest e with (ell) contained in P^e.
    FracIdeal ellO = principal_ideal(F, fe_int(Int(static_cast<unsigned long>(ell))));
    int e = 0;
    FracIdeal Pk = whole_ring();
    for (int k = 1; k <= 3; ++k) {
      Pk = ideal_mul(F, Pk, P.lat);
      if (ideal_contains_ideal(Pk, ellO))
        e = k;
      else
        break;
    }
    if (e < 1) throw InternalInconsistency("zero ramification index");
    out.push_back({std::move(P), e});
  }
  return out;
}

}  // namespace

std::vector<PrimePower> factor_prime(const CubicField& F, unsigned long ell) {
  if (ell < 2 || !is_prime(Int(ell)))
    throw InvalidPrime("factor_prime requires a rational prime");
  u64 l = ell;
  Int threeb = Int(3) * F.b();
  std::vector<PrimePower> fact;
  if (mpz_fdiv_ui(threeb.get_mpz_t(), l) != 0)
    fact = factor_via_polynomial(F, l);
  else
    fact = factor_via_algebra(F, l);

  // Verification: sum e*f = 3 and prod P^e = (ell).
  int efsum = 0;
  FracIdeal prod = whole_ring();
  for (const auto& pp : fact) {
    efsum += pp.exponent * pp.prime.residue_degree;
    prod = ideal_mul(F, prod, ideal_pow(F, pp.prime.lat,
                                        static_cast<unsigned long>(pp.exponent)));
  }
  FracIdeal ellO = principal_ideal(F, fe_int(Int(ell)));
  if (efsum != 3 || !ideal_eq(prod, ellO))
    throw InternalInconsistency("prime factorization failed verification");

  std::sort(fact.begin(), fact.end(), [](const PrimePower& x,
                                         const PrimePower& y) {
    if (x.prime.residue_degree != y.prime.residue_degree)
      return x.prime.residue_degree < y.prime.residue_degree;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        if (x.prime.lat.mat[r][c] != y.prime.lat.mat[r][c])
          return x.prime.lat.mat[r][c] < y.prime.lat.mat[r][c];
    return false;
  });
  return fact;
}

std::string ideal_to_string(const FracIdeal& I) {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < 3; ++r) {
    os << "(" << I.mat[r][0] << "," << I.mat[r][1] << "," << I.mat[r][2]
       << ")";
    if (r < 2) os << " ";
  }
  os << "]/" << I.denom;
  return os.str();
}

}  // namespace pmcf
