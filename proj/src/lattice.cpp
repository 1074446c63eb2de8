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

#include "pmcf/lattice.hpp"

#include <array>
#include <cmath>
#include <cstdlib>

#include "pmcf/embed.hpp"
#include "pmcf/errors.hpp"

namespace pmcf {
namespace {

using Vec3 = std::array<MpReal, 3>;

MpReal dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

// LLL reduction (delta = 0.99) of three row vectors in R^3, carried out in
// MpReal precision.  U is updated so that rows_out = U * rows_in.
void lll3(std::array<Vec3, 3>* rows, std::array<std::array<Int, 3>, 3>* U,
          mpfr_prec_t prec) {
  auto& b = *rows;
  const MpReal half = MpReal::from_double(0.5, prec);
  const MpReal delta = MpReal::from_double(0.99, prec);

  // Fresh Gram-Schmidt data (mu, squared norms of the orthogonalized
  // vectors); recomputed from scratch after each change -- the matrices are
  // only 3x3.
  Vec3 bstar[3] = {{MpReal(prec), MpReal(prec), MpReal(prec)},
                   {MpReal(prec), MpReal(prec), MpReal(prec)},
                   {MpReal(prec), MpReal(prec), MpReal(prec)}};
  MpReal mu[3][3] = {{MpReal(prec), MpReal(prec), MpReal(prec)},
                     {MpReal(prec), MpReal(prec), MpReal(prec)},
                     {MpReal(prec), MpReal(prec), MpReal(prec)}};
  MpReal Bs[3] = {MpReal(prec), MpReal(prec), MpReal(prec)};

  auto gso = [&]() {
    for (int i = 0; i < 3; ++i) {
      bstar[i] = b[i];
      for (int j = 0; j < i; ++j) {
        mu[i][j] = dot(b[i], bstar[j]) / Bs[j];
        for (int c = 0; c < 3; ++c)
          bstar[i][c] = bstar[i][c] - mu[i][j] * bstar[j][c];
      }
      Bs[i] = dot(bstar[i], bstar[i]);
      if (!(Bs[i] > MpReal::from_si(0, prec)))
        throw InternalInconsistency("degenerate lattice basis in LLL");
    }
  };

  auto size_reduce = [&](int k, int j) {
    if (!(r_abs(mu[k][j]) > half)) return;
    Int q = r_round(mu[k][j]);
    MpReal qr = MpReal::from_int(q, prec);
    for (int c = 0; c < 3; ++c) b[k][c] = b[k][c] - qr * b[j][c];
    for (int c = 0; c < 3; ++c) (*U)[k][c] -= q * (*U)[j][c];
  };

  gso();
  int k = 1;
  int guard = 0;
  while (k < 3) {
    if (++guard > 10000)
      throw InternalInconsistency("LLL failed to terminate");
    for (int j = k - 1; j >= 0; --j) {
      size_reduce(k, j);
      gso();
    }
    // Lovasz condition: B_k >= (delta - mu_{k,k-1}^2) B_{k-1}.
    MpReal rhs = (delta - mu[k][k - 1] * mu[k][k - 1]) * Bs[k - 1];
    if (!(Bs[k] < rhs)) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      std::swap((*U)[k], (*U)[k - 1]);
      gso();
      k = (k > 1) ? k - 1 : 1;
    }
  }
}

// Enumerates integer vectors z != 0 with z G z^T <= bound for the Gram
// matrix of the (already reduced) double-precision rows.
std::vector<std::array<long, 3>> fincke_pohst(const double rows[3][3],
                                              double bound) {
  double G[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      G[i][j] = rows[i][0] * rows[j][0] + rows[i][1] * rows[j][1] +
                rows[i][2] * rows[j][2];
  // Cholesky G = R^T R, R upper triangular.
  double R[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
  for (int i = 0; i < 3; ++i) {
    double s = G[i][i];
    for (int k = 0; k < i; ++k) s -= R[k][i] * R[k][i];
    if (s <= 0) throw InternalInconsistency("Cholesky failure after LLL");
    R[i][i] = std::sqrt(s);
    for (int j = i + 1; j < 3; ++j) {
      double t = G[i][j];
      for (int k = 0; k < i; ++k) t -= R[k][i] * R[k][j];
      R[i][j] = t / R[i][i];
    }
  }
  std::vector<std::array<long, 3>> out;
  // Q(z) = sum_i (R[i][i] z_i + sum_{j>i} R[i][j] z_j)^2.
  double lim2 = std::sqrt(bound) / R[2][2];
  long z2max = static_cast<long>(std::floor(lim2 + 1e-9));
  for (long z2 = -z2max; z2 <= z2max; ++z2) {
    double c2 = R[2][2] * static_cast<double>(z2);
    double rem2 = bound - c2 * c2;
    if (rem2 < 0) continue;
    double off1 = R[1][2] * static_cast<double>(z2);
    double lim1 = std::sqrt(rem2) / R[1][1];
    long z1lo = static_cast<long>(std::ceil(-lim1 - off1 / R[1][1] - 1e-9));
    long z1hi = static_cast<long>(std::floor(lim1 - off1 / R[1][1] + 1e-9));
    for (long z1 = z1lo; z1 <= z1hi; ++z1) {
      double c1 = R[1][1] * static_cast<double>(z1) + off1;
      double rem1 = rem2 - c1 * c1;
      if (rem1 < 0) continue;
      double off0 =
          R[0][1] * static_cast<double>(z1) + R[0][2] * static_cast<double>(z2);
      double lim0 = std::sqrt(rem1) / R[0][0];
      long z0lo = static_cast<long>(std::ceil(-lim0 - off0 / R[0][0] - 1e-9));
      long z0hi = static_cast<long>(std::floor(lim0 - off0 / R[0][0] + 1e-9));
      for (long z0 = z0lo; z0 <= z0hi; ++z0) {
        if (z0 == 0 && z1 == 0 && z2 == 0) continue;
        out.push_back({z0, z1, z2});
      }
    }
  }
  return out;
}

}  // namespace

std::vector<FieldElement> norm_elements_at(const CubicField& F,
                                           const FracIdeal& I, const Int& n,
                                           double tau) {
  if (n <= 0) throw InternalInconsistency("norm target must be positive");
  // Precision: must absorb the dynamic range e^(1.5|tau|) of the weights
  // plus the size of n and of the ideal basis entries.
  size_t nbits = mpz_sizeinbase(n.get_mpz_t(), 2);
  size_t mbits = 1;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      size_t s = mpz_sizeinbase(I.mat[r][c].get_mpz_t(), 2);
      mbits = std::max(mbits, s);
    }
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(
      192 + 3 * static_cast<long>(std::ceil(std::fabs(tau))) +
      2 * static_cast<long>(nbits) + 2 * static_cast<long>(mbits));

  // Embedding data.
  MpReal theta = real_theta(F, prec);
  MpReal thetap = theta * theta / MpReal::from_int(F.b(), prec);
  MpReal sqrt3 = r_sqrt(MpReal::from_si(3, prec));
  MpReal sqrt2 = r_sqrt(MpReal::from_si(2, prec));
  MpReal half = MpReal::from_double(0.5, prec);

  // Weights.
  MpReal n13 = r_cbrt(MpReal::from_int(n, prec));
  MpReal etau = r_exp(MpReal::from_double(tau, prec));
  MpReal u0 = n13 * etau;
  MpReal u1 = n13 / r_sqrt(etau);

  // Rows of the weighted lattice: coordinates
  //   (x0/u0, sqrt(2) Re x1 / u1, sqrt(2) Im x1 / u1).
  std::array<Vec3, 3> rows = {
      Vec3{MpReal(prec), MpReal(prec), MpReal(prec)},
      Vec3{MpReal(prec), MpReal(prec), MpReal(prec)},
      Vec3{MpReal(prec), MpReal(prec), MpReal(prec)}};
  for (int k = 0; k < 3; ++k) {
    FieldElement e{{I.mat[k][0], I.mat[k][1], I.mat[k][2]}, I.denom};
    UvwCoords c = to_uvw(e, F);
    MpReal den = MpReal::from_int(c.den, prec);
    MpReal u = MpReal::from_int(c.u, prec) / den;
    MpReal v = MpReal::from_int(c.v, prec) / den;
    MpReal w = MpReal::from_int(c.w, prec) / den;
    MpReal vt = v * theta;
    MpReal wt = w * thetap;
    MpReal x0 = u + vt + wt;
    MpReal re1 = u - half * (vt + wt);
    MpReal im1 = half * sqrt3 * (vt - wt);
    rows[k][0] = x0 / u0;
    rows[k][1] = sqrt2 * re1 / u1;
    rows[k][2] = sqrt2 * im1 / u1;
  }

  std::array<std::array<Int, 3>, 3> U = {
      std::array<Int, 3>{Int(1), Int(0), Int(0)},
      std::array<Int, 3>{Int(0), Int(1), Int(0)},
      std::array<Int, 3>{Int(0), Int(0), Int(1)}};
  lll3(&rows, &U, prec);

  double drows[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) drows[i][j] = rows[i][j].to_double();

  std::vector<FieldElement> hits;
  for (const auto& z : fincke_pohst(drows, kEllipsoidBound * (1 + 1e-9))) {
    // c_k = sum_i z_i U[i][k]; element coords = sum_k c_k * I.mat[k].
    std::array<Int, 3> ck{Int(0), Int(0), Int(0)};
    for (int k = 0; k < 3; ++k)
      ck[k] = Int(z[0]) * U[0][k] + Int(z[1]) * U[1][k] + Int(z[2]) * U[2][k];
    FieldElement x;
    for (int c = 0; c < 3; ++c)
      x.coords[c] = ck[0] * I.mat[0][c] + ck[1] * I.mat[1][c] + ck[2] * I.mat[2][c];
    x.denom = I.denom;
    Rational nr = norm(x, F);
    Int lhs = nr.num < 0 ? Int(-nr.num) : nr.num;
    if (lhs == n * nr.den) hits.push_back(x);
  }
  return hits;
}

std::optional<FieldElement> find_norm_element(const CubicField& F,
                                              const FracIdeal& I, const Int& n,
                                              double tau_lo, double tau_hi) {
  for (double tau = tau_lo;; tau += kTauStep) {
    std::vector<FieldElement> hits = norm_elements_at(F, I, n, tau);
    if (!hits.empty()) return hits.front();
    if (tau >= tau_hi) break;
  }
  return std::nullopt;
}

}  // namespace pmcf
