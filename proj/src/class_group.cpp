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

#include "pmcf/class_group.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "pmcf/embed.hpp"
#include "pmcf/errors.hpp"
#include "pmcf/lattice.hpp"

namespace pmcf {

Int minkowski_bound(const CubicField& F) {
  // ceil((2/9)(4/pi) sqrt(|disc|)), every step rounded toward +inf.
  Int ad = F.discriminant < 0 ? Int(-F.discriminant) : F.discriminant;
  mpfr_t s, pi, t;
  mpfr_init2(s, 128);
  mpfr_init2(pi, 128);
  mpfr_init2(t, 128);
  mpfr_set_z(s, ad.get_mpz_t(), MPFR_RNDU);
  mpfr_sqrt(s, s, MPFR_RNDU);
  mpfr_mul_ui(s, s, 8, MPFR_RNDU);
  mpfr_const_pi(pi, MPFR_RNDD);
  mpfr_mul_ui(pi, pi, 9, MPFR_RNDD);
  mpfr_div(t, s, pi, MPFR_RNDU);
  mpfr_ceil(t, t);
  Int mb;
  mpfr_get_z(mb.get_mpz_t(), t, MPFR_RNDU);
  mpfr_clear(s);
  mpfr_clear(pi);
  mpfr_clear(t);
  return mb;
}

std::optional<FieldElement> principal_generator(const CubicField& F,
                                                const UnitGroupL& units,
                                                const FracIdeal& I) {
  Int n = integral_ideal_norm(I);
  if (n == 0) throw InternalInconsistency("principality test on zero ideal");
  // Any generator can be unit-translated into log height [-R/2, R/2];
  // cover that interval plus one step of margin, walking outward from 0.
  double limit = units.regulator / 2 + kTauStep;
  for (double mag = 0.0; mag <= limit; mag += kTauStep) {
    for (int sign = 0; sign < (mag == 0.0 ? 1 : 2); ++sign) {
      double tau = sign == 0 ? mag : -mag;
      std::vector<FieldElement> hits = norm_elements_at(F, I, n, tau);
      if (!hits.empty()) return hits.front();
    }
  }
  return std::nullopt;
}

bool is_principal(const CubicField& F, const UnitGroupL& units,
                  const FracIdeal& I) {
  return principal_generator(F, units, I).has_value();
}

namespace {

using Row = std::vector<Int>;

// Row HNF over Z for general width; returns echelon rows (pivot columns
// strictly increasing, positive pivots, entries above pivots reduced).
std::vector<Row> echelon(std::vector<Row> rows, int m) {
  std::vector<Row> out;
  int pivot_col = 0;
  size_t top = 0;
  while (pivot_col < m) {
    size_t found = SIZE_MAX;
    for (size_t r = top; r < rows.size(); ++r)
      if (rows[r][pivot_col] != 0) {
        found = r;
        break;
      }
    if (found == SIZE_MAX) {
      ++pivot_col;
      continue;
    }
    std::swap(rows[top], rows[found]);
    for (size_t r = top + 1; r < rows.size(); ++r) {
      while (rows[r][pivot_col] != 0) {
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                   rows[top][pivot_col].get_mpz_t(),
                   rows[r][pivot_col].get_mpz_t());
        Int u = rows[top][pivot_col] / g;
        Int v = rows[r][pivot_col] / g;
        for (int c = 0; c < m; ++c) {
          Int np = s * rows[top][c] + t * rows[r][c];
          Int nr = u * rows[r][c] - v * rows[top][c];
          rows[top][c] = np;
          rows[r][c] = nr;
        }
      }
    }
    if (rows[top][pivot_col] < 0)
      for (int c = 0; c < m; ++c) rows[top][c] = -rows[top][c];
    ++top;
    ++pivot_col;
  }
  rows.resize(top);
  // Reduce entries above each pivot.
  for (size_t i = 0; i < rows.size(); ++i) {
    int pc = 0;
    while (pc < m && rows[i][pc] == 0) ++pc;
    for (size_t j = 0; j < i; ++j) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), rows[j][pc].get_mpz_t(),
                 rows[i][pc].get_mpz_t());
      if (q != 0)
        for (int c = 0; c < m; ++c) rows[j][c] -= q * rows[i][c];
    }
  }
  return rows;
}

bool in_row_lattice(const std::vector<Row>& ech, Row v, int m) {
  for (const Row& r : ech) {
    int pc = 0;
    while (pc < m && r[pc] == 0) ++pc;
    if (pc == m) continue;
    if (v[pc] == 0) continue;
    if (v[pc] % r[pc] != 0) return false;
    Int q = v[pc] / r[pc];
    for (int c = pc; c < m; ++c) v[c] -= q * r[c];
  }
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

bool full_rank(const std::vector<Row>& ech, int m) {
  if (static_cast<int>(ech.size()) != m) return false;
  for (int i = 0; i < m; ++i)
    if (ech[i][i] == 0) return false;
  return true;
}

std::vector<Int> sorted_divisors(const Int& n) {
  std::map<Int, unsigned> f = factorize(n);
  std::vector<Int> divs{Int(1)};
  for (const auto& [p, e] : f) {
    size_t sz = divs.size();
    Int pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

int rank_mod3(const std::vector<Row>& rows, int m) {
  std::vector<std::vector<int>> a;
  for (const Row& r : rows) {
    std::vector<int> v(m);
    for (int c = 0; c < m; ++c)
      v[c] = static_cast<int>(mpz_fdiv_ui(r[c].get_mpz_t(), 3));
    a.push_back(std::move(v));
  }
  int rank = 0;
  for (int col = 0; col < m && rank < static_cast<int>(a.size()); ++col) {
    int sel = -1;
    for (int r = rank; r < static_cast<int>(a.size()); ++r)
      if (a[r][col] != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(a[rank], a[sel]);
    int inv = (a[rank][col] == 1) ? 1 : 2;  // inverse mod 3
    for (int c = 0; c < m; ++c) a[rank][c] = a[rank][c] * inv % 3;
    for (int r = 0; r < static_cast<int>(a.size()); ++r) {
      if (r == rank || a[r][col] == 0) continue;
      int f = a[r][col];
      for (int c = 0; c < m; ++c)
        a[r][c] = (a[r][c] + (3 - f) * a[rank][c]) % 3;
    }
    ++rank;
  }
  return rank;
}

// Truncated Euler product estimate of h (used only as a sanity ceiling).
double analytic_h_estimate(const CubicField& F, double regulator) {
  double logF = 0.0;
  Int ab3 = Int(3) * F.a() * F.b();
  for (std::uint64_t ell : primes_below(100000)) {
    double le = static_cast<double>(ell);
    double local;
    if (mpz_fdiv_ui(ab3.get_mpz_t(), ell) == 0) {
      // ell | 3ab covers every prime dividing 3d.
      std::vector<PrimePower> fact = factor_prime(F, ell);
      double denom = 1.0;
      for (const auto& pp : fact)
        denom *= 1.0 - std::pow(le, -pp.prime.residue_degree);
      local = (1.0 - 1.0 / le) / denom;
    } else if (ell % 3 == 2) {
      local = (1.0 - 1.0 / le) /
              ((1.0 - 1.0 / le) * (1.0 - 1.0 / (le * le)));
    } else {
      std::uint64_t dbar = mpz_fdiv_ui(F.d().get_mpz_t(), ell);
      bool cube = powmod_u64(dbar, (ell - 1) / 3, ell) == 1;
      if (cube) {
        double t = 1.0 - 1.0 / le;
        local = 1.0 / (t * t);
      } else {
        local = (1.0 - 1.0 / le) / (1.0 - 1.0 / (le * le * le));
      }
    }
    logF += std::log(local);
  }
  double absdisc = std::fabs(F.discriminant.get_d());
  return std::sqrt(absdisc) * std::exp(logF) /
         (2.0 * M_PI * regulator);
}

struct Base {
  std::vector<PrimeIdeal> primes;
  // Cached powers primes[i]^k at powers[i][k] (k >= 0).
  std::vector<std::vector<FracIdeal>> powers;

  const FracIdeal& power(const CubicField& F, size_t i, unsigned long k) {
    auto& cache = powers[i];
    while (cache.size() <= k)
      cache.push_back(ideal_mul(F, cache.back(), primes[i].lat));
    return cache[k];
  }
};

}  // namespace

ClassGroupResult class_group(const CubicField& F, const UnitGroupL& units) {
  const Int MB = minkowski_bound(F);
  ClassGroupResult res;
  res.minkowski_bound = MB;

  // 1. Factor all primes up to MB; base = prime ideals of norm <= MB.
  Base base;
  std::vector<Row> relations;
  struct EllInfo {
    std::vector<int> base_idx;  // -1 when the prime is outside the base
    std::vector<int> exps;
    std::vector<int> fs;
  };
  std::map<unsigned long, EllInfo> by_ell;

  unsigned long mb_ul = mpz_get_ui(MB.get_mpz_t());
  for (std::uint64_t ell : primes_below(mb_ul + 1)) {
    std::vector<PrimePower> fact = factor_prime(F, ell);
    EllInfo info;
    for (const auto& pp : fact) {
      Int nrm = 1;
      for (int q = 0; q < pp.prime.residue_degree; ++q)
        nrm *= Int(static_cast<unsigned long>(ell));
      int idx = -1;
      if (nrm <= MB) {
        idx = static_cast<int>(base.primes.size());
        base.primes.push_back(pp.prime);
      }
      info.base_idx.push_back(idx);
      info.exps.push_back(pp.exponent);
      info.fs.push_back(pp.prime.residue_degree);
    }
    by_ell[static_cast<unsigned long>(ell)] = std::move(info);
  }
  const int m = static_cast<int>(base.primes.size());
  base.powers.assign(base.primes.size(), {});
  for (auto& cache : base.powers) cache.push_back(whole_ring());

  if (m == 0) {
    res.h = 1;
    res.three_rank = 0;
    return res;
  }

  // 2a. Full-prime relations (ell) = prod P^e when every factor is in base.
  for (const auto& [ell, info] : by_ell) {
    bool all = true;
    for (int idx : info.base_idx) all = all && idx >= 0;
    if (!all) continue;
    Row v(m, Int(0));
    for (size_t k = 0; k < info.base_idx.size(); ++k)
      v[info.base_idx[k]] += info.exps[k];
    relations.push_back(std::move(v));
  }

  // 2b. Relations from factoring small elements of O_L.
  const long kBox = 4;
  for (long c0 = 0; c0 <= kBox; ++c0) {
    for (long c1 = -kBox; c1 <= kBox; ++c1) {
      for (long c2 = -kBox; c2 <= kBox; ++c2) {
        if (c0 == 0 && (c1 < 0 || (c1 == 0 && c2 <= 0))) continue;
        Int g = gcd(gcd(Int(c0), Int(c1)), Int(c2));
        if (g > 1) continue;
        FieldElement x{{Int(c0), Int(c1), Int(c2)}, Int(1)};
        Rational nr = norm(x, F);
        Int n = nr.num < 0 ? Int(-nr.num) : nr.num;
        if (n == 0 || nr.den != 1) continue;
        std::map<Int, unsigned> nf;
        try {
          nf = factorize(n);
        } catch (const FactorizationIncomplete&) {
          continue;
        }
        Row v(m, Int(0));
        bool usable = true;
        for (const auto& [p, e] : nf) {
          if (p > MB) {
            usable = false;
            break;
          }
          unsigned long ell = mpz_get_ui(p.get_mpz_t());
          const EllInfo& info = by_ell.at(ell);
          int accounted = 0;
          for (size_t k = 0; k < info.base_idx.size() && usable; ++k) {
            int idx = info.base_idx[k];
            if (idx < 0) continue;
            // v_P(x): largest j with x in P^j.
            int j = 0;
            while (ideal_contains(base.power(F, static_cast<size_t>(idx),
                                             static_cast<unsigned long>(j + 1)),
                                  x))
              ++j;
            v[idx] += j;
            accounted += j * info.fs[k];
          }
          if (!usable) break;
          int residual = static_cast<int>(e) - accounted;
          if (residual != 0) {
            // Valuation mass at primes outside the base.  Safe to discard
            // only when the missing prime is the inert (ell), which is
            // principal; otherwise skip this element.
            bool inert =
                info.base_idx.size() == 1 && info.fs[0] == 3 &&
                info.base_idx[0] < 0;
            if (!(inert && residual % 3 == 0)) usable = false;
          }
        }
        if (usable) relations.push_back(std::move(v));
      }
    }
  }

  const double h_ceiling =
      3.0 * analytic_h_estimate(F, units.regulator) + 10.0;

  // 2c. Exact class order of every base prime.
  std::vector<Row> ech = echelon(relations, m);
  std::vector<Int> orders(base.primes.size(), Int(0));
  for (int i = 0; i < m; ++i) {
    std::vector<Int> candidates;
    if (full_rank(ech, m)) {
      // Order in the candidate quotient: smallest divisor k of h_cand with
      // k*e_i in the lattice.  The true order divides it.
      Int hq = 1;
      for (int j = 0; j < m; ++j) hq *= ech[j][j];
      Int cand = 0;
      for (const Int& k : sorted_divisors(hq)) {
        Row v(m, Int(0));
        v[i] = k;
        if (in_row_lattice(ech, v, m)) {
          cand = k;
          break;
        }
      }
      if (cand == 0)
        throw InternalInconsistency("class order candidate not found");
      candidates = sorted_divisors(cand);
    } else {
      for (long k = 1; k <= static_cast<long>(h_ceiling) + 1; ++k)
        candidates.push_back(Int(k));
    }
    bool done = false;
    for (const Int& k : candidates) {
      unsigned long ku = mpz_get_ui(k.get_mpz_t());
      if (is_principal(F, units, base.power(F, static_cast<size_t>(i), ku))) {
        orders[i] = k;
        Row v(m, Int(0));
        v[i] = k;
        relations.push_back(std::move(v));
        ech = echelon(relations, m);
        done = true;
        break;
      }
    }
    if (!done)
      throw RelationSearchIncomplete(
          "class order of a base prime exceeds the analytic ceiling");
  }

  if (!full_rank(ech, m))
    throw InternalInconsistency("relation lattice not of full rank");

  // 3. Verify every nonzero candidate class non-principal; any principal
  // hit becomes a new relation and the sweep restarts.
  for (bool again = true; again;) {
    again = false;
    Int hq = 1;
    for (int j = 0; j < m; ++j) hq *= ech[j][j];
    if (hq > Int(static_cast<long>(h_ceiling)) + 1)
      throw RelationSearchIncomplete(
          "candidate class number exceeds the analytic ceiling");
    std::vector<unsigned long> diag(m);
    for (int j = 0; j < m; ++j) diag[j] = mpz_get_ui(ech[j][j].get_mpz_t());
    std::vector<unsigned long> x(m, 0);
    while (true) {
      // Advance the mixed-radix counter.
      int pos = 0;
      while (pos < m) {
        if (++x[pos] < diag[pos]) break;
        x[pos] = 0;
        ++pos;
      }
      if (pos == m) break;  // wrapped: all classes visited
      FracIdeal I = whole_ring();
      for (int j = 0; j < m; ++j)
        if (x[j] > 0)
          I = ideal_mul(F, I, base.power(F, static_cast<size_t>(j), x[j]));
      if (is_principal(F, units, I)) {
        Row v(m, Int(0));
        for (int j = 0; j < m; ++j) v[j] = x[j];
        relations.push_back(std::move(v));
        ech = echelon(relations, m);
        again = true;
        break;
      }
    }
  }

  Int h = 1;
  for (int j = 0; j < m; ++j) h *= ech[j][j];
  res.h = h;
  res.three_rank = m - rank_mod3(ech, m);

  // Final orders in the verified group.
  for (int i = 0; i < m; ++i) {
    Int ord = 0;
    for (const Int& k : sorted_divisors(h)) {
      Row v(m, Int(0));
      v[i] = k;
      if (in_row_lattice(ech, v, m)) {
        ord = k;
        break;
      }
    }
    if (ord == 0) throw InternalInconsistency("class order not found");
    if (ord > 1) res.generators.emplace_back(base.primes[i], ord);
  }
  return res;
}

}  // namespace pmcf
