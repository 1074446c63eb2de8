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

#include "pmcf/dpf.hpp"

#include <algorithm>
#include <set>

#include "pmcf/errors.hpp"
#include "pmcf/hnf.hpp"

namespace pmcf {
namespace {

std::vector<int> mod3_vec(const std::vector<int>& v) {
  std::vector<int> r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = ((v[i] % 3) + 3) % 3;
  return r;
}

std::set<std::vector<int>> span_of(const std::vector<std::vector<int>>& gens,
                                   size_t t) {
  std::set<std::vector<int>> s;
  size_t n = gens.size();
  std::vector<int> c(n, 0);
  while (true) {
    std::vector<int> v(t, 0);
    for (size_t i = 0; i < n; ++i)
      for (size_t k = 0; k < t; ++k) v[k] += c[i] * gens[i][k];
    s.insert(mod3_vec(v));
    size_t pos = 0;
    while (pos < n && ++c[pos] == 3) c[pos++] = 0;
    if (pos == n) break;
  }
  return s;
}

}  // namespace

const char* coarse_type_name(CoarseType t) {
  switch (t) {
    case CoarseType::kAlpha:
      return "alpha";
    case CoarseType::kBeta:
      return "beta";
    case CoarseType::kGamma:
      return "gamma";
  }
  throw InternalInconsistency("unknown coarse type");
}

std::vector<Int> totally_ramified_primes(const CubicField& F) {
  std::set<Int> s;
  for (const auto& [ell, e] : factorize(F.d())) s.insert(ell);
  if (F.species() == Species::TypeII && F.d() % 3 != 0) s.insert(Int(3));
  return std::vector<Int>(s.begin(), s.end());
}

AmbiguousResult ambiguous_principal_subgroup(const CubicField& F,
                                             const UnitGroupL& units) {
  AmbiguousResult res;
  res.primes = totally_ramified_primes(F);
  const size_t t = res.primes.size();

  // The unique prime ideal above each totally ramified prime.
  std::vector<FracIdeal> ram(t);
  for (size_t i = 0; i < t; ++i) {
    if (!res.primes[i].fits_ulong_p())
      throw FactorizationIncomplete("ramified prime exceeds machine range");
    auto fac = factor_prime(F, res.primes[i].get_ui());
    if (fac.size() != 1 || fac[0].exponent != 3 ||
        fac[0].prime.residue_degree != 1)
      throw InternalInconsistency("expected totally ramified prime");
    ram[i] = fac[0].prime.lat;
  }

  std::set<std::vector<int>> refuted;
  std::set<std::vector<int>> span = span_of({}, t);
  std::vector<int> v(t, 0);
  while (true) {
    size_t pos = 0;
    while (pos < t && ++v[pos] == 3) v[pos++] = 0;
    if (pos == t) break;
    if (span.count(v)) continue;  // subgroup closure: already principal
    FracIdeal I = whole_ring();
    for (size_t i = 0; i < t; ++i)
      I = ideal_mul(F, I, ideal_pow(F, ram[i],
                                    static_cast<unsigned long>(v[i])));
    if (is_principal(F, units, I)) {
      res.basis.push_back(v);
      span = span_of(res.basis, t);
      for (const auto& r : refuted)
        if (span.count(r))
          throw InternalInconsistency(
              "non-principal class inside principal subgroup");
    } else {
      refuted.insert(v);
    }
  }

  // (theta) = prod_{l | a} P_l * prod_{l | b} P_l^2 is principal by
  // construction; its exponent vector must have been detected.
  std::vector<int> theta_vec(t, 0);
  for (size_t i = 0; i < t; ++i) {
    if (F.a() % res.primes[i] == 0)
      theta_vec[i] = 1;
    else if (F.b() % res.primes[i] == 0)
      theta_vec[i] = 2;
  }
  if (!span.count(theta_vec))
    throw InternalInconsistency("(theta) not detected as principal");

  res.dim = static_cast<int>(res.basis.size());
  if (res.dim < 1) throw InternalInconsistency("A-invariant below 1");
  return res;
}

DpfClassification classify_p3(const CubicField& F, const UnitGroupL& units,
                              const SaturationResult& sat) {
  DpfClassification out;
  out.ambiguous = ambiguous_principal_subgroup(F, units);
  out.saturation_index_exponent = sat.index_exponent;

  const int U = sat.u_invariant;
  const int A = out.ambiguous.dim;
  if (U != 0 && U != 1)
    throw InternalInconsistency("U-invariant outside {0,1}");
  const int P = U + 1;
  const int R = P - A;
  if (A < 1 || R < 0)
    throw InternalInconsistency("(U, A) outside the p=3 lattice");
  out.inv = CohomologyInvariants{U, P, A, R};
  if (A == 2)
    out.type = CoarseType::kBeta;
  else if (U == 1)
    out.type = CoarseType::kAlpha;
  else
    out.type = CoarseType::kGamma;
  return out;
}

std::vector<LatticeEntry> type_lattice(unsigned p) {
  switch (p) {
    case 3:
      return {{1, 1, "alpha", false, ""},
              {1, 2, "beta", false, ""},
              {0, 1, "gamma", false, ""}};
    case 5:
      return {{2, 1, "alpha", true, ""},
              {2, 2, "beta", true, ""},
              {2, 3, "gamma", false, ""},
              {1, 1, "delta", true, "zeta"},
              {1, 1, "zeta", true, "delta"},
              {1, 2, "epsilon", false, "eta"},
              {1, 2, "eta", false, "epsilon"},
              {0, 1, "theta", false, ""}};
    case 7:
      return {{3, 1, "alpha", true, ""},
              {3, 2, "beta", true, ""},
              {3, 3, "gamma", true, ""},
              {3, 4, "delta", false, ""},
              {2, 1, "epsilon", true, ""},
              {2, 2, "zeta", true, ""},
              {2, 3, "eta", false, ""},
              {1, 1, "theta", true, ""},
              {1, 2, "iota", false, ""},
              {0, 1, "kappa", false, ""}};
    default:
      throw InvalidPrime("type lattice defined for p in {3, 5, 7}");
  }
}

bool fine_marker(int u_invariant, int a_invariant) {
  return u_invariant + 1 - a_invariant > 0;
}

}  // namespace pmcf
