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

#include "pmcf/intmath.hpp"

#include <algorithm>
#include <numeric>

#include "pmcf/errors.hpp"

namespace pmcf {

bool is_prime(const Int& n) {
  if (n < 2) return false;
  // mpz_probab_prime_p performs BPSW plus Miller-Rabin rounds; with 40
  // rounds it is deterministic over the ranges handled here and has no
  // known counterexamples anywhere.
  int r = mpz_probab_prime_p(n.get_mpz_t(), 40);
  return r > 0;
}

namespace {

Int pollard_rho(const Int& n, std::uint64_t max_iters) {
  // Brent's variant with batched gcds.
  if (n % 2 == 0) return 2;
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0xC0FFEEuL);  // fixed seed: deterministic runs
  for (int attempt = 0; attempt < 64; ++attempt) {
    Int y = rng.get_z_range(n - 3) + 2;
    Int c = rng.get_z_range(n - 2) + 1;
    Int x = y, q = 1, g = 1, ys = y;
    std::uint64_t r = 1, iters = 0;
    const std::uint64_t batch = 128;
    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        std::uint64_t lim = std::min(batch, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        g = gcd(q, n);
        k += lim;
        iters += lim;
        if (iters > max_iters)
          throw FactorizationIncomplete(
              "pollard rho effort bound exceeded for n with " +
              std::to_string(mpz_sizeinbase(n.get_mpz_t(), 10)) + " digits");
      }
      r *= 2;
    }
    if (g == n) {
      // Backtrack one step at a time.
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        g = gcd(abs(x - ys), n);
      }
    }
    if (g != n) return g;
  }
  throw FactorizationIncomplete("pollard rho failed to split composite");
}

void factor_into(const Int& n, std::map<Int, unsigned>* out,
                 std::uint64_t max_rho_iters) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++(*out)[n];
    return;
  }
  Int d = pollard_rho(n, max_rho_iters);
  factor_into(d, out, max_rho_iters);
  factor_into(n / d, out, max_rho_iters);
}

}  // namespace

std::map<Int, unsigned> factorize(const Int& n, std::uint64_t max_rho_iters) {
  if (n <= 0) throw InternalInconsistency("factorize: nonpositive input");
  std::map<Int, unsigned> out;
  Int m = n;
  for (std::uint64_t p = 2; p <= 1'000'000 && p * p <= m; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      ++out[Int(p)];
      m /= static_cast<unsigned long>(p);
    }
  }
  if (m > 1) {
    if (m < Int("1000000000000")) {  // below (10^6)^2: must be prime
      ++out[m];
    } else {
      factor_into(m, &out, max_rho_iters);
    }
  }
  return out;
}

std::map<std::uint64_t, unsigned> factorize_u64(std::uint64_t n) {
  auto f = factorize(Int(static_cast<unsigned long>(n)));
  std::map<std::uint64_t, unsigned> out;
  for (const auto& [p, e] : f) out[p.get_ui()] = e;
  return out;
}

PthFreeResult strip_pth_powers(const Int& n, unsigned p) {
  auto f = factorize(n);
  Int pfree = 1, root = 1;
  for (const auto& [q, e] : f) {
    unsigned r = e % p;
    for (unsigned i = 0; i < r; ++i) pfree *= q;
    unsigned k = e / p;
    for (unsigned i = 0; i < k; ++i) root *= q;
  }
  return {pfree, root};
}

SquareFreeSplit cubefree_to_ab(const Int& n) {
  auto f = factorize(n);
  Int a = 1, b = 1;
  for (const auto& [q, e] : f) {
    if (e == 1) {
      a *= q;
    } else if (e == 2) {
      b *= q;
    } else {
      throw InternalInconsistency("cubefree_to_ab: input not cube-free");
    }
  }
  return {a, b};
}

std::uint64_t powmod_u64(std::uint64_t x, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 r = 1, b = x % m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

unsigned multiplicative_order(std::uint64_t x, std::uint64_t m) {
  std::uint64_t v = x % m;
  if (std::gcd(v, m) != 1)
    throw InternalInconsistency("multiplicative_order: gcd != 1");
  std::uint64_t cur = v % m;
  unsigned f = 1;
  while (cur != 1) {
    cur = static_cast<std::uint64_t>(
        (unsigned __int128)cur * v % m);
    ++f;
    if (f > m) throw InternalInconsistency("multiplicative_order overflow");
  }
  return f;
}

std::vector<std::uint64_t> primes_below(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit <= 2) return out;
  std::vector<bool> sieve(limit, true);
  sieve[0] = sieve[1] = false;
  for (std::uint64_t i = 2; i * i < limit; ++i)
    if (sieve[i])
      for (std::uint64_t j = i * i; j < limit; j += i) sieve[j] = false;
  for (std::uint64_t i = 2; i < limit; ++i)
    if (sieve[i]) out.push_back(i);
  return out;
}

Int isqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_power(const Int& n, unsigned p, Int* root_out) {
  if (n < 1) return false;
  Int r;
  int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), p);
  if (root_out) *root_out = r;
  return exact != 0;
}

}  // namespace pmcf
