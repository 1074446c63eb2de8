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

#include "pmcf/saturation.hpp"

#include <cmath>
#include <set>

#include "pmcf/embed.hpp"
#include "pmcf/errors.hpp"

namespace pmcf {
namespace {

Int i_ceil_int(const MpReal& x) { return -r_floor(-x); }

// Numeric context for one precision level.
struct EmbedCtx {
  mpfr_prec_t prec;
  IComplex omega[3];   // omega^0, omega^1, omega^2 as enclosures
  IComplex theta0;     // real cube root of d (imaginary part exactly 0)
  IComplex thetap0;    // theta0^2 / b
  IReal sqrt3;

  EmbedCtx(const CubicField& F, mpfr_prec_t p) : prec(p) {
    sqrt3 = i_sqrt(i_from_int(Int(3), p));
    IReal half = i_from_ratio(Int(1), Int(2), p);
    IReal mhalf = i_from_ratio(Int(-1), Int(2), p);
    omega[0] = ic_from_int(Int(1), Int(0), p);
    omega[1] = IComplex{mhalf, i_mul(sqrt3, half)};
    omega[2] = IComplex{mhalf, i_neg(i_mul(sqrt3, half))};
    IReal t = i_cbrt(i_from_int(F.d(), p));
    theta0 = IComplex{t, i_from_int(Int(0), p)};
    thetap0 = IComplex{i_div(i_mul(t, t), i_from_int(F.b(), p)),
                       i_from_int(Int(0), p)};
  }

  IComplex eis(const Eis& e) const {
    IComplex re = ic_from_int(e.p, Int(0), prec);
    IComplex qi = ic_scale(omega[1], i_from_int(e.q, prec));
    return ic_add(re, qi);
  }

  // iota_m(v): omega fixed, theta -> omega^m theta0.
  IComplex embed(const SexticElement& v, int m) const {
    IComplex t = ic_mul(omega[m % 3], theta0);
    IComplex tp = ic_mul(omega[(2 * m) % 3], thetap0);
    IComplex num = ic_add(ic_add(eis(v.A), ic_mul(eis(v.B), t)),
                          ic_mul(eis(v.C), tp));
    IReal den = i_from_int(v.den, prec);
    return IComplex{i_div(num.re, den), i_div(num.im, den)};
  }
};

enum class Recog { kCandidates, kRefuted, kWide };

// Recognizes z9 (an enclosure of 9 times an Eisenstein rational with
// denominator dividing 9) as p + q*omega with p, q integers.
Recog recognize_eis9(const EmbedCtx& ctx, const IComplex& z9,
                     std::vector<Eis>* out) {
  IReal q = i_div(i_mul(z9.im, i_from_int(Int(2), ctx.prec)), ctx.sqrt3);
  IReal p = i_add(z9.re, i_div(z9.im, ctx.sqrt3));
  if (i_width(p) > 0.9 || i_width(q) > 0.9) return Recog::kWide;
  Int plo = i_ceil_int(p.lo), phi = r_floor(p.hi);
  Int qlo = i_ceil_int(q.lo), qhi = r_floor(q.hi);
  if (plo > phi || qlo > qhi) return Recog::kRefuted;
  out->clear();
  for (Int pp = plo; pp <= phi; ++pp)
    for (Int qq = qlo; qq <= qhi; ++qq) out->push_back(Eis{pp, qq});
  return Recog::kCandidates;
}

enum class ClassOutcome { kRoot, kRefuted, kWide };

// Tests whether v is a cube in N at one precision level.
ClassOutcome test_cube_class(const CubicField& F, const SexticElement& v,
                             const EmbedCtx& ctx, SexticElement* root_out) {
  IComplex vm[3] = {ctx.embed(v, 0), ctx.embed(v, 1), ctx.embed(v, 2)};
  IComplex y[3] = {ic_principal_cbrt(vm[0]), ic_principal_cbrt(vm[1]),
                   ic_principal_cbrt(vm[2])};
  IReal three = i_from_int(Int(3), ctx.prec);

  bool saw_wide = false;
  for (int c1 = 0; c1 < 3; ++c1) {
    for (int c2 = 0; c2 < 3; ++c2) {
      IComplex y1 = ic_mul(y[1], ctx.omega[c1]);
      IComplex y2 = ic_mul(y[2], ctx.omega[c2]);
      // 9*A = 3(y0 + y1 + y2); 9*B = 3(y0 + w^2 y1 + w y2)/theta0;
      // 9*C = 3(y0 + w y1 + w^2 y2)/theta0'.
      IComplex sA = ic_add(ic_add(y[0], y1), y2);
      IComplex sB = ic_add(ic_add(y[0], ic_mul(ctx.omega[2], y1)),
                           ic_mul(ctx.omega[1], y2));
      IComplex sC = ic_add(ic_add(y[0], ic_mul(ctx.omega[1], y1)),
                           ic_mul(ctx.omega[2], y2));
      IComplex zA = ic_scale(sA, three);
      IReal t0 = ctx.theta0.re, tp0 = ctx.thetap0.re;
      IComplex zB{i_div(i_mul(sB.re, three), t0), i_div(i_mul(sB.im, three), t0)};
      IComplex zC{i_div(i_mul(sC.re, three), tp0),
                  i_div(i_mul(sC.im, three), tp0)};

      std::vector<Eis> ca, cb, cc;
      Recog ra = recognize_eis9(ctx, zA, &ca);
      Recog rb = recognize_eis9(ctx, zB, &cb);
      Recog rc = recognize_eis9(ctx, zC, &cc);
      if (ra == Recog::kWide || rb == Recog::kWide || rc == Recog::kWide) {
        saw_wide = true;
        continue;
      }
      if (ra == Recog::kRefuted || rb == Recog::kRefuted ||
          rc == Recog::kRefuted)
        continue;
      for (const Eis& A : ca) {
        for (const Eis& B : cb) {
          for (const Eis& C : cc) {
            SexticElement x{A, B, C, Int(9)};
            // Normalize representation before exact comparison.
            SexticElement cube = sx_pow(F, x, 3);
            if (cube == v) {
              *root_out = x;
              return ClassOutcome::kRoot;
            }
          }
        }
      }
      // All integer candidates inside the certified enclosures failed the
      // exact check: this branch assignment admits no root.
    }
  }
  return saw_wide ? ClassOutcome::kWide : ClassOutcome::kRefuted;
}

struct CorePass {
  std::vector<SexticElement> roots;
  std::vector<std::array<int, 3>> classes;  // (t, j, k)
  std::set<std::array<int, 3>> refuted;
};

std::array<int, 3> mod3(const std::array<int, 3>& v) {
  return {((v[0] % 3) + 3) % 3, ((v[1] % 3) + 3) % 3, ((v[2] % 3) + 3) % 3};
}

std::set<std::array<int, 3>> span_of(
    const std::vector<std::array<int, 3>>& gens) {
  std::set<std::array<int, 3>> s;
  int n = static_cast<int>(gens.size());
  std::vector<int> c(static_cast<size_t>(n), 0);
  while (true) {
    std::array<int, 3> v{0, 0, 0};
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < 3; ++k) v[k] += c[static_cast<size_t>(i)] * gens[i][k];
    s.insert(mod3(v));
    int pos = 0;
    while (pos < n && ++c[static_cast<size_t>(pos)] == 3) c[static_cast<size_t>(pos++)] = 0;
    if (pos == n) break;
  }
  if (n == 0) s.insert({0, 0, 0});
  return s;
}

// One full saturation pass over V = <zeta_6, u1, u2>.
CorePass saturate_core(const CubicField& F, const SexticElement& u1,
                       const SexticElement& u2, double log_bound) {
  CorePass pass;
  const SexticElement zeta3 = sx_from_mu6(2);

  mpfr_prec_t prec0 = static_cast<mpfr_prec_t>(
      192 + static_cast<long>(std::ceil(log_bound / std::log(2.0))));

  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      if (j == 0 && k == 0) continue;  // pure torsion classes are never cubes
      for (int t = 0; t < 3; ++t) {
        std::array<int, 3> cls{t, j, k};
        if (span_of(pass.classes).count(cls)) continue;  // already a cube
        SexticElement v = sx_mul(
            F, sx_pow(F, zeta3, static_cast<unsigned long>(t)),
            sx_mul(F, sx_pow(F, u1, static_cast<unsigned long>(j)),
                   sx_pow(F, u2, static_cast<unsigned long>(k))));
        bool settled = false;
        for (int attempt = 0; attempt < 5 && !settled; ++attempt) {
          EmbedCtx ctx(F, prec0 << attempt);
          SexticElement root;
          ClassOutcome oc;
          try {
            oc = test_cube_class(F, v, ctx, &root);
          } catch (const PrecisionExhausted&) {
            continue;  // enclosure too coarse; retry at higher precision
          }
          if (oc == ClassOutcome::kWide) continue;
          settled = true;
          if (oc == ClassOutcome::kRoot) {
            if (pass.refuted.count(cls) || pass.classes.size() >= 3)
              throw InternalInconsistency("saturation closure violated");
            pass.roots.push_back(root);
            pass.classes.push_back(cls);
            auto sp = span_of(pass.classes);
            // No nonzero pure-torsion class may lie in the cube span: that
            // would force a ninth root of unity into N.
            for (int tt = 1; tt < 3; ++tt)
              if (sp.count({tt, 0, 0}))
                throw InternalInconsistency(
                    "pure torsion class became a cube class");
            // A previously refuted class must never enter the new span.
            for (const auto& r : pass.refuted)
              if (sp.count(r))
                throw InternalInconsistency(
                    "refuted class became a cube class");
          } else {
            pass.refuted.insert(cls);
          }
        }
        if (!settled)
          throw PrecisionExhausted(
              "cube class test failed at maximal precision");
      }
    }
  }
  if (pass.classes.size() > 2)
    throw InternalInconsistency("saturation index exceeds 9");
  return pass;
}

}  // namespace

SaturationResult cube_saturate_units(const CubicField& F,
                                     const UnitGroupL& units) {
  SexticElement eps = sx_from_cubic(F, units.fundamental);
  SexticElement seps = sx_sigma(eps);
  double log_bound = 4.0 * units.regulator + 16.0;

  CorePass pass = saturate_core(F, eps, seps, log_bound);

  SaturationResult res;
  res.index_exponent = static_cast<int>(pass.classes.size());
  res.adjoined = pass.roots;
  res.adjoined_classes = pass.classes;
  res.u_invariant = 1;
  for (const SexticElement& g : pass.roots) {
    EisRational nrm = rel_norm_K(F, g);
    if (nrm.den != 1)
      throw InternalInconsistency("unit relative norm has a denominator");
    int ord = mu6_order(nrm.num);
    if (ord == 0)
      throw InternalInconsistency("unit relative norm is not a root of unity");
    if (ord % 3 == 0) res.u_invariant = 0;
  }
  return res;
}

bool saturation_idempotent(const CubicField& F, const UnitGroupL& units,
                           const SaturationResult& sat) {
  SexticElement eps = sx_from_cubic(F, units.fundamental);
  SexticElement seps = sx_sigma(eps);

  // Basis of the free part of the saturated unit group: HNF of the
  // exponent lattice spanned by 3*(1,0), 3*(0,1) and the adjoined classes
  // (j, k), all in units of one third; the recorded transform expresses
  // the basis as words in eps, sigma(eps) and the adjoined roots.
  std::vector<std::array<Int, 2>> rows = {{Int(3), Int(0)}, {Int(0), Int(3)}};
  std::vector<SexticElement> srcs = {eps, seps};
  for (size_t i = 0; i < sat.adjoined.size(); ++i) {
    rows.push_back({Int(sat.adjoined_classes[i][1]),
                    Int(sat.adjoined_classes[i][2])});
    srcs.push_back(sat.adjoined[i]);
  }
  size_t n = rows.size();
  std::vector<std::vector<Int>> trans(n, std::vector<Int>(n, Int(0)));
  for (size_t i = 0; i < n; ++i) trans[i][i] = 1;

  size_t top = 0;
  for (int col = 0; col < 2 && top < n; ++col) {
    size_t sel = SIZE_MAX;
    for (size_t r = top; r < n; ++r)
      if (rows[r][col] != 0) {
        sel = r;
        break;
      }
    if (sel == SIZE_MAX) continue;
    std::swap(rows[top], rows[sel]);
    std::swap(trans[top], trans[sel]);
    for (size_t r = top + 1; r < n; ++r) {
      while (rows[r][col] != 0) {
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                   rows[top][col].get_mpz_t(), rows[r][col].get_mpz_t());
        Int u = rows[top][col] / g;
        Int v = rows[r][col] / g;
        std::array<Int, 2> ntop, nr;
        for (int c = 0; c < 2; ++c) {
          ntop[c] = s * rows[top][c] + t * rows[r][c];
          nr[c] = u * rows[r][c] - v * rows[top][c];
        }
        rows[top] = ntop;
        rows[r] = nr;
        std::vector<Int> ttop(n), tr(n);
        for (size_t c = 0; c < n; ++c) {
          ttop[c] = s * trans[top][c] + t * trans[r][c];
          tr[c] = u * trans[r][c] - v * trans[top][c];
        }
        trans[top] = ttop;
        trans[r] = tr;
      }
    }
    ++top;
  }
  if (top != 2)
    throw InternalInconsistency("unit exponent lattice not of rank 2");

  auto build = [&](size_t row) {
    SexticElement h = sx_one();
    for (size_t srci = 0; srci < n; ++srci) {
      Int e = trans[row][srci];
      if (e == 0) continue;
      bool invert = e < 0;
      unsigned long mag = mpz_get_ui(Int(invert ? Int(-e) : e).get_mpz_t());
      SexticElement base = invert ? sx_inverse(F, srcs[srci]) : srcs[srci];
      h = sx_mul(F, h, sx_pow(F, base, mag));
    }
    return h;
  };
  SexticElement h1 = build(0);
  SexticElement h2 = build(1);

  CorePass second = saturate_core(F, h1, h2, 16.0 * units.regulator + 32.0);
  return second.classes.empty();
}

}  // namespace pmcf
