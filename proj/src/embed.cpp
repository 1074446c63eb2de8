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

#include "pmcf/embed.hpp"

#include <algorithm>

#include "pmcf/errors.hpp"

namespace pmcf {

MpReal::MpReal(mpfr_prec_t prec) { mpfr_init2(x_, prec); mpfr_set_zero(x_, 1); }
MpReal::MpReal(const MpReal& o) {
  mpfr_init2(x_, mpfr_get_prec(o.x_));
  mpfr_set(x_, o.x_, MPFR_RNDN);
}
MpReal::MpReal(MpReal&& o) noexcept {
  mpfr_init2(x_, mpfr_get_prec(o.x_));
  mpfr_swap(x_, o.x_);
}
MpReal& MpReal::operator=(const MpReal& o) {
  if (this != &o) {
    mpfr_set_prec(x_, mpfr_get_prec(o.x_));
    mpfr_set(x_, o.x_, MPFR_RNDN);
  }
  return *this;
}
MpReal& MpReal::operator=(MpReal&& o) noexcept {
  if (this != &o) mpfr_swap(x_, o.x_);
  return *this;
}
MpReal::~MpReal() { mpfr_clear(x_); }

MpReal MpReal::from_int(const Int& n, mpfr_prec_t prec) {
  MpReal r(prec);
  mpfr_set_z(r.x_, n.get_mpz_t(), MPFR_RNDN);
  return r;
}
MpReal MpReal::from_si(long n, mpfr_prec_t prec) {
  MpReal r(prec);
  mpfr_set_si(r.x_, n, MPFR_RNDN);
  return r;
}
MpReal MpReal::from_double(double x, mpfr_prec_t prec) {
  MpReal r(prec);
  mpfr_set_d(r.x_, x, MPFR_RNDN);
  return r;
}

namespace {
mpfr_prec_t op_prec(const MpReal& a, const MpReal& b) {
  return std::max(a.prec(), b.prec());
}
}  // namespace

MpReal operator+(const MpReal& a, const MpReal& b) {
  MpReal r(op_prec(a, b));
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
MpReal operator-(const MpReal& a, const MpReal& b) {
  MpReal r(op_prec(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
MpReal operator*(const MpReal& a, const MpReal& b) {
  MpReal r(op_prec(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
MpReal operator/(const MpReal& a, const MpReal& b) {
  MpReal r(op_prec(a, b));
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
MpReal operator-(const MpReal& a) {
  MpReal r(a.prec());
  mpfr_neg(r.get(), a.get(), MPFR_RNDN);
  return r;
}
bool operator<(const MpReal& a, const MpReal& b) {
  return mpfr_cmp(a.get(), b.get()) < 0;
}
bool operator>(const MpReal& a, const MpReal& b) {
  return mpfr_cmp(a.get(), b.get()) > 0;
}

MpReal r_abs(const MpReal& a) {
  MpReal r(a.prec());
  mpfr_abs(r.get(), a.get(), MPFR_RNDN);
  return r;
}
MpReal r_sqrt(const MpReal& a) {
  MpReal r(a.prec());
  mpfr_sqrt(r.get(), a.get(), MPFR_RNDN);
  return r;
}
MpReal r_cbrt(const MpReal& a) {
  MpReal r(a.prec());
  mpfr_cbrt(r.get(), a.get(), MPFR_RNDN);
  return r;
}
MpReal r_log(const MpReal& a) {
  MpReal r(a.prec());
  mpfr_log(r.get(), a.get(), MPFR_RNDN);
  return r;
}
MpReal r_exp(const MpReal& a) {
  MpReal r(a.prec());
  mpfr_exp(r.get(), a.get(), MPFR_RNDN);
  return r;
}
Int r_round(const MpReal& a) {
  Int n;
  mpfr_get_z(n.get_mpz_t(), a.get(), MPFR_RNDN);
  return n;
}
Int r_floor(const MpReal& a) {
  Int n;
  mpfr_get_z(n.get_mpz_t(), a.get(), MPFR_RNDD);
  return n;
}

MpReal real_theta(const CubicField& F, mpfr_prec_t prec) {
  return r_cbrt(MpReal::from_int(F.d(), prec));
}

MpReal embed_real(const CubicField& F, const FieldElement& x,
                  mpfr_prec_t prec) {
  UvwCoords c = to_uvw(x, F);
  MpReal t = real_theta(F, prec);
  MpReal tp = t * t / MpReal::from_int(F.b(), prec);
  MpReal v = MpReal::from_int(c.u, prec) + MpReal::from_int(c.v, prec) * t +
             MpReal::from_int(c.w, prec) * tp;
  return v / MpReal::from_int(c.den, prec);
}

// ---- intervals -----------------------------------------------------------

namespace {
// Binary op with explicit rounding into a fresh MpReal.
MpReal dir2(int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t),
            const MpReal& a, const MpReal& b, mpfr_rnd_t rnd) {
  MpReal r(op_prec(a, b));
  op(r.get(), a.get(), b.get(), rnd);
  return r;
}
MpReal dir1(int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t), const MpReal& a,
            mpfr_rnd_t rnd) {
  MpReal r(a.prec());
  op(r.get(), a.get(), rnd);
  return r;
}
}  // namespace

IReal i_from_int(const Int& n, mpfr_prec_t prec) {
  IReal r{MpReal(prec), MpReal(prec)};
  mpfr_set_z(r.lo.get(), n.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi.get(), n.get_mpz_t(), MPFR_RNDU);
  return r;
}

IReal i_from_ratio(const Int& num, const Int& den, mpfr_prec_t prec) {
  if (den <= 0) throw InternalInconsistency("interval ratio needs den > 0");
  IReal n = i_from_int(num, prec), d = i_from_int(den, prec);
  IReal r{MpReal(prec), MpReal(prec)};
  mpfr_div(r.lo.get(), n.lo.get(), d.hi.get(), MPFR_RNDD);
  mpfr_div(r.hi.get(), n.hi.get(), d.lo.get(), MPFR_RNDU);
  return r;
}

IReal i_add(const IReal& a, const IReal& b) {
  return IReal{dir2(mpfr_add, a.lo, b.lo, MPFR_RNDD),
               dir2(mpfr_add, a.hi, b.hi, MPFR_RNDU)};
}

IReal i_sub(const IReal& a, const IReal& b) {
  return IReal{dir2(mpfr_sub, a.lo, b.hi, MPFR_RNDD),
               dir2(mpfr_sub, a.hi, b.lo, MPFR_RNDU)};
}

IReal i_neg(const IReal& a) {
  return IReal{dir1(mpfr_neg, a.hi, MPFR_RNDD), dir1(mpfr_neg, a.lo, MPFR_RNDU)};
}

IReal i_mul(const IReal& a, const IReal& b) {
  const MpReal* as[2] = {&a.lo, &a.hi};
  const MpReal* bs[2] = {&b.lo, &b.hi};
  MpReal lo = dir2(mpfr_mul, a.lo, b.lo, MPFR_RNDD);
  MpReal hi = dir2(mpfr_mul, a.lo, b.lo, MPFR_RNDU);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      MpReal d = dir2(mpfr_mul, *as[i], *bs[j], MPFR_RNDD);
      MpReal u = dir2(mpfr_mul, *as[i], *bs[j], MPFR_RNDU);
      if (d < lo) lo = d;
      if (u > hi) hi = u;
    }
  return IReal{std::move(lo), std::move(hi)};
}

IReal i_div(const IReal& a, const IReal& b) {
  if (i_contains_zero(b))
    throw PrecisionExhausted("interval division by interval containing zero");
  // b is entirely positive or entirely negative; pick endpoint combinations.
  MpReal lo = dir2(mpfr_div, a.lo, b.lo, MPFR_RNDD);
  MpReal hi = dir2(mpfr_div, a.lo, b.lo, MPFR_RNDU);
  const MpReal* as[2] = {&a.lo, &a.hi};
  const MpReal* bs[2] = {&b.lo, &b.hi};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      MpReal d = dir2(mpfr_div, *as[i], *bs[j], MPFR_RNDD);
      MpReal u = dir2(mpfr_div, *as[i], *bs[j], MPFR_RNDU);
      if (d < lo) lo = d;
      if (u > hi) hi = u;
    }
  return IReal{std::move(lo), std::move(hi)};
}

IReal i_sqrt(const IReal& a) {
  if (a.lo.sign() < 0)
    throw InternalInconsistency("interval sqrt of possibly negative value");
  return IReal{dir1(mpfr_sqrt, a.lo, MPFR_RNDD),
               dir1(mpfr_sqrt, a.hi, MPFR_RNDU)};
}

IReal i_cbrt(const IReal& a) {
  return IReal{dir1(mpfr_cbrt, a.lo, MPFR_RNDD),
               dir1(mpfr_cbrt, a.hi, MPFR_RNDU)};
}

bool i_contains_zero(const IReal& a) {
  return a.lo.sign() <= 0 && a.hi.sign() >= 0;
}
bool i_is_positive(const IReal& a) { return a.lo.sign() > 0; }
bool i_is_negative(const IReal& a) { return a.hi.sign() < 0; }

double i_width(const IReal& a) {
  MpReal w = dir2(mpfr_sub, a.hi, a.lo, MPFR_RNDU);
  return w.to_double();
}
double i_mid(const IReal& a) { return (a.lo.to_double() + a.hi.to_double()) / 2; }

IReal i_pi(mpfr_prec_t prec) {
  IReal r{MpReal(prec), MpReal(prec)};
  mpfr_const_pi(r.lo.get(), MPFR_RNDD);
  mpfr_const_pi(r.hi.get(), MPFR_RNDU);
  return r;
}

namespace {

// Rigorous enclosure of f over [a.lo, a.hi] for f with |f'| <= 1 (sin, cos):
// evaluate both endpoints with outward rounding and pad by the width.
IReal i_lip1(int (*f)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t), const IReal& a) {
  MpReal fa_d = dir1(f, a.lo, MPFR_RNDD), fa_u = dir1(f, a.lo, MPFR_RNDU);
  MpReal fb_d = dir1(f, a.hi, MPFR_RNDD), fb_u = dir1(f, a.hi, MPFR_RNDU);
  MpReal w = dir2(mpfr_sub, a.hi, a.lo, MPFR_RNDU);
  MpReal lo = dir2(mpfr_sub, (fa_d < fb_d) ? fa_d : fb_d, w, MPFR_RNDD);
  MpReal hi = dir2(mpfr_add, (fa_u > fb_u) ? fa_u : fb_u, w, MPFR_RNDU);
  return IReal{std::move(lo), std::move(hi)};
}

IReal i_sin(const IReal& a) { return i_lip1(mpfr_sin, a); }
IReal i_cos(const IReal& a) { return i_lip1(mpfr_cos, a); }

IReal i_atan(const IReal& a) {
  // atan is monotone increasing.
  return IReal{dir1(mpfr_atan, a.lo, MPFR_RNDD),
               dir1(mpfr_atan, a.hi, MPFR_RNDU)};
}

IReal i_scale_down3(const IReal& a) {
  IReal r{MpReal(a.lo.prec()), MpReal(a.hi.prec())};
  mpfr_div_ui(r.lo.get(), a.lo.get(), 3, MPFR_RNDD);
  mpfr_div_ui(r.hi.get(), a.hi.get(), 3, MPFR_RNDU);
  return r;
}

}  // namespace

IComplex ic_from_int(const Int& re, const Int& im, mpfr_prec_t prec) {
  return IComplex{i_from_int(re, prec), i_from_int(im, prec)};
}

IComplex ic_add(const IComplex& a, const IComplex& b) {
  return IComplex{i_add(a.re, b.re), i_add(a.im, b.im)};
}
IComplex ic_sub(const IComplex& a, const IComplex& b) {
  return IComplex{i_sub(a.re, b.re), i_sub(a.im, b.im)};
}
IComplex ic_neg(const IComplex& a) {
  return IComplex{i_neg(a.re), i_neg(a.im)};
}
IComplex ic_mul(const IComplex& a, const IComplex& b) {
  return IComplex{i_sub(i_mul(a.re, b.re), i_mul(a.im, b.im)),
                  i_add(i_mul(a.re, b.im), i_mul(a.im, b.re))};
}
IComplex ic_scale(const IComplex& a, const IReal& s) {
  return IComplex{i_mul(a.re, s), i_mul(a.im, s)};
}
IReal ic_abs2(const IComplex& a) {
  return i_add(i_mul(a.re, a.re), i_mul(a.im, a.im));
}

IComplex ic_principal_cbrt(const IComplex& z) {
  // Returns an enclosure of one exact cube root of the exact value inside z
  // (not necessarily the principal branch; callers multiply by cube roots
  // of unity to reach the others).
  bool re_zero = i_contains_zero(z.re);
  bool im_zero = i_contains_zero(z.im);
  if (re_zero && im_zero)
    throw PrecisionExhausted("cube root of enclosure containing zero");
  if (im_zero && i_is_negative(z.re)) {
    // Near the negative real axis: cube roots of -w are the negated cube
    // roots of w, and -z sits safely in the right half plane.
    return ic_neg(ic_principal_cbrt(ic_neg(z)));
  }
  mpfr_prec_t prec = z.re.lo.prec();
  IReal mag = i_cbrt(i_sqrt(ic_abs2(z)));
  IReal phi{MpReal(prec), MpReal(prec)};
  if (!im_zero) {
    // Half-plane formulas valid for arbitrary re when im has fixed sign:
    //   im > 0:  phi =  pi/2 - atan(re/im)   in (0, pi)
    //   im < 0:  phi = -pi/2 - atan(re/im)   in (-pi, 0)
    IReal q = i_atan(i_div(z.re, z.im));
    IReal pi = i_pi(prec);
    IReal half_pi{MpReal(prec), MpReal(prec)};
    mpfr_div_ui(half_pi.lo.get(), pi.lo.get(), 2, MPFR_RNDD);
    mpfr_div_ui(half_pi.hi.get(), pi.hi.get(), 2, MPFR_RNDU);
    phi = i_is_positive(z.im) ? i_sub(half_pi, q)
                              : i_sub(i_neg(half_pi), q);
  } else {
    // im may vanish but re > 0: phi = atan(im/re), no branch cut nearby.
    phi = i_atan(i_div(z.im, z.re));
  }
  IReal psi = i_scale_down3(phi);
  return IComplex{i_mul(mag, i_cos(psi)), i_mul(mag, i_sin(psi))};
}

}  // namespace pmcf
