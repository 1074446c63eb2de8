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

#ifndef PMCF_EMBED_HPP_
#define PMCF_EMBED_HPP_

#include <mpfr.h>

#include <string>

#include "pmcf/cubic_field.hpp"
#include "pmcf/intmath.hpp"

namespace pmcf {

// Minimal RAII wrapper around mpfr_t.  Binary operators round to nearest
// and allocate the result at the larger operand precision.
class MpReal {
 public:
  explicit MpReal(mpfr_prec_t prec = 64);
  MpReal(const MpReal& o);
  MpReal(MpReal&& o) noexcept;
  MpReal& operator=(const MpReal& o);
  MpReal& operator=(MpReal&& o) noexcept;
  ~MpReal();

  static MpReal from_int(const Int& n, mpfr_prec_t prec);
  static MpReal from_si(long n, mpfr_prec_t prec);
  static MpReal from_double(double x, mpfr_prec_t prec);

  mpfr_ptr get() { return x_; }
  mpfr_srcptr get() const { return x_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(x_); }
  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
  bool is_nan() const { return mpfr_nan_p(x_) != 0; }
  int sign() const { return mpfr_sgn(x_); }

 private:
  mpfr_t x_;
};

MpReal operator+(const MpReal& a, const MpReal& b);
MpReal operator-(const MpReal& a, const MpReal& b);
MpReal operator*(const MpReal& a, const MpReal& b);
MpReal operator/(const MpReal& a, const MpReal& b);
MpReal operator-(const MpReal& a);
bool operator<(const MpReal& a, const MpReal& b);
bool operator>(const MpReal& a, const MpReal& b);

MpReal r_abs(const MpReal& a);
MpReal r_sqrt(const MpReal& a);
MpReal r_cbrt(const MpReal& a);
MpReal r_log(const MpReal& a);
MpReal r_exp(const MpReal& a);
// Nearest integer.
Int r_round(const MpReal& a);
Int r_floor(const MpReal& a);

// Real embedding infrastructure for L = Q(cbrt(d)): theta0 = d^(1/3) > 0.
MpReal real_theta(const CubicField& F, mpfr_prec_t prec);
// Value of x = (u + v theta + w theta')/den under the real embedding.
MpReal embed_real(const CubicField& F, const FieldElement& x,
                  mpfr_prec_t prec);

// ---- interval arithmetic (rigorous outward rounding) ---------------------

struct IReal {
  MpReal lo, hi;
};

IReal i_from_int(const Int& n, mpfr_prec_t prec);
IReal i_from_ratio(const Int& num, const Int& den, mpfr_prec_t prec);
IReal i_add(const IReal& a, const IReal& b);
IReal i_sub(const IReal& a, const IReal& b);
IReal i_neg(const IReal& a);
IReal i_mul(const IReal& a, const IReal& b);
// Division; throws PrecisionExhausted if b contains zero.
IReal i_div(const IReal& a, const IReal& b);
IReal i_sqrt(const IReal& a);  // requires a.lo >= 0
IReal i_cbrt(const IReal& a);
bool i_contains_zero(const IReal& a);
bool i_is_positive(const IReal& a);
bool i_is_negative(const IReal& a);
// Upper bound for the interval width as a double (inf if overflow).
double i_width(const IReal& a);
double i_mid(const IReal& a);
// Enclosure of pi.
IReal i_pi(mpfr_prec_t prec);

struct IComplex {
  IReal re, im;
};

IComplex ic_from_int(const Int& re, const Int& im, mpfr_prec_t prec);
IComplex ic_add(const IComplex& a, const IComplex& b);
IComplex ic_sub(const IComplex& a, const IComplex& b);
IComplex ic_neg(const IComplex& a);
IComplex ic_mul(const IComplex& a, const IComplex& b);
IComplex ic_scale(const IComplex& a, const IReal& s);
// |z|^2 enclosure.
IReal ic_abs2(const IComplex& a);
// Enclosure of one exact cube root of the value inside z (branch choice is
// deterministic but not necessarily principal; multiply by cube roots of
// unity for the others).  Requires the enclosure to exclude zero and to
// determine a usable half plane; throws PrecisionExhausted otherwise.
IComplex ic_principal_cbrt(const IComplex& z);

}  // namespace pmcf

#endif  // PMCF_EMBED_HPP_
