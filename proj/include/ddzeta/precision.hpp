// Precision context shared by every analytic evaluation: target output
// digits, guard digits for rounding headroom, and the mpfr bit width
// implied by them.  Truncation targets (series cutoffs, quadrature tails)
// are driven by target_decimal; rounding noise is absorbed by the guard.
#ifndef DDZETA_PRECISION_HPP
#define DDZETA_PRECISION_HPP

#include <cmath>

#include "ddzeta/complex.hpp"

namespace ddzeta {

struct PrecisionContext {
  int target_decimal = 50;
  int guard_digits = 20;
  mpfr_prec_t bits = 256;

  static PrecisionContext make(int target_decimal, int guard_digits = 20) {
    PrecisionContext c;
    c.target_decimal = target_decimal;
    c.guard_digits = guard_digits;
    c.bits = static_cast<mpfr_prec_t>(
        std::ceil((target_decimal + guard_digits) * 3.321928094887362) + 8);
    return c;
  }

  int working_decimal() const { return target_decimal + guard_digits; }

  Real real(long x) const { return Real(x, bits); }
  Real real(double x) const { return Real::from_double(x, bits); }
  Real real(const std::string& s) const { return Real::from_string(s, bits); }
  Real real(const Rational& q) const { return Real::from_rational(q, bits); }
  Complex complex(long re, long im = 0) const {
    return Complex(Real(re, bits), Real(im, bits));
  }
  Complex complex(const Real& re) const { return Complex(re, Real(0L, bits)); }
  Complex complex(const Real& re, const Real& im) const { return Complex(re, im); }

  Real pi() const { return Real::pi(bits); }
  Real euler_gamma() const { return Real::euler_gamma(bits); }
  Real log_2pi() const { return log(2L * Real::pi(bits)); }

  // Absolute truncation target for internal series and quadrature tails.
  Real eps_trunc() const { return Real::pow10(-(target_decimal + 8), bits); }
  // Requested output accuracy.
  Real eps_target() const { return Real::pow10(-target_decimal, bits); }
};

}  // namespace ddzeta

#endif
