// RAII value type over mpfr_t.  Every Real carries its own precision;
// binary operations produce results at the larger operand precision, so a
// computation started from a PrecisionContext stays at that context's
// precision throughout.
#ifndef DDZETA_REAL_HPP
#define DDZETA_REAL_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "ddzeta/exact.hpp"

namespace ddzeta {

class Real {
 public:
  explicit Real(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); }
  Real(long x, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, x, MPFR_RNDN);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, 2);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real from_double(double x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
  }
  // Parses a decimal literal; throws std::invalid_argument on malformed input.
  static Real from_string(const std::string& s, mpfr_prec_t prec);
  static Real from_rational(const Rational& q, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_q(r.v_, q.backend().data(), MPFR_RNDN);
    return r;
  }
  static Real from_integer(const Integer& z, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_z(r.v_, z.backend().data(), MPFR_RNDN);
    return r;
  }

  static Real pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }
  static Real euler_gamma(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_euler(r.v_, MPFR_RNDN);
    return r;
  }
  // 10^e as a Real.
  static Real pow10(long e, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_ui_pow_ui(r.v_, 10, static_cast<unsigned long>(e >= 0 ? e : -e), MPFR_RNDN);
    if (e < 0) mpfr_ui_div(r.v_, 1, r.v_, MPFR_RNDN);
    return r;
  }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Scientific decimal string with the given number of significant digits.
  std::string to_string(int digits) const;

  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }

  friend Real operator+(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  Real operator-() const {
    Real r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }
  Real& operator+=(const Real& o) {
    if (o.prec() > prec()) { Real t = *this + o; *this = std::move(t); }
    else mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator-=(const Real& o) {
    if (o.prec() > prec()) { Real t = *this - o; *this = std::move(t); }
    else mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(const Real& o) {
    if (o.prec() > prec()) { Real t = *this * o; *this = std::move(t); }
    else mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  friend Real operator*(long a, const Real& b) {
    Real r(b.prec());
    mpfr_mul_si(r.v_, b.v_, a, MPFR_RNDN);
    return r;
  }
  friend Real operator+(const Real& a, long b) {
    Real r(a.prec());
    mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, long b) {
    Real r(a.prec());
    mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, long b) {
    Real r(a.prec());
    mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend Real operator/(long a, const Real& b) {
    Real r(b.prec());
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
  friend bool operator<(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) < 0; }
  friend bool operator>(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) > 0; }
  friend bool operator<=(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) <= 0; }
  friend bool operator>=(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) >= 0; }

 private:
  mpfr_t v_;
};

#define DDZETA_REAL_UNARY(name, mpfr_fn)            \
  inline Real name(const Real& x) {                 \
    Real r(x.prec());                               \
    mpfr_fn(r.raw(), x.raw(), MPFR_RNDN);           \
    return r;                                       \
  }
DDZETA_REAL_UNARY(exp, mpfr_exp)
DDZETA_REAL_UNARY(log, mpfr_log)
DDZETA_REAL_UNARY(sin, mpfr_sin)
DDZETA_REAL_UNARY(cos, mpfr_cos)
DDZETA_REAL_UNARY(sinh, mpfr_sinh)
DDZETA_REAL_UNARY(cosh, mpfr_cosh)
DDZETA_REAL_UNARY(sqrt, mpfr_sqrt)
DDZETA_REAL_UNARY(abs, mpfr_abs)
#undef DDZETA_REAL_UNARY

inline Real floor(const Real& x) {
  Real r(x.prec());
  mpfr_floor(r.raw(), x.raw());
  return r;
}
inline Real ceil(const Real& x) {
  Real r(x.prec());
  mpfr_ceil(r.raw(), x.raw());
  return r;
}
inline Real round_nearest(const Real& x) {
  Real r(x.prec());
  mpfr_round(r.raw(), x.raw());
  return r;
}

inline Real atan2(const Real& y, const Real& x) {
  Real r(std::max(y.prec(), x.prec()));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}
inline Real pow(const Real& b, const Real& e) {
  Real r(std::max(b.prec(), e.prec()));
  mpfr_pow(r.raw(), b.raw(), e.raw(), MPFR_RNDN);
  return r;
}
inline Real pow_si(const Real& b, long e) {
  Real r(b.prec());
  mpfr_pow_si(r.raw(), b.raw(), e, MPFR_RNDN);
  return r;
}
inline Real hypot(const Real& a, const Real& b) {
  Real r(std::max(a.prec(), b.prec()));
  mpfr_hypot(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline Real max(const Real& a, const Real& b) { return (a >= b) ? a : b; }
inline Real min(const Real& a, const Real& b) { return (a <= b) ? a : b; }

}  // namespace ddzeta

#endif
