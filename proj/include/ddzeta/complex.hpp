// Complex numbers over Real.  Only the operations the evaluators need.
#ifndef DDZETA_COMPLEX_HPP
#define DDZETA_COMPLEX_HPP

#include "ddzeta/real.hpp"

namespace ddzeta {

struct Complex {
  Real re, im;

  explicit Complex(mpfr_prec_t prec = 64) : re(0L, prec), im(0L, prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(const Real& r) : re(r), im(0L, r.prec()) {}
  Complex(long r, mpfr_prec_t prec) : re(r, prec), im(0L, prec) {}

  mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
  bool is_nan() const { return re.is_nan() || im.is_nan(); }

  friend Complex operator+(const Complex& a, const Complex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Real& a, const Complex& b) {
    return {a * b.re, a * b.im};
  }
  friend Complex operator*(const Complex& a, const Real& b) { return b * a; }
  friend Complex operator*(long a, const Complex& b) { return {a * b.re, a * b.im}; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  friend Complex operator/(const Complex& a, const Real& b) {
    return {a.re / b, a.im / b};
  }
  Complex operator-() const { return {-re, -im}; }
  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
};

inline Complex conj(const Complex& z) { return {z.re, -z.im}; }
inline Real abs(const Complex& z) { return hypot(z.re, z.im); }
inline Real arg(const Complex& z) { return atan2(z.im, z.re); }

inline Complex operator+(const Complex& a, long b) { return {a.re + b, a.im}; }
inline Complex operator-(const Complex& a, long b) { return {a.re - b, a.im}; }
inline Complex operator+(long a, const Complex& b) { return {b.re + a, b.im}; }
inline Complex operator-(long a, const Complex& b) { return {-(b.re - a), -b.im}; }

inline Complex exp(const Complex& z) {
  Real m = exp(z.re);
  Real s(z.prec()), c(z.prec());
  mpfr_sin_cos(s.raw(), c.raw(), z.im.raw(), MPFR_RNDN);
  return {m * c, m * s};
}

// Principal branch.
inline Complex log(const Complex& z) {
  Real half(1, z.prec());
  mpfr_set_d(half.raw(), 0.5, MPFR_RNDN);
  return {half * log(z.re * z.re + z.im * z.im), atan2(z.im, z.re)};
}

inline Complex sin(const Complex& z) {
  Real s(z.prec()), c(z.prec());
  mpfr_sin_cos(s.raw(), c.raw(), z.re.raw(), MPFR_RNDN);
  return {s * cosh(z.im), c * sinh(z.im)};
}

inline Complex cos(const Complex& z) {
  Real s(z.prec()), c(z.prec());
  mpfr_sin_cos(s.raw(), c.raw(), z.re.raw(), MPFR_RNDN);
  return {c * cosh(z.im), -(s * sinh(z.im))};
}

inline Complex cot(const Complex& z) { return cos(z) / sin(z); }

// z^w = exp(w log z), principal branch.
inline Complex pow(const Complex& z, const Complex& w) { return exp(w * log(z)); }

// n^{-s} for positive integer n given ln(n); the workhorse of every
// Dirichlet-series summation here.
inline Complex int_pow_neg(const Real& log_n, const Complex& s) {
  return exp(Complex(-(s.re * log_n), -(s.im * log_n)));
}

inline bool near_integer(const Real& x, const Real& tol, long& out) {
  Real r = round_nearest(x);
  if (abs(x - r) <= tol) {
    out = r.to_long();
    return true;
  }
  return false;
}

}  // namespace ddzeta

#endif
