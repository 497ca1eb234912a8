// Arbitrary-precision special functions on the complex plane: log-gamma,
// gamma, digamma, trigamma via shifted Stirling series; the Riemann zeta
// function and its first two derivatives via Euler-Maclaurin summation and
// the functional equation; and M(s) = -zeta'(s)/zeta(s).
#ifndef DDZETA_SPECIAL_HPP
#define DDZETA_SPECIAL_HPP

#include <array>

#include "ddzeta/errors.hpp"
#include "ddzeta/precision.hpp"

namespace ddzeta {

// Cutoff policy for Euler-Maclaurin zeta summation.  The defaults balance
// the direct sum against the Bernoulli correction tail so that the
// remainder bound lands below ctx.eps_trunc().
struct EulerMaclaurinPolicy {
  double order_per_digit = 1.17;   // correction terms per decimal digit
  double length_factor = 0.44;     // direct-sum terms per unit of |s|+2K
  int max_retries = 3;

  int order(const PrecisionContext& ctx) const;
  long length(const PrecisionContext& ctx, double abs_s, int order) const;
};

// B_{2k} at the given precision, memoized per precision.
const Real& bernoulli_real(unsigned two_k, mpfr_prec_t bits);

// Some branch of log Gamma(z) (imaginary part not normalized); exact for
// ratio and exponential use.  Throws PoleError at non-positive integers.
Complex loggamma(const Complex& z, const PrecisionContext& ctx);
Complex gamma_fn(const Complex& z, const PrecisionContext& ctx);
Complex digamma(const Complex& z, const PrecisionContext& ctx);
Complex trigamma(const Complex& z, const PrecisionContext& ctx);

// Gamma(z + k) / Gamma(z) as a rising-factorial product; stable near the
// poles of either factor.
Complex gamma_ratio_shift(const Complex& z, unsigned k, const PrecisionContext& ctx);

// d-th derivative of zeta, d in {0,1,2}.  Euler-Maclaurin for Re s >= 1/2,
// functional-equation reflection otherwise.  Throws PoleError at s = 1.
Complex zeta_d(const Complex& s, int d, const PrecisionContext& ctx,
               const EulerMaclaurinPolicy& policy = {});

// All derivatives 0..dmax at once (shared power sums).
std::array<Complex, 3> zeta_derivs(const Complex& s, int dmax,
                                   const PrecisionContext& ctx,
                                   const EulerMaclaurinPolicy& policy = {});

// M(s) = -zeta'(s)/zeta(s).  Reflected form for Re s < 0.4 (away from the
// origin); detects proximity to zeros of zeta per the precision-scaled
// threshold |zeta(s)| < 10^(-target/2).
Complex mangoldt_m(const Complex& s, const PrecisionContext& ctx);

namespace detail {
// Exposed for the overlap consistency tests.
std::array<Complex, 3> zeta_em(const Complex& s, int dmax, const PrecisionContext& ctx,
                               const EulerMaclaurinPolicy& policy);
std::array<Complex, 3> zeta_reflect(const Complex& s, int dmax,
                                    const PrecisionContext& ctx,
                                    const EulerMaclaurinPolicy& policy);
Complex mangoldt_m_direct(const Complex& s, const PrecisionContext& ctx);
Complex mangoldt_m_reflected(const Complex& s, const PrecisionContext& ctx);
}  // namespace detail

}  // namespace ddzeta

#endif
