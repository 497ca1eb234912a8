#include "ddzeta/special.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

namespace ddzeta {

namespace {

// Cheap magnitude proxy (within sqrt(2) of |z|).
Real mag(const Complex& z) { return abs(z.re) + abs(z.im); }

std::mutex bern_real_mutex;
std::map<mpfr_prec_t, std::vector<Real>> bern_real_tables;  // index k -> B_{2k}

// Stirling becomes usable once Re z >= r0; the asymptotic tail then bottoms
// out below 10^-(d+9).
double stirling_threshold(int target_decimal) {
  return 0.367 * (target_decimal + 9) + 2.0;
}

}  // namespace

const Real& bernoulli_real(unsigned k, mpfr_prec_t bits) {
  std::lock_guard<std::mutex> lock(bern_real_mutex);
  auto& tab = bern_real_tables[bits];
  while (tab.size() <= k)
    tab.push_back(Real::from_rational(bernoulli(2 * static_cast<unsigned>(tab.size())), bits));
  return tab[k];
}

namespace {

void check_gamma_pole(const Complex& z) {
  if (z.im.is_zero() && z.re.is_integer() && z.re.sign() <= 0)
    throw PoleError("gamma family: pole at non-positive integer");
}

// log Gamma via Stirling for Re w >= r0 (no shift).
Complex stirling_loggamma(const Complex& w, const PrecisionContext& ctx) {
  mpfr_prec_t bits = ctx.bits;
  Real half = ctx.real(1L) / 2;
  Complex lg = (w - Complex(half)) * log(w) - w + Complex(half * ctx.log_2pi());
  Complex winv = Complex(1L, bits) / w;
  Complex winv2 = winv * winv;
  Complex t = winv;  // w^{-(2k-1)}
  Real eps = ctx.eps_trunc();
  Real prev_mag = ctx.real(0L);
  for (unsigned k = 1; k < 4096; ++k) {
    Real coef = bernoulli_real(k, bits) / static_cast<long>(2 * k * (2 * k - 1));
    Complex term = coef * t;
    lg += term;
    Real m = mag(term);
    if (m < eps) return lg;
    if (k > 4 && m > prev_mag)
      throw QuadratureError("stirling_loggamma: series failed to converge");
    prev_mag = m;
    t = t * winv2;
  }
  throw QuadratureError("stirling_loggamma: series exhausted");
}

}  // namespace

Complex loggamma(const Complex& z, const PrecisionContext& ctx) {
  check_gamma_pole(z);
  double r0 = stirling_threshold(ctx.target_decimal);
  double re = z.re.to_double();
  long n = (re < r0) ? static_cast<long>(std::ceil(r0 - re)) : 0;
  if (n == 0) return stirling_loggamma(z, ctx);
  // Gamma(z) = Gamma(z+n) / prod_{j=0}^{n-1} (z+j)
  Complex prod(1L, ctx.bits);
  for (long j = 0; j < n; ++j) prod = prod * (z + j);
  return stirling_loggamma(z + n, ctx) - log(prod);
}

Complex gamma_fn(const Complex& z, const PrecisionContext& ctx) {
  return exp(loggamma(z, ctx));
}

Complex digamma(const Complex& z, const PrecisionContext& ctx) {
  check_gamma_pole(z);
  mpfr_prec_t bits = ctx.bits;
  double r0 = stirling_threshold(ctx.target_decimal);
  double re = z.re.to_double();
  long n = (re < r0) ? static_cast<long>(std::ceil(r0 - re)) : 0;
  Complex shift(0L, bits);
  for (long j = 0; j < n; ++j) shift += Complex(1L, bits) / (z + j);
  Complex w = z + n;
  Complex winv = Complex(1L, bits) / w;
  Complex winv2 = winv * winv;
  Complex psi = log(w) - Complex(Real(1, bits) / 2) * winv;
  Complex t = winv2;  // w^{-2k}
  Real eps = ctx.eps_trunc();
  for (unsigned k = 1; k < 4096; ++k) {
    Complex term = (bernoulli_real(k, bits) / static_cast<long>(2 * k)) * t;
    psi -= term;
    if (mag(term) < eps) break;
    t = t * winv2;
  }
  return psi - shift;
}

Complex trigamma(const Complex& z, const PrecisionContext& ctx) {
  check_gamma_pole(z);
  mpfr_prec_t bits = ctx.bits;
  double r0 = stirling_threshold(ctx.target_decimal);
  double re = z.re.to_double();
  long n = (re < r0) ? static_cast<long>(std::ceil(r0 - re)) : 0;
  Complex shift(0L, bits);
  for (long j = 0; j < n; ++j) {
    Complex d = z + j;
    shift += Complex(1L, bits) / (d * d);
  }
  Complex w = z + n;
  Complex winv = Complex(1L, bits) / w;
  Complex winv2 = winv * winv;
  Complex psi1 = winv + Complex(Real(1, bits) / 2) * winv2;
  Complex t = winv * winv2;  // w^{-(2k+1)}
  Real eps = ctx.eps_trunc();
  for (unsigned k = 1; k < 4096; ++k) {
    Complex term = bernoulli_real(k, bits) * t;
    psi1 += term;
    if (mag(term) < eps) break;
    t = t * winv2;
  }
  return psi1 + shift;
}

Complex gamma_ratio_shift(const Complex& z, unsigned k, const PrecisionContext& ctx) {
  Complex prod(1L, ctx.bits);
  for (unsigned j = 0; j < k; ++j) prod = prod * (z + static_cast<long>(j));
  return prod;
}

int EulerMaclaurinPolicy::order(const PrecisionContext& ctx) const {
  return static_cast<int>(std::ceil(order_per_digit * (ctx.target_decimal + 9))) + 4;
}

long EulerMaclaurinPolicy::length(const PrecisionContext& ctx, double abs_s,
                                  int ord) const {
  (void)ctx;
  long m = static_cast<long>(std::ceil(length_factor * (abs_s + 2.0 * ord))) + 2;
  return std::max<long>(m, 16);
}

namespace detail {

std::array<Complex, 3> zeta_em(const Complex& s, int dmax, const PrecisionContext& ctx,
                               const EulerMaclaurinPolicy& policy) {
  mpfr_prec_t bits = ctx.bits;
  Real eps = ctx.eps_trunc();
  double abs_s = abs(s).to_double();
  double sigma = s.re.to_double();
  int K = policy.order(ctx);
  for (int attempt = 0;; ++attempt) {
    long M = policy.length(ctx, abs_s, K);
    std::array<Complex, 3> out = {Complex(0L, bits), Complex(0L, bits), Complex(0L, bits)};
    // direct block, summed in fixed ascending order
    for (long n = 1; n < M; ++n) {
      Real ln_n = log(Real(n, bits));
      Complex p = int_pow_neg(ln_n, s);
      out[0] += p;
      if (dmax >= 1) out[1] -= ln_n * p;
      if (dmax >= 2) out[2] += (ln_n * ln_n) * p;
    }
    Real ln_m = log(Real(M, bits));
    Complex pm = int_pow_neg(ln_m, s);  // M^{-s}
    // M^{1-s}/(s-1) and derivatives
    Complex sm1 = s - 1;
    Complex inv_sm1 = Complex(1L, bits) / sm1;
    Complex f = (Real(M, bits) * pm) * inv_sm1;
    Complex g = -(Complex(ln_m) + inv_sm1);
    out[0] += f;
    if (dmax >= 1) out[1] += f * g;
    if (dmax >= 2) out[2] += f * (g * g + inv_sm1 * inv_sm1);
    // M^{-s}/2 and derivatives
    Real half = Real(1, bits) / 2;
    out[0] += half * pm;
    if (dmax >= 1) out[1] -= half * (ln_m * pm);
    if (dmax >= 2) out[2] += half * ((ln_m * ln_m) * pm);
    // Bernoulli corrections
    Complex u = pm / Real(M, bits);  // M^{-s-2k+1} at k=1
    Real minv2 = Real(1, bits) / static_cast<long>(M * M);
    Complex P = s, P1(1L, bits), P2(0L, bits);  // s(s+1)...(s+2k-2) and derivatives
    Real fact(2, bits);                          // (2k)!
    bool converged = false;
    Real last_mag = ctx.real(0L);
    int k = 1;
    for (; k <= K; ++k) {
      Real c = bernoulli_real(static_cast<unsigned>(k), bits) / fact;
      Complex t0 = c * (P * u);
      out[0] += t0;
      Real m0 = mag(t0);
      if (dmax >= 1) out[1] += c * (u * (P1 - Complex(ln_m) * P));
      if (dmax >= 2)
        out[2] += c * (u * (P2 - (2L * Complex(ln_m)) * P1 + Complex(ln_m * ln_m) * P));
      last_mag = m0;
      if (m0 < eps && k > 2) {
        converged = true;
        break;
      }
      // advance to k+1: multiply P by (s+2k-1)(s+2k), u by M^{-2}, fact by (2k+1)(2k+2)
      for (long j = 2 * k - 1; j <= 2 * k; ++j) {
        Complex zj = s + j;
        P2 = P2 * zj + 2L * P1;
        P1 = P1 * zj + P;
        P = P * zj;
      }
      u = u * minv2;
      fact *= Real(static_cast<long>((2 * k + 1)) * (2 * k + 2), bits);
    }
    if (converged) return out;
    // remainder bound |R| <= |(s+2K+1)/(sigma+2K+1)| * |next term|
    double rem_factor = (abs_s + 2.0 * k + 1.0) / (sigma + 2.0 * k + 1.0);
    if (last_mag * Real::from_double(std::abs(rem_factor), bits) < eps) return out;
    if (attempt >= policy.max_retries)
      throw QuadratureError("zeta_em: Euler-Maclaurin failed to converge");
    K = K * 3 / 2 + 8;
  }
}

std::array<Complex, 3> zeta_reflect(const Complex& s, int dmax,
                                    const PrecisionContext& ctx,
                                    const EulerMaclaurinPolicy& policy) {
  mpfr_prec_t bits = ctx.bits;
  Complex one_minus_s = 1L - s;
  auto zw = zeta_em(one_minus_s, dmax, ctx, policy);
  Real pi = ctx.pi();
  Real ln2 = log(Real(2, bits));
  Real lnpi = log(pi);
  Complex logA = s * Complex(ln2) + (s - 1) * Complex(lnpi) + loggamma(one_minus_s, ctx);
  Complex A = exp(logA);
  Complex half_pi_s = (pi / 2) * s;
  Complex S = sin(half_pi_s);
  Complex C = cos(half_pi_s);
  std::array<Complex, 3> out = {Complex(0L, bits), Complex(0L, bits), Complex(0L, bits)};
  Complex chi0 = A * S;
  out[0] = chi0 * zw[0];
  if (dmax >= 1) {
    Complex r = Complex(ctx.log_2pi()) - digamma(one_minus_s, ctx);
    Complex chi1 = A * (r * S + Complex(pi / 2) * C);
    out[1] = chi1 * zw[0] - chi0 * zw[1];
    if (dmax >= 2) {
      Complex rp = trigamma(one_minus_s, ctx);
      Complex chi2 = A * ((r * r + rp - Complex(pi * pi / 4)) * S + pi * (r * C));
      out[2] = chi2 * zw[0] - 2L * (chi1 * zw[1]) + chi0 * zw[2];
    }
  }
  return out;
}

Complex mangoldt_m_direct(const Complex& s, const PrecisionContext& ctx) {
  auto z = zeta_derivs(s, 1, ctx);
  Real thr = Real::pow10(-(ctx.target_decimal / 2), ctx.bits);
  if (abs(z[0]) < thr)
    throw ZeroProximityError("mangoldt_m: argument too close to a zero of zeta");
  return -(z[1] / z[0]);
}

Complex mangoldt_m_reflected(const Complex& s, const PrecisionContext& ctx) {
  Real pi = ctx.pi();
  Complex half_pi_s = (pi / 2) * s;
  Complex S = sin(half_pi_s);
  // poles of M at the trivial zeros (even integers <= -2)
  if (abs(S) < Real::pow10(-(ctx.target_decimal / 2), ctx.bits))
    throw PoleError("mangoldt_m: pole at a trivial zero of zeta");
  Complex one_minus_s = 1L - s;
  return -Complex(ctx.log_2pi()) - Complex(pi / 2) * (cos(half_pi_s) / S) +
         digamma(one_minus_s, ctx) - mangoldt_m_direct(one_minus_s, ctx);
}

}  // namespace detail

std::array<Complex, 3> zeta_derivs(const Complex& s, int dmax,
                                   const PrecisionContext& ctx,
                                   const EulerMaclaurinPolicy& policy) {
  if (s.im.is_zero() && s.re.is_integer() && s.re.to_long() == 1)
    throw PoleError("zeta: pole at s = 1");
  // Euler-Maclaurin holds for sigma > -(2K-1); keep it for a disc around the
  // origin as well, where the reflection would pivot on the pole at 1-s = 1.
  if (s.re >= 0.5 || abs(s) <= 0.45) return detail::zeta_em(s, dmax, ctx, policy);
  return detail::zeta_reflect(s, dmax, ctx, policy);
}

Complex zeta_d(const Complex& s, int d, const PrecisionContext& ctx,
               const EulerMaclaurinPolicy& policy) {
  return zeta_derivs(s, d, ctx, policy)[static_cast<size_t>(d)];
}

Complex mangoldt_m(const Complex& s, const PrecisionContext& ctx) {
  double sigma = s.re.to_double();
  if (sigma >= 0.4 || abs(s) <= 0.35) return detail::mangoldt_m_direct(s, ctx);
  return detail::mangoldt_m_reflected(s, ctx);
}

}  // namespace ddzeta
