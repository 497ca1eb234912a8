#include "ddzeta/direct_sum.hpp"

#include "ddzeta/special.hpp"

namespace ddzeta {

namespace {

Real mag(const Complex& z) { return abs(z.re) + abs(z.im); }

// Crude upper estimate of sum_{m2 > X} |alpha(m2)| * sum_{m1} m1^{-sig1} (m1+m2)^{-sig2}
// by integral comparison; declared non-rigorous.
Real outer_tail_estimate(double sig1, double sig2, long cutoff,
                         const PrecisionContext& ctx) {
  mpfr_prec_t bits = ctx.bits;
  Real x = Real(cutoff, bits);
  Real est(0L, bits);
  if (sig1 > 1.02) {
    Real inner = zeta_d(Complex(Real::from_double(sig1, bits)), 0, ctx).re;
    est = inner * pow(x, Real::from_double(1.0 - sig2, bits)) / Real::from_double(sig2 - 1.0, bits);
  } else {
    Real c = Real::from_double(1.0 / std::abs(1.0 - sig1) + 1.0 / (sig1 + sig2 - 1.0) + 1.0, bits);
    est = c * pow(x, Real::from_double(2.0 - sig1 - sig2, bits)) /
          Real::from_double(sig1 + sig2 - 2.0, bits);
  }
  // log-weight margin for the Lambda case plus general safety
  return est * (log(x) + 3L);
}

}  // namespace

DirectSumResult direct_phi2(const Complex& s1, const Complex& s2,
                            const SeriesSpec& series, long cutoff,
                            const SieveTable& sieve, const PrecisionContext& ctx) {
  if (series.kind == SeriesKind::Plugin)
    throw std::invalid_argument("direct_phi2: plug-in series carry no coefficient table");
  double sig1 = s1.re.to_double();
  double sig2 = s2.re.to_double();
  if (!(sig2 > 1.0) || !(sig1 + sig2 > 2.0))
    throw RegionError("direct_phi2: (s1,s2) outside the absolute-convergence region");
  if (cutoff < 1000) throw CutoffError("direct_phi2: cutoff must be >= 1000");
  if (sieve.limit < cutoff)
    throw std::invalid_argument("direct_phi2: sieve smaller than cutoff");

  mpfr_prec_t bits = ctx.bits;
  mpfr_prec_t acc_bits = bits + 64;
  bool lambda_case = (series.kind == SeriesKind::Lambda);

  // ln table over 1..2*cutoff keeps every power evaluation to one complex exp
  std::vector<Real> ln;
  ln.reserve(static_cast<size_t>(2 * cutoff) + 1);
  ln.emplace_back(0L, bits);
  for (long n = 1; n <= 2 * cutoff; ++n) ln.push_back(log(Real(n, bits)));

  // Inner-loop truncation: the skipped mass is charged to the tail estimate,
  // so the threshold only needs to sit a few digits below the accuracy goal.
  Real eps_term = ctx.eps_target() / 1000L;
  Complex acc(0L, acc_bits);
  Real inner_tails(0L, bits);
  long terms = 0;

  for (long m2 = 1; m2 <= cutoff; ++m2) {
    Real weight(0L, bits);
    if (lambda_case) {
      if (!sieve.lambda_nonzero(m2)) continue;
      weight = ln[sieve.lambda_prime(m2)];
    } else {
      int mu = sieve.mu(m2);
      if (mu == 0) continue;
      weight = Real(mu, bits);
    }
    Complex inner(0L, acc_bits);
    long m1 = 1;
    for (; m1 <= cutoff; ++m1) {
      Complex term = int_pow_neg(ln[m1], s1) * int_pow_neg(ln[m1 + m2], s2);
      inner += term;
      ++terms;
      if (m1 >= 16 && mag(term) * abs(weight) < eps_term) break;
    }
    if (m1 < cutoff) {
      // integral bound on the dropped inner range
      Real mr = Real(m1, bits);
      Real bound = (sig1 > 1.0)
          ? pow(mr + Real(m2, bits), Real::from_double(-sig2, bits)) *
                pow(mr, Real::from_double(1.0 - sig1, bits)) / Real::from_double(sig1 - 1.0, bits)
          : pow(mr, Real::from_double(1.0 - sig1 - sig2, bits)) /
                Real::from_double(sig1 + sig2 - 1.0, bits);
      inner_tails += abs(weight) * bound;
    }
    acc += weight * inner;
  }

  DirectSumResult out;
  out.value = Complex(Real(0L, bits) + acc.re, Real(0L, bits) + acc.im);
  out.tail.value = inner_tails + outer_tail_estimate(sig1, sig2, cutoff, ctx);
  out.tail.is_rigorous = false;
  out.terms_summed = terms;
  return out;
}

}  // namespace ddzeta
