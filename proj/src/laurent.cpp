#include "ddzeta/laurent.hpp"

#include <stdexcept>

namespace ddzeta {

Real laurent_a(int k, const PrecisionContext& ctx) {
  if (k <= 0 || k % 2 != 0) throw std::invalid_argument("laurent_a: k must be even >= 2");
  auto z = zeta_derivs(ctx.complex(-k), 2, ctx);
  return -(z[2].re / (2L * z[1].re));
}

Real laurent_b_real(int l, const PrecisionContext& ctx) {
  GammaLinear b = gamma_laurent_b(static_cast<unsigned>(l));
  return ctx.real(b.const_part) + ctx.real(b.gamma_coeff) * ctx.euler_gamma();
}

Real laurent_c(int k, const PrecisionContext& ctx) {
  auto z = zeta_derivs(ctx.complex(-k), 2, ctx);
  return -(z[2].re / (2L * (z[1].re * z[1].re)));
}

Real laurent_d_mu(int k, const PrecisionContext& ctx) {
  if (k <= 0 || k % 2 != 0) throw std::invalid_argument("laurent_d_mu: k must be even >= 2");
  Real direct = 1L / zeta_d(ctx.complex(-k), 1, ctx).re;
  // functional-equation form: (-1)^{k/2} 2 (2pi)^k / (k! zeta(k+1))
  Real closed = 2L * pow_si(2L * ctx.pi(), k) /
                (ctx.real(Rational(factorial(static_cast<unsigned>(k)))) *
                 zeta_d(ctx.complex(k + 1), 0, ctx).re);
  if ((k / 2) % 2 == 1) closed = -closed;
  Real tol = Real::pow10(-(ctx.target_decimal - 5), ctx.bits) * abs(direct);
  if (abs(direct - closed) > tol)
    throw std::logic_error("laurent_d_mu: two formulas disagree");
  return direct;
}

CGammaResult c_gamma_extrapolated(int k, int n, const PrecisionContext& ctx,
                                  int ladder_len) {
  if (k <= 0 || k % 2 != 0 || k > n)
    throw std::invalid_argument("c_gamma: need even k with 2 <= k <= n");
  mpfr_prec_t bits = ctx.bits;
  int h = n - k;
  // pole coefficient (-1)^{k-1} n!/(n-k)!
  Real pole = ctx.real(Rational(factorial(static_cast<unsigned>(n)),
                                factorial(static_cast<unsigned>(h))));
  pole = -pole;  // (-1)^{k-1} with k even
  std::vector<Real> f;
  f.reserve(static_cast<size_t>(ladder_len));
  Real eps0 = Real::pow10(-3, bits);
  for (int j = 0; j < ladder_len; ++j) {
    Real eps = eps0 / Real::from_double(std::pow(2.0, j), bits);
    // Gamma'(-n+k+eps)/Gamma(-n+eps) = psi(-h+eps) * prod_{i=0}^{k-1} (-n+eps+i)
    Complex arg(-Real(h, bits) + eps, Real(0L, bits));
    Complex prod = gamma_ratio_shift(Complex(-Real(n, bits) + eps), static_cast<unsigned>(k), ctx);
    Complex a = digamma(arg, ctx) * prod;
    f.push_back(a.re - pole / eps);
  }
  // Richardson elimination of eps, eps^2, ... on the ratio-2 ladder
  std::vector<Real> t = f;
  Real prev_last = t.back();
  for (int stage = 1; stage < ladder_len; ++stage) {
    Real w = Real::from_double(std::pow(2.0, stage), bits);
    std::vector<Real> next;
    next.reserve(t.size() - 1);
    for (size_t j = 0; j + 1 < t.size(); ++j)
      next.push_back((w * t[j + 1] - t[j]) / (w - 1L));
    prev_last = t.back();
    t = std::move(next);
  }
  return {t[0], abs(t[0] - prev_last)};
}

LaurentConstants laurent_constants(int kmax, const std::vector<std::pair<int, int>>& cn_pairs,
                                   const PrecisionContext& ctx) {
  if (kmax < 2 || kmax % 2 != 0)
    throw std::invalid_argument("laurent_constants: kmax must be even >= 2");
  LaurentConstants out;
  for (int k = 2; k <= kmax; k += 2) {
    auto z = zeta_derivs(ctx.complex(-k), 2, ctx);
    out.a.emplace(k, -(z[2].re / (2L * z[1].re)));
    out.c.emplace(k, -(z[2].re / (2L * (z[1].re * z[1].re))));
    out.d_mu.emplace(k, laurent_d_mu(k, ctx));
  }
  for (int l = 0; l <= kmax; ++l) {
    GammaLinear exact = gamma_laurent_b(static_cast<unsigned>(l));
    out.b.emplace(l, std::make_pair(exact, laurent_b_real(l, ctx)));
  }
  for (auto& [k, n] : cn_pairs)
    out.c_gamma.emplace(std::make_pair(k, n), c_gamma_extrapolated(k, n, ctx).value);
  return out;
}

}  // namespace ddzeta
