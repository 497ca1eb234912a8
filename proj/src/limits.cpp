#include "ddzeta/limits.hpp"

namespace ddzeta {

namespace {

Real mag(const Complex& z) { return abs(z.re) + abs(z.im); }

}  // namespace

ReverseValue reverse_value_closed_lambda(int m, int n, Workspace& ws) {
  if (m < 0 || n < 0) throw std::invalid_argument("reverse_value: m, n must be >= 0");
  if ((m + n) % 2 != 0) throw ParityError("reverse_value: m+n must be even");
  const PrecisionContext& ctx = ws.ctx();
  if (m == 0 && n >= 2) {
    // excluded case: Phi2(0, -n+eps) = +1/(2 eps) + O(1)
    ReverseValue rv{ReverseStatus::Divergent, ctx.complex(0), Rational(1, 2), std::nullopt};
    return rv;
  }
  auto conv = BernoulliConvention::PlusHalf;  // resolved by the (0,0) ladder oracle
  unsigned mu_ = static_cast<unsigned>(m), nu = static_cast<unsigned>(n);
  Real v = ctx.real(bernoulli(mu_ + nu + 2, conv) /
                    Rational(static_cast<long>(nu + 1) * (mu_ + nu + 2)));
  v += ctx.log_2pi() * ctx.real(bernoulli(mu_ + nu + 1, conv) / Rational(mu_ + nu + 1));
  for (unsigned k = 1; k <= nu; k += 2) {
    Rational coef = Rational(binomial(nu, k)) * Rational(k + 1) / bernoulli(k + 1, conv) *
                    (bernoulli(mu_ + nu - k + 1, conv) / Rational(mu_ + nu - k + 1));
    Real zp = zeta_d(ctx.complex(-static_cast<long>(k)), 1, ctx).re;
    v -= ctx.real(coef) * zp;
  }
  for (unsigned k = 2; k <= nu; k += 2) {
    Rational coef = Rational(binomial(nu, k)) *
                    (bernoulli(mu_ + nu - k + 1, conv) / Rational(mu_ + nu - k + 1));
    if (coef != 0) {
      Real kb = ctx.real(Rational(factorial(k))) * ws.b_k(static_cast<int>(k));
      v += ctx.real(coef) * (kb - ws.a_k(static_cast<int>(k)));
    }
  }
  Real tail = ctx.real(Rational(factorial(mu_) * factorial(nu), factorial(mu_ + nu + 1)));
  if (m % 2 != 0) tail = -tail;
  Complex mval = mangoldt_m(ctx.complex(-(static_cast<long>(mu_ + nu) + 1)), ctx);
  Complex value = Complex(v) - Complex(tail) * mval;
  return {ReverseStatus::Convergent, value, std::nullopt, std::nullopt};
}

Complex residue_closed_mu(int m, int n, Workspace& ws) {
  if (m < 0 || n < 0) throw std::invalid_argument("residue_closed_mu: m, n must be >= 0");
  if ((m + n) % 2 != 1) throw ParityError("residue_closed_mu: m+n must be odd");
  const PrecisionContext& ctx = ws.ctx();
  int two_l = m + n + 1;
  unsigned mu_ = static_cast<unsigned>(m), nu = static_cast<unsigned>(n);
  Real first = ws.d_k_mu(two_l) *
               ctx.real(Rational(factorial(mu_) * factorial(nu), factorial(mu_ + nu + 1)));
  if (n % 2 != 0) first = -first;
  Real acc = first;
  for (unsigned k = 2; k <= nu; k += 2) {
    // (-1)^k = +1 for even k; kept literal to mirror the statement
    Real term = ctx.real(Rational(binomial(nu, k)) *
                         zeta_int(static_cast<long>(k) - m - n)) *
                ws.d_k_mu(static_cast<int>(k));
    acc += term;
  }
  return Complex(acc);
}

std::vector<Real> geometric_ladder(const Real& eps0, int len) {
  std::vector<Real> out;
  out.reserve(static_cast<size_t>(len));
  Real e = eps0;
  for (int j = 0; j < len; ++j) {
    out.push_back(e);
    e = e / 2;
  }
  return out;
}

SingularExpansion fit_singular_expansion(int m, int n, const SeriesSpec& series,
                                         const std::vector<Real>& ladder,
                                         const EvalParams& p, Workspace& ws) {
  if (n < 0) throw std::invalid_argument("fit_singular_expansion: n must be >= 0");
  if (ladder.size() < 4)
    throw std::invalid_argument("fit_singular_expansion: ladder needs >= 4 points");
  const PrecisionContext& ctx = p.ctx;
  mpfr_prec_t bits = ctx.bits;
  Complex s1 = ctx.complex(-m);

  // expected singular sets at the limit point; any additional match at a
  // ladder point is a collision
  Real limit_tol = Real::pow10(-9, bits);
  auto expected = classify_singularity(s1, ctx.complex(-n), series, limit_tol, ws.zeros());

  EvalParams pe = p;
  pe.allow_singular = false;

  SingularExpansion out;
  out.fit_residual = Real(0L, bits);
  out.max_zero_tail_beyond_50 = Real(0L, bits);
  out.ladder.reserve(ladder.size());
  for (const Real& eps : ladder) {
    if (!(eps > 0.0)) throw std::invalid_argument("fit ladder: eps must be positive");
    Complex s2(-Real(n, bits) + eps, Real(0L, bits));
    Real tol = min(eps / 4, Real::pow10(-4, bits));
    auto here = classify_singularity(s1, s2, series, tol, ws.zeros());
    for (const auto& h : here) {
      bool known = false;
      for (const auto& e : expected)
        if (e.set == h.set && e.l == h.l && e.n == h.n) known = true;
      if (!known)
        throw SingularCollisionError("ladder point eps = " + eps.to_string(6) +
                                     " lands on " + h.label);
    }
    EvalResult r = eval_phi2(s1, s2, series, pe, ws);
    if (r.zero_pair_contrib.size() > 50) {
      Complex tail(0L, bits);
      for (size_t i = 50; i < r.zero_pair_contrib.size(); ++i)
        tail += r.zero_pair_contrib[i];
      out.max_zero_tail_beyond_50 = max(out.max_zero_tail_beyond_50, abs(tail));
    }
    out.ladder.emplace_back(eps, r.value);
  }

  // least-squares for [eps^-2, eps^-1, 1] via the 3x3 normal equations
  Complex sum_b0(0L, bits), sum_b1(0L, bits), sum_b2(0L, bits);
  Real g00(0L, bits), g01(0L, bits), g02(0L, bits), g11(0L, bits), g12(0L, bits),
      g22(0L, bits);
  for (auto& [eps, v] : out.ladder) {
    Real x2 = 1L / (eps * eps);
    Real x1 = 1L / eps;
    g00 += x2 * x2;
    g01 += x2 * x1;
    g02 += x2;
    g11 += x1 * x1;
    g12 += x1;
    g22 += Real(1, bits);
    sum_b0 += x2 * v;
    sum_b1 += x1 * v;
    sum_b2 += v;
  }
  Real det = g00 * (g11 * g22 - g12 * g12) - g01 * (g01 * g22 - g12 * g02) +
             g02 * (g01 * g12 - g11 * g02);
  // Gaussian elimination with partial pivoting on the normal equations
  Real G[3][3] = {{g00, g01, g02}, {g01, g11, g12}, {g02, g12, g22}};
  Complex B[3] = {sum_b0, sum_b1, sum_b2};
  for (int i = 0; i < 3; ++i) {
    int piv = i;
    for (int r = i + 1; r < 3; ++r)
      if (abs(G[r][i]) > abs(G[piv][i])) piv = r;
    std::swap(G[i], G[piv]);
    std::swap(B[i], B[piv]);
    for (int r = i + 1; r < 3; ++r) {
      Real f = G[r][i] / G[i][i];
      for (int c2 = i; c2 < 3; ++c2) G[r][c2] -= f * G[i][c2];
      B[r] -= Complex(f) * B[i];
    }
  }
  Complex x[3];
  for (int i = 2; i >= 0; --i) {
    Complex acc = B[i];
    for (int c2 = i + 1; c2 < 3; ++c2) acc -= Complex(G[i][c2]) * x[c2];
    x[i] = acc / Real(G[i][i]);
  }
  out.c2 = x[0];
  out.c1 = x[1];
  out.c0 = x[2];
  out.ill_conditioned = (abs(det) < Real::pow10(-(2 * ctx.working_decimal() / 3), bits) * g00 * g11 * g22);

  Real rss(0L, bits);
  for (auto& [eps, v] : out.ladder) {
    Complex model = out.c2 / Real(eps * eps) + out.c1 / eps + out.c0;
    Real d2 = mag(v - model);
    rss += d2 * d2;
  }
  out.fit_residual = sqrt(rss / Real(static_cast<long>(out.ladder.size()), bits));
  return out;
}

C1ClosedFormReport check_c1_closed_form_lambda(int m, int n, const EvalParams& p,
                                               Workspace& ws) {
  if (m > -1) throw std::invalid_argument("check_c1: m must be <= -1");
  if ((m + n) % 2 == 0) throw ParityError("check_c1: m+n must be odd");
  int two_l = m + n + 1;
  if (two_l < 2 || n < two_l)
    throw std::invalid_argument("check_c1: need n >= 2l = m+n+1 >= 2");
  const PrecisionContext& ctx = p.ctx;
  unsigned nu = static_cast<unsigned>(n);

  // assembled constants, negated relative to the doubly-singular display to
  // match the raw Laurent orientation of the evaluator
  Real inner = ctx.real(Rational(factorial(static_cast<unsigned>(two_l)))) *
                   ws.b_k(two_l) -
               ws.a_k(two_l);
  Real hsum(0L, ctx.bits);
  for (int j = 0; j <= two_l - 1; ++j) hsum += ctx.real(1L) / (n - j);
  Real closed = ctx.real(Rational(binomial(nu, static_cast<unsigned>(two_l)))) *
                (inner - hsum + ctx.euler_gamma());
  for (unsigned k = 2; k <= nu; k += 2) {
    if (static_cast<int>(k) == two_l) continue;
    long arg = static_cast<long>(k) - m - n;  // = k - 2l + 1, odd
    Real zk = (arg <= 0) ? ctx.real(zeta_int(arg))
                         : zeta_d(ctx.complex(arg), 0, ctx).re;
    closed += ctx.real(Rational(binomial(nu, k))) * zk;
  }
  closed -= c_gamma_extrapolated(two_l, n, ctx).value /
            ctx.real(Rational(factorial(static_cast<unsigned>(two_l))));
  closed = -closed;

  auto ladder = geometric_ladder(Real::pow10(-6, ctx.bits), 8);
  SingularExpansion fit = fit_singular_expansion(m, n, SeriesSpec::lambda(), ladder, p, ws);
  return {fit.c1, closed, mag(fit.c1 - Complex(closed))};
}

}  // namespace ddzeta
