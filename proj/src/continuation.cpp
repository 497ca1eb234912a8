#include "ddzeta/continuation.hpp"

#include <cmath>
#include <sstream>

namespace ddzeta {

namespace {

Real mag(const Complex& z) { return abs(z.re) + abs(z.im); }

std::string short_str(const Real& x) { return x.to_string(24); }

double quantize_dmin(double d) {
  static const double levels[] = {1.0, 0.5, 0.25, 0.12, 0.06, 0.03};
  for (double lv : levels)
    if (d >= lv) return lv;
  throw QuadratureError("contour passes too close to a pole of the integrand");
}

}  // namespace

Workspace::Workspace(PrecisionContext ctx, ZeroTable zeros)
    : ctx_(std::move(ctx)), zeros_(std::move(zeros)) {
  lgamma_rho_.resize(zeros_.count());
  zetap_rho_.resize(zeros_.count());
}

const Real& Workspace::a_k(int k) {
  auto it = a_.find(k);
  if (it == a_.end()) it = a_.emplace(k, laurent_a(k, ctx_)).first;
  return it->second;
}

const Real& Workspace::b_k(int l) {
  auto it = b_.find(l);
  if (it == b_.end()) it = b_.emplace(l, laurent_b_real(l, ctx_)).first;
  return it->second;
}

const Real& Workspace::c_k_mu(int k) {
  auto it = c_mu_.find(k);
  if (it == c_mu_.end()) it = c_mu_.emplace(k, laurent_c(k, ctx_)).first;
  return it->second;
}

const Real& Workspace::d_k_mu(int k) {
  auto it = d_mu_.find(k);
  if (it == d_mu_.end()) it = d_mu_.emplace(k, laurent_d_mu(k, ctx_)).first;
  return it->second;
}

const Complex& Workspace::m_neg(int k) {
  auto it = m_neg_.find(k);
  if (it == m_neg_.end())
    it = m_neg_.emplace(k, mangoldt_m(ctx_.complex(-k), ctx_)).first;
  return it->second;
}

const Real& Workspace::zeta_real(int j) {
  auto it = zi_.find(j);
  if (it == zi_.end())
    it = zi_.emplace(j, zeta_d(ctx_.complex(j), 0, ctx_).re).first;
  return it->second;
}

const Complex& Workspace::loggamma_rho(size_t n) {
  if (!lgamma_rho_[n]) {
    Real g(ctx_.bits);
    mpfr_set(g.raw(), zeros_.gammas[n].raw(), MPFR_RNDN);
    lgamma_rho_[n] = loggamma(Complex(ctx_.real(1L) / 2, g), ctx_);
  }
  return *lgamma_rho_[n];
}

const Complex& Workspace::zetap_rho(size_t n) {
  if (!zetap_rho_[n]) {
    Real g(ctx_.bits);
    mpfr_set(g.raw(), zeros_.gammas[n].raw(), MPFR_RNDN);
    zetap_rho_[n] = zeta_d(Complex(ctx_.real(1L) / 2, g), 1, ctx_);
  }
  return *zetap_rho_[n];
}

std::vector<SingularityMatch> classify_singularity(const Complex& s1, const Complex& s2,
                                                   const SeriesSpec& series,
                                                   const Real& tol,
                                                   const ZeroTable& zeros) {
  std::vector<SingularityMatch> out;
  Complex w = s1 + s2;
  mpfr_prec_t bits = s2.prec();
  auto near_real_value = [&](const Complex& z, double v) {
    return (abs(z.re - Real::from_double(v, bits)) + abs(z.im)) <= tol;
  };
  bool lambda_case = (series.kind == SeriesKind::Lambda);

  if (lambda_case && near_real_value(s2, 1.0))
    out.push_back({SingularSetId::S2One, 0, 0, "s2 = 1"});

  // s2 = -l  (l >= 2)
  {
    long l;
    if (s2.im.is_zero() || abs(s2.im) <= tol) {
      if (near_integer(s2.re, tol, l) && l <= -2)
        out.push_back({SingularSetId::S2NegInt, -l, 0, "s2 = " + std::to_string(l)});
    }
  }
  // sum sets
  {
    long v;
    if ((w.im.is_zero() || abs(w.im) <= tol) && near_integer(w.re, tol, v)) {
      if (lambda_case) {
        if (v <= 2)
          out.push_back({SingularSetId::SumTwoMinusL, 2 - v, 0,
                         "s1+s2 = " + std::to_string(v)});
      } else {
        if (v <= 1)
          out.push_back({SingularSetId::SumOneMinusK, 1 - v, 0,
                         "s1+s2 = " + std::to_string(v)});
      }
    }
  }
  // rho sets: s2 = -l + rho_n and s1+s2 = 1 + rho_n
  Real half = Real(1, bits) / 2;
  for (size_t n = 0; n < zeros.count(); ++n) {
    Real g(bits);
    mpfr_set(g.raw(), zeros.gammas[n].raw(), MPFR_RNDN);
    for (int conj_sign : {1, -1}) {
      Real gg = (conj_sign > 0) ? g : -g;
      if (abs(abs(s2.im) - g) <= tol) {
        Real re_off = s2.re - half;  // -l candidate
        long l;
        if (near_integer(re_off, tol, l) && l <= 0 && abs(s2.im - gg) <= tol)
          out.push_back({SingularSetId::S2Rho, -l, static_cast<long>(n + 1),
                         "s2 = -" + std::to_string(-l) + " + rho_" + std::to_string(n + 1)});
      }
      if (abs(w.im - gg) <= tol && abs(w.re - (Real(1, bits) + half)) <= tol)
        out.push_back({SingularSetId::SumOneRho, 0, static_cast<long>(n + 1),
                       "s1+s2 = 1 + rho_" + std::to_string(n + 1)});
    }
  }
  // plugin pole sets
  if (series.kind == SeriesKind::Plugin && series.plugin && series.plugin->delta) {
    const Real& delta = *series.plugin->delta;
    bool skip = (abs(delta - Real(1, bits)) <= tol);
    if (!skip) {
      if (abs(s2.im) <= tol) {
        long l;
        if (near_integer(s2.re - delta, tol, l) && l <= 0)
          out.push_back({SingularSetId::S2DeltaMinusL, -l, 0, "s2 = -l + delta"});
      }
      if (abs(w.im) <= tol && abs(w.re - (Real(1, bits) + delta)) <= tol)
        out.push_back({SingularSetId::SumOneDelta, 0, 0, "s1+s2 = 1 + delta"});
    }
  }
  return out;
}

namespace {

struct ContourSetup {
  int n_eff;
  double t_half;
  double d_min;
  Real abscissa;  // N_eff - eta
};

ContourSetup contour_setup(const Complex& s1, const Complex& s2, const EvalParams& p) {
  const PrecisionContext& ctx = p.ctx;
  Complex w = s1 + s2;
  double re_w = w.re.to_double();
  double re_s2 = s2.re.to_double();
  double eta = p.eta.to_double();
  int n_eff = p.N;
  // validity walls: contour must stay right of the zeta pole z = 1-w and of
  // every Gamma(s2+z) pole (Re z = -Re s2), with margin
  const double margin = 0.4;
  n_eff = std::max<int>(n_eff, static_cast<int>(std::ceil(1.0 - re_w + eta + margin)));
  n_eff = std::max<int>(n_eff, static_cast<int>(std::ceil(-re_s2 + eta + margin)));
  n_eff = std::max(n_eff, 2);
  double x0 = n_eff - eta;
  // nearest integrand pole to the contour
  double d = std::min(eta, 1.0 - eta);
  d = std::min(d, std::abs(x0 - (1.0 - re_w)));
  for (int j = 0;; ++j) {
    double px = -re_s2 - j;
    if (px < -1.5) break;
    d = std::min(d, std::abs(x0 - px));
  }
  d = std::min(d, std::abs(x0 + 1.0));
  double T = p.T.to_double();
  if (T <= 0)
    T = ctx.target_decimal * 2.302585 / M_PI + std::abs(w.im.to_double()) + 10.0;
  ContourSetup cs;
  cs.n_eff = n_eff;
  cs.t_half = T;
  cs.d_min = quantize_dmin(d);
  cs.abscissa = Real(n_eff, ctx.bits) - p.eta;
  return cs;
}

// cached Gamma(-z) * (series weight at -z) along the contour; plug-ins are
// memoized only when they carry a cache tag (distinct instances would
// otherwise collide)
Complex contour_invariant(const Complex& z, const SeriesSpec& series, Workspace& ws,
                          const std::string& key) {
  bool cacheable =
      series.kind != SeriesKind::Plugin || !series.plugin->cache_tag.empty();
  auto& cache = ws.contour_cache();
  if (cacheable) {
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const PrecisionContext& ctx = ws.ctx();
  Complex gz = exp(loggamma(-z, ctx));
  Complex val(0L, ctx.bits);
  switch (series.kind) {
    case SeriesKind::Lambda:
      val = gz * mangoldt_m(-z, ctx);
      break;
    case SeriesKind::Mu:
      val = gz / zeta_d(-z, 0, ctx);
      break;
    case SeriesKind::Plugin:
      val = gz * series.plugin->phi(-z, ctx) / zeta_d(-z, 0, ctx);
      break;
  }
  if (cacheable) cache.emplace(key, val);
  return val;
}

}  // namespace

EvalResult eval_phi2(const Complex& s1, const Complex& s2, const SeriesSpec& series,
                     const EvalParams& p, Workspace& ws) {
  const PrecisionContext& ctx = p.ctx;
  mpfr_prec_t bits = ctx.bits;
  bool lambda_case = (series.kind == SeriesKind::Lambda);
  bool mu_case = (series.kind == SeriesKind::Mu);

  EvalResult res;
  res.error_estimate = Real(0L, bits);

  Real singular_tol = Real::pow10(-(ctx.target_decimal / 2), bits);
  auto matches = classify_singularity(s1, s2, series, singular_tol, ws.zeros());
  if (!matches.empty()) {
    if (!p.allow_singular) throw SingularityError(matches);
    res.singular = matches;
  }
  if (s2.im.is_zero() && s2.re.is_integer() && s2.re.sign() <= 0)
    throw PoleError("eval_phi2: s2 at a non-positive integer; use the limit machinery");

  Complex w = s1 + s2;
  ContourSetup cs = contour_setup(s1, s2, p);
  res.n_used = cs.n_eff;
  res.t_used = cs.t_half;

  Real near_tol = singular_tol;
  auto zeta_pole_at = [&](long target) {
    return abs(w.re - Real(target, bits)) + abs(w.im) <= near_tol;
  };

  // ---- boundary terms ------------------------------------------------
  Complex phi0 = ctx.complex(1);  // Phi(0;alpha) = 1 for the mu instantiation
  if (series.kind == SeriesKind::Plugin)
    phi0 = series.plugin->phi(ctx.complex(0), ctx);

  if (series.kind == SeriesKind::Plugin && series.plugin->delta &&
      series.plugin->residue_at_delta) {
    const Real& delta = *series.plugin->delta;
    Complex dterm =
        exp(loggamma(s2 - Complex(delta), ctx) + loggamma(Complex(delta), ctx) -
            loggamma(s2, ctx)) *
        (*series.plugin->residue_at_delta) * zeta_d(w - Complex(delta), 0, ctx);
    res.terms.emplace_back("delta_term", dterm);
  }

  if (lambda_case) {
    if (zeta_pole_at(2) || (abs(s2.re - Real(1, bits)) + abs(s2.im)) <= near_tol) {
      res.omitted_terms.push_back("boundary_term");
      res.terms.emplace_back("boundary_term", ctx.complex(0));
    } else {
      res.terms.emplace_back("boundary_term", zeta_d(w - 1, 0, ctx) / (s2 - 1));
    }
    if (zeta_pole_at(1)) {
      res.omitted_terms.push_back("log2pi_term");
      res.terms.emplace_back("log2pi_term", ctx.complex(0));
    } else {
      res.terms.emplace_back("log2pi_term", -(Complex(ctx.log_2pi()) * zeta_d(w, 0, ctx)));
    }
  } else {
    if (zeta_pole_at(1)) {
      res.omitted_terms.push_back("phi0_term");
      res.terms.emplace_back("phi0_term", ctx.complex(0));
    } else {
      res.terms.emplace_back("phi0_term", -2L * (phi0 * zeta_d(w, 0, ctx)));
    }
  }

  // ---- k sums ----------------------------------------------------------
  Complex odd_sum(0L, bits), even_sum(0L, bits);
  Complex binom(1L, bits);         // binom(-s2, k), updated per k
  Complex rising(1L, bits);        // (s2)_k
  Real k_factorial(1, bits);
  for (int k = 1; k <= cs.n_eff - 1; ++k) {
    binom = binom * (-s2 - (k - 1)) / Real(k, bits);
    rising = rising * (s2 + (k - 1));
    k_factorial *= Real(k, bits);
    if (zeta_pole_at(1 - k)) {
      res.omitted_terms.push_back("k_term_" + std::to_string(k));
      continue;
    }
    bool even = (k % 2 == 0);
    auto zw = zeta_derivs(w + k, even ? 1 : 0, ctx);
    if (!even) {
      if (lambda_case) {
        odd_sum += binom * ws.m_neg(k) * zw[0];
      } else {
        Complex phik = mu_case ? ctx.complex(1) : series.plugin->phi(ctx.complex(-k), ctx);
        Real bk1 = ctx.real(bernoulli(static_cast<unsigned>(k) + 1));
        odd_sum -= binom * phik * (Real(k + 1, bits) / bk1) * zw[0];
      }
    } else {
      Complex gamma_ratio = digamma(s2 + k, ctx) * rising;  // Gamma'(s2+k)/Gamma(s2)
      if (lambda_case) {
        Complex brace = (k_factorial * ws.b_k(k) - ws.a_k(k)) * zw[0] - zw[1];
        even_sum -= binom * brace - (gamma_ratio / k_factorial) * zw[0];
      } else {
        Complex phik = mu_case ? ctx.complex(1) : series.plugin->phi(ctx.complex(-k), ctx);
        Real pref0 = 2L * pow_si(2L * ctx.pi(), k) / ws.zeta_real(k + 1);
        if ((k / 2) % 2 == 1) pref0 = -pref0;
        Complex pref = phik * pref0;
        Real ck = mu_case ? ws.c_k_mu(k) : series.plugin->c_k(k, ctx);
        Complex brace = pref * (ws.b_k(k) * zw[0] - zw[1] / k_factorial) + ck * zw[0];
        even_sum += binom * brace - gamma_ratio * (pref / (k_factorial * k_factorial)) * zw[0];
      }
    }
  }
  res.terms.emplace_back("odd_k_sum", odd_sum);
  res.terms.emplace_back("even_k_sum", even_sum);

  // ---- zero sum ---------------------------------------------------------
  Complex lg_s2 = loggamma(s2, ctx);
  Complex inv_gamma_s2 = exp(-lg_s2);
  bool real_inputs = s1.im.is_zero() && s2.im.is_zero();
  size_t n_zeros = std::min<size_t>(p.zero_policy.max_zeros, ws.zeros().count());
  Complex zero_sum(0L, bits);
  Real half = ctx.real(1L) / 2;
  res.zero_pair_contrib.reserve(n_zeros);
  for (size_t n = 0; n < n_zeros; ++n) {
    Real g(bits);
    mpfr_set(g.raw(), ws.zeros().gammas[n].raw(), MPFR_RNDN);
    Complex rho(half, g);
    bool skip = false;
    for (const auto& m : matches)
      if (m.set == SingularSetId::SumOneRho && m.n == static_cast<long>(n + 1)) skip = true;
    if (skip) {
      res.omitted_terms.push_back("zero_term_" + std::to_string(n + 1));
      res.zero_pair_contrib.push_back(ctx.complex(0));
      continue;
    }
    auto pair_term = [&](const Complex& r) {
      Complex t = exp(loggamma(s2 - r, ctx) +
                      ((r.im.sign() >= 0) ? ws.loggamma_rho(n) : conj(ws.loggamma_rho(n))) -
                      lg_s2) *
                  zeta_d(w - r, 0, ctx);
      if (lambda_case) return t;
      Complex zp = (r.im.sign() >= 0) ? ws.zetap_rho(n) : conj(ws.zetap_rho(n));
      if (mu_case) return t / zp;
      return t * series.plugin->phi(r, ctx) / zp;
    };
    Complex contrib = pair_term(rho);
    contrib += real_inputs ? conj(contrib) : pair_term(conj(rho));
    if (lambda_case) contrib = -contrib;
    res.zero_pair_contrib.push_back(contrib);
    zero_sum += contrib;
  }
  if (mu_case || series.kind == SeriesKind::Plugin) {
    Real cond_thr = Real::pow10(-(ctx.target_decimal / 4), bits);
    for (size_t n = 0; n < n_zeros; ++n)
      if (abs(ws.zetap_rho(n)) < cond_thr) {
        res.warnings.push_back("small |zeta'(rho_" + std::to_string(n + 1) +
                               ")| may amplify rounding");
        break;
      }
  }
  res.terms.emplace_back("zero_sum", zero_sum);

  // ---- contour integral ---------------------------------------------------
  std::ostringstream key_base;
  key_base << static_cast<int>(series.kind) << '|';
  if (series.kind == SeriesKind::Plugin) key_base << series.plugin->cache_tag << '|';
  key_base << cs.n_eff << '|' << short_str(p.eta) << '|';
  std::string kb = key_base.str();
  auto integrand = [&](const Real& t) {
    Complex z(cs.abscissa, t);
    Complex inv = contour_invariant(z, series, ws, kb + short_str(t));
    return inv * exp(loggamma(s2 + z, ctx) - lg_s2) * zeta_d(w + z, 0, ctx);
  };
  LineIntegralResult line =
      integrate_line(integrand, cs.d_min, cs.t_half, ctx, p.estimate_quad_error);
  res.quad_evaluations = line.evaluations;
  Real two_pi = 2L * ctx.pi();
  Complex contour = line.value / two_pi;
  res.terms.emplace_back("contour_integral", contour);

  // ---- assemble -----------------------------------------------------------
  Complex value(0L, bits);
  for (auto& [label, term] : res.terms) value += term;
  res.value = value;

  Real zero_tail(0L, bits);
  if (n_zeros > 0) {
    Real last(bits);
    mpfr_set(last.raw(), ws.zeros().gammas[n_zeros - 1].raw(), MPFR_RNDN);
    if (last > abs(s2.im) + 12L) zero_tail = zero_sum_tail_bound(s2, last, ctx);
  }
  res.error_estimate = line.error_estimate * mag(inv_gamma_s2) / two_pi + zero_tail +
                       Real::pow10(-(ctx.target_decimal + 2), bits) * (mag(value) + 1L);
  return res;
}

EvalResult eval_phi2_lambda(const Complex& s1, const Complex& s2,
                            const EvalParams& p, Workspace& ws) {
  return eval_phi2(s1, s2, SeriesSpec::lambda(), p, ws);
}

EvalResult eval_phi2_mu(const Complex& s1, const Complex& s2,
                        const EvalParams& p, Workspace& ws) {
  return eval_phi2(s1, s2, SeriesSpec::mu(), p, ws);
}

std::pair<Complex, Complex> mellin_barnes_selftest(const Complex& s, const Complex& lam,
                                                   const Real& c, const EvalParams& p) {
  const PrecisionContext& ctx = p.ctx;
  mpfr_prec_t bits = ctx.bits;
  if (!(s.re > 0.0)) throw std::invalid_argument("mellin_barnes: need Re s > 0");
  if (!(c > -s.re.to_double()) || !(c < 0.0))
    throw std::invalid_argument("mellin_barnes: need -Re s < c < 0");
  if (abs(lam).is_zero()) throw std::invalid_argument("mellin_barnes: lambda must be nonzero");
  Real arg_lam = arg(lam);
  Real pi = ctx.pi();
  if (!(abs(arg_lam) < pi * Real::from_double(1.0 - 1e-12, bits)))
    throw std::invalid_argument("mellin_barnes: need |arg lambda| < pi");

  Complex lg_s = loggamma(s, ctx);
  Complex log_lam = log(lam);
  auto f = [&](const Real& t) {
    Complex z(c, t);
    return exp(loggamma(s + z, ctx) - lg_s + loggamma(-z, ctx) + z * log_lam);
  };
  double d = std::min(-c.to_double(), s.re.to_double() + c.to_double());
  for (int k = 1; k <= 3; ++k) d = std::min(d, std::abs(c.to_double() - k));
  double decay = M_PI - std::abs(arg_lam.to_double());
  double T = (ctx.target_decimal + 8) * 2.302585 / decay + 6.0;
  LineIntegralResult line = integrate_line(f, quantize_dmin(d), T, ctx, true);
  Complex contour = line.value / (2L * ctx.pi());
  Complex reference = exp(-(s * log(1L + lam)));
  return {contour, reference};
}

}  // namespace ddzeta
