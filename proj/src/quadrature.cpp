#include "ddzeta/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace ddzeta {

namespace {

std::mutex gl_mutex;
std::map<std::pair<int, mpfr_prec_t>, GaussLegendreRule> gl_cache;

// Legendre P_n(x) and P_n'(x) by the three-term recurrence.
void legendre_pd(int n, const Real& x, Real& p, Real& dp) {
  mpfr_prec_t bits = x.prec();
  Real p0(1, bits), p1 = x;
  for (int k = 2; k <= n; ++k) {
    Real pk = (Real(2 * k - 1, bits) * x * p1 - Real(k - 1, bits) * p0) / k;
    p0 = p1;
    p1 = pk;
  }
  p = p1;
  // (1-x^2) P_n' = n (P_{n-1} - x P_n)
  dp = Real(n, bits) * (p0 - x * p1) / (Real(1, bits) - x * x);
}

GaussLegendreRule build_rule(int n, mpfr_prec_t bits) {
  GaussLegendreRule r;
  r.nodes.reserve(static_cast<size_t>(n));
  r.weights.reserve(static_cast<size_t>(n));
  int iters = 6 + static_cast<int>(std::log2(static_cast<double>(bits) / 50.0 + 1.0)) * 2;
  for (int i = 0; i < n; ++i) {
    double x0 = std::cos(M_PI * (4.0 * i + 3.0) / (4.0 * n + 2.0));
    Real x = Real::from_double(x0, bits);
    Real p(bits), dp(bits);
    for (int it = 0; it < iters; ++it) {
      legendre_pd(n, x, p, dp);
      x = x - p / dp;
    }
    legendre_pd(n, x, p, dp);
    Real w = Real(2, bits) / ((Real(1, bits) - x * x) * dp * dp);
    r.nodes.push_back(std::move(x));
    r.weights.push_back(std::move(w));
  }
  return r;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int n, mpfr_prec_t bits) {
  std::lock_guard<std::mutex> lock(gl_mutex);
  auto key = std::make_pair(n, bits);
  auto it = gl_cache.find(key);
  if (it == gl_cache.end()) it = gl_cache.emplace(key, build_rule(n, bits)).first;
  return it->second;
}

std::vector<Panel> grade_panels(double d_min, double T, int target_decimal) {
  double digits = target_decimal + 9.0;
  double lo = 0.0;
  double width = 1.5 * d_min;
  std::vector<Panel> panels;
  while (lo < T) {
    double hi = std::min(lo + width, T);
    // nearest singularity: on the imaginary-t axis at height >= d_min
    double dist = std::hypot(lo, d_min);
    double delta = 2.0 * dist / (hi - lo);
    double rho = delta + std::sqrt(1.0 + delta * delta);
    int order = static_cast<int>(std::ceil(digits * 2.302585 / (2.0 * std::log(rho)))) + 6;
    order = std::min(std::max(order, 8), 320);
    panels.push_back({lo, hi, order});
    lo = hi;
    width *= 2.0;
  }
  return panels;
}

LineIntegralResult integrate_line(const std::function<Complex(const Real&)>& f,
                                  double d_min, double T,
                                  const PrecisionContext& ctx,
                                  bool estimate_error) {
  mpfr_prec_t bits = ctx.bits;
  LineIntegralResult out;
  out.value = Complex(0L, bits);
  out.error_estimate = Real(0L, bits);
  auto panel_sum = [&](const Panel& p, int order, bool negative_side) {
    const GaussLegendreRule& rule = gauss_legendre(order, bits);
    Real a = Real::from_double(negative_side ? -p.hi : p.lo, bits);
    Real b = Real::from_double(negative_side ? -p.lo : p.hi, bits);
    Real half_len = (b - a) / 2;
    Real mid = (a + b) / 2;
    Complex acc(0L, bits);
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
      Real t = mid + half_len * rule.nodes[i];
      acc += rule.weights[i] * f(t);
      ++out.evaluations;
    }
    return half_len * acc;
  };
  for (bool neg : {false, true}) {
    for (const Panel& p : grade_panels(d_min, T, ctx.target_decimal)) {
      Complex coarse = panel_sum(p, p.order, neg);
      if (estimate_error) {
        Complex fine = panel_sum(p, 2 * p.order, neg);
        out.error_estimate += abs(fine - coarse);
        out.value += fine;
      } else {
        out.value += coarse;
      }
    }
  }
  return out;
}

}  // namespace ddzeta
