// Laurent-expansion constants at the trivial zeros and gamma poles:
//   a_k = -zeta''(-k) / (2 zeta'(-k))                  (k even)
//   b_l = (-1)^l/l! (H_l - gamma)                      (l >= 0)
//   c_k = -zeta''(-k) / (2 zeta'(-k)^2)                (k even, 1/zeta case)
//   D_k = Phi(-k;alpha)/zeta'(-k)                      (k even)
//   C(k,n): constant term of Gamma'(-n+k+eps)/Gamma(-n+eps) after the
//           1/eps pole is removed, obtained by Richardson extrapolation.
#ifndef DDZETA_LAURENT_HPP
#define DDZETA_LAURENT_HPP

#include <map>
#include <utility>
#include <vector>

#include "ddzeta/special.hpp"

namespace ddzeta {

struct LaurentConstants {
  std::map<int, Real> a;                              // even k
  std::map<int, std::pair<GammaLinear, Real>> b;      // l -> exact + realization
  std::map<int, Real> c;                              // even k
  std::map<int, Real> d_mu;                           // even k, mu case: 1/zeta'(-k)
  std::map<std::pair<int, int>, Real> c_gamma;        // (k,n) -> C(k,n)
};

// a_k, b_l, c_k for k,l <= kmax, D_k for the mu series, and C(k,n) for the
// requested (k,n) pairs (even k <= n).  D_k is evaluated both as
// 1/zeta'(-k) and through the functional-equation closed form
// (-1)^{k/2} 2 (2pi)^k / (k! zeta(k+1)); disagreement beyond the working
// tolerance is an internal error.
LaurentConstants laurent_constants(int kmax, const std::vector<std::pair<int, int>>& cn_pairs,
                                   const PrecisionContext& ctx);

// Single constants (used by the evaluators through their caches).
Real laurent_a(int k, const PrecisionContext& ctx);
Real laurent_b_real(int l, const PrecisionContext& ctx);
Real laurent_c(int k, const PrecisionContext& ctx);
Real laurent_d_mu(int k, const PrecisionContext& ctx);

struct CGammaResult {
  Real value;
  Real ladder_spread;  // |last - previous| across Richardson columns
};

// C(k,n) by Richardson extrapolation over a geometric eps ladder; the
// spread of the two deepest extrapolants is reported as a self-consistency
// measure.
CGammaResult c_gamma_extrapolated(int k, int n, const PrecisionContext& ctx,
                                  int ladder_len = 12);

}  // namespace ddzeta

#endif
