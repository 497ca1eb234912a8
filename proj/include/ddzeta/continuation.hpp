// Meromorphic continuation of Phi2(s1,s2;1,Lambda) and Phi2(s1,s2;1,mu):
// boundary terms, trivial-zero sums, nontrivial-zero sums with conjugate
// pairing, and the shifted Mellin-Barnes contour integral.
//
// The displayed expression with truncation parameter N equals the
// continued function only while no pole of zeta(s1+s2+z) or Gamma(s2+z)
// lies to the left of the contour Re z = N - eta beyond the ones the
// finite sums account for; concretely Re(s1+s2) > 1 - N + eta and
// Re(s2) > -(N - eta).  The evaluator raises N as needed to satisfy both
// walls with margin, so the requested N acts as a lower bound.
#ifndef DDZETA_CONTINUATION_HPP
#define DDZETA_CONTINUATION_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ddzeta/laurent.hpp"
#include "ddzeta/quadrature.hpp"
#include "ddzeta/series.hpp"
#include "ddzeta/zeros.hpp"

namespace ddzeta {

enum class SingularSetId {
  S2One,          // s2 = 1                      (Lambda)
  S2NegInt,       // s2 = -l, l >= 2
  SumTwoMinusL,   // s1 + s2 = 2 - l, l >= 0     (Lambda)
  SumOneMinusK,   // s1 + s2 = 1 - k, k >= 0     (mu / general)
  S2Rho,          // s2 = -l + rho_n
  SumOneRho,      // s1 + s2 = 1 + rho_n
  S2DeltaMinusL,  // s2 = -l + delta             (plugin with pole)
  SumOneDelta,    // s1 + s2 = 1 + delta
};

struct SingularityMatch {
  SingularSetId set;
  long l = 0;
  long n = 0;  // zero index (1-based) for rho sets
  std::string label;
};

struct SingularityError : std::domain_error {
  std::vector<SingularityMatch> matches;
  explicit SingularityError(std::vector<SingularityMatch> m)
      : std::domain_error("evaluation point lies on a singular set"),
        matches(std::move(m)) {}
};

struct EvalParams {
  int N = 4;
  Real eta;          // contour abscissa fraction, default 1/7
  Real T;            // contour half-height; <= 0 means auto
  ZeroSumPolicy zero_policy;
  PrecisionContext ctx;
  bool allow_singular = false;      // evaluate finite part on singular sets
  bool estimate_quad_error = true;

  explicit EvalParams(const PrecisionContext& c)
      : eta(Real(1, c.bits) / 7), T(Real(-1, c.bits)), ctx(c) {}
};

struct EvalResult {
  Complex value;
  std::vector<std::pair<std::string, Complex>> terms;
  Real error_estimate;
  std::vector<SingularityMatch> singular;   // matched sets (allow_singular mode)
  std::vector<std::string> omitted_terms;   // skipped divergent pieces
  std::vector<std::string> warnings;
  std::vector<Complex> zero_pair_contrib;   // per conjugate pair, final scale
  int n_used = 0;
  double t_used = 0;
  long quad_evaluations = 0;
};

// Shared per-run caches: Laurent constants, M(-k), Gamma(rho_n),
// zeta'(rho_n), and the series-independent contour factors per node.
class Workspace {
 public:
  Workspace(PrecisionContext ctx, ZeroTable zeros);

  const PrecisionContext& ctx() const { return ctx_; }
  const ZeroTable& zeros() const { return zeros_; }

  const Real& a_k(int k);
  const Real& b_k(int l);
  const Real& c_k_mu(int k);
  const Real& d_k_mu(int k);
  const Complex& m_neg(int k);         // M(-k), odd k
  const Real& zeta_real(int j);        // zeta(j), integer j >= 2
  const Complex& loggamma_rho(size_t n);
  const Complex& zetap_rho(size_t n);  // zeta'(rho_n)

  std::map<std::string, Complex>& contour_cache() { return contour_cache_; }

 private:
  PrecisionContext ctx_;
  ZeroTable zeros_;
  std::map<int, Real> a_, b_, c_mu_, d_mu_, zi_;
  std::map<int, Complex> m_neg_;
  std::vector<std::optional<Complex>> lgamma_rho_, zetap_rho_;
  std::map<std::string, Complex> contour_cache_;
};

// Every singular set of the given series passing within tol of (s1,s2).
std::vector<SingularityMatch> classify_singularity(const Complex& s1, const Complex& s2,
                                                   const SeriesSpec& series,
                                                   const Real& tol,
                                                   const ZeroTable& zeros);

EvalResult eval_phi2_lambda(const Complex& s1, const Complex& s2,
                            const EvalParams& p, Workspace& ws);
EvalResult eval_phi2_mu(const Complex& s1, const Complex& s2,
                        const EvalParams& p, Workspace& ws);
EvalResult eval_phi2(const Complex& s1, const Complex& s2, const SeriesSpec& series,
                     const EvalParams& p, Workspace& ws);

// Calibration pair for the quadrature engine: the Mellin-Barnes identity
//   (1/2πi) ∫_(c) Γ(s+z)Γ(-z)/Γ(s) λ^z dz = (1+λ)^{-s},
// valid for Re s > 0, -Re s < c < 0, |arg λ| < π.  Returns
// (contour value, reference value).
std::pair<Complex, Complex> mellin_barnes_selftest(const Complex& s, const Complex& lam,
                                                   const Real& c, const EvalParams& p);

}  // namespace ddzeta

#endif
