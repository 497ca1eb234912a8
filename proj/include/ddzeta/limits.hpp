// Behaviour at and near the non-positive integer points: reverse-value
// closed forms, residue closed forms for the Moebius series, Laurent-model
// fits over geometric epsilon ladders, and the closed-form check for the
// 1/eps coefficient in the doubly-singular (m <= -1) regime.
//
// Sign conventions follow the function itself: the reported c2, c1, c0 are
// the raw Laurent coefficients of Phi2(-m, -n+eps) in the model
// c2/eps^2 + c1/eps + c0.  Against the exact residue function this gives
// fitted c1 = -R(-m,-n) for the Lambda series (and c1 = +residue for the
// Moebius series of residue_closed_mu).
#ifndef DDZETA_LIMITS_HPP
#define DDZETA_LIMITS_HPP

#include "ddzeta/continuation.hpp"
#include "ddzeta/residues.hpp"

namespace ddzeta {

struct SingularExpansion {
  Complex c2, c1, c0;
  Real fit_residual;
  std::vector<std::pair<Real, Complex>> ladder;  // (eps, value)
  bool ill_conditioned = false;
  // largest |sum of zero-pair terms beyond the 50th| across the ladder
  // evaluations; bounds the effect of halving the zero count
  Real max_zero_tail_beyond_50;
};

enum class ReverseStatus { Convergent, Divergent };

struct ReverseValue {
  ReverseStatus status;
  Complex value;                      // when convergent
  std::optional<Rational> residue;    // 1/eps coefficient when divergent (exact if known)
  std::optional<Complex> double_pole; // 1/eps^2 coefficient when present
};

// Reverse value of Phi2 at (-m,-n) for the Lambda series, m+n even,
// m >= 1 or n <= 1 (closed form of the convergent case).  The excluded
// case m = 0, n >= 2 returns a Divergent marker with residue +1/2, the
// raw 1/eps coefficient of the continued function.  The B_{m+n+1} term
// uses the B1 = +1/2 convention, fixed by the eps-ladder oracle at (0,0).
ReverseValue reverse_value_closed_lambda(int m, int n, Workspace& ws);

// 1/eps coefficient of Phi2(-m, -n+eps; 1, mu) for m, n >= 0, m+n odd:
//   (-1)^n D_{2l} m! n! / (m+n+1)! + sum_{k even <= n} (-1)^k C(n,k) D_k zeta(k-m-n)
// with 2l = m+n+1.
Complex residue_closed_mu(int m, int n, Workspace& ws);

// Evaluates Phi2(-m, -n+eps) over the ladder (s1 fixed at -m first,
// realizing the reverse-value limit order) and least-squares fits the
// three-parameter Laurent model.
SingularExpansion fit_singular_expansion(int m, int n, const SeriesSpec& series,
                                         const std::vector<Real>& ladder,
                                         const EvalParams& p, Workspace& ws);

// Geometric default ladder eps_0 / 2^j, j = 0..len-1.
std::vector<Real> geometric_ladder(const Real& eps0, int len);

struct C1ClosedFormReport {
  Complex fitted_c1;
  Real closed_c1;
  Real difference;
};

// Closed form of the fitted 1/eps coefficient for the Lambda series at
// m <= -1, n >= 2l = m+n+1, assembled from a_{2l}, b_{2l}, gamma, C(2l,n),
// harmonic partial sums and zeta values; compared against the ladder fit.
C1ClosedFormReport check_c1_closed_form_lambda(int m, int n, const EvalParams& p,
                                               Workspace& ws);

}  // namespace ddzeta

#endif
