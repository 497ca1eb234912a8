// Piecewise Gauss-Legendre quadrature along a vertical line, with panel
// widths graded away from t = 0 (where the integrand's pole structure sits
// closest) and per-panel error estimation by order doubling.
#ifndef DDZETA_QUADRATURE_HPP
#define DDZETA_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "ddzeta/precision.hpp"

namespace ddzeta {

struct GaussLegendreRule {
  std::vector<Real> nodes;    // on (-1, 1)
  std::vector<Real> weights;
};

// Memoized per (n, bits).
const GaussLegendreRule& gauss_legendre(int n, mpfr_prec_t bits);

struct Panel {
  double lo, hi;
  int order;
};

// Geometrically graded panels covering [0, T]; the first panel width tracks
// the distance of the nearest singularity from the line.
std::vector<Panel> grade_panels(double d_min, double T, int target_decimal);

struct LineIntegralResult {
  Complex value;
  Real error_estimate;  // sum of per-panel order-doubling differences
  long evaluations = 0;
};

// Integrates f(t) over t in [-T, T] (the integrand already includes the
// contour parameterization).  When estimate_error is set, every panel is
// recomputed at twice the order and the doubled-order value is returned.
LineIntegralResult integrate_line(const std::function<Complex(const Real&)>& f,
                                  double d_min, double T,
                                  const PrecisionContext& ctx,
                                  bool estimate_error = true);

}  // namespace ddzeta

#endif
