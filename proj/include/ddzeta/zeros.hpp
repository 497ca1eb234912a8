// Table of nontrivial zeta-zero ordinates: plain-text ingestion,
// validation against the in-tree zeta evaluator, and the heuristic tail
// bound for truncated zero sums.
#ifndef DDZETA_ZEROS_HPP
#define DDZETA_ZEROS_HPP

#include <string>
#include <vector>

#include "ddzeta/special.hpp"

namespace ddzeta {

struct ZeroTable {
  std::vector<Real> gammas;  // ascending positive ordinates
  int source_digits = 0;     // significant decimal digits of the source data
  size_t count() const { return gammas.size(); }
};

struct ZeroSumPolicy {
  size_t max_zeros = 100;
  Real tail_tolerance;
  ZeroSumPolicy() : tail_tolerance(Real::pow10(-25, 96)) {}
};

// Text format: '#' comment lines ignored; one positive decimal ordinate per
// line, strictly ascending.  Errors carry line numbers.  A warning flag is
// set when the source carries fewer digits than the context requests.
struct LoadResult {
  ZeroTable table;
  bool precision_warning = false;
};
LoadResult load_zeros(const std::string& path, const PrecisionContext& ctx);

// Serialize at source precision (round-trip identity with load_zeros).
std::string serialize_zeros(const ZeroTable& table);

struct ZeroValidationEntry {
  size_t index;
  Real residual;  // |zeta(1/2 + i gamma_n)|
  bool ok;
};
struct ZeroValidationReport {
  std::vector<ZeroValidationEntry> entries;
  Real max_residual;
  bool all_ok = true;
  Real threshold;
};

// Checks |zeta(1/2 + i gamma)| < 10^(-source_digits+5) for the first k
// ordinates.  Simplicity of the zeros is assumed, not checked.
ZeroValidationReport validate_zeros(const ZeroTable& table, size_t k,
                                    const PrecisionContext& ctx);

// Heuristic upper estimate of the dropped conjugate-pair tail
//   sum_{gamma_n > last_gamma} |Gamma(s2-rho)Gamma(rho)zeta(s1+s2-rho)| * 2/|Gamma(s2)|
// from Stirling decay and zero density ~ log(gamma)/(2 pi) per unit height.
// Requires last_gamma > |Im s2| + 10.
Real zero_sum_tail_bound(const Complex& s2, const Real& last_gamma,
                         const PrecisionContext& ctx);

}  // namespace ddzeta

#endif
