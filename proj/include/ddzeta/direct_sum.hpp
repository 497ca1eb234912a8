// Brute-force evaluation of the double series
//   Phi2(s1,s2) = sum_{m1,m2 <= cutoff} alpha(m2) m1^{-s1} (m1+m2)^{-s2}
// inside its convergence region, with an integral-comparison tail estimate.
// The oracle for the meromorphic continuation.
#ifndef DDZETA_DIRECT_SUM_HPP
#define DDZETA_DIRECT_SUM_HPP

#include "ddzeta/series.hpp"
#include "ddzeta/sieve.hpp"

namespace ddzeta {

struct TailBound {
  Real value;
  bool is_rigorous = false;
};

struct DirectSumResult {
  Complex value;
  TailBound tail;
  long terms_summed = 0;
};

// Region: Re s2 > 1 and Re(s1+s2) > 2 for both shipped series.  Throws
// RegionError outside, CutoffError for cutoff < 1000.  The sieve must
// cover [2, cutoff].
DirectSumResult direct_phi2(const Complex& s1, const Complex& s2,
                            const SeriesSpec& series, long cutoff,
                            const SieveTable& sieve, const PrecisionContext& ctx);

}  // namespace ddzeta

#endif
