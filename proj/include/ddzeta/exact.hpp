// Exact rational arithmetic: Bernoulli numbers, zeta at non-positive
// integers, factorials and binomials.  Everything here is exact; no
// floating point enters this layer.
#ifndef DDZETA_EXACT_HPP
#define DDZETA_EXACT_HPP

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace ddzeta {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// B1 = -1/2 (recurrence convention) or B1 = +1/2 (generating function
// t e^t / (e^t - 1)).  All other indices agree.
enum class BernoulliConvention { MinusHalf, PlusHalf };

// Exact value of the form const_part + gamma_coeff * euler_gamma.
struct GammaLinear {
  Rational const_part;
  Rational gamma_coeff;

  GammaLinear operator+(const GammaLinear& o) const {
    return {const_part + o.const_part, gamma_coeff + o.gamma_coeff};
  }
  GammaLinear scaled(const Rational& r) const {
    return {const_part * r, gamma_coeff * r};
  }
  bool operator==(const GammaLinear& o) const = default;
};

struct ParityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

// Bernoulli number B_n under the chosen convention.  Recurrence
// sum_{j<=n} C(n+1,j) B_j = 0 seeded with B_0 = 1; memoized.
Rational bernoulli(unsigned n, BernoulliConvention conv = BernoulliConvention::MinusHalf);

// zeta(j) for integer j <= 0: zeta(0) = -1/2, zeta(-2k) = 0,
// zeta(1-2k) = -B_{2k}/(2k).  Rejects j >= 1.
Rational zeta_int(long j);

// Exact harmonic number H_n.
Rational harmonic(unsigned n);

// Constant term of the Laurent expansion of Gamma at -l:
// b_l = (-1)^l / l! * (H_l - gamma), kept exact as GammaLinear.
GammaLinear gamma_laurent_b(unsigned l);

}  // namespace ddzeta

#endif
