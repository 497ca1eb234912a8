#include "ddzeta/residues.hpp"

#include <cassert>
#include <stdexcept>

namespace ddzeta {

namespace {

Rational sign(unsigned k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

// zeta form of R(-m,-n).
Rational residue_r_zeta_form(unsigned m, unsigned n) {
  Rational r = sign(n) * Rational(factorial(m) * factorial(n), factorial(m + n + 1));
  for (unsigned k = 2; k <= n; k += 2)
    r += Rational(binomial(n, k)) * zeta_int(static_cast<long>(k) - m - n);
  return r;
}

// Bernoulli form: (-1)^n m!n!/(m+n+1)! - sum_{j=1}^{[n/2]} C(n,2j) B_{m+n+1-2j}/(m+n+1-2j).
Rational residue_r_bernoulli_form(unsigned m, unsigned n) {
  Rational r = sign(n) * Rational(factorial(m) * factorial(n), factorial(m + n + 1));
  for (unsigned j = 1; 2 * j <= n; ++j) {
    unsigned idx = m + n + 1 - 2 * j;
    r -= Rational(binomial(n, 2 * j)) * bernoulli(idx) / Rational(idx);
  }
  return r;
}

}  // namespace

Rational residue_r(unsigned m, unsigned n) {
  if ((m + n) % 2 == 0)
    throw ParityError("residue_r: m+n must be odd");
  Rational a = residue_r_zeta_form(m, n);
  Rational b = residue_r_bernoulli_form(m, n);
  if (a != b)
    throw std::logic_error("residue_r: zeta and Bernoulli forms disagree");
  return a;
}

SaalschutzTriple saalschutz_check(unsigned p, unsigned q) {
  auto conv = BernoulliConvention::MinusHalf;
  Rational t1 = 0, t2 = 0;
  for (unsigned l = 0; l <= q; ++l)
    t1 += Rational(binomial(q, l)) * bernoulli(p + 1 + l, conv) / Rational(p + 1 + l);
  t1 *= sign(p + 1);
  for (unsigned l = 0; l <= p; ++l)
    t2 += Rational(binomial(p, l)) * bernoulli(q + 1 + l, conv) / Rational(q + 1 + l);
  t2 *= sign(q + 1);
  Rational rhs(factorial(p) * factorial(q), factorial(p + q + 1));
  return {t1, t2, rhs};
}

ReciprocityTriple reciprocity_check(unsigned m, unsigned n) {
  if (m < 1 || n < 1)
    throw std::invalid_argument("reciprocity_check: m, n must be >= 1");
  if ((m + n) % 2 == 0)
    throw ParityError("reciprocity_check: m+n must be odd");
  Rational lhs = sign(n) * residue_r(m, n) + sign(m) * residue_r(n, m);
  Rational rhs(factorial(m) * factorial(n), factorial(m + n + 1));
  return {lhs, rhs, lhs - rhs};
}

}  // namespace ddzeta
