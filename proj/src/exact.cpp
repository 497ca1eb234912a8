#include "ddzeta/exact.hpp"

#include <mutex>
#include <vector>

namespace ddzeta {

Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned j = 2; j <= n; ++j) r *= j;
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (unsigned j = 0; j < k; ++j) {
    r *= (n - j);
    r /= (j + 1);
  }
  return r;
}

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_table = {Rational(1)};  // minus-half convention

// Extend the memoized table through index n using
// B_n = -1/(n+1) * sum_{j=0}^{n-1} C(n+1,j) B_j.
void extend_bernoulli(unsigned n) {
  for (unsigned m = static_cast<unsigned>(bernoulli_table.size()); m <= n; ++m) {
    if (m >= 3 && m % 2 == 1) {
      bernoulli_table.emplace_back(0);
      continue;
    }
    Rational acc = 0;
    for (unsigned j = 0; j < m; ++j) {
      if (bernoulli_table[j] != 0)
        acc += Rational(binomial(m + 1, j)) * bernoulli_table[j];
    }
    bernoulli_table.push_back(-acc / Rational(m + 1));
  }
}

}  // namespace

Rational bernoulli(unsigned n, BernoulliConvention conv) {
  {
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    if (n >= bernoulli_table.size()) extend_bernoulli(n);
    if (!(n == 1 && conv == BernoulliConvention::PlusHalf))
      return bernoulli_table[n];
  }
  return Rational(1, 2);
}

Rational zeta_int(long j) {
  if (j >= 1) throw std::invalid_argument("zeta_int: argument must be <= 0");
  if (j == 0) return Rational(-1, 2);
  unsigned r = static_cast<unsigned>(-j) + 1;  // zeta(1-r) with r >= 2
  if (r % 2 == 1) return Rational(0);          // trivial zeros
  return -bernoulli(r) / Rational(r);
}

Rational harmonic(unsigned n) {
  Rational h = 0;
  for (unsigned j = 1; j <= n; ++j) h += Rational(1, j);
  return h;
}

GammaLinear gamma_laurent_b(unsigned l) {
  Rational s(((l % 2) == 0) ? 1 : -1, factorial(l));
  return {s * harmonic(l), -s};
}

}  // namespace ddzeta
