// Sieved arithmetic functions: von Mangoldt Lambda (stored symbolically as
// the prime base so log p is taken at evaluation precision) and Moebius mu,
// plus Dirichlet convolution against mu.
#ifndef DDZETA_SIEVE_HPP
#define DDZETA_SIEVE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "ddzeta/errors.hpp"
#include "ddzeta/precision.hpp"

namespace ddzeta {

struct LambdaValue {
  std::uint32_t prime = 0;  // 0 when Lambda(n) = 0
  bool is_prime_power = false;
};

struct SieveTable {
  long limit = 0;
  std::vector<LambdaValue> lambda;   // index 0..limit; [0],[1] unused
  std::vector<std::int8_t> moebius;  // values in {-1,0,1}

  bool lambda_nonzero(long n) const { return lambda[static_cast<size_t>(n)].is_prime_power; }
  std::uint32_t lambda_prime(long n) const { return lambda[static_cast<size_t>(n)].prime; }
  int mu(long n) const { return moebius[static_cast<size_t>(n)]; }
};

// Smallest-prime-factor sieve for 2..limit.  Throws ResourceLimitError when
// limit exceeds the configured cap (the tables are ~5 bytes per entry).
SieveTable build_sieve(long limit, long memory_cap_entries = 200'000'000);

// alpha_tilde(n) = sum_{d|n} alpha(n/d) mu(d) for all n <= N.
// Input spans are 1-based with a dummy [0] entry.
template <typename T>
std::vector<T> convolve_inverse(std::span<const T> alpha, const SieveTable& sieve) {
  long n_max = static_cast<long>(alpha.size()) - 1;
  if (n_max > sieve.limit)
    throw std::invalid_argument("convolve_inverse: sieve too small");
  if (alpha.empty()) return {};
  T zero = alpha[0] - alpha[0];
  std::vector<T> out(alpha.size(), zero);
  for (long d = 1; d <= n_max; ++d) {
    int mu_d = sieve.mu(d);
    if (mu_d == 0) continue;
    for (long n = d; n <= n_max; n += d) {
      if (mu_d > 0)
        out[static_cast<size_t>(n)] += alpha[static_cast<size_t>(n / d)];
      else
        out[static_cast<size_t>(n)] -= alpha[static_cast<size_t>(n / d)];
    }
  }
  return out;
}

}  // namespace ddzeta

#endif
