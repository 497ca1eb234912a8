#include "ddzeta/sieve.hpp"

namespace ddzeta {

SieveTable build_sieve(long limit, long memory_cap_entries) {
  if (limit < 2) throw std::invalid_argument("build_sieve: limit must be >= 2");
  if (limit > memory_cap_entries)
    throw ResourceLimitError("build_sieve: limit exceeds configured memory cap");
  SieveTable t;
  t.limit = limit;
  std::vector<std::uint32_t> spf(static_cast<size_t>(limit) + 1, 0);
  for (long i = 2; i <= limit; ++i) {
    if (spf[static_cast<size_t>(i)] == 0) {
      for (long j = i; j <= limit; j += i)
        if (spf[static_cast<size_t>(j)] == 0)
          spf[static_cast<size_t>(j)] = static_cast<std::uint32_t>(i);
    }
  }
  t.lambda.assign(static_cast<size_t>(limit) + 1, LambdaValue{});
  t.moebius.assign(static_cast<size_t>(limit) + 1, 0);
  t.moebius[1] = 1;
  for (long n = 2; n <= limit; ++n) {
    long m = n;
    std::uint32_t p = spf[static_cast<size_t>(n)];
    // strip the smallest prime
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (m == 1) t.lambda[static_cast<size_t>(n)] = {p, true};
    // mu multiplicatively: zero on squared factors
    if (e > 1) {
      t.moebius[static_cast<size_t>(n)] = 0;
    } else {
      t.moebius[static_cast<size_t>(n)] = static_cast<std::int8_t>(-t.moebius[static_cast<size_t>(m)]);
    }
  }
  return t;
}

}  // namespace ddzeta
