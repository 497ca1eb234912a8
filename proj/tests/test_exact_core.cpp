#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ddzeta/residues.hpp"

using namespace ddzeta;

TEST_CASE("bernoulli numbers: seed values and conventions") {
  CHECK(bernoulli(0) == Rational(1));
  CHECK(bernoulli(1, BernoulliConvention::MinusHalf) == Rational(-1, 2));
  CHECK(bernoulli(1, BernoulliConvention::PlusHalf) == Rational(1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(3) == Rational(0));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  // conventions agree away from index 1
  for (unsigned n : {0u, 2u, 3u, 7u, 20u})
    CHECK(bernoulli(n, BernoulliConvention::MinusHalf) ==
          bernoulli(n, BernoulliConvention::PlusHalf));
}

TEST_CASE("bernoulli recurrence: sum C(n+1,j) B_j vanishes") {
  for (unsigned n = 1; n <= 60; ++n) {
    Rational acc = 0;
    for (unsigned j = 0; j <= n; ++j)
      acc += Rational(binomial(n + 1, j)) * bernoulli(j);
    CHECK(acc == 0);
  }
}

TEST_CASE("odd-index bernoulli vanish up to 201") {
  for (unsigned k = 1; k <= 100; ++k) CHECK(bernoulli(2 * k + 1) == 0);
}

TEST_CASE("zeta at non-positive integers") {
  CHECK(zeta_int(0) == Rational(-1, 2));
  CHECK(zeta_int(-1) == Rational(-1, 12));
  CHECK(zeta_int(-3) == Rational(1, 120));
  CHECK(zeta_int(-4) == Rational(0));
  for (long k = 1; k <= 100; ++k) CHECK(zeta_int(-2 * k) == 0);
  CHECK_THROWS_AS(zeta_int(1), std::invalid_argument);
  CHECK_THROWS_AS(zeta_int(5), std::invalid_argument);
}

TEST_CASE("residue function values") {
  CHECK(residue_r(1, 0) == Rational(1, 2));
  CHECK(residue_r(1, 2) == Rational(0));
  CHECK(residue_r(2, 1) == Rational(-1, 12));
  CHECK(residue_r(0, 1) == Rational(-1, 2));
  CHECK_THROWS_AS(residue_r(2, 2), ParityError);
  CHECK_THROWS_AS(residue_r(0, 0), ParityError);
}

// the zeta-vs-Bernoulli agreement is asserted inside residue_r; sweep it
TEST_CASE("residue function: both closed forms agree up to 50") {
  for (unsigned m = 0; m <= 50; ++m)
    for (unsigned n = (m % 2 == 0) ? 1 : 0; n <= 50; n += 2)
      CHECK_NOTHROW(residue_r(m, n));
}

TEST_CASE("saalschutz identity") {
  auto t = saalschutz_check(0, 0);
  CHECK(t.lhs_term1 == Rational(1, 2));
  CHECK(t.lhs_term2 == Rational(1, 2));
  CHECK(t.rhs == Rational(1));
  auto u = saalschutz_check(2, 1);
  CHECK(u.lhs_term1 + u.lhs_term2 == Rational(1, 12));
  for (unsigned p = 0; p <= 12; ++p)
    for (unsigned q = 0; q <= 12; ++q) {
      auto s = saalschutz_check(p, q);
      CHECK(s.lhs_term1 + s.lhs_term2 == s.rhs);
    }
}

TEST_CASE("residue reciprocity") {
  auto t = reciprocity_check(1, 2);
  CHECK(t.lhs == Rational(1, 12));
  CHECK(t.rhs == Rational(1, 12));
  CHECK(t.difference == 0);
  CHECK(reciprocity_check(3, 4).difference == 0);
  CHECK_THROWS_AS(reciprocity_check(2, 2), ParityError);
  CHECK_THROWS_AS(reciprocity_check(0, 1), std::invalid_argument);
  for (unsigned m = 1; m <= 12; ++m)
    for (unsigned n = m % 2 ? 2 : 1; n <= 12; n += 2)
      CHECK(reciprocity_check(m, n).difference == 0);
}

TEST_CASE("thm 4.1 / cor 4.4 / prop 4.5 families, small range") {
  for (unsigned N = 1; N <= 10; ++N) {
    CHECK(residue_r(1, 2 * N) == 0);
    CHECK(residue_r(2 * N, 1) ==
          Rational(-1, static_cast<long>(2 * N + 1) * (2 * N + 2)));
  }
  for (unsigned n = 1; n <= 19; n += 2) CHECK(residue_r(0, n) == Rational(-1, 2));
}

TEST_CASE("gamma laurent constants, exact form") {
  GammaLinear b0 = gamma_laurent_b(0);
  CHECK(b0.const_part == 0);
  CHECK(b0.gamma_coeff == -1);
  GammaLinear b2 = gamma_laurent_b(2);
  CHECK(b2.const_part == Rational(3, 4));   // (1/2) H_2
  CHECK(b2.gamma_coeff == Rational(-1, 2));
  GammaLinear sum = b0 + b2.scaled(Rational(2));
  CHECK(sum.const_part == Rational(3, 2));
  CHECK(sum.gamma_coeff == -2);
}

TEST_CASE("rational serialization is lowest-terms p/q") {
  CHECK(residue_r(2, 1).str() == "-1/12");
  CHECK(Rational(6, 4).str() == "3/2");
  CHECK(bernoulli(4).str() == "-1/30");
}
