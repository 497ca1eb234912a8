#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ddzeta/laurent.hpp"
#include "ddzeta/sieve.hpp"

using namespace ddzeta;

namespace {
const PrecisionContext ctx = PrecisionContext::make(40);
Real tol(int digits) { return Real::pow10(-digits, ctx.bits); }
}  // namespace

TEST_CASE("gamma: classical values") {
  Complex g = gamma_fn(Complex(ctx.real(1L) / 2), ctx);
  CHECK(abs(g.re - sqrt(ctx.pi())) < tol(38));
  CHECK(abs(g.im) < tol(38));
  Complex g5 = gamma_fn(ctx.complex(5), ctx);
  CHECK(abs(g5.re - ctx.real(24L)) < tol(36));
  Complex dg = digamma(ctx.complex(1), ctx);
  CHECK(abs(dg.re + ctx.euler_gamma()) < tol(38));
  // trigamma(1) = pi^2/6
  Complex tg = trigamma(ctx.complex(1), ctx);
  CHECK(abs(tg.re - ctx.pi() * ctx.pi() / 6) < tol(38));
}

TEST_CASE("gamma: poles rejected") {
  CHECK_THROWS_AS(gamma_fn(ctx.complex(0), ctx), PoleError);
  CHECK_THROWS_AS(gamma_fn(ctx.complex(-3), ctx), PoleError);
  CHECK_THROWS_AS(digamma(ctx.complex(-7), ctx), PoleError);
}

TEST_CASE("gamma recurrence on 100 random points, |s| <= 20") {
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  int tested = 0;
  while (tested < 100) {
    double re = u(rng), im = u(rng);
    if (std::abs(im) < 0.15 && re < 0.5) continue;  // stay away from the pole line
    Complex s(ctx.real(re), ctx.real(im));
    Complex lhs = gamma_fn(s + 1, ctx);
    Complex rhs = s * gamma_fn(s, ctx);
    CHECK(abs(lhs - rhs) / abs(lhs) < tol(38));
    ++tested;
  }
}

TEST_CASE("zeta: classical and exact-core values") {
  CHECK(abs(zeta_d(ctx.complex(2), 0, ctx).re - ctx.pi() * ctx.pi() / 6) < tol(38));
  CHECK(abs(zeta_d(ctx.complex(-1), 0, ctx).re - ctx.real(zeta_int(-1))) < tol(38));
  CHECK(abs(zeta_d(ctx.complex(0), 0, ctx).re - ctx.real(zeta_int(0))) < tol(38));
  for (long j : {-2L, -4L, -6L})
    CHECK(abs(zeta_d(ctx.complex(j), 0, ctx).re) < tol(36));
  CHECK_THROWS_AS(zeta_d(ctx.complex(1), 0, ctx), PoleError);
}

TEST_CASE("zeta'(-2) = -zeta(3)/(4 pi^2), plus finite-difference cross-check") {
  Real zp = zeta_d(ctx.complex(-2), 1, ctx).re;
  Real closed = -(zeta_d(ctx.complex(3), 0, ctx).re / (4L * ctx.pi() * ctx.pi()));
  CHECK(abs(zp - closed) < tol(36));
  Real h = Real::pow10(-13, ctx.bits);
  Complex zc = zeta_d(Complex(ctx.real(-2L) + h), 0, ctx) -
               zeta_d(Complex(ctx.real(-2L) - h), 0, ctx);
  CHECK(abs(zc.re / (2L * h) - zp) < tol(20));
}

TEST_CASE("zeta derivatives match central differences") {
  Real h = Real::pow10(-ctx.target_decimal / 3, ctx.bits);
  for (auto [re, im] : {std::pair{2.3, 1.1}, {0.7, -0.4}}) {
    Complex s(ctx.real(re), ctx.real(im));
    Complex hs(h, ctx.real(0L));
    auto d = zeta_derivs(s, 2, ctx);
    Complex fd1 = (zeta_d(s + hs, 0, ctx) - zeta_d(s - hs, 0, ctx)) / (2L * h);
    CHECK(abs(fd1 - d[1]) < tol(ctx.target_decimal / 2));
    Complex fd2 = (zeta_d(s + hs, 1, ctx) - zeta_d(s - hs, 1, ctx)) / (2L * h);
    CHECK(abs(fd2 - d[2]) < tol(ctx.target_decimal / 2));
  }
}

TEST_CASE("reflection and Euler-Maclaurin branches agree on the overlap strip") {
  EulerMaclaurinPolicy policy;
  for (auto [re, im] : {std::pair{0.5, 0.3}, {0.8, 5.0}, {1.4, -12.0}, {2.0, 33.0}}) {
    Complex s(ctx.real(re), ctx.real(im));
    auto em = detail::zeta_em(s, 2, ctx, policy);
    auto rf = detail::zeta_reflect(s, 2, ctx, policy);
    for (int d = 0; d <= 2; ++d)
      CHECK(abs(em[static_cast<size_t>(d)] - rf[static_cast<size_t>(d)]) /
                abs(em[static_cast<size_t>(d)]) <
            tol(ctx.target_decimal - 5));
  }
}

TEST_CASE("M(s): Dirichlet-series oracle at s = 2") {
  // sum Lambda(n)/n^2 over n <= 10^6, tail ~ 1/X
  auto sieve = build_sieve(1000000);
  Real acc(0L, ctx.bits);
  for (long n = 2; n <= 1000000; ++n)
    if (sieve.lambda_nonzero(n))
      acc += log(ctx.real(static_cast<long>(sieve.lambda_prime(n)))) /
             ctx.real(n * n);
  Complex m2 = mangoldt_m(ctx.complex(2), ctx);
  CHECK(abs(m2.re - acc) < Real::from_double(3e-6, ctx.bits));
}

TEST_CASE("M(s): regular odd negative point and branch overlap") {
  Complex m1 = mangoldt_m(ctx.complex(-1), ctx);
  CHECK(abs(m1.re - Real::from_string("-1.98505372440541115056703592291336771", ctx.bits)) <
        tol(33));
  for (auto [re, im] : {std::pair{0.45, 3.0}, {0.55, -7.0}, {0.5, 8.0}}) {
    Complex s(ctx.real(re), ctx.real(im));
    Complex a = detail::mangoldt_m_direct(s, ctx);
    Complex b = detail::mangoldt_m_reflected(s, ctx);
    CHECK(abs(a - b) < tol(ctx.target_decimal - 4));
  }
}

TEST_CASE("M(s): pole proximity detected") {
  // tabulated first zero ordinate, far above the working tolerance
  Complex rho(ctx.real(1L) / 2,
              Real::from_string("14.13472514173469379045725198356247", ctx.bits));
  CHECK_THROWS_AS(mangoldt_m(rho, ctx), ZeroProximityError);
  CHECK_THROWS_AS(mangoldt_m(ctx.complex(-4), ctx), PoleError);
}

TEST_CASE("laurent constants: b_0 = -gamma and exact realization") {
  auto lc = laurent_constants(4, {{2, 4}}, ctx);
  CHECK(abs(lc.b.at(0).second + ctx.euler_gamma()) < tol(38));
  for (int l = 0; l <= 4; ++l) {
    auto& [exact, numeric] = lc.b.at(l);
    Real recon = ctx.real(exact.const_part) + ctx.real(exact.gamma_coeff) * ctx.euler_gamma();
    CHECK(abs(numeric - recon) < tol(ctx.working_decimal() - 2));
  }
}

TEST_CASE("laurent constants: c_k = a_k / zeta'(-k)") {
  for (int k : {2, 4, 6, 8}) {
    Real a = laurent_a(k, ctx);
    Real c = laurent_c(k, ctx);
    Real zp = zeta_d(ctx.complex(-k), 1, ctx).re;
    CHECK(abs(c - a / zp) < tol(ctx.target_decimal - 3) * abs(c));
  }
}

TEST_CASE("D_k: two formulas agree, and D_2 = -4 pi^2 / zeta(3)") {
  Real d2 = laurent_d_mu(2, ctx);  // internal consistency asserted inside
  Real closed = -(4L * ctx.pi() * ctx.pi() / zeta_d(ctx.complex(3), 0, ctx).re);
  CHECK(abs(d2 - closed) < tol(35));
  for (int k : {4, 6, 8}) CHECK_NOTHROW(laurent_d_mu(k, ctx));
}

TEST_CASE("C(k,n): extrapolation is self-consistent to >= 30 digits") {
  auto r = c_gamma_extrapolated(2, 4, ctx);
  CHECK(r.ladder_spread < tol(30));
  // independent closed form (-1)^k n!/(n-k)! (H_n - gamma)
  Real pred = ctx.real(12L) * (ctx.real(Rational(25, 12)) - ctx.euler_gamma());
  CHECK(abs(r.value - pred) < tol(30));
  auto r22 = c_gamma_extrapolated(2, 2, ctx);
  Real pred22 = ctx.real(2L) * (ctx.real(Rational(3, 2)) - ctx.euler_gamma());
  CHECK(abs(r22.value - pred22) < tol(30));
}
