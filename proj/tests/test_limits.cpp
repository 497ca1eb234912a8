#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ddzeta/limits.hpp"

using namespace ddzeta;

#ifndef DDZETA_DATA_DIR
#define DDZETA_DATA_DIR "data"
#endif

namespace {

// >= 80 working decimals keeps the eps^-2 dynamic range harmless
const PrecisionContext ctx = PrecisionContext::make(30, 60);

Workspace& ws() {
  static Workspace w(ctx, load_zeros(std::string(DDZETA_DATA_DIR) + "/zeros100.txt",
                                     ctx).table);
  return w;
}

Real tol(int digits) { return Real::pow10(-digits, ctx.bits); }

}  // namespace

TEST_CASE("fitted Laurent data equals -R(-m,-n) for the Lambda series") {
  EvalParams p(ctx);
  auto ladder = geometric_ladder(Real::pow10(-8, ctx.bits), 8);
  struct Case { int m, n; Rational expect; };
  for (auto c : {Case{1, 0, Rational(-1, 2)}, Case{0, 1, Rational(1, 2)},
                 Case{2, 1, Rational(1, 12)}, Case{1, 2, Rational(0)}}) {
    auto fit = fit_singular_expansion(c.m, c.n, SeriesSpec::lambda(), ladder, p, ws());
    CHECK(-ctx.real(residue_r(static_cast<unsigned>(c.m), static_cast<unsigned>(c.n))) ==
          ctx.real(c.expect));
    CHECK(abs(fit.c1 - Complex(ctx.real(c.expect))) < tol(8));
    CHECK(abs(fit.c2) < tol(8));
  }
}

TEST_CASE("doubly singular point: c2 = -2 binom(n, 2l)") {
  EvalParams p(ctx);
  auto ladder = geometric_ladder(Real::pow10(-8, ctx.bits), 8);
  auto fit = fit_singular_expansion(-1, 2, SeriesSpec::lambda(), ladder, p, ws());
  CHECK(abs(fit.c2 - Complex(ctx.real(-2L))) < tol(8));
}

TEST_CASE("mu-series residues match the closed form") {
  EvalParams p(ctx);
  auto ladder = geometric_ladder(Real::pow10(-8, ctx.bits), 8);
  for (auto [m, n] : {std::pair{1, 0}, {0, 1}}) {
    auto fit = fit_singular_expansion(m, n, SeriesSpec::mu(), ladder, p, ws());
    Complex closed = residue_closed_mu(m, n, ws());
    CHECK(abs(fit.c1 - closed) / abs(closed) < tol(6));
  }
  // D2/2 against the zeta'(-2) closed form
  Complex r10 = residue_closed_mu(1, 0, ws());
  Real d2 = 1L / zeta_d(ctx.complex(-2), 1, ctx).re;
  CHECK(abs(r10.re - d2 / 2) < tol(25));
  CHECK_THROWS_AS(residue_closed_mu(1, 1, ws()), ParityError);
}

TEST_CASE("reverse values: closed form against the ladder limit") {
  EvalParams p(ctx);
  auto ladder = geometric_ladder(Real::pow10(-8, ctx.bits), 8);
  auto rv = reverse_value_closed_lambda(2, 0, ws());
  REQUIRE(rv.status == ReverseStatus::Convergent);
  auto fit = fit_singular_expansion(2, 0, SeriesSpec::lambda(), ladder, p, ws());
  CHECK(abs(fit.c1) < tol(8));
  CHECK(abs(fit.c2) < tol(8));
  CHECK(abs(fit.c0 - rv.value) < tol(8));
}

TEST_CASE("reverse values: excluded case is a structured divergence marker") {
  auto rv = reverse_value_closed_lambda(0, 2, ws());
  CHECK(rv.status == ReverseStatus::Divergent);
  REQUIRE(rv.residue.has_value());
  CHECK(*rv.residue == Rational(1, 2));
  CHECK_THROWS_AS(reverse_value_closed_lambda(1, 2, ws()), ParityError);
  CHECK_THROWS_AS(reverse_value_closed_lambda(-1, 1, ws()), std::invalid_argument);
}

TEST_CASE("closed-form c1 in the doubly singular regime") {
  EvalParams p(ctx);
  auto rep = check_c1_closed_form_lambda(-1, 2, p, ws());
  CHECK(rep.difference < tol(6));
  CHECK_THROWS_AS(check_c1_closed_form_lambda(-1, 3, p, ws()), ParityError);
  CHECK_THROWS_AS(check_c1_closed_form_lambda(-3, 2, p, ws()), std::invalid_argument);
}

TEST_CASE("ladder robustness: halving the ladder leaves c1 in place") {
  EvalParams p(ctx);
  auto l1 = geometric_ladder(Real::pow10(-8, ctx.bits), 8);
  auto l2 = geometric_ladder(Real::pow10(-8, ctx.bits) / 2, 8);
  auto f1 = fit_singular_expansion(2, 1, SeriesSpec::lambda(), l1, p, ws());
  auto f2 = fit_singular_expansion(2, 1, SeriesSpec::lambda(), l2, p, ws());
  CHECK(abs(f1.c1 - f2.c1) < tol(8));
}

TEST_CASE("ladder guards: collisions with other singular sets are refused") {
  EvalParams p(ctx);
  // eps = 1 drops s2 onto s1+s2 = -1, a different singular line
  std::vector<Real> bad = {ctx.real(1L), Real::pow10(-8, ctx.bits),
                           Real::pow10(-8, ctx.bits) / 2, Real::pow10(-8, ctx.bits) / 4};
  CHECK_THROWS_AS(fit_singular_expansion(0, 2, SeriesSpec::lambda(), bad, p, ws()),
                  SingularCollisionError);
  std::vector<Real> short_ladder = {Real::pow10(-8, ctx.bits)};
  CHECK_THROWS_AS(fit_singular_expansion(0, 2, SeriesSpec::lambda(), short_ladder, p, ws()),
                  std::invalid_argument);
}

TEST_CASE("fit ladder is recorded for audit") {
  EvalParams p(ctx);
  auto ladder = geometric_ladder(Real::pow10(-8, ctx.bits), 8);
  auto fit = fit_singular_expansion(1, 0, SeriesSpec::lambda(), ladder, p, ws());
  REQUIRE(fit.ladder.size() == 8);
  CHECK(fit.ladder[0].first == ladder[0]);
  CHECK(!fit.ill_conditioned);
}
