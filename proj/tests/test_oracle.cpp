#include <doctest.h>

#include <cmath>

#include "singquad/oracle.hpp"
#include "support.hpp"

using namespace singquad;

TEST_CASE("the zeta oracle reproduces the reference constants") {
  // frozen high-precision values; the oracle reaches them from a short
  // partial sum, so agreement pins both routes
  CHECK(static_cast<double>(testsupport::zeta_oracle(-0.5L)) ==
        doctest::Approx(-0.20788622497735457).epsilon(1e-13));
  CHECK(static_cast<double>(testsupport::zeta_oracle(0.5L)) ==
        doctest::Approx(-1.4603545088095868).epsilon(1e-13));
  CHECK(static_cast<double>(testsupport::zeta_oracle(1.5L)) ==
        doctest::Approx(2.612375348685488).epsilon(1e-13));
}

TEST_CASE("the power rule handles both domains") {
  CHECK(integral_power(1.0, 0.5, 0.0) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-16));
  CHECK(integral_power(1.0, 1.5, 0.0) == doctest::Approx(0.4).epsilon(1e-16));
  CHECK(integral_power(2.0, -0.5, 0.0) == doctest::Approx(4.0).epsilon(1e-16));
  CHECK(integral_power(1.0, 0.5, -1.0) ==
        doctest::Approx(2.0 * std::sqrt(2.0) * 2.0 / 3.0).epsilon(1e-15));
  CHECK(integral_power(1.0, -0.5, -1.0) ==
        doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-15));

  CHECK_THROWS_AS(integral_power(1.0, -1.0, 0.0), DivergentIntegralError);
  CHECK_THROWS_AS(integral_power(1.0, -1.5, 0.0), DivergentIntegralError);
}

TEST_CASE("exact integrals match the attached closed forms") {
  for (const auto& f : corpus()) {
    if (f.is_raw()) continue;
    CAPTURE(f.name());
    const ReferenceValue rv = exact_integral(f, 1e-12);
    CHECK(rv.method == RefMethod::kAnalytic);
    const double hint = *f.exact_integral_hint();
    CHECK(rv.value == doctest::Approx(hint).epsilon(2e-13));
    CHECK(static_cast<double>(exact_integral_ld(f)) ==
          doctest::Approx(hint).epsilon(2e-13));
  }
}

TEST_CASE("custom remainders route through adaptive quadrature") {
  const auto g = [](double x) { return std::exp(x); };
  const Integrand f =
      Integrand::make("exp_probe", Domain::unit(), {PowerTerm{1.0, 1}},
                      SmoothPart::custom(g, {g, g}, 2), IntegrandClass::kP1);
  const ReferenceValue rv = exact_integral(f, 1e-10);
  CHECK(rv.method == RefMethod::kAdaptiveQuad);
  const double expected = 2.0 / 3.0 + std::exp(1.0) - 1.0;
  CHECK(rv.value == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("integrate_smooth guards its tolerance range") {
  const auto s = [](double x) { return std::sin(x); };
  CHECK_THROWS_AS(integrate_smooth(s, 0.0, 1.0, 1e-15), PreconditionError);
  CHECK_THROWS_AS(integrate_smooth(s, 0.0, 1.0, 1e-3), PreconditionError);
  CHECK(integrate_smooth(s, 0.0, 1.0, 1e-12) ==
        doctest::Approx(1.0 - std::cos(1.0)).epsilon(1e-11));
}

TEST_CASE("reference sums agree with the production sums") {
  const Integrand& p1 = corpus_fixture("sqrt1mx");
  CHECK(static_cast<double>(reference_trapezoid_sum(p1, 1000)) ==
        doctest::Approx(trapezoid_sum(p1, 1000)).epsilon(1e-14));

  const Integrand& p2 = corpus_fixture("inv_sqrt");
  CHECK(static_cast<double>(reference_left_sum(p2, 1000)) ==
        doctest::Approx(left_sum(p2, 1000)).epsilon(1e-14));

  const Integrand& p3 = corpus_fixture("p3_singular");
  CHECK(static_cast<double>(reference_symmetric_sum(p3, 1000)) ==
        doctest::Approx(symmetric_sum(p3, 1000)).epsilon(1e-13));
}

TEST_CASE("trapezoid errors follow the expected expansion") {
  // n^(3/2) R_n = 0.20788622... - (1/24) n^(-1/2) + higher order, where the
  // constant is -zeta(-1/2); checked against the partial-sum oracle
  const Integrand& f = corpus_fixture("sqrt1mx");
  const double limit = -static_cast<double>(testsupport::zeta_oracle(-0.5L));
  for (const long n : {1L << 12, 1L << 16}) {
    CAPTURE(n);
    const double err = static_cast<double>(
        reference_error(f, SumScheme::kTrapezoidEndpoint, n));
    const double scaled = std::pow(static_cast<double>(n), 1.5) * err;
    const double predicted = limit - (1.0 / 24.0) / std::sqrt(static_cast<double>(n));
    CHECK(scaled == doctest::Approx(predicted).epsilon(1e-5));
  }
}

TEST_CASE("left-sum errors follow the expected expansion") {
  // sqrt(n) * error = 1.46035450... - (1/2) n^(-1/2) + higher order, with
  // the constant -zeta(1/2)
  const Integrand& f = corpus_fixture("inv_sqrt");
  const double limit = -static_cast<double>(testsupport::zeta_oracle(0.5L));
  for (const long n : {1L << 12, 1L << 16}) {
    CAPTURE(n);
    const double err =
        static_cast<double>(reference_error(f, SumScheme::kLeft, n));
    const double scaled = std::sqrt(static_cast<double>(n)) * err;
    const double predicted = limit - 0.5 / std::sqrt(static_cast<double>(n));
    CHECK(scaled == doctest::Approx(predicted).epsilon(1e-4));
  }
}

TEST_CASE("asymptotic constants stabilize on the zeta limits") {
  const AsymptoticConstant trap = asymptotic_constant(
      corpus_fixture("sqrt1mx"), SumScheme::kTrapezoidEndpoint, 1.5);
  CHECK(trap.stable);
  CHECK(trap.value ==
        doctest::Approx(0.20788622497735457).epsilon(5e-4));

  const AsymptoticConstant left =
      asymptotic_constant(corpus_fixture("inv_sqrt"), SumScheme::kLeft, 0.5);
  CHECK(left.stable);
  CHECK(left.value == doctest::Approx(1.4603545088095868).epsilon(5e-4));
}

TEST_CASE("asymptotic constant guards") {
  CHECK_THROWS_AS(
      asymptotic_constant(corpus_fixture("sqrt1mx"), SumScheme::kLeft, 1.5),
      SchemeMismatchError);
  CHECK_THROWS_AS(asymptotic_constant(corpus_fixture("sqrt1mx"),
                                      SumScheme::kTrapezoidEndpoint, 1.0),
                  PreconditionError);
}
