#include <doctest.h>

#include <cmath>

#include "singquad/accel.hpp"
#include "singquad/oracle.hpp"

using namespace singquad;

TEST_CASE("the solve core recovers an exact power-law model") {
  // s_m = I - c m^(-3/2) makes every residual vanish identically
  const double target = 0.75;
  const double c = 0.31;
  const long n = 64;
  const auto model = [&](long m) {
    return target - c * std::pow(static_cast<double>(m), -1.5);
  };
  const AcceleratedEstimate est =
      detail::accel_solve(model(n), model(2 * n), model(4 * n), n);
  CHECK(est.seed_n == n);
  CHECK(est.base_n == 4 * n);
  CHECK(est.leading_constant == doctest::Approx(c).epsilon(1e-10));
  CHECK(est.corrected_value == doctest::Approx(target).epsilon(1e-13));
  CHECK(est.holdout_residual <= 1e-13);
  CHECK(est.fit_residual <= 1e-15);
}

TEST_CASE("flat sums degenerate to the identity correction") {
  const AcceleratedEstimate est = detail::accel_solve(2.0, 2.0, 2.0, 64);
  CHECK(est.leading_constant == 0.0);
  CHECK(est.corrected_value == 2.0);
}

TEST_CASE("acceleration cuts the error on the singular fixtures") {
  for (const char* name :
       {"sqrt1mx", "sqrt_mix_smooth", "sqrt1mx_sym", "item2_mix"}) {
    CAPTURE(name);
    const Integrand& f = corpus_fixture(name);
    const AcceleratedEstimate est = extrapolate(f, 256);
    const double exact = *f.exact_integral_hint();
    const double raw_err = std::fabs(est.raw_sum - exact);
    const double corrected_err = std::fabs(est.corrected_value - exact);
    CHECK(raw_err > 0.0);
    CHECK(corrected_err <= 0.05 * raw_err);
    CHECK(est.fit_residual <= 1e-14);
  }
}

TEST_CASE("the fitted coefficient approaches the asymptotic constant") {
  // for sqrt(1-x) on [0, 1] the true leading constant is -zeta(-1/2)
  const double c = estimate_leading_constant(corpus_fixture("sqrt1mx"), 256);
  CHECK(c == doctest::Approx(0.20788622497735457).epsilon(0.02));
}

TEST_CASE("acceleration guards its hypotheses") {
  CHECK_THROWS_AS(extrapolate(corpus_fixture("sqrt1mx"), 32),
                  PreconditionError);
  CHECK_THROWS_AS(extrapolate(corpus_fixture("inv_sqrt"), 256),
                  HypothesisError);
  CHECK_THROWS_AS(extrapolate(corpus_fixture("p3_singular"), 256),
                  HypothesisError);
}
