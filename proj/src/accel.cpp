#include "singquad/accel.hpp"

#include <cmath>

#include "singquad/riemann.hpp"

namespace singquad {

namespace detail {

AcceleratedEstimate accel_solve(double s_n, double s_2n, double s_4n, long n) {
  if (n < 1) throw PreconditionError("seed resolution must be positive");
  AcceleratedEstimate est;
  est.seed_n = n;
  est.base_n = 4 * n;
  est.raw_sum = s_4n;

  const double noise =
      1e-15 * std::max({1.0, std::abs(s_n), std::abs(s_2n), std::abs(s_4n)});
  if (std::abs(s_2n - s_n) <= noise && std::abs(s_4n - s_2n) <= noise) {
    // the sums have already converged; there is no leading term to remove
    est.corrected_value = s_4n;
    est.holdout_residual = std::abs(s_n - s_4n);
    return est;
  }

  const auto decay = [](double m) { return 1.0 / (m * std::sqrt(m)); };
  const double w2 = decay(2.0 * static_cast<double>(n));
  const double w4 = decay(4.0 * static_cast<double>(n));
  est.leading_constant = (s_4n - s_2n) / (w2 - w4);
  est.corrected_value = s_4n + est.leading_constant * w4;

  const double w1 = decay(static_cast<double>(n));
  est.holdout_residual =
      std::abs(s_n - (est.corrected_value - est.leading_constant * w1));
  est.fit_residual =
      std::abs(s_4n - (est.corrected_value - est.leading_constant * w4));
  return est;
}

}  // namespace detail

AcceleratedEstimate extrapolate(const Integrand& f, long n) {
  if (n < 64) {
    throw PreconditionError("acceleration needs a seed resolution of at least 64");
  }
  if (f.cls() != IntegrandClass::kP1 && f.cls() != IntegrandClass::kP1Item2) {
    throw HypothesisError(
        "the 3/2-power error model applies to the square-root family only");
  }
  const double s_n = trapezoid_sum(f, n);
  const double s_2n = trapezoid_sum(f, 2 * n);
  const double s_4n = trapezoid_sum(f, 4 * n);
  return detail::accel_solve(s_n, s_2n, s_4n, n);
}

double estimate_leading_constant(const Integrand& f, long n) {
  return extrapolate(f, n).leading_constant;
}

}  // namespace singquad
