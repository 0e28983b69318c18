#pragma once

#include <functional>

#include "singquad/integrand.hpp"
#include "singquad/quadrature.hpp"
#include "singquad/riemann.hpp"

namespace singquad {

enum class RefMethod { kAnalytic, kAdaptiveQuad, kBruteForce };

std::string to_string(RefMethod method);

struct ReferenceValue {
  double value = 0.0;
  RefMethod method = RefMethod::kAnalytic;
  double tolerance = 0.0;
};

// integral over [z0, 1] of coeff * (1-x)^exponent, by the power rule.
// Divergent exponents (<= -1) are rejected.
double integral_power(double coeff, double exponent, double z0);

// Adaptive integration of a smooth function; tol must lie in [1e-14, 1e-6].
double integrate_smooth(const std::function<double(double)>& g, double a,
                        double b, double tol);

// The integral of f: analytic power rule per term plus the smooth remainder.
// Polynomial remainders integrate in closed form (method kAnalytic);
// otherwise the remainder goes through integrate_smooth (method
// kAdaptiveQuad).  The singular part never touches numeric quadrature, so
// the reference carries no endpoint-error confound of its own.
ReferenceValue exact_integral(const Integrand& f, double tol);

// Same value in extended precision, for the brute-force reference paths.
// Falls back to the double-precision adaptive result for non-polynomial
// remainders.
long double exact_integral_ld(const Integrand& f);

// Extended-precision twins of the summation cores.  Same fixed ascending-k
// order and compensated accumulation, evaluated through eval_ld.
long double reference_trapezoid_sum(const Integrand& f, long n);
long double reference_left_sum(const Integrand& f, long n);
long double reference_symmetric_sum(const Integrand& f, long n);
long double reference_error(const Integrand& f, SumScheme scheme, long n);

struct AsymptoticConstant {
  double value = 0.0;   // Richardson-stabilized limit of n^p * error
  double spread = 0.0;  // disagreement between the two extrapolation levels
  bool stable = true;   // false when the tail is non-monotone or the spread
                        // is large relative to the value
};

// Estimates lim n^p * error(n) by brute force at n = 2^16, 2^17, 2^18 with a
// two-point elimination of the n^(-1/2) correction.  p must be 1/2 or 3/2;
// the scheme must match the integrand's class (endpoint trapezoid for the
// square-root family, left sum for the -1/2 family).
AsymptoticConstant asymptotic_constant(const Integrand& f, SumScheme scheme,
                                       double p);

}  // namespace singquad
