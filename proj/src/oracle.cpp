#include "singquad/oracle.hpp"

#include <cmath>
#include <limits>

#include "singquad/summation.hpp"

namespace singquad {

std::string to_string(RefMethod method) {
  switch (method) {
    case RefMethod::kAnalytic:
      return "analytic";
    case RefMethod::kAdaptiveQuad:
      return "adaptive_quadrature";
    case RefMethod::kBruteForce:
      return "brute_force";
  }
  throw PreconditionError("unreachable reference method");
}

namespace {

void check_z0(double z0) {
  if (z0 != -1.0 && z0 != 0.0) {
    throw PreconditionError("interval must start at -1 or 0");
  }
}

// int_{z0}^{1} (1-x)^p dx = (1-z0)^(p+1) / (p+1)
long double power_mass(long double p, long double z0) {
  return std::pow(1.0L - z0, p + 1.0L) / (p + 1.0L);
}

// int over [z0, 1] of the polynomial-and-tail smooth part, in closed form.
long double smooth_mass_closed(const SmoothPart& g, long double z0) {
  CompensatedSum<long double> acc;
  const auto& coeffs = g.poly_coeffs();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const long double ip1 = static_cast<long double>(i + 1);
    acc.add(coeffs[i] * (1.0L - std::pow(z0, ip1)) / ip1);
  }
  for (const auto& t : g.power_tail()) {
    acc.add(t.coeff * power_mass(0.5L * t.twice_exponent, z0));
  }
  return acc.value();
}

}  // namespace

double integral_power(double coeff, double exponent, double z0) {
  check_z0(z0);
  if (exponent <= -1.0) {
    throw DivergentIntegralError("(1-x)^p has no integral for p <= -1");
  }
  return static_cast<double>(coeff *
                             power_mass(static_cast<long double>(exponent),
                                        static_cast<long double>(z0)));
}

double integrate_smooth(const std::function<double(double)>& g, double a,
                        double b, double tol) {
  if (!(tol >= 1e-14 && tol <= 1e-6)) {
    throw PreconditionError("tolerance must lie in [1e-14, 1e-6]");
  }
  return adaptive_integrate(g, a, b, tol);
}

ReferenceValue exact_integral(const Integrand& f, double tol) {
  if (f.is_raw()) {
    throw CapabilityError("raw integrands carry no reference integral");
  }
  ReferenceValue ref;
  CompensatedSum<long double> acc;
  for (const auto& t : f.terms()) {
    acc.add(t.coeff * power_mass(0.5L * t.twice_exponent,
                                 static_cast<long double>(f.z0())));
  }
  if (f.smooth().is_polynomial()) {
    acc.add(smooth_mass_closed(f.smooth(), static_cast<long double>(f.z0())));
    ref.method = RefMethod::kAnalytic;
    ref.value = static_cast<double>(acc.value());
    ref.tolerance = 8.0 * std::numeric_limits<double>::epsilon() *
                    (1.0 + std::abs(ref.value));
  } else {
    const auto& g = f.smooth();
    acc.add(integrate_smooth([&g](double x) { return g.eval(x); }, f.z0(), 1.0,
                             tol));
    ref.method = RefMethod::kAdaptiveQuad;
    ref.value = static_cast<double>(acc.value());
    ref.tolerance = tol;
  }
  return ref;
}

long double exact_integral_ld(const Integrand& f) {
  if (f.is_raw()) {
    throw CapabilityError("raw integrands carry no reference integral");
  }
  CompensatedSum<long double> acc;
  for (const auto& t : f.terms()) {
    acc.add(t.coeff * power_mass(0.5L * t.twice_exponent,
                                 static_cast<long double>(f.z0())));
  }
  if (f.smooth().is_polynomial()) {
    acc.add(smooth_mass_closed(f.smooth(), static_cast<long double>(f.z0())));
  } else {
    const auto& g = f.smooth();
    acc.add(integrate_smooth([&g](double x) { return g.eval(x); }, f.z0(), 1.0,
                             1e-13));
  }
  return acc.value();
}

namespace {

template <class F>
long double weighted_sum_ld(const F& f, long k_first, long k_last, long n,
                            bool endpoint_halves) {
  CompensatedSum<long double> acc;
  for (long k = k_first; k <= k_last; ++k) {
    const long double x =
        static_cast<long double>(k) / static_cast<long double>(n);
    const bool half = endpoint_halves && (k == k_first || k == k_last);
    acc.add(half ? 0.5L * f(x) : f(x));
  }
  return acc.value() / static_cast<long double>(n);
}

void check_ref_n(long n) {
  if (n < 1) throw PreconditionError("resolution n must be positive");
  if (n > kDefaultMaxN) {
    throw PreconditionError("resolution exceeds the reference cap");
  }
}

}  // namespace

long double reference_trapezoid_sum(const Integrand& f, long n) {
  check_ref_n(n);
  if (f.is_raw() || f.has_negative_power()) {
    throw SchemeMismatchError("endpoint weights need a finite value at x = 1");
  }
  const long k0 = f.z0() == -1.0 ? -n : 0;
  return weighted_sum_ld([&f](long double x) { return eval_ld(f, x); }, k0, n,
                         n, true);
}

long double reference_left_sum(const Integrand& f, long n) {
  check_ref_n(n);
  const long k0 = f.z0() == -1.0 ? -n : 0;
  return weighted_sum_ld([&f](long double x) { return eval_ld(f, x); }, k0,
                         n - 1, n, false);
}

long double reference_symmetric_sum(const Integrand& f, long n) {
  check_ref_n(n);
  if (f.z0() != -1.0) {
    throw SchemeMismatchError("the symmetric sum runs over [-1, 1] only");
  }
  return weighted_sum_ld([&f](long double x) { return eval_ld(f, x); },
                         -(n - 1), n - 1, n, false);
}

long double reference_error(const Integrand& f, SumScheme scheme, long n) {
  switch (scheme) {
    case SumScheme::kTrapezoidEndpoint:
      return exact_integral_ld(f) - reference_trapezoid_sum(f, n);
    case SumScheme::kLeft:
      return exact_integral_ld(f) - reference_left_sum(f, n);
    case SumScheme::kSymmetric:
      // the integral may not exist here; the object of interest is the sum
      return reference_symmetric_sum(f, n);
  }
  throw PreconditionError("unreachable sum scheme");
}

AsymptoticConstant asymptotic_constant(const Integrand& f, SumScheme scheme,
                                       double p) {
  if (p != 0.5 && p != 1.5) {
    throw PreconditionError("supported decay exponents are 1/2 and 3/2");
  }
  if (scheme != scheme_for(f)) {
    throw SchemeMismatchError("scheme does not match the integrand's family");
  }

  const long n1 = 1L << 16;
  const long n2 = 1L << 17;
  const long n3 = 1L << 18;
  const long double lp = static_cast<long double>(p);
  const long double v1 =
      std::pow(static_cast<long double>(n1), lp) * reference_error(f, scheme, n1);
  const long double v2 =
      std::pow(static_cast<long double>(n2), lp) * reference_error(f, scheme, n2);
  const long double v3 =
      std::pow(static_cast<long double>(n3), lp) * reference_error(f, scheme, n3);

  // v(n) = A + B / sqrt(n): eliminate B through consecutive pairs and use
  // the disagreement of the two solutions as the stability gauge.
  const auto eliminate = [](long double va, long double na, long double vb,
                            long double nb) {
    const long double ia = 1.0L / std::sqrt(na);
    const long double ib = 1.0L / std::sqrt(nb);
    const long double slope = (va - vb) / (ia - ib);
    return vb - slope * ib;
  };
  const long double a_low =
      eliminate(v1, static_cast<long double>(n1), v2, static_cast<long double>(n2));
  const long double a_high =
      eliminate(v2, static_cast<long double>(n2), v3, static_cast<long double>(n3));

  AsymptoticConstant out;
  out.value = static_cast<double>(a_high);
  out.spread = static_cast<double>(std::abs(a_high - a_low));
  const bool monotone = (v2 - v1) * (v3 - v2) >= 0.0L;
  out.stable =
      monotone && out.spread <= std::max(1e-3 * std::abs(out.value), 1e-10);
  return out;
}

}  // namespace singquad
