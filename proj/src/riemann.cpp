#include "singquad/riemann.hpp"

#include "singquad/summation.hpp"

namespace singquad {

std::string to_string(SumScheme scheme) {
  switch (scheme) {
    case SumScheme::kTrapezoidEndpoint:
      return "trapezoid_endpoint";
    case SumScheme::kLeft:
      return "left";
    case SumScheme::kSymmetric:
      return "symmetric";
  }
  throw PreconditionError("unreachable sum scheme");
}

SumScheme sum_scheme_from_string(const std::string& tag) {
  if (tag == "trapezoid_endpoint") return SumScheme::kTrapezoidEndpoint;
  if (tag == "left") return SumScheme::kLeft;
  if (tag == "symmetric") return SumScheme::kSymmetric;
  throw PreconditionError("unknown sum scheme tag: " + tag);
}

SumScheme scheme_for(const Integrand& f) {
  switch (f.cls()) {
    case IntegrandClass::kP1:
    case IntegrandClass::kP1Item2:
      return SumScheme::kTrapezoidEndpoint;
    case IntegrandClass::kP2:
      return SumScheme::kLeft;
    case IntegrandClass::kP3Raw:
      return SumScheme::kSymmetric;
  }
  throw PreconditionError("unreachable integrand class");
}

namespace {

void check_n(long n, long max_n) {
  if (n < 1) throw PreconditionError("resolution n must be positive");
  if (max_n < 1) throw PreconditionError("max_n must be positive");
  if (n > max_n) {
    throw PreconditionError("resolution n = " + std::to_string(n) +
                            " exceeds the cap " + std::to_string(max_n));
  }
}

long start_index(double z0, long n) {
  if (z0 == -1.0) return -n;
  if (z0 == 0.0) return 0;
  throw PreconditionError("interval must start at -1 or 0");
}

// Accumulate the unscaled weighted sum, then divide by n once.  With the
// endpoint halves this makes the weights sum to exactly 1 at every n, and it
// saves one rounding per point.
template <class F>
double weighted_sum(const F& f, long k_first, long k_last, long n,
                    bool endpoint_halves) {
  CompensatedSum<double> acc;
  for (long k = k_first; k <= k_last; ++k) {
    const double x = static_cast<double>(k) / static_cast<double>(n);
    const bool half = endpoint_halves && (k == k_first || k == k_last);
    acc.add(half ? 0.5 * f(x) : f(x));
  }
  return acc.value() / static_cast<double>(n);
}

}  // namespace

double trapezoid_sum(const std::function<double(double)>& f, double z0, long n,
                     long max_n) {
  check_n(n, max_n);
  return weighted_sum(f, start_index(z0, n), n, n, true);
}

double left_sum(const std::function<double(double)>& f, double z0, long n,
                long max_n) {
  check_n(n, max_n);
  return weighted_sum(f, start_index(z0, n), n - 1, n, false);
}

double symmetric_sum(const std::function<double(double)>& f, long n,
                     long max_n) {
  check_n(n, max_n);
  return weighted_sum(f, -(n - 1), n - 1, n, false);
}

double trapezoid_sum(const Integrand& f, long n, long max_n) {
  if (f.is_raw()) {
    throw SchemeMismatchError(
        "endpoint weights need a value at x = 1; raw integrands do not have one");
  }
  if (f.has_negative_power()) {
    throw SchemeMismatchError(
        "endpoint weights need a finite value at x = 1");
  }
  return trapezoid_sum([&f](double x) { return eval(f, x); }, f.z0(), n,
                       max_n);
}

double left_sum(const Integrand& f, long n, long max_n) {
  return left_sum([&f](double x) { return eval(f, x); }, f.z0(), n, max_n);
}

double symmetric_sum(const Integrand& f, long n, long max_n) {
  if (f.z0() != -1.0) {
    throw SchemeMismatchError("the symmetric sum runs over [-1, 1] only");
  }
  return symmetric_sum([&f](double x) { return eval(f, x); }, n, max_n);
}

double error_R(const Integrand& f, long n, double exact, long max_n) {
  return exact - trapezoid_sum(f, n, max_n);
}

double scaled_difference(const Integrand& f, long n, double exact,
                         long max_n) {
  check_n(n + 1, max_n);
  const double np1 = static_cast<double>(n + 1);
  const double nd = static_cast<double>(n);
  return np1 * np1 * error_R(f, n + 1, exact, max_n) -
         nd * nd * error_R(f, n, exact, max_n);
}

}  // namespace singquad
