#pragma once

#include <functional>
#include <string>

#include "singquad/integrand.hpp"

namespace singquad {

// The three summation schemes, with the index conventions fixed once here:
//   kTrapezoidEndpoint  (1/2n)F(z0) + (1/2n)F(1) + sum_{k=z0*n+1}^{n-1} (1/n)F(k/n)
//   kLeft               sum_{k=z0*n}^{n-1} (1/n)F(k/n)
//   kSymmetric          sum_{|k|<=n-1} (1/n)F(k/n), on [-1,1] only
// For z0 = -1 the trapezoid interior runs k = -n+1 .. n-1 (grid spacing is
// still 1/n, so the interval carries 2n panels).
enum class SumScheme { kTrapezoidEndpoint, kLeft, kSymmetric };

std::string to_string(SumScheme scheme);
SumScheme sum_scheme_from_string(const std::string& tag);

// The scheme each integrand class is built for.
SumScheme scheme_for(const Integrand& f);

// Grids beyond this need an explicit opt-in via the max_n parameter.
inline constexpr long kDefaultMaxN = 1L << 22;

// Callable-level cores.  Summation is sequential in ascending k with
// compensated accumulation, and every grid point is formed as k/n by a fresh
// division; both choices keep the ~1e-9 error signals clean of accumulation
// artifacts at n in the millions.
double trapezoid_sum(const std::function<double(double)>& f, double z0, long n,
                     long max_n = kDefaultMaxN);
double left_sum(const std::function<double(double)>& f, double z0, long n,
                long max_n = kDefaultMaxN);
double symmetric_sum(const std::function<double(double)>& f, long n,
                     long max_n = kDefaultMaxN);

// Integrand-level wrappers with scheme gating: the trapezoid rejects
// integrands it cannot evaluate at the endpoints, the symmetric sum rejects
// z0 = 0.
double trapezoid_sum(const Integrand& f, long n, long max_n = kDefaultMaxN);
double left_sum(const Integrand& f, long n, long max_n = kDefaultMaxN);
double symmetric_sum(const Integrand& f, long n, long max_n = kDefaultMaxN);

// R_n: the integral minus the endpoint-weighted sum.
double error_R(const Integrand& f, long n, double exact,
               long max_n = kDefaultMaxN);

// D_n := (n+1)^2 R_{n+1} - n^2 R_n, the scaled difference whose slow decay
// the item-2 bound controls.
double scaled_difference(const Integrand& f, long n, double exact,
                         long max_n = kDefaultMaxN);

}  // namespace singquad
