#pragma once

#include "singquad/integrand.hpp"

namespace singquad {

// Two-point elimination of the leading n^(-3/2) error term.  The sums at
// 2n and 4n fix the model S_m ~ I - c m^(-3/2); the seed sum at n is held
// out and only used as an after-the-fact consistency probe.
struct AcceleratedEstimate {
  long seed_n = 0;           // coarsest resolution, held out of the solve
  long base_n = 0;           // finest resolution entering the solve (4n)
  double raw_sum = 0.0;      // trapezoid sum at base_n
  double leading_constant = 0.0;   // c with error ~ c n^(-3/2)
  double corrected_value = 0.0;    // raw_sum + c base_n^(-3/2)
  double holdout_residual = 0.0;   // |S_n - (corrected - c n^(-3/2))|
  double fit_residual = 0.0;       // |S_4n - (corrected - c (4n)^(-3/2))|
};

// Requires n >= 64 and the 3/2-family decomposition (the model is wrong for
// the -1/2 family and for raw integrands).  Degenerates to c = 0 when the
// consecutive differences are at noise level.
AcceleratedEstimate extrapolate(const Integrand& f, long n);

// The fitted coefficient alone.
double estimate_leading_constant(const Integrand& f, long n);

namespace detail {
// Solve core on precomputed sums, exposed for synthetic sequences.
AcceleratedEstimate accel_solve(double s_n, double s_2n, double s_4n, long n);
}  // namespace detail

}  // namespace singquad
