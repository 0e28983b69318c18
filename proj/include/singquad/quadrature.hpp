#pragma once

#include <functional>

#include "singquad/errors.hpp"

namespace singquad {

// Fixed 16-point Gauss-Legendre rule on [a, b].  Nodes and weights are
// generated once by Newton iteration on the Legendre recurrence.  Exact for
// polynomials through degree 31; used for the per-cell weighted integrals,
// where the integrand is analytic and the cell is well separated from the
// singularity.
double gauss_legendre_16(const std::function<double(double)>& f, double a,
                         double b);

// Deterministic adaptive integrator: per-segment Romberg tables with
// bisection on failure and a tolerance budget proportional to segment length.
// Intended for integrands that are smooth on [a, b]; throws AccuracyError
// (carrying the best estimate and its residual) when the segment budget runs
// out.
double adaptive_integrate(const std::function<double(double)>& f, double a,
                          double b, double abs_tol, int max_segments = 4096);

}  // namespace singquad
