#pragma once

#include <string>
#include <utility>
#include <vector>

#include "singquad/integrand.hpp"
#include "singquad/riemann.hpp"

namespace singquad {

struct SeqEntry {
  long n = 0;
  double value = 0.0;
};

struct ErrorSequence {
  std::string integrand;
  SumScheme scheme = SumScheme::kTrapezoidEndpoint;
  std::vector<SeqEntry> entries;  // n strictly increasing
};

// Entries at or below this magnitude sit in float noise and are excluded
// from log fits.
inline constexpr double kFitNoiseFloor = 1e-14;

struct RateFit {
  double exponent = 0.0;       // p in the envelope C * n^(-p)
  double constant = 0.0;       // C
  double max_log_residual = 0.0;
  long n_min = 0;
  long n_max = 0;
};

struct BoundReport {
  std::string proposition;  // "1", "1.2", "2", "3"
  std::string integrand;
  bool holds = false;
  std::vector<std::pair<std::string, double>> constants;
  long threshold_n = 0;       // the N the constants are relative to
  std::vector<long> grid;     // the n actually checked (n >= admissible floor)
  std::vector<double> margins;  // per-n slack of the claimed inequality
  std::string note;
};

// Error sequence over the grid: integral minus sum for the trapezoid and
// left schemes, the raw sums for the symmetric scheme.  The grid must be
// strictly increasing.
ErrorSequence compute_error_sequence(const Integrand& f, SumScheme scheme,
                                     const std::vector<long>& grid);

// The D_n = (n+1)^2 R_{n+1} - n^2 R_n sequence over the grid.
ErrorSequence compute_scaled_difference_sequence(const Integrand& f,
                                                 const std::vector<long>& grid);

// Least squares on (log n, log |value|) over usable entries; requires at
// least four of them.
RateFit fit_rate(const ErrorSequence& seq);

// max over entries with n >= N of n^p |value|: the smallest empirical L
// witnessing |value_n| <= L n^(-p) on this grid.
double envelope_constant(const ErrorSequence& seq, double p, long N);

// Default verification grid: geometric n = 2^6 .. 2^16.
std::vector<long> default_grid();

// Square-root-singularity rate claim: |R_n| <= L1 n^(-3/2) for n >= N.
// holds requires the fitted exponent to clear 1.45 (vacuously true when
// there is no singular part or the sequence sits in noise).
BoundReport verify_prop1(const Integrand& f, const std::vector<long>& grid,
                         long N);

// Scaled-difference claim: |D_n| <= Lbar n^(-1/2).  holds requires the
// fitted decay to clear 0.4 and, when the proof-side machinery applies
// (z0 = -1), the empirical envelope to sit below the assembled proof
// constant.
BoundReport verify_prop1_item2(const Integrand& f,
                               const std::vector<long>& grid, long N);

// Two-sided bound for the -1/2 family:
//   L2star n^(-1/2) - l2 n^(-1) <= error <= L2 n^(-1/2)
// with constants from the certificate; checked at every grid n >=
// max(N, ceil(2/delta)).
BoundReport verify_prop2(const Integrand& f, const std::vector<long>& grid,
                         long N);

// Growth bound for the -3/2 family: n^(-1/2) |symmetric sum| stays bounded
// (fitted slope <= 0.05); L3 is the envelope over n >= N.
BoundReport verify_prop3(const Integrand& f, const std::vector<long>& grid,
                         long N);

}  // namespace singquad
