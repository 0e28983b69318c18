#pragma once

// Shared oracles for the tests, written independently of the library code
// they check: descending-k loops, plain accumulation, per-term weights, and
// zeta limits recovered from short partial sums instead of large-n behavior.

#include <cmath>
#include <functional>

namespace testsupport {

using ld_fn = std::function<long double(long double)>;

// zeta(s) from a length-512 partial sum with Euler-Maclaurin corrections
// through the B6 term.  For s in [-1/2, 3/2] every neglected term is below
// 1e-15, so this pins the reference constants to near double precision.
inline long double zeta_oracle(long double s) {
  const long m_steps = 512;
  long double sum = 0.0L;
  for (long j = m_steps; j >= 1; --j) {
    sum += std::pow(static_cast<long double>(j), -s);
  }
  const long double m = static_cast<long double>(m_steps);
  long double tail = std::pow(m, 1.0L - s) / (1.0L - s);
  tail += 0.5L * std::pow(m, -s);
  tail -= (s / 12.0L) * std::pow(m, -s - 1.0L);
  tail += s * (s + 1.0L) * (s + 2.0L) / 720.0L * std::pow(m, -s - 3.0L);
  tail -= s * (s + 1.0L) * (s + 2.0L) * (s + 3.0L) * (s + 4.0L) / 30240.0L *
          std::pow(m, -s - 5.0L);
  return sum - tail;
}

// Naive endpoint-weighted sum: descending k, plain accumulation, each term
// scaled on the spot.
inline long double naive_trapezoid(const ld_fn& f, double z0, long n) {
  const long k_first = z0 < 0.0 ? -n : 0;
  const long double h = 1.0L / static_cast<long double>(n);
  long double sum = 0.5L * h * f(1.0L);
  for (long k = n - 1; k > k_first; --k) {
    sum += h * f(static_cast<long double>(k) / static_cast<long double>(n));
  }
  sum += 0.5L * h *
         f(static_cast<long double>(k_first) / static_cast<long double>(n));
  return sum;
}

inline long double naive_left(const ld_fn& f, double z0, long n) {
  const long k_first = z0 < 0.0 ? -n : 0;
  const long double h = 1.0L / static_cast<long double>(n);
  long double sum = 0.0L;
  for (long k = n - 1; k >= k_first; --k) {
    sum += h * f(static_cast<long double>(k) / static_cast<long double>(n));
  }
  return sum;
}

inline long double naive_symmetric(const ld_fn& f, long n) {
  const long double h = 1.0L / static_cast<long double>(n);
  long double sum = 0.0L;
  for (long k = n - 1; k >= -(n - 1); --k) {
    sum += h * f(static_cast<long double>(k) / static_cast<long double>(n));
  }
  return sum;
}

}  // namespace testsupport
