#include "singquad/quadrature.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "singquad/summation.hpp"

namespace singquad {

namespace {

struct GaussLegendreTable {
  std::array<double, 16> node{};
  std::array<double, 16> weight{};

  GaussLegendreTable() {
    const int n = 16;
    const double pi = std::acos(-1.0);
    for (int i = 0; i < n / 2; ++i) {
      double t = std::cos(pi * (i + 0.75) / (n + 0.5));
      double p0 = 0.0;
      double dp = 0.0;
      for (int pass = 0; pass < 64; ++pass) {
        p0 = 1.0;
        double p1 = 0.0;
        for (int j = 0; j < n; ++j) {
          const double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * j + 1.0) * t * p1 - j * p2) / (j + 1.0);
        }
        dp = n * (t * p0 - p1) / (t * t - 1.0);
        const double step = p0 / dp;
        t -= step;
        if (std::abs(step) < 1e-16) {
          // one clean-up pass keeps the node at full precision
          if (pass > 0) break;
        }
      }
      node[i] = -t;
      node[n - 1 - i] = t;
      weight[i] = 2.0 / ((1.0 - t * t) * dp * dp);
      weight[n - 1 - i] = weight[i];
    }
  }
};

const GaussLegendreTable& gl16_table() {
  static const GaussLegendreTable table;
  return table;
}

struct Segment {
  double a = 0.0;
  double b = 0.0;
  int depth = 0;
};

struct RombergOutcome {
  double value = 0.0;
  double residual = 0.0;
  bool converged = false;
};

RombergOutcome romberg_segment(const std::function<double(double)>& f,
                               double a, double b, double tol) {
  constexpr int kLevels = 9;  // up to 257 evaluations
  double table[kLevels][kLevels];
  const double h = b - a;
  table[0][0] = 0.5 * h * (f(a) + f(b));
  RombergOutcome out;
  for (int i = 1; i < kLevels; ++i) {
    const long panels = 1L << i;
    CompensatedSum<double> acc;
    for (long k = 1; k < panels; k += 2) {
      acc.add(f(a + h * (static_cast<double>(k) / static_cast<double>(panels))));
    }
    table[i][0] = 0.5 * table[i - 1][0] +
                  (h / static_cast<double>(panels)) * acc.value();
    double scale = 4.0;
    for (int j = 1; j <= i; ++j) {
      table[i][j] =
          table[i][j - 1] + (table[i][j - 1] - table[i - 1][j - 1]) / (scale - 1.0);
      scale *= 4.0;
    }
    out.value = table[i][i];
    out.residual = std::abs(table[i][i] - table[i - 1][i - 1]);
    if (i >= 3 && out.residual <= tol) {
      out.converged = true;
      return out;
    }
  }
  return out;
}

}  // namespace

double gauss_legendre_16(const std::function<double(double)>& f, double a,
                         double b) {
  const auto& table = gl16_table();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  CompensatedSum<double> acc;
  for (int i = 0; i < 16; ++i) {
    acc.add(table.weight[i] * f(mid + half * table.node[i]));
  }
  return half * acc.value();
}

double adaptive_integrate(const std::function<double(double)>& f, double a,
                          double b, double abs_tol, int max_segments) {
  if (!(abs_tol > 0.0)) throw PreconditionError("tolerance must be positive");
  if (max_segments < 1) throw PreconditionError("max_segments must be positive");
  if (a == b) return 0.0;
  if (!(a < b)) throw PreconditionError("need a < b");

  const double total_len = b - a;
  CompensatedSum<double> total;
  double pending_residual = 0.0;
  int segments_done = 0;

  // Depth-first, left to right, so the evaluation order (and therefore the
  // result) is reproducible.
  std::vector<Segment> stack;
  stack.push_back({a, b, 0});
  while (!stack.empty()) {
    const Segment seg = stack.back();
    stack.pop_back();
    if (++segments_done > max_segments) {
      throw AccuracyError("adaptive integration ran out of segments",
                          total.value(), pending_residual);
    }
    const double share = abs_tol * (seg.b - seg.a) / total_len;
    const RombergOutcome r = romberg_segment(f, seg.a, seg.b, share);
    if (r.converged || seg.depth >= 40) {
      if (!r.converged) {
        throw AccuracyError("segment refinement bottomed out",
                            total.value() + r.value,
                            pending_residual + r.residual);
      }
      total.add(r.value);
      pending_residual += r.residual;
      continue;
    }
    const double mid = 0.5 * (seg.a + seg.b);
    stack.push_back({mid, seg.b, seg.depth + 1});
    stack.push_back({seg.a, mid, seg.depth + 1});
  }
  return total.value();
}

}  // namespace singquad
