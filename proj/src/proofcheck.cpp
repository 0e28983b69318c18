#include "singquad/proofcheck.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "singquad/oracle.hpp"
#include "singquad/quadrature.hpp"
#include "singquad/riemann.hpp"
#include "singquad/summation.hpp"

namespace singquad {

namespace {

void check_unit_point(long double x) {
  if (!(x >= 0.0L) || !(x <= 1.0L)) {
    throw DomainError("the folded function lives on [0, 1]");
  }
}

long double fold_sign(int order) { return order % 2 == 0 ? 1.0L : -1.0L; }

}  // namespace

double SymmetrizedFunction::phi(double x) const {
  check_unit_point(x);
  return eval(*base_, x) + eval(*base_, -x);
}

double SymmetrizedFunction::phi_derivative(double x, int order) const {
  check_unit_point(x);
  if (order < 1 || order > 3) {
    throw PreconditionError("folded derivatives are provided for orders 1..3");
  }
  return eval_derivative(*base_, x, order) +
         static_cast<double>(fold_sign(order)) *
             eval_derivative(*base_, -x, order);
}

double SymmetrizedFunction::phi1(double x) const {
  if (x == 1.0) return 0.0;
  return (1.0 - x) * phi_derivative(x, 1);
}

double SymmetrizedFunction::phi2(double x) const {
  if (x == 1.0) return 0.0;
  const double u = 1.0 - x;
  return u * u * phi_derivative(x, 2);
}

double SymmetrizedFunction::phi3(double x) const {
  if (x == 1.0) return 0.0;
  const double u = 1.0 - x;
  return u * u * u * phi_derivative(x, 3);
}

long double SymmetrizedFunction::phi_ld(long double x) const {
  check_unit_point(x);
  return eval_ld(*base_, x) + eval_ld(*base_, -x);
}

long double SymmetrizedFunction::phi_derivative_ld(long double x,
                                                   int order) const {
  check_unit_point(x);
  if (order < 1 || order > 3) {
    throw PreconditionError("folded derivatives are provided for orders 1..3");
  }
  return eval_derivative_ld(*base_, x, order) +
         fold_sign(order) * eval_derivative_ld(*base_, -x, order);
}

SymmetrizedFunction symmetrize(const Integrand& f) {
  if (f.is_raw()) {
    throw HypothesisError("folding needs a decomposed integrand");
  }
  if (f.z0() != -1.0) {
    throw HypothesisError("folding needs the full interval [-1, 1]");
  }
  if (f.cls() != IntegrandClass::kP1Item2) {
    throw HypothesisError(
        "the second-order machinery needs the four-power decomposition");
  }
  SymmetrizedFunction s;
  s.base_ = &f;
  // Tripwire: the weighted derivatives must decay toward x = 1, otherwise
  // every remainder formula below is meaningless.
  const auto weighted = [&s](double x, int order) {
    double w = 1.0;
    for (int i = 0; i < order; ++i) w *= 1.0 - x;
    return w * s.phi_derivative(x, order);
  };
  for (int order = 1; order <= 3; ++order) {
    const double far = std::abs(weighted(1.0 - 1e-4, order));
    const double near = std::abs(weighted(1.0 - 1e-8, order));
    if (near > 1.5 * far + 1e-12) {
      throw HypothesisError("weighted derivative fails to decay at x = 1");
    }
  }
  return s;
}

namespace {

struct PhiIntegrals {
  long double i_phi1 = 0.0L;
  long double i_phi2 = 0.0L;
};

// Closed-form route.  Splitting F = sum of powers + g and integrating each
// piece by parts leaves only plain integrals, endpoint values, and first
// derivatives:
//   I_Phi1 = -sum c p/(p+1) + int_0^1 g - g(0) - F(0) + int_{-1}^0 F
//   I_Phi2 = sum c p(p-1)/(p+1) - g'(0) - 2 g(0) + 2 int_0^1 g
//          + F'(0) - 2 F(0) + 2 int_{-1}^0 F
// The power tail of the smooth part (when present) is folded into the power
// sums, so g below is the polynomial or custom piece alone.
PhiIntegrals integrals_iphi_ld(const SymmetrizedFunction& s, double tol) {
  const Integrand& f = s.base();
  const SmoothPart& sm = f.smooth();

  std::vector<PowerTerm> powers = f.terms();
  if (sm.is_polynomial()) {
    for (const auto& t : sm.power_tail()) powers.push_back(t);
  }

  CompensatedSum<long double> a1;
  CompensatedSum<long double> a2;
  CompensatedSum<long double> left_mass;  // int_{-1}^0 F
  for (const auto& t : powers) {
    const long double p = 0.5L * t.twice_exponent;
    a1.add(-t.coeff * p / (p + 1.0L));
    a2.add(t.coeff * p * (p - 1.0L) / (p + 1.0L));
    left_mass.add(t.coeff * (std::pow(2.0L, p + 1.0L) - 1.0L) / (p + 1.0L));
  }

  long double g_unit = 0.0L;   // int_0^1 g
  long double g0 = 0.0L;
  long double dg0 = 0.0L;
  if (sm.is_polynomial()) {
    const auto& coeffs = sm.poly_coeffs();
    CompensatedSum<long double> unit;
    CompensatedSum<long double> left;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      const long double ip1 = static_cast<long double>(i + 1);
      unit.add(coeffs[i] / ip1);
      left.add((i % 2 == 0 ? coeffs[i] : -coeffs[i]) / ip1);
    }
    g_unit = unit.value();
    left_mass.add(left.value());
    g0 = coeffs.empty() ? 0.0L : coeffs[0];
    dg0 = coeffs.size() > 1 ? coeffs[1] : 0.0L;
  } else {
    const auto g = [&sm](double x) { return sm.eval(x); };
    g_unit = adaptive_integrate(g, 0.0, 1.0, tol);
    left_mass.add(adaptive_integrate(g, -1.0, 0.0, tol));
    g0 = sm.eval(0.0);
    dg0 = sm.derivative(0.0, 1);
  }

  const long double f0 = eval_ld(f, 0.0L);
  const long double df0 = eval_derivative_ld(f, 0.0L, 1);

  PhiIntegrals out;
  out.i_phi1 = a1.value() + g_unit - g0 - f0 + left_mass.value();
  out.i_phi2 = a2.value() - dg0 - 2.0L * g0 + 2.0L * g_unit + df0 -
               2.0L * f0 + 2.0L * left_mass.value();
  return out;
}

void check_resolution(long n) {
  if (n < 1) throw PreconditionError("resolution n must be positive");
  if (n + 1 > kDefaultMaxN) {
    throw PreconditionError("resolution exceeds the cap");
  }
}

// A_j = sum_{k=1}^{n} (1/(n+1)) ((n+1-k)/(n+1))^j  d^j Phi(k/(n+1))
long double weighted_tail_sum(const detail::LdFn& deriv, long n, int power) {
  const long double m = static_cast<long double>(n) + 1.0L;
  CompensatedSum<long double> acc;
  for (long k = 1; k <= n; ++k) {
    const long double w = (m - static_cast<long double>(k)) / m;
    const long double wp = power == 1 ? w : w * w;
    acc.add(wp * deriv(static_cast<long double>(k) / m));
  }
  return acc.value() / m;
}

// Endpoint-weighted trapezoid of a callable on [0, 1] at resolution m.
long double trapezoid_unit_ld(const detail::LdFn& g, long m) {
  CompensatedSum<long double> acc;
  for (long k = 0; k <= m; ++k) {
    const long double x =
        static_cast<long double>(k) / static_cast<long double>(m);
    const long double v = g(x);
    acc.add(k == 0 || k == m ? 0.5L * v : v);
  }
  return acc.value() / static_cast<long double>(m);
}

detail::LdFn phi_fn(const SymmetrizedFunction& s) {
  return [&s](long double x) { return s.phi_ld(x); };
}

detail::LdFn phi_deriv_fn(const SymmetrizedFunction& s, int order) {
  return [&s, order](long double x) { return s.phi_derivative_ld(x, order); };
}

detail::LdFn phi_weighted_fn(const SymmetrizedFunction& s, int order) {
  return [&s, order](long double x) -> long double {
    if (x == 1.0L) return 0.0L;
    long double w = 1.0L;
    for (int i = 0; i < order; ++i) w *= 1.0L - x;
    return w * s.phi_derivative_ld(x, order);
  };
}

}  // namespace

namespace detail {

long double sigma_phi_core(const LdFn& phi, long n) {
  check_resolution(n);
  const long double m = static_cast<long double>(n) + 1.0L;
  CompensatedSum<long double> acc;
  for (long k = 1; k <= n; ++k) {
    const long double kk = static_cast<long double>(k);
    acc.add(phi(kk / m) - phi((kk - 1.0L) / static_cast<long double>(n)));
  }
  return acc.value();
}

long double sigma_phi1_core(const LdFn& dphi, long double i_phi1, long n) {
  check_resolution(n);
  const long double m = static_cast<long double>(n) + 1.0L;
  return i_phi1 - weighted_tail_sum(dphi, n, 1) - dphi(0.0L) / (2.0L * m);
}

long double sigma_phi2_core(const LdFn& d2phi, long double i_phi2, long n) {
  check_resolution(n);
  const long double m = static_cast<long double>(n) + 1.0L;
  return i_phi2 - weighted_tail_sum(d2phi, n, 2) - d2phi(0.0L) / (2.0L * m);
}

long double sigma_phi3_residual_core(const LdFn& phi, const LdFn& dphi,
                                     const LdFn& d2phi, long n) {
  check_resolution(n);
  const long double nd = static_cast<long double>(n);
  const long double m = nd + 1.0L;
  const long double sp = sigma_phi_core(phi, n);
  const long double a1 = weighted_tail_sum(dphi, n, 1);
  const long double a2 = weighted_tail_sum(d2phi, n, 2);
  return (6.0L * nd * nd * nd / m) *
         (sp - (m / nd) * a1 + (m / (2.0L * nd * nd)) * a2);
}

}  // namespace detail

std::pair<double, double> integrals_IPhi(const SymmetrizedFunction& s,
                                         double tol) {
  if (!(tol >= 1e-14 && tol <= 1e-10)) {
    throw PreconditionError("tolerance must lie in [1e-14, 1e-10]");
  }
  const PhiIntegrals pi = integrals_iphi_ld(s, tol);
  return {static_cast<double>(pi.i_phi1), static_cast<double>(pi.i_phi2)};
}

double sigma_phi(const SymmetrizedFunction& s, long n) {
  return static_cast<double>(detail::sigma_phi_core(phi_fn(s), n));
}

double sigma_phi1(const SymmetrizedFunction& s, long n) {
  const PhiIntegrals pi = integrals_iphi_ld(s, 1e-13);
  return static_cast<double>(
      detail::sigma_phi1_core(phi_deriv_fn(s, 1), pi.i_phi1, n));
}

double sigma_phi2(const SymmetrizedFunction& s, long n) {
  const PhiIntegrals pi = integrals_iphi_ld(s, 1e-13);
  return static_cast<double>(
      detail::sigma_phi2_core(phi_deriv_fn(s, 2), pi.i_phi2, n));
}

double sigma_phi1_trapezoid(const SymmetrizedFunction& s, long n) {
  check_resolution(n);
  const PhiIntegrals pi = integrals_iphi_ld(s, 1e-13);
  return static_cast<double>(pi.i_phi1 -
                             trapezoid_unit_ld(phi_weighted_fn(s, 1), n + 1));
}

double sigma_phi2_trapezoid(const SymmetrizedFunction& s, long n) {
  check_resolution(n);
  const PhiIntegrals pi = integrals_iphi_ld(s, 1e-13);
  return static_cast<double>(pi.i_phi2 -
                             trapezoid_unit_ld(phi_weighted_fn(s, 2), n + 1));
}

double sigma_phi3_residual(const SymmetrizedFunction& s, long n) {
  return static_cast<double>(detail::sigma_phi3_residual_core(
      phi_fn(s), phi_deriv_fn(s, 1), phi_deriv_fn(s, 2), n));
}

namespace {

IdentityCheck make_check(const std::string& name, long double lhs,
                         long double rhs, double tol) {
  IdentityCheck check;
  check.name = name;
  check.lhs = static_cast<double>(lhs);
  check.rhs = static_cast<double>(rhs);
  const long double scale =
      std::max({1.0L, std::abs(lhs), std::abs(rhs)});
  check.error = static_cast<double>(std::abs(lhs - rhs) / scale);
  check.ok = check.error <= tol;
  return check;
}

}  // namespace

IdentityReport check_item2_identities(const Integrand& f, long n, double tol) {
  if (n < 2) throw PreconditionError("identity checks need n >= 2");
  if (!(tol > 0.0)) throw PreconditionError("tolerance must be positive");
  const SymmetrizedFunction s = symmetrize(f);

  const long double exact = exact_integral_ld(f);
  const long double r_n = exact - reference_trapezoid_sum(f, n);
  const long double r_n1 = exact - reference_trapezoid_sum(f, n + 1);
  const long double nd = static_cast<long double>(n);
  const long double m = nd + 1.0L;
  const long double d_n = m * m * r_n1 - nd * nd * r_n;

  const long double phi0 = s.phi_ld(0.0L);
  const long double dphi0 = s.phi_derivative_ld(0.0L, 1);
  const long double d2phi0 = s.phi_derivative_ld(0.0L, 2);

  const detail::LdFn phi = phi_fn(s);
  const detail::LdFn dphi = phi_deriv_fn(s, 1);
  const detail::LdFn d2phi = phi_deriv_fn(s, 2);

  const long double sp = detail::sigma_phi_core(phi, n);
  const long double sigma1 = m * r_n1;
  const long double sigma2 = nd * (exact - phi0 - sp);

  const PhiIntegrals pi = integrals_iphi_ld(s, 1e-13);
  const long double sp1 = detail::sigma_phi1_core(dphi, pi.i_phi1, n);
  const long double sp2 = detail::sigma_phi2_core(d2phi, pi.i_phi2, n);
  const long double sp3 = detail::sigma_phi3_residual_core(phi, dphi, d2phi, n);
  const long double sp1t =
      pi.i_phi1 - trapezoid_unit_ld(phi_weighted_fn(s, 1), n + 1);
  const long double sp2t =
      pi.i_phi2 - trapezoid_unit_ld(phi_weighted_fn(s, 2), n + 1);

  IdentityReport report;
  report.integrand = f.name();
  report.n = n;
  report.tol = tol;
  report.checks.push_back(
      make_check("scaled_difference_split", d_n, sigma1 + sigma2, tol));
  report.checks.push_back(
      make_check("integral_fold", exact, pi.i_phi1 + phi0, tol));
  report.checks.push_back(make_check("weighted_integral_relation", pi.i_phi2,
                                     2.0L * pi.i_phi1 - dphi0, tol));
  report.checks.push_back(make_check(
      "second_term_expansion", sigma2,
      pi.i_phi1 / nd - d2phi0 / (4.0L * nd) - dphi0 / (2.0L * nd) + m * sp1 -
          (m / (2.0L * nd)) * sp2 - (m / (6.0L * nd * nd)) * sp3,
      tol));
  report.checks.push_back(make_check("first_remainder_routes", sp1, sp1t, tol));
  report.checks.push_back(make_check("second_remainder_routes", sp2, sp2t, tol));

  report.all_ok = true;
  for (const auto& c : report.checks) report.all_ok = report.all_ok && c.ok;
  return report;
}

ProofConstants compute_proof_constants(const Integrand& f, long N,
                                       const std::vector<long>& extra_grid) {
  if (N < 1) throw PreconditionError("threshold N must be positive");
  const SymmetrizedFunction s = symmetrize(f);
  const PhiIntegrals pi = integrals_iphi_ld(s, 1e-13);

  ProofConstants pc;
  pc.i_phi1 = static_cast<double>(pi.i_phi1);
  pc.i_phi2 = static_cast<double>(pi.i_phi2);
  pc.phi0 = static_cast<double>(s.phi_ld(0.0L));
  pc.dphi0 = static_cast<double>(s.phi_derivative_ld(0.0L, 1));
  pc.d2phi0 = static_cast<double>(s.phi_derivative_ld(0.0L, 2));

  std::set<long> grid;
  for (long m = 16; m <= 65536; m *= 2) grid.insert(m);
  for (long m : extra_grid) {
    if (m < 1) throw PreconditionError("grid entries must be positive");
    grid.insert(m);
  }

  const long double exact = exact_integral_ld(f);
  const detail::LdFn phi1 = phi_deriv_fn(s, 1);
  const detail::LdFn phi2 = phi_deriv_fn(s, 2);

  long double l1 = 0.0L;
  long double k1 = 0.0L;
  long double k2 = 0.0L;
  for (long n : grid) {
    for (long m : {n, n + 1}) {
      const long double r = exact - reference_trapezoid_sum(f, m);
      const long double md = static_cast<long double>(m);
      l1 = std::max(l1, md * std::sqrt(md) * std::abs(r));
    }
    const long double md = static_cast<long double>(n) + 1.0L;
    const long double scale = md * std::sqrt(md);
    k1 = std::max(k1, scale * std::abs(detail::sigma_phi1_core(
                           phi1, pi.i_phi1, n)));
    k2 = std::max(k2, scale * std::abs(detail::sigma_phi2_core(
                           phi2, pi.i_phi2, n)));
  }

  long double k3 = 0.0L;
  const detail::LdFn w3 = phi_weighted_fn(s, 3);
  const long samples = 1L << 16;
  for (long j = 1; j < samples; ++j) {
    const long double x =
        static_cast<long double>(j) / static_cast<long double>(samples);
    k3 = std::max(k3, std::abs(w3(x)));
  }

  pc.l1 = static_cast<double>(l1);
  pc.k_phi1 = static_cast<double>(k1);
  pc.k_phi2 = static_cast<double>(k2);
  pc.k_phi3 = static_cast<double>(k3);

  const double rootN = std::sqrt(static_cast<double>(N));
  pc.lbar = pc.l1 + pc.k_phi1 +
            (std::abs(pc.i_phi1) + std::abs(pc.d2phi0) / 4.0 +
             std::abs(pc.dphi0) / 2.0 + pc.k_phi3 / 3.0) /
                rootN +
            pc.k_phi2 / static_cast<double>(N);
  return pc;
}

double lbar_constant(const Integrand& f, long N) {
  return compute_proof_constants(f, N).lbar;
}

long Prop2Certificate::min_admissible_n() const {
  if (!(delta > 0.0)) throw PreconditionError("certificate has no bracket width");
  return static_cast<long>(std::ceil(2.0 / delta));
}

long Prop2Certificate::k0(long n) const {
  if (!(delta > 0.0)) throw PreconditionError("certificate has no bracket width");
  return static_cast<long>(std::floor((1.0 - delta) * static_cast<double>(n)));
}

namespace {

// Worst-case magnitudes of the smooth remainder and its derivative over a
// right neighborhood [1-u0, 1].  Coefficient sums for the closed forms, a
// doubled sample maximum for custom evaluators.
struct SmoothBounds {
  double sup_g = 0.0;
  double sup_dg = 0.0;
};

SmoothBounds smooth_bounds_near_one(const SmoothPart& sm, double u0) {
  SmoothBounds bounds;
  if (sm.is_polynomial()) {
    for (std::size_t i = 0; i < sm.poly_coeffs().size(); ++i) {
      bounds.sup_g += std::abs(sm.poly_coeffs()[i]);
      bounds.sup_dg += static_cast<double>(i) * std::abs(sm.poly_coeffs()[i]);
    }
    for (const auto& t : sm.power_tail()) {
      bounds.sup_g += std::abs(t.coeff);
      bounds.sup_dg += std::abs(t.coeff) * 0.5 * t.twice_exponent;
    }
    return bounds;
  }
  for (int i = 0; i <= 1024; ++i) {
    const double x = 1.0 - u0 * (static_cast<double>(i) / 1024.0);
    bounds.sup_g = std::max(bounds.sup_g, std::abs(sm.eval(x)));
    bounds.sup_dg = std::max(bounds.sup_dg, std::abs(sm.derivative(x, 1)));
  }
  bounds.sup_g *= 2.0;
  bounds.sup_dg *= 2.0;
  return bounds;
}

}  // namespace

double find_delta(const Integrand& f, double cmax, double cmin) {
  if (f.cls() != IntegrandClass::kP2) {
    throw HypothesisError("bracket search needs the -1/2 family");
  }
  const double c1 = f.c1();
  if (!(cmin < c1 && c1 < cmax)) {
    throw CertificateError("brackets must enclose the leading coefficient");
  }
  const double c2 = f.coeff_of(1);

  for (int j = 1; j <= 20; ++j) {
    const double delta = std::ldexp(1.0, -j);
    bool ok = true;

    // dense check away from the endpoint
    for (int i = 1; i <= 1024 && ok; ++i) {
      const double u = delta * (static_cast<double>(i) / 1024.0);
      const double x = 1.0 - u;
      const double g1 = std::sqrt(u) * eval(f, x);
      const double g2 = 2.0 * u * std::sqrt(u) * eval_derivative(f, x, 1);
      ok = g1 >= cmin && g1 <= cmax && g2 >= cmin && g2 <= cmax;
    }
    if (!ok) continue;

    // coefficient bound on the unsampled sliver next to x = 1
    const double u0 = delta / 1024.0;
    const SmoothBounds sb = smooth_bounds_near_one(f.smooth(), u0);
    const double dev1 = std::abs(c2) * u0 + std::sqrt(u0) * sb.sup_g;
    const double dev2 =
        std::abs(c2) * u0 + 2.0 * u0 * std::sqrt(u0) * sb.sup_dg;
    const double dev = std::max(dev1, dev2);
    if (c1 - dev >= cmin && c1 + dev <= cmax) return delta;
  }
  throw CertificateError("no bracket width in the dyadic ladder works");
}

double find_C(const Integrand& f, double delta, double tol) {
  if (f.cls() != IntegrandClass::kP2) {
    throw HypothesisError("the variation allowance needs the -1/2 family");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw PreconditionError("bracket width must lie in (0, 1)");
  }
  if (!(tol > 0.0)) throw PreconditionError("tolerance must be positive");

  const double z0 = f.z0();
  const double hi = 1.0 - 1e-6;
  const auto deriv = [&f](double x) { return eval_derivative(f, x, 1); };

  // sign changes of F' located by scan plus bisection
  std::vector<double> roots;
  const int scan = 8192;
  double xa = z0;
  double da = deriv(xa);
  for (int i = 1; i <= scan; ++i) {
    const double xb = z0 + (hi - z0) * (static_cast<double>(i) / scan);
    const double db = deriv(xb);
    if (da == 0.0) {
      roots.push_back(xa);
    } else if (db != 0.0 && (da < 0.0) != (db < 0.0)) {
      double lo = xa, up = xb, dlo = da;
      while (up - lo > std::max(tol, 4e-16)) {
        const double mid = 0.5 * (lo + up);
        const double dm = deriv(mid);
        if (dm == 0.0) {
          lo = up = mid;
          break;
        }
        if ((dlo < 0.0) == (dm < 0.0)) {
          lo = mid;
          dlo = dm;
        } else {
          up = mid;
        }
      }
      roots.push_back(0.5 * (lo + up));
    }
    xa = xb;
    da = db;
  }

  // On each piece between roots F' keeps one sign, so the variation integral
  // is just the endpoint difference.
  const auto variation_to = [&](double beta) {
    CompensatedSum<double> tv;
    double prev = z0;
    double f_prev = eval(f, prev);
    for (double r : roots) {
      if (r >= beta) break;
      if (r <= prev) continue;
      const double f_r = eval(f, r);
      tv.add(std::abs(f_r - f_prev));
      prev = r;
      f_prev = f_r;
    }
    tv.add(std::abs(eval(f, beta) - f_prev));
    return tv.value();
  };

  const double lo_beta = std::min(1.0 - delta, hi);
  double c = 0.0;
  for (int i = 0; i < 256; ++i) {
    const double beta =
        lo_beta + (hi - lo_beta) * (static_cast<double>(i) / 255.0);
    c = std::max(c, variation_to(beta) - eval(f, beta));
  }
  return std::max(c, 0.0);
}

namespace {

// int_a^b F in closed form wherever the pieces allow it; the custom smooth
// remainder (if any) goes through the fixed quadrature rule, which is exact
// to machine precision for anything this small and smooth.
double mass_between(const Integrand& f, double a, double b) {
  CompensatedSum<long double> acc;
  const long double ua = 1.0L - static_cast<long double>(a);
  const long double ub = 1.0L - static_cast<long double>(b);
  for (const auto& t : f.terms()) {
    const long double p = 0.5L * t.twice_exponent;
    acc.add(t.coeff * (std::pow(ua, p + 1.0L) - std::pow(ub, p + 1.0L)) /
            (p + 1.0L));
  }
  const SmoothPart& sm = f.smooth();
  if (sm.is_polynomial()) {
    for (const auto& t : sm.power_tail()) {
      const long double p = 0.5L * t.twice_exponent;
      acc.add(t.coeff * (std::pow(ua, p + 1.0L) - std::pow(ub, p + 1.0L)) /
              (p + 1.0L));
    }
    const auto& coeffs = sm.poly_coeffs();
    long double pa = 0.0L, pb = 0.0L;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
      pa = pa * a + coeffs[i] / static_cast<long double>(i + 1);
      pb = pb * b + coeffs[i] / static_cast<long double>(i + 1);
    }
    acc.add(pb * b - pa * a);
  } else {
    acc.add(gauss_legendre_16([&sm](double x) { return sm.eval(x); }, a, b));
  }
  return static_cast<double>(acc.value());
}

// Weighted derivative mass of one by-parts cell [a, b] with weight point w:
// (w-b) F(b) - (w-a) F(a) + int_a^b F.  At b = 1 the first term vanishes in
// the limit even though F does not extend there.
double cell_mass_direct(const Integrand& f, double a, double b, double w) {
  double v = mass_between(f, a, b);
  if (b < 1.0 && w != b) v += (w - b) * eval(f, b);
  v -= (w - a) * eval(f, a);
  return v;
}

}  // namespace

Prop2Decomposition prop2_decomposition(const Integrand& f, long n,
                                       const Prop2Certificate& cert) {
  if (f.cls() != IntegrandClass::kP2) {
    throw HypothesisError("the split needs the -1/2 family");
  }
  if (n < cert.min_admissible_n()) {
    throw PreconditionError("resolution below the admissible floor 2/delta");
  }
  if (n > kDefaultMaxN) throw PreconditionError("resolution exceeds the cap");

  const double nd = static_cast<double>(n);
  const long k_start = f.z0() == -1.0 ? -n : 0;
  const long k0 = cert.k0(n);
  const double split = 1.0 - cert.delta;

  const long double exact = exact_integral_ld(f);
  const long double left = reference_left_sum(f, n);

  Prop2Decomposition dec;
  dec.sigma1 = static_cast<double>(exact - left);

  const auto weighted_deriv = [&f](double w) {
    return [&f, w](double x) { return (w - x) * eval_derivative(f, x, 1); };
  };

  CompensatedSum<double> s2;
  for (long k = k_start; k < k0; ++k) {
    const double a = static_cast<double>(k) / nd;
    const double b = static_cast<double>(k + 1) / nd;
    s2.add(gauss_legendre_16(weighted_deriv(b), a, b));
  }
  const double k0_left = static_cast<double>(k0) / nd;
  const double k0_right = static_cast<double>(k0 + 1) / nd;
  s2.add(gauss_legendre_16(weighted_deriv(k0_right), k0_left, split));
  dec.sigma2 = s2.value();
  dec.sigma3 = dec.sigma1 - dec.sigma2;

  CompensatedSum<double> s3;
  s3.add(cell_mass_direct(f, split, k0_right, k0_right));
  for (long k = k0 + 1; k < n; ++k) {
    const double a = static_cast<double>(k) / nd;
    const double b = static_cast<double>(k + 1) / nd;
    s3.add(cell_mass_direct(f, a, b, b));
  }
  dec.sigma3_direct = s3.value();

  dec.split_residual = std::abs(dec.sigma1 - dec.sigma2 - dec.sigma3_direct) /
                       std::max(std::abs(dec.sigma1), 1e-300);
  dec.sigma2_bound_ok = dec.sigma2 >= -cert.l2 / nd;
  dec.sigma3_bound_ok = dec.sigma3 >= cert.L2star / std::sqrt(nd);
  return dec;
}

Prop2Certificate prop2_certificate(const Integrand& f, long N,
                                   double cmax_factor, double cmin_frac) {
  if (f.cls() != IntegrandClass::kP2) {
    throw HypothesisError("certificates exist for the -1/2 family only");
  }
  if (N < 1) throw PreconditionError("threshold N must be positive");
  if (!(cmax_factor > 1.0)) {
    throw PreconditionError("the upper bracket factor must exceed 1");
  }
  if (!(cmin_frac > 0.0 && cmin_frac < 1.0)) {
    throw PreconditionError("the lower bracket fraction must lie in (0, 1)");
  }

  const double root2 = std::sqrt(2.0);
  Prop2Certificate cert;
  cert.c1 = f.c1();
  cert.cmax = cmax_factor * cert.c1;
  const double lo = 2.0 * cert.c1 / (3.0 * root2 - 2.0);
  cert.cmin = lo + cmin_frac * (cert.c1 - lo);
  cert.delta = find_delta(f, cert.cmax, cert.cmin);
  cert.C = find_C(f, cert.delta, 1e-13);
  cert.N = N;
  cert.L2 = 2.0 * cert.cmax + cert.C / std::sqrt(static_cast<double>(N));
  cert.L2star = 0.5 * (3.0 * root2 - 2.0) * cert.cmin;
  cert.l2 = eval(f, 1.0 - cert.delta) + cert.C;
  if (!(cert.L2star > cert.c1)) {
    throw CertificateError("lower constant failed to clear the leading coefficient");
  }

  const long n0 = std::max(N, cert.min_admissible_n());
  const Prop2Decomposition dec = prop2_decomposition(f, n0, cert);
  if (!dec.sigma2_bound_ok || !dec.sigma3_bound_ok ||
      dec.split_residual > 1e-9) {
    throw CertificateError("certificate failed its re-check at n = " +
                           std::to_string(n0));
  }
  return cert;
}

}  // namespace singquad
