#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "singquad/errors.hpp"

namespace singquad {

// Integration interval is [z0, 1] with z0 either -1 or 0.
struct Domain {
  double z0 = 0.0;

  static Domain unit() { return Domain{0.0}; }
  static Domain symmetric() { return Domain{-1.0}; }
};

namespace detail {

// u^(t/2) for odd integer t, via sqrt(u) and binary exponentiation.  Chosen
// over std::pow so that dyadic inputs give exactly representable results
// (e.g. (1/4)^(-1/2) == 2 bit-for-bit), which the power-law tests rely on.
template <class Real>
Real half_pow(Real u, int twice_exponent) {
  const Real s = std::sqrt(u);
  unsigned e = twice_exponent < 0 ? static_cast<unsigned>(-twice_exponent)
                                  : static_cast<unsigned>(twice_exponent);
  Real r = Real(1);
  Real b = s;
  while (e != 0) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1;
  }
  return twice_exponent < 0 ? Real(1) / r : r;
}

}  // namespace detail

// One term coeff * (1-x)^(exponent), with the exponent stored as an exact
// rational tag (numerator over denominator 2) so classification never hits
// float comparison issues.  Admitted exponents: -1/2, 1/2, 3/2, 5/2, 7/2.
struct PowerTerm {
  double coeff = 0.0;
  int twice_exponent = 1;

  double exponent() const { return 0.5 * twice_exponent; }

  // d/dx [c (1-x)^p] = -c p (1-x)^(p-1)
  PowerTerm derivative() const {
    return PowerTerm{coeff * (-0.5 * twice_exponent), twice_exponent - 2};
  }

  template <class Real>
  Real eval(Real one_minus_x) const {
    return Real(coeff) * detail::half_pow(one_minus_x, twice_exponent);
  }
};

// The remainder that is smooth at x = 1.  Two representations:
//  - a polynomial (ascending coefficients) plus an optional tail of
//    (1-x)^(5/2) / (1-x)^(7/2) terms; everything differentiates and
//    integrates in closed form, so downstream checks carry no
//    finite-difference noise;
//  - arbitrary evaluators with explicitly supplied derivatives and a
//    declared C^k class, for functions outside the polynomial family.
class SmoothPart {
 public:
  SmoothPart() = default;  // identically zero, treated as C^4

  static SmoothPart polynomial(std::vector<double> coeffs_ascending,
                               std::vector<PowerTerm> power_tail = {});
  static SmoothPart custom(std::function<double(double)> eval,
                           std::vector<std::function<double(double)>> derivatives,
                           int declared_class);

  double eval(double x) const;
  // order in 1..4; orders beyond what this part provides raise
  // CapabilityError.
  double derivative(double x, int order) const;

  long double eval_ld(long double x) const;
  long double derivative_ld(long double x, int order) const;

  // C^k on the whole interval.  Polynomials report 4 (the largest order
  // anything downstream asks for); a power tail caps this at 2.
  int smoothness_class() const;
  int max_derivative_order() const;

  bool is_polynomial() const { return !custom_eval_; }
  const std::vector<double>& poly_coeffs() const { return poly_; }
  const std::vector<PowerTerm>& power_tail() const { return tail_; }

 private:
  std::vector<double> poly_;                   // ascending powers of x
  std::vector<std::vector<double>> poly_derivs_;  // precomputed, orders 1..4
  std::vector<PowerTerm> tail_;
  std::vector<std::vector<PowerTerm>> tail_derivs_;

  std::function<double(double)> custom_eval_;
  std::vector<std::function<double(double)>> custom_derivs_;
  int declared_class_ = 4;
};

// Which family of hypotheses an integrand claims to satisfy; validated on
// construction.
//   kP1      power terms limited to (1-x)^(1/2), (1-x)^(3/2); remainder C^2
//   kP1Item2 additionally admits (1-x)^(5/2), (1-x)^(7/2); remainder C^4
//   kP2      exactly c1 (1-x)^(-1/2) + c2 (1-x)^(1/2) + C^1 remainder, c1 > 0
//   kP3Raw   a bare evaluator, continuous on [-1, 1) with bounded
//            (1-x)^(3/2) growth; no decomposition carried
enum class IntegrandClass { kP1, kP1Item2, kP2, kP3Raw };

std::string to_string(IntegrandClass cls);
IntegrandClass integrand_class_from_string(const std::string& tag);

class Integrand {
 public:
  static Integrand make(std::string name, Domain domain,
                        std::vector<PowerTerm> terms, SmoothPart smooth,
                        IntegrandClass cls);
  // Raw integrands live on [-1, 1) only.
  static Integrand make_raw(std::string name,
                            std::function<double(double)> eval);

  Integrand&& with_exact_integral(double value) &&;

  const std::string& name() const { return name_; }
  const Domain& domain() const { return domain_; }
  double z0() const { return domain_.z0; }
  IntegrandClass cls() const { return cls_; }
  const std::vector<PowerTerm>& terms() const { return terms_; }
  const SmoothPart& smooth() const { return smooth_; }
  bool is_raw() const { return static_cast<bool>(raw_eval_); }
  const std::function<double(double)>& raw_eval() const { return raw_eval_; }

  bool has_negative_power() const;
  // Coefficient of (1-x)^(t/2), or 0 when the term is absent.
  double coeff_of(int twice_exponent) const;
  // The leading singular coefficient: the (1-x)^(-1/2) coefficient for kP2,
  // the (1-x)^(1/2) coefficient otherwise.
  double c1() const;

  std::optional<double> exact_integral_hint() const { return exact_hint_; }

  // Power terms differentiated `order` times, precomputed at construction.
  const std::vector<PowerTerm>& term_derivatives(int order) const;

 private:
  Integrand() = default;

  std::string name_;
  Domain domain_;
  std::vector<PowerTerm> terms_;
  std::vector<std::vector<PowerTerm>> term_derivs_;  // orders 1..4
  SmoothPart smooth_;
  IntegrandClass cls_ = IntegrandClass::kP1;
  std::function<double(double)> raw_eval_;
  std::optional<double> exact_hint_;
};

// Pointwise evaluation on [z0, 1]; x = 1 is rejected for integrands that
// blow up there.  (1-x) is computed once and shared across terms.
double eval(const Integrand& f, double x);
// Derivative of the given order (1..4).  Power-term derivatives are analytic;
// smooth-part derivatives come from the SmoothPart.  Evaluation at x = 1 is
// rejected when any differentiated power term is singular there.
double eval_derivative(const Integrand& f, double x, int order);

// Extended-precision twins, used by the reference-value paths so the checker
// is strictly more accurate than the code it checks.
long double eval_ld(const Integrand& f, long double x);
long double eval_derivative_ld(const Integrand& f, long double x, int order);

// Named fixtures with closed-form integrals attached: every admitted pure
// power on both domains, mixed instances with polynomial remainders, the
// canonical -1/2 and -3/2 singularities, and degenerate smooth cases.
const std::vector<Integrand>& corpus();
const Integrand& corpus_fixture(const std::string& name);

}  // namespace singquad
