#include "singquad/integrand.hpp"

#include <algorithm>
#include <utility>

namespace singquad {

namespace {

template <class Real>
Real horner(const std::vector<double>& coeffs, Real x) {
  Real acc = Real(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * x + Real(*it);
  }
  return acc;
}

std::vector<double> poly_derivative(const std::vector<double>& coeffs) {
  std::vector<double> out;
  for (std::size_t i = 1; i < coeffs.size(); ++i) {
    out.push_back(coeffs[i] * static_cast<double>(i));
  }
  return out;
}

std::vector<PowerTerm> term_derivative(const std::vector<PowerTerm>& terms) {
  std::vector<PowerTerm> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(t.derivative());
  return out;
}

template <class Real>
Real eval_terms(const std::vector<PowerTerm>& terms, Real one_minus_x) {
  Real acc = Real(0);
  for (const auto& t : terms) {
    if (t.coeff == 0.0) continue;
    if (one_minus_x == Real(0) && t.twice_exponent < 0) {
      throw DomainError("power term is singular at x = 1");
    }
    acc += t.template eval<Real>(one_minus_x);
  }
  return acc;
}

void check_order(int order, int max_order) {
  if (order < 1 || order > 4) {
    throw PreconditionError("derivative order must be in 1..4");
  }
  if (order > max_order) {
    throw CapabilityError("smooth part provides derivatives only through order " +
                          std::to_string(max_order));
  }
}

}  // namespace

SmoothPart SmoothPart::polynomial(std::vector<double> coeffs_ascending,
                                  std::vector<PowerTerm> power_tail) {
  for (const auto& t : power_tail) {
    if (t.twice_exponent != 5 && t.twice_exponent != 7) {
      throw PreconditionError(
          "smooth power tail admits exponents 5/2 and 7/2 only");
    }
  }
  SmoothPart part;
  part.poly_ = std::move(coeffs_ascending);
  part.tail_ = std::move(power_tail);
  std::vector<double> dp = part.poly_;
  std::vector<PowerTerm> dt = part.tail_;
  for (int order = 1; order <= 4; ++order) {
    dp = poly_derivative(dp);
    dt = term_derivative(dt);
    part.poly_derivs_.push_back(dp);
    part.tail_derivs_.push_back(dt);
  }
  return part;
}

SmoothPart SmoothPart::custom(
    std::function<double(double)> eval,
    std::vector<std::function<double(double)>> derivatives,
    int declared_class) {
  if (!eval) throw PreconditionError("custom smooth part needs an evaluator");
  if (declared_class < 0 || declared_class > 4) {
    throw PreconditionError("declared smoothness class must be in 0..4");
  }
  if (derivatives.size() > 4) {
    throw PreconditionError("at most four derivative evaluators are used");
  }
  for (const auto& d : derivatives) {
    if (!d) throw PreconditionError("null derivative evaluator");
  }
  SmoothPart part;
  part.custom_eval_ = std::move(eval);
  part.custom_derivs_ = std::move(derivatives);
  part.declared_class_ = declared_class;
  return part;
}

double SmoothPart::eval(double x) const {
  if (custom_eval_) return custom_eval_(x);
  return horner(poly_, x) + eval_terms(tail_, 1.0 - x);
}

double SmoothPart::derivative(double x, int order) const {
  check_order(order, max_derivative_order());
  if (custom_eval_) return custom_derivs_[static_cast<std::size_t>(order - 1)](x);
  if (poly_derivs_.empty()) return 0.0;  // default-constructed zero part
  return horner(poly_derivs_[static_cast<std::size_t>(order - 1)], x) +
         eval_terms(tail_derivs_[static_cast<std::size_t>(order - 1)], 1.0 - x);
}

long double SmoothPart::eval_ld(long double x) const {
  if (custom_eval_) {
    return custom_eval_(static_cast<double>(x));
  }
  return horner(poly_, x) + eval_terms(tail_, 1.0L - x);
}

long double SmoothPart::derivative_ld(long double x, int order) const {
  check_order(order, max_derivative_order());
  if (custom_eval_) {
    return custom_derivs_[static_cast<std::size_t>(order - 1)](
        static_cast<double>(x));
  }
  if (poly_derivs_.empty()) return 0.0L;  // default-constructed zero part
  return horner(poly_derivs_[static_cast<std::size_t>(order - 1)], x) +
         eval_terms(tail_derivs_[static_cast<std::size_t>(order - 1)],
                    1.0L - x);
}

int SmoothPart::smoothness_class() const {
  if (custom_eval_) return declared_class_;
  return tail_.empty() ? 4 : 2;
}

int SmoothPart::max_derivative_order() const {
  if (custom_eval_) return static_cast<int>(custom_derivs_.size());
  return 4;
}

std::string to_string(IntegrandClass cls) {
  switch (cls) {
    case IntegrandClass::kP1:
      return "P1";
    case IntegrandClass::kP1Item2:
      return "P1_ITEM2";
    case IntegrandClass::kP2:
      return "P2";
    case IntegrandClass::kP3Raw:
      return "P3_RAW";
  }
  throw PreconditionError("unreachable integrand class");
}

IntegrandClass integrand_class_from_string(const std::string& tag) {
  if (tag == "P1") return IntegrandClass::kP1;
  if (tag == "P1_ITEM2") return IntegrandClass::kP1Item2;
  if (tag == "P2") return IntegrandClass::kP2;
  if (tag == "P3_RAW") return IntegrandClass::kP3Raw;
  throw PreconditionError("unknown integrand class tag: " + tag);
}

namespace {

bool exponent_admitted(IntegrandClass cls, int twice_exponent) {
  switch (cls) {
    case IntegrandClass::kP1:
      return twice_exponent == 1 || twice_exponent == 3;
    case IntegrandClass::kP1Item2:
      return twice_exponent == 1 || twice_exponent == 3 ||
             twice_exponent == 5 || twice_exponent == 7;
    case IntegrandClass::kP2:
      return twice_exponent == -1 || twice_exponent == 1;
    case IntegrandClass::kP3Raw:
      return false;
  }
  return false;
}

int required_smoothness(IntegrandClass cls) {
  switch (cls) {
    case IntegrandClass::kP1:
      return 2;
    case IntegrandClass::kP1Item2:
      return 4;
    case IntegrandClass::kP2:
      return 1;
    case IntegrandClass::kP3Raw:
      return 0;
  }
  return 0;
}

}  // namespace

Integrand Integrand::make(std::string name, Domain domain,
                          std::vector<PowerTerm> terms, SmoothPart smooth,
                          IntegrandClass cls) {
  if (domain.z0 != -1.0 && domain.z0 != 0.0) {
    throw PreconditionError("interval must start at -1 or 0");
  }
  if (cls == IntegrandClass::kP3Raw) {
    throw PreconditionError("raw integrands are built with make_raw");
  }
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (!exponent_admitted(cls, terms[i].twice_exponent)) {
      throw HypothesisError("power exponent " +
                            std::to_string(0.5 * terms[i].twice_exponent) +
                            " is not admitted for class " + to_string(cls));
    }
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      if (terms[i].twice_exponent == terms[j].twice_exponent) {
        throw PreconditionError("duplicate power exponent in term list");
      }
    }
  }
  if (smooth.smoothness_class() < required_smoothness(cls)) {
    throw HypothesisError("class " + to_string(cls) +
                          " needs a C^" + std::to_string(required_smoothness(cls)) +
                          " remainder");
  }
  if (cls == IntegrandClass::kP2) {
    double lead = 0.0;
    for (const auto& t : terms) {
      if (t.twice_exponent == -1) lead = t.coeff;
    }
    if (!(lead > 0.0)) {
      throw HypothesisError("the -1/2 family needs a positive leading coefficient");
    }
  }
  Integrand f;
  f.name_ = std::move(name);
  f.domain_ = domain;
  f.terms_ = std::move(terms);
  f.smooth_ = std::move(smooth);
  f.cls_ = cls;
  std::vector<PowerTerm> dt = f.terms_;
  for (int order = 1; order <= 4; ++order) {
    dt = term_derivative(dt);
    f.term_derivs_.push_back(dt);
  }
  return f;
}

Integrand Integrand::make_raw(std::string name,
                              std::function<double(double)> eval) {
  if (!eval) throw PreconditionError("raw integrand needs an evaluator");
  Integrand f;
  f.name_ = std::move(name);
  f.domain_ = Domain::symmetric();
  f.cls_ = IntegrandClass::kP3Raw;
  f.raw_eval_ = std::move(eval);
  f.term_derivs_.resize(4);
  return f;
}

Integrand&& Integrand::with_exact_integral(double value) && {
  exact_hint_ = value;
  return std::move(*this);
}

bool Integrand::has_negative_power() const {
  for (const auto& t : terms_) {
    if (t.twice_exponent < 0 && t.coeff != 0.0) return true;
  }
  return false;
}

double Integrand::coeff_of(int twice_exponent) const {
  for (const auto& t : terms_) {
    if (t.twice_exponent == twice_exponent) return t.coeff;
  }
  return 0.0;
}

double Integrand::c1() const {
  return cls_ == IntegrandClass::kP2 ? coeff_of(-1) : coeff_of(1);
}

const std::vector<PowerTerm>& Integrand::term_derivatives(int order) const {
  if (order < 1 || order > 4) {
    throw PreconditionError("derivative order must be in 1..4");
  }
  return term_derivs_[static_cast<std::size_t>(order - 1)];
}

namespace {

template <class Real>
void check_point(const Integrand& f, Real x) {
  if (f.is_raw()) {
    if (!(x >= Real(-1)) || !(x < Real(1))) {
      throw DomainError("raw integrands are defined on [-1, 1)");
    }
    return;
  }
  if (!(x >= Real(f.z0())) || !(x <= Real(1))) {
    throw DomainError("evaluation point outside the interval");
  }
}

}  // namespace

double eval(const Integrand& f, double x) {
  check_point(f, x);
  if (f.is_raw()) return f.raw_eval()(x);
  const double u = 1.0 - x;
  return eval_terms(f.terms(), u) + f.smooth().eval(x);
}

double eval_derivative(const Integrand& f, double x, int order) {
  if (order < 1 || order > 4) {
    throw PreconditionError("derivative order must be in 1..4");
  }
  if (f.is_raw()) {
    throw CapabilityError("raw integrands carry no derivatives");
  }
  check_point(f, x);
  const double u = 1.0 - x;
  return eval_terms(f.term_derivatives(order), u) +
         f.smooth().derivative(x, order);
}

long double eval_ld(const Integrand& f, long double x) {
  check_point(f, x);
  if (f.is_raw()) return f.raw_eval()(static_cast<double>(x));
  const long double u = 1.0L - x;
  return eval_terms(f.terms(), u) + f.smooth().eval_ld(x);
}

long double eval_derivative_ld(const Integrand& f, long double x, int order) {
  if (order < 1 || order > 4) {
    throw PreconditionError("derivative order must be in 1..4");
  }
  if (f.is_raw()) {
    throw CapabilityError("raw integrands carry no derivatives");
  }
  check_point(f, x);
  const long double u = 1.0L - x;
  return eval_terms(f.term_derivatives(order), u) +
         f.smooth().derivative_ld(x, order);
}

}  // namespace singquad
