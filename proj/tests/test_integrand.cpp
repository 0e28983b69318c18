#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "singquad/integrand.hpp"

using namespace singquad;

TEST_CASE("power terms evaluate exactly on dyadic points") {
  // half-integer powers of dyadic arguments are exactly representable, and
  // the sqrt-plus-squaring evaluation is chosen to preserve that
  const PowerTerm sqrt_term{1.0, 1};
  CHECK(sqrt_term.eval(0.25) == 0.5);
  CHECK(sqrt_term.eval(1.0) == 1.0);
  CHECK(sqrt_term.eval(0.0625) == 0.25);

  const PowerTerm cube{1.0, 3};
  CHECK(cube.eval(0.25) == 0.125);
  const PowerTerm five{2.0, 5};
  CHECK(five.eval(0.25) == 2.0 * 0.03125);
  const PowerTerm seven{1.0, 7};
  CHECK(seven.eval(0.25) == 0.0078125);

  const PowerTerm inv{1.0, -1};
  CHECK(inv.eval(0.25) == 2.0);
  CHECK(inv.eval(0.0625) == 4.0);

  CHECK(sqrt_term.exponent() == 0.5);
  CHECK(inv.exponent() == -0.5);
}

TEST_CASE("power term derivatives follow the power rule") {
  const PowerTerm t{2.0, 3};
  const PowerTerm dt = t.derivative();
  CHECK(dt.coeff == -3.0);
  CHECK(dt.twice_exponent == 1);

  const PowerTerm inv{1.0, -1};
  const PowerTerm dinv = inv.derivative();
  CHECK(dinv.coeff == 0.5);
  CHECK(dinv.twice_exponent == -3);
  CHECK(dinv.eval(0.25) == 0.5 * 8.0);
}

TEST_CASE("polynomial smooth parts differentiate in closed form") {
  const SmoothPart p = SmoothPart::polynomial({1.0, 2.0, 3.0});
  CHECK(p.eval(0.5) == 2.75);
  CHECK(p.derivative(0.5, 1) == 5.0);
  CHECK(p.derivative(0.5, 2) == 6.0);
  CHECK(p.derivative(0.5, 3) == 0.0);
  CHECK(p.derivative(0.5, 4) == 0.0);
  CHECK(p.smoothness_class() == 4);
  CHECK(p.is_polynomial());
}

TEST_CASE("power tails differentiate in closed form") {
  const SmoothPart s = SmoothPart::polynomial({}, {PowerTerm{1.0, 5}});
  // at x = 3/4 the base is 1/4 and every derivative lands on a dyadic power
  CHECK(s.eval(0.75) == 0.03125);
  CHECK(s.derivative(0.75, 1) == -2.5 * 0.125);
  CHECK(s.derivative(0.75, 2) == 3.75 * 0.5);
  CHECK(s.derivative(0.75, 3) == -1.875 * 2.0);
  CHECK(s.derivative(0.75, 4) == -0.9375 * 8.0);
  CHECK(s.smoothness_class() == 2);

  CHECK_THROWS_AS(SmoothPart::polynomial({}, {PowerTerm{1.0, 3}}),
                  PreconditionError);
}

TEST_CASE("the default smooth part is identically zero through order four") {
  const SmoothPart zero;
  CHECK(zero.eval(0.3) == 0.0);
  for (int order = 1; order <= 4; ++order) {
    CHECK(zero.derivative(0.3, order) == 0.0);
    CHECK(zero.derivative_ld(0.3L, order) == 0.0L);
  }
  CHECK(zero.smoothness_class() == 4);

  // pure-power fixtures carry exactly this zero part; their derivatives must
  // come out as the bare power-rule terms
  const Integrand& f = corpus_fixture("sqrt1mx");
  CHECK(f.smooth().derivative(0.5, 2) == 0.0);
  CHECK(eval_derivative(f, 0.75, 1) == -0.5 / 0.5);
}

TEST_CASE("custom smooth parts report their declared class") {
  const auto g = [](double x) { return std::exp(x); };
  const SmoothPart s = SmoothPart::custom(g, {g, g}, 2);
  CHECK(s.eval(0.0) == 1.0);
  CHECK(s.derivative(1.0, 2) == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
  CHECK(s.smoothness_class() == 2);
  CHECK(s.max_derivative_order() == 2);
  CHECK_THROWS_AS(s.derivative(0.0, 3), CapabilityError);
  CHECK_THROWS_AS(s.derivative(0.0, 0), PreconditionError);
  CHECK_THROWS_AS(s.derivative(0.0, 5), PreconditionError);

  CHECK_THROWS_AS(SmoothPart::custom(nullptr, {}, 0), PreconditionError);
  CHECK_THROWS_AS(SmoothPart::custom(g, {}, 5), PreconditionError);
  CHECK_THROWS_AS(SmoothPart::custom(g, {g, nullptr}, 2), PreconditionError);
}

TEST_CASE("class admission enforces the exponent tables") {
  const Domain unit = Domain::unit();

  CHECK_THROWS_AS(Integrand::make("bad", unit, {PowerTerm{1.0, 5}},
                                  SmoothPart{}, IntegrandClass::kP1),
                  HypothesisError);
  CHECK_THROWS_AS(Integrand::make("bad", unit, {PowerTerm{1.0, 1}},
                                  SmoothPart{}, IntegrandClass::kP2),
                  HypothesisError);
  CHECK_THROWS_AS(Integrand::make("bad", unit, {PowerTerm{-1.0, -1}},
                                  SmoothPart{}, IntegrandClass::kP2),
                  HypothesisError);
  CHECK_THROWS_AS(
      Integrand::make("bad", unit,
                      {PowerTerm{1.0, 1}, PowerTerm{2.0, 1}}, SmoothPart{},
                      IntegrandClass::kP1),
      PreconditionError);
  CHECK_THROWS_AS(Integrand::make("bad", Domain{0.5}, {PowerTerm{1.0, 1}},
                                  SmoothPart{}, IntegrandClass::kP1),
                  PreconditionError);
  CHECK_THROWS_AS(Integrand::make("bad", unit, {}, SmoothPart{},
                                  IntegrandClass::kP3Raw),
                  PreconditionError);

  // smoothness demands: the 4th-order machinery rejects a C^2 remainder, and
  // a declared C^1 evaluator is too weak for the square-root family
  CHECK_THROWS_AS(
      Integrand::make("bad", Domain::symmetric(), {PowerTerm{1.0, 1}},
                      SmoothPart::polynomial({}, {PowerTerm{1.0, 5}}),
                      IntegrandClass::kP1Item2),
      HypothesisError);
  const auto g = [](double x) { return x; };
  CHECK_THROWS_AS(
      Integrand::make("bad", unit, {PowerTerm{1.0, 1}},
                      SmoothPart::custom(g, {g}, 1), IntegrandClass::kP1),
      HypothesisError);
}

TEST_CASE("evaluation guards the interval and the singular endpoint") {
  const Integrand& p2 = corpus_fixture("inv_sqrt");
  CHECK_THROWS_AS(eval(p2, 1.0), DomainError);
  CHECK_THROWS_AS(eval(p2, -0.5), DomainError);
  CHECK_THROWS_AS(eval(p2, std::nan("")), DomainError);
  CHECK(eval(p2, 0.75) == 2.0);

  const Integrand& p1 = corpus_fixture("sqrt1mx");
  CHECK(eval(p1, 1.0) == 0.0);
  CHECK_THROWS_AS(eval_derivative(p1, 1.0, 1), DomainError);
  CHECK_THROWS_AS(eval_derivative(p1, 0.5, 0), PreconditionError);
  CHECK_THROWS_AS(eval_derivative(p1, 0.5, 5), PreconditionError);

  const Integrand& raw = corpus_fixture("p3_singular");
  CHECK(eval(raw, -1.0) == doctest::Approx(std::pow(2.0, -1.5)).epsilon(1e-15));
  CHECK_THROWS_AS(eval(raw, 1.0), DomainError);
  CHECK_THROWS_AS(eval_derivative(raw, 0.0, 1), CapabilityError);
}

TEST_CASE("frozen point evaluations") {
  const Integrand f =
      Integrand::make("probe", Domain::unit(), {PowerTerm{1.0, 1}},
                      SmoothPart::polynomial({0.0, 0.0, 1.0}),
                      IntegrandClass::kP1);
  CHECK(eval(f, 0.5) == doctest::Approx(0.9571067811865476).epsilon(1e-15));
  CHECK(eval_derivative(f, 0.5, 1) ==
        doctest::Approx(0.2928932188134524).epsilon(1e-14));
  CHECK(static_cast<double>(eval_ld(f, 0.5L)) ==
        doctest::Approx(0.9571067811865476).epsilon(1e-15));
}

TEST_CASE("corpus fixtures are well formed") {
  const auto& all = corpus();
  CHECK(all.size() == 23);

  std::set<std::string> names;
  for (const auto& f : all) {
    names.insert(f.name());
    if (!f.is_raw()) {
      CHECK(f.exact_integral_hint().has_value());
      CHECK((f.z0() == 0.0 || f.z0() == -1.0));
    }
  }
  CHECK(names.size() == all.size());

  CHECK(corpus_fixture("sqrt1mx").cls() == IntegrandClass::kP1);
  CHECK(corpus_fixture("sqrt1mx_sym").cls() == IntegrandClass::kP1Item2);
  CHECK(corpus_fixture("inv_sqrt").cls() == IntegrandClass::kP2);
  CHECK(corpus_fixture("p3_singular").cls() == IntegrandClass::kP3Raw);
  CHECK(corpus_fixture("sqrt1mx").c1() == 1.0);
  CHECK(corpus_fixture("pow3half").c1() == 0.0);
  CHECK(corpus_fixture("inv_sqrt").c1() == 1.0);
  CHECK(corpus_fixture("p2_mix").coeff_of(-1) == 2.0);
  CHECK(corpus_fixture("p2_mix").coeff_of(3) == 0.0);
  CHECK_THROWS_AS(corpus_fixture("nope"), UnknownFixtureError);
}

TEST_CASE("class tags round trip") {
  for (const auto cls :
       {IntegrandClass::kP1, IntegrandClass::kP1Item2, IntegrandClass::kP2,
        IntegrandClass::kP3Raw}) {
    CHECK(integrand_class_from_string(to_string(cls)) == cls);
  }
  CHECK_THROWS_AS(integrand_class_from_string("P9"), PreconditionError);
}
