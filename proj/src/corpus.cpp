#include <cmath>

#include "singquad/integrand.hpp"

namespace singquad {

namespace {

std::vector<Integrand> build_corpus() {
  const double s2 = std::sqrt(2.0);
  std::vector<Integrand> fs;

  // Degenerate smooth cases on [0, 1]: no singular part at all, so every
  // rate claim is vacuous or dominated by the trapezoid's own n^-2 term.
  fs.push_back(Integrand::make("zero", Domain::unit(), {}, SmoothPart(),
                               IntegrandClass::kP1)
                   .with_exact_integral(0.0));
  fs.push_back(Integrand::make("linear", Domain::unit(), {},
                               SmoothPart::polynomial({0.0, 1.0}),
                               IntegrandClass::kP1)
                   .with_exact_integral(0.5));
  fs.push_back(Integrand::make("smooth_square", Domain::unit(), {},
                               SmoothPart::polynomial({0.0, 0.0, 1.0}),
                               IntegrandClass::kP1)
                   .with_exact_integral(1.0 / 3.0));

  // Pure powers on [0, 1].  The 5/2 and 7/2 powers ride in the smooth
  // remainder (they are C^2 but not C^4 at x = 1).
  fs.push_back(Integrand::make("sqrt1mx", Domain::unit(), {{1.0, 1}},
                               SmoothPart(), IntegrandClass::kP1)
                   .with_exact_integral(2.0 / 3.0));
  fs.push_back(Integrand::make("pow3half", Domain::unit(), {{1.0, 3}},
                               SmoothPart(), IntegrandClass::kP1)
                   .with_exact_integral(2.0 / 5.0));
  fs.push_back(Integrand::make("pow5half", Domain::unit(), {},
                               SmoothPart::polynomial({}, {{1.0, 5}}),
                               IntegrandClass::kP1)
                   .with_exact_integral(2.0 / 7.0));
  fs.push_back(Integrand::make("pow7half", Domain::unit(), {},
                               SmoothPart::polynomial({}, {{1.0, 7}}),
                               IntegrandClass::kP1)
                   .with_exact_integral(2.0 / 9.0));
  fs.push_back(Integrand::make("sqrt_mix_smooth", Domain::unit(),
                               {{1.0, 1}, {0.5, 3}},
                               SmoothPart::polynomial({0.0, 0.0, 1.0}),
                               IntegrandClass::kP1)
                   .with_exact_integral(2.0 / 3.0 + 0.5 * (2.0 / 5.0) + 1.0 / 3.0));

  // The -1/2 family on [0, 1].
  fs.push_back(Integrand::make("inv_sqrt", Domain::unit(), {{1.0, -1}},
                               SmoothPart(), IntegrandClass::kP2)
                   .with_exact_integral(2.0));
  fs.push_back(Integrand::make("p2_smooth", Domain::unit(),
                               {{1.0, -1}, {-0.5, 1}},
                               SmoothPart::polynomial({1.0, 0.5}),
                               IntegrandClass::kP2)
                   .with_exact_integral(2.0 - 1.0 / 3.0 + 1.25));

  // Pure powers on [-1, 1].
  fs.push_back(Integrand::make("sqrt1mx_sym", Domain::symmetric(), {{1.0, 1}},
                               SmoothPart(), IntegrandClass::kP1Item2)
                   .with_exact_integral(4.0 * s2 / 3.0));
  fs.push_back(Integrand::make("pow3half_sym", Domain::symmetric(), {{1.0, 3}},
                               SmoothPart(), IntegrandClass::kP1)
                   .with_exact_integral(8.0 * s2 / 5.0));
  fs.push_back(Integrand::make("pow5half_sym", Domain::symmetric(), {},
                               SmoothPart::polynomial({}, {{1.0, 5}}),
                               IntegrandClass::kP1)
                   .with_exact_integral(16.0 * s2 / 7.0));
  fs.push_back(Integrand::make("pow7half_sym", Domain::symmetric(), {},
                               SmoothPart::polynomial({}, {{1.0, 7}}),
                               IntegrandClass::kP1)
                   .with_exact_integral(32.0 * s2 / 9.0));

  // Full four-power decompositions on [-1, 1], the cases the second-order
  // machinery is built for.  All keep the leading coefficient at 1.
  fs.push_back(Integrand::make("item2_mix", Domain::symmetric(),
                               {{1.0, 1}, {0.25, 5}},
                               SmoothPart::polynomial({0.0, 0.0, 0.25}),
                               IntegrandClass::kP1Item2)
                   .with_exact_integral(4.0 * s2 / 3.0 + 4.0 * s2 / 7.0 + 1.0 / 6.0));
  fs.push_back(Integrand::make("item2_quartic", Domain::symmetric(),
                               {{1.0, 1}, {0.1, 7}},
                               SmoothPart::polynomial({0.0, 0.0, 0.0, 0.0, 0.1}),
                               IntegrandClass::kP1Item2)
                   .with_exact_integral(4.0 * s2 / 3.0 + 3.2 * s2 / 9.0 + 0.04));
  fs.push_back(Integrand::make("item2_full", Domain::symmetric(),
                               {{1.0, 1}, {0.1, 3}, {0.1, 5}, {0.1, 7}},
                               SmoothPart::polynomial({0.0, 0.0, 0.0, 0.25}),
                               IntegrandClass::kP1Item2)
                   .with_exact_integral(4.0 * s2 / 3.0 +
                                        0.1 * (8.0 * s2 / 5.0 + 16.0 * s2 / 7.0 +
                                               32.0 * s2 / 9.0)));

  // The -1/2 family on [-1, 1].
  fs.push_back(Integrand::make("inv_sqrt_sym", Domain::symmetric(),
                               {{1.0, -1}}, SmoothPart(), IntegrandClass::kP2)
                   .with_exact_integral(2.0 * s2));
  fs.push_back(Integrand::make("p2_mix", Domain::symmetric(),
                               {{2.0, -1}, {1.0, 1}}, SmoothPart(),
                               IntegrandClass::kP2)
                   .with_exact_integral(16.0 * s2 / 3.0));
  // A dip below zero away from the singularity, so the variation allowance
  // has to do real work.
  fs.push_back(Integrand::make("p2_dip", Domain::symmetric(), {{1.0, -1}},
                               SmoothPart::polynomial({0.0, -2.0}),
                               IntegrandClass::kP2)
                   .with_exact_integral(2.0 * s2));

  // Raw integrands for the growth bound: the borderline -3/2 singularity,
  // a bounded oscillation, and an odd function whose sums cancel exactly.
  fs.push_back(Integrand::make_raw("p3_singular", [](double x) {
    const double u = 1.0 - x;
    return 1.0 / (u * std::sqrt(u));
  }));
  fs.push_back(Integrand::make_raw(
      "p3_bounded", [](double x) { return std::cos(3.0 * x); }));
  fs.push_back(Integrand::make_raw("p3_odd", [](double x) { return x; }));

  return fs;
}

}  // namespace

const std::vector<Integrand>& corpus() {
  static const std::vector<Integrand> fixtures = build_corpus();
  return fixtures;
}

const Integrand& corpus_fixture(const std::string& name) {
  for (const auto& f : corpus()) {
    if (f.name() == name) return f;
  }
  throw UnknownFixtureError("no fixture named '" + name + "'");
}

}  // namespace singquad
