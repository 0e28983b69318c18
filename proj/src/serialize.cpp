#include "singquad/serialize.hpp"

#include <cstdio>

namespace singquad {

json to_json(const Integrand& f) {
  json j;
  j["name"] = f.name();
  j["class"] = to_string(f.cls());
  j["z0"] = f.z0();
  if (f.is_raw()) return j;
  json terms = json::array();
  for (const auto& t : f.terms()) {
    terms.push_back({{"coeff", t.coeff}, {"exponent_num_over_2", t.twice_exponent}});
  }
  j["terms"] = terms;
  if (f.smooth().is_polynomial()) {
    j["smooth_poly_coeffs"] = f.smooth().poly_coeffs();
    if (!f.smooth().power_tail().empty()) {
      json tail = json::array();
      for (const auto& t : f.smooth().power_tail()) {
        tail.push_back(
            {{"coeff", t.coeff}, {"exponent_num_over_2", t.twice_exponent}});
      }
      j["smooth_powers"] = tail;
    }
  }
  if (f.exact_integral_hint()) {
    j["exact_integral"] = *f.exact_integral_hint();
  }
  return j;
}

json to_json(const RateFit& fit) {
  return json{{"exponent", fit.exponent},
              {"constant", fit.constant},
              {"max_log_residual", fit.max_log_residual},
              {"n_min", fit.n_min},
              {"n_max", fit.n_max}};
}

json to_json(const BoundReport& report) {
  json constants = json::object();
  for (const auto& [key, value] : report.constants) constants[key] = value;
  json j;
  j["proposition"] = report.proposition;
  j["integrand"] = report.integrand;
  j["holds"] = report.holds;
  j["constants"] = constants;
  j["N"] = report.threshold_n;
  j["grid"] = report.grid;
  j["margins"] = report.margins;
  j["note"] = report.note;
  return j;
}

json to_json(const IdentityReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"lhs", c.lhs},
                      {"rhs", c.rhs},
                      {"error", c.error},
                      {"ok", c.ok}});
  }
  return json{{"integrand", report.integrand},
              {"n", report.n},
              {"tol", report.tol},
              {"all_ok", report.all_ok},
              {"checks", checks}};
}

json to_json(const ProofConstants& constants) {
  return json{{"I_phi1", constants.i_phi1}, {"I_phi2", constants.i_phi2},
              {"phi0", constants.phi0},     {"dphi0", constants.dphi0},
              {"d2phi0", constants.d2phi0}, {"L1", constants.l1},
              {"K_phi1", constants.k_phi1}, {"K_phi2", constants.k_phi2},
              {"K_phi3", constants.k_phi3}, {"Lbar", constants.lbar}};
}

json to_json(const Prop2Certificate& cert) {
  return json{{"c1", cert.c1},
              {"cmax", cert.cmax},
              {"cmin", cert.cmin},
              {"delta", cert.delta},
              {"C", cert.C},
              {"L2", cert.L2},
              {"L2star", cert.L2star},
              {"l2", cert.l2},
              {"N", cert.N},
              {"min_admissible_n", cert.min_admissible_n()}};
}

json to_json(const Prop2Decomposition& dec) {
  return json{{"sigma1", dec.sigma1},
              {"sigma2", dec.sigma2},
              {"sigma3", dec.sigma3},
              {"sigma3_direct", dec.sigma3_direct},
              {"split_residual", dec.split_residual},
              {"sigma2_bound_ok", dec.sigma2_bound_ok},
              {"sigma3_bound_ok", dec.sigma3_bound_ok}};
}

json to_json(const AcceleratedEstimate& est) {
  return json{{"seed_n", est.seed_n},
              {"base_n", est.base_n},
              {"raw_sum", est.raw_sum},
              {"leading_constant", est.leading_constant},
              {"corrected_value", est.corrected_value},
              {"holdout_residual", est.holdout_residual},
              {"fit_residual", est.fit_residual}};
}

json to_json(const AsymptoticConstant& ac) {
  return json{{"value", ac.value}, {"spread", ac.spread}, {"stable", ac.stable}};
}

namespace {

std::vector<PowerTerm> terms_from_json(const json& arr) {
  std::vector<PowerTerm> terms;
  for (const auto& t : arr) {
    terms.push_back(
        {t.at("coeff").get<double>(), t.at("exponent_num_over_2").get<int>()});
  }
  return terms;
}

}  // namespace

Integrand integrand_from_json(const json& j) {
  const std::string name = j.at("name").get<std::string>();
  const double z0 = j.at("z0").get<double>();
  if (z0 != -1.0 && z0 != 0.0) {
    throw PreconditionError("z0 must be -1 or 0");
  }

  std::vector<PowerTerm> terms;
  if (j.contains("terms")) terms = terms_from_json(j.at("terms"));
  std::vector<double> coeffs;
  if (j.contains("smooth_poly_coeffs")) {
    coeffs = j.at("smooth_poly_coeffs").get<std::vector<double>>();
  }
  std::vector<PowerTerm> tail;
  if (j.contains("smooth_powers")) {
    tail = terms_from_json(j.at("smooth_powers"));
  }

  IntegrandClass cls;
  if (j.contains("class")) {
    cls = integrand_class_from_string(j.at("class").get<std::string>());
    if (cls == IntegrandClass::kP3Raw) {
      throw CapabilityError("raw integrands have no serialized form");
    }
  } else {
    // infer the weakest class that admits the listed exponents
    bool negative = false;
    bool high = false;
    for (const auto& t : terms) {
      negative = negative || t.twice_exponent == -1;
      high = high || t.twice_exponent == 5 || t.twice_exponent == 7;
    }
    cls = negative ? IntegrandClass::kP2
                   : (high ? IntegrandClass::kP1Item2 : IntegrandClass::kP1);
  }

  Integrand f = Integrand::make(name, Domain{z0}, std::move(terms),
                                SmoothPart::polynomial(std::move(coeffs),
                                                       std::move(tail)),
                                cls);
  if (j.contains("exact_integral")) {
    return std::move(f).with_exact_integral(j.at("exact_integral").get<double>());
  }
  return f;
}

std::string format_g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace singquad
