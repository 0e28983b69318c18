#pragma once

#include <string>

#include <json.hpp>

#include "singquad/accel.hpp"
#include "singquad/analysis.hpp"
#include "singquad/integrand.hpp"
#include "singquad/oracle.hpp"
#include "singquad/proofcheck.hpp"

namespace singquad {

// All serialization goes through ordered_json so key order, and therefore
// byte output, is deterministic.
using json = nlohmann::ordered_json;

json to_json(const Integrand& f);
json to_json(const RateFit& fit);
json to_json(const BoundReport& report);
json to_json(const IdentityReport& report);
json to_json(const ProofConstants& constants);
json to_json(const Prop2Certificate& cert);
json to_json(const Prop2Decomposition& dec);
json to_json(const AcceleratedEstimate& est);
json to_json(const AsymptoticConstant& ac);

// Parses the fixture description {name, z0, terms, smooth_poly_coeffs, ...}.
// Raw integrands have no serialized form, so class P3_RAW is rejected.
Integrand integrand_from_json(const json& j);

// Shortest 17-significant-digit form, the CSV counterpart of the JSON
// round-trip guarantee.
std::string format_g17(double v);

}  // namespace singquad
