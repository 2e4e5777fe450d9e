#pragma once

// JSON forms of every public type. Parsers throw InvalidInput with a path to the bad field.

#include <cstddef>

#include "json.hpp"

#include "resonax/admissibility.hpp"
#include "resonax/bounds.hpp"
#include "resonax/compliance.hpp"
#include "resonax/domain.hpp"
#include "resonax/enumerate.hpp"
#include "resonax/mc.hpp"
#include "resonax/resonance.hpp"

namespace resonax::io {

using Json = nlohmann::json;

/// Accepts {"rows": [[...], ...]} or the bare nested array.
ValidatedMatrix parse_weight_matrix(const Json& j);
Character parse_character(const Json& j);
/// List of {"exp": [...], "re": "p/q", "im": "p/q"}; "im" may be omitted.
Polynomial parse_polynomial(const Json& j, std::size_t variables);
/// List of polynomials; the variable count is taken from `variables` or, if zero, the length.
PolyMap parse_polymap(const Json& j, std::size_t variables = 0);
DomainSpec parse_domain(const Json& j);
std::vector<std::int64_t> parse_int_vector(const Json& j, const char* what);

Json to_json(const BigInt& v);
Json to_json(const Rational& v);
Json to_json(const Character& k);
Json to_json(const MultiIndex& alpha);
Json to_json(const WeightMatrix& a);
Json to_json(const ValidatedMatrix& v);
Json to_json(const AdmissibilityCertificate& cert);
Json to_json(const WeightSpace& space);
Json to_json(const ResonanceReport& report);
Json to_json(const QuasiResonanceReport& report);
Json to_json(const CartanVerdict& verdict);
Json to_json(const QuasiCircularBound& bound);
Json to_json(const NonnegWeightBound& bound);
Json to_json(const GaussianRational& c);
Json to_json(const Polynomial& p);
Json to_json(const PolyMap& f);
Json to_json(const ComplianceReport& report);
Json to_json(const DomainSpec& spec);
Json to_json(const MCEstimate& est);
Json to_json(const OrthogonalityReport& report);
Json to_json(const ChangeOfVariablesReport& report);
Json to_json(const InvarianceReport& report);

}  // namespace resonax::io
