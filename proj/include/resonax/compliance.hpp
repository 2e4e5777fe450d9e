#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "resonax/polymap.hpp"
#include "resonax/polynomial.hpp"
#include "resonax/resonance.hpp"

namespace resonax {

struct OffendingMonomial {
  MultiIndex exponent;
  Character character;
  std::optional<std::uint64_t> min_degree;  // d_k of the monomial's character
};

struct ComponentVerdict {
  std::vector<OffendingMonomial> offending;  // characters outside K_{i rho'}
  Degree degree = Degree::negative_infinity();
  std::uint64_t degree_bound = 0;             // nu_{i rho'}
  bool degree_ok = true;

  bool pass() const { return offending.empty() && degree_ok; }
};

/// Necessary conditions for an origin-fixing biholomorphism between bounded domains of the
/// given actions. Passing does not certify that the map is a biholomorphism.
struct ComplianceReport {
  explicit ComplianceReport(QuasiResonanceReport q) : quasi(std::move(q)) {}

  QuasiResonanceReport quasi;  // K_{i rho'} and nu_{i rho'} the map is checked against
  bool origin_fixed = false;
  std::vector<std::size_t> nonzero_constant_terms;
  bool jacobian_constant = false;
  std::optional<GaussianRational> jacobian_value;  // set when constant
  Polynomial jacobian{0};
  std::vector<ComponentVerdict> components;

  bool pass() const;
};

ComplianceReport check_compliance(const PolyMap& f, const WeightMatrix& source,
                                  const WeightMatrix& target);

}  // namespace resonax
