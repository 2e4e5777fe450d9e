#pragma once

#include <optional>
#include <vector>

#include "resonax/arith.hpp"
#include "resonax/weights.hpp"

namespace resonax {

enum class Verdict { admissible, inadmissible };

/// Two-sided certificate for "the only invariant polynomials are constants".
///
/// Admissible actions carry lambda with a_i . lambda >= 1 for every row; inadmissible ones
/// carry a nonzero alpha >= 0 with sum alpha_i a_i = 0 (the invariant monomial z^alpha).
struct AdmissibilityCertificate {
  Verdict verdict = Verdict::admissible;
  std::optional<std::vector<Rational>> positive_functional;
  std::optional<MultiIndex> witness;

  bool admissible() const { return verdict == Verdict::admissible; }
};

AdmissibilityCertificate check_admissible(const WeightMatrix& a);

/// Canonical lambda with a_i . lambda >= 1 for all i. Throws InadmissibleError otherwise.
std::vector<Rational> positive_functional(const WeightMatrix& a);

/// Re-checks a certificate with exact dot products, independent of how it was produced.
bool verify_certificate(const WeightMatrix& a, const AdmissibilityCertificate& cert);

}  // namespace resonax
