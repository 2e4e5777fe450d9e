#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "resonax/domain.hpp"
#include "resonax/polymap.hpp"
#include "resonax/weights.hpp"

namespace resonax {

inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr std::size_t kDefaultSampleCount = 1'000'000;
inline constexpr double kSigmaThreshold = 4.0;
inline constexpr double kFamilyErrorBudget = 0.01;

/// Estimate of an integral over a domain with per-component standard errors.
struct MCEstimate {
  std::complex<double> value;
  double stderr_re = 0;
  double stderr_im = 0;
  std::uint64_t samples = 0;
  std::uint64_t candidates = 0;
  std::uint64_t seed = 0;
};

/// Estimates of <p_a, p_b> = int_D p_a conj(p_b) dV for each requested index pair, all from
/// one sample set. Sums run over fixed-size chunks reduced in chunk order.
std::vector<MCEstimate> estimate_inner_products(const SampleSet& samples,
                                                std::span<const Polynomial> polys,
                                                std::span<const std::pair<std::size_t, std::size_t>> pairs,
                                                const ParallelOptions& parallel = {});

MCEstimate mc_inner_product(const DomainSpec& spec, const Polynomial& p, const Polynomial& q,
                            std::uint64_t seed = kDefaultSeed, std::size_t count = kDefaultSampleCount,
                            const ParallelOptions& parallel = {});

/// Two-sided threshold: max(4, Bonferroni z for a 1% family error over `tests` tests).
double z_threshold(std::size_t tests);
/// Upper bound on the family-wise false-failure probability at threshold z.
double family_error_bound(std::size_t tests, double z);

struct OrthogonalityPair {
  MultiIndex alpha;
  MultiIndex beta;
  Character alpha_character;
  Character beta_character;
  MCEstimate estimate;
  double z = 0;  // max over components of |estimate| / stderr
  bool pass = false;
};

struct OrthogonalityReport {
  std::vector<OrthogonalityPair> pairs;
  std::size_t tests = 0;  // two per pair (real and imaginary part)
  double threshold = kSigmaThreshold;
  double family_error = 0;
  double worst_z = 0;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  double acceptance_ratio = 0;

  bool pass() const;
};

/// Off-character monomial pairs of degree <= max_degree are orthogonal on a domain invariant
/// under the action of `a`. Pairs with alpha = 0 cover the constants against functions
/// vanishing at the origin.
OrthogonalityReport check_orthogonality(const DomainSpec& spec, const WeightMatrix& a,
                                        std::uint32_t max_degree, std::uint64_t seed = kDefaultSeed,
                                        std::size_t count = kDefaultSampleCount,
                                        const ParallelOptions& parallel = {});

struct ChangeOfVariablesReport {
  Polynomial source_jacobian{0};  // u
  Polynomial target_jacobian{0};  // U
  MCEstimate lhs;                 // <u (psi o f), phi>_D
  MCEstimate rhs;                 // <psi, U (phi o F)>_D'
  double tolerance_re = 0;
  double tolerance_im = 0;
  bool pass = false;
};

/// Both sides of the pairing identity under a polynomial biholomorphism f: D -> D' with exact
/// inverse F. Throws InvalidInput if F is not a two-sided inverse of f.
ChangeOfVariablesReport check_change_of_variables(const PolyMap& f, const PolyMap& inverse,
                                                  const DomainSpec& source, const DomainSpec& target,
                                                  const Polynomial& phi, const Polynomial& psi,
                                                  std::uint64_t seed = kDefaultSeed,
                                                  std::size_t count = kDefaultSampleCount,
                                                  const ParallelOptions& parallel = {});

struct InvarianceViolation {
  std::vector<std::complex<double>> point;
  std::vector<double> angles;
  std::vector<std::complex<double>> image;
  double value = 0;
};

struct InvarianceReport {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  double max_value = 0;
  std::optional<InvarianceViolation> witness;  // first violation in sample order
  std::uint64_t seed = 0;

  bool pass() const { return violations == 0; }
};

/// Relative slack on the defining value before a rotated point counts as outside.
inline constexpr double kInvarianceSlack = 1e-9;

InvarianceReport check_invariance(const DomainSpec& spec, const WeightMatrix& a,
                                  std::uint64_t seed = kDefaultSeed,
                                  std::size_t count = kDefaultSampleCount,
                                  const ParallelOptions& parallel = {});

}  // namespace resonax
