#pragma once

// Reference computations that share no code path with the library routines they check:
// box scans instead of pruned search, grid-searched functionals instead of elimination,
// closed forms and quadrature instead of sampling.

#include <cstdint>
#include <optional>
#include <vector>

#include "resonax/admissibility.hpp"
#include "resonax/weights.hpp"

namespace resonax::oracle {

/// Integer functionals lambda with a_i . lambda >= 1 for every row, from a small grid.
std::vector<std::vector<std::int64_t>> grid_functionals(const WeightMatrix& a);

/// All alpha >= 0 with alpha^T A = k by scanning the box alpha_i <= min_lambda floor(k.lambda / a_i.lambda)
/// over the grid functionals. Lexicographic. Throws std::invalid_argument if the grid finds no functional.
std::vector<MultiIndex> box_scan_weight_space(const WeightMatrix& a, std::span<const std::int64_t> k);

/// Smallest-degree nonzero alpha with alpha^T A = 0 and |alpha| <= max_degree, if any.
std::optional<MultiIndex> invariant_monomial(const WeightMatrix& a, std::uint32_t max_degree);

/// Exact re-check of a certificate with int64-free BigInt arithmetic written independently.
bool certificate_sound(const WeightMatrix& a, const AdmissibilityCertificate& cert);

struct BruteQuasiResonance {
  std::vector<std::uint64_t> target_orders;
  std::vector<std::uint64_t> orders;
  std::uint64_t order = 0;
};

/// nu_{i rho'} from box scans of every character reachable with |alpha| <= mu'_i.
BruteQuasiResonance brute_quasi_resonance(const WeightMatrix& source, const WeightMatrix& target);

/// <z^alpha, z^alpha> over the unit ball of C^n: pi^n alpha! / (n + |alpha|)!.
double ball_moment_closed_form(const MultiIndex& alpha);

/// Same quantity as the iterated integral pi^n int_{simplex} prod s_i^alpha_i ds by nested
/// composite Simpson (n <= 3).
double ball_moment_quadrature(const MultiIndex& alpha, int intervals = 400);

}  // namespace resonax::oracle
