#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "resonax/enumerate.hpp"
#include "resonax/weights.hpp"

namespace resonax {

struct ResonanceReport {
  std::vector<std::vector<MultiIndex>> resonance_sets;  // E_i, lexicographic
  std::vector<std::uint64_t> orders;                    // mu_i = D_{a_i}
  std::uint64_t order = 0;                              // mu_rho
  std::vector<Character> linear_characters;             // K^l: distinct rows, lexicographic
};

ResonanceReport resonance(const WeightMatrix& a);
ResonanceReport resonance(const WeightSpaceEnumerator& enumerator);

/// One element of a quasi-resonance set together with its degree extremes.
struct CharacterDegrees {
  Character character;
  std::uint64_t min_degree = 0;
  std::uint64_t max_degree = 0;
};

struct QuasiResonanceReport {
  WeightMatrix source;
  WeightMatrix target;
  std::vector<std::uint64_t> target_orders;          // mu'_i
  std::vector<std::vector<CharacterDegrees>> sets;  // K_{i rho'}, lexicographic
  std::vector<std::uint64_t> orders;                 // nu_{i rho'}; also the bound on deg f_i
  std::uint64_t order = 0;                           // nu_{rho rho'}
};

/// Quasi-resonance data of (source, target). Both must be admissible with equal n.
QuasiResonanceReport quasi_resonance(const WeightMatrix& source, const WeightMatrix& target);

struct CartanVerdict {
  bool linear = false;
  std::uint64_t source_order = 0;
  std::uint64_t target_order = 0;
  std::string explanation;
};

/// True iff both resonance orders are one, in which case every origin-fixing
/// biholomorphism between bounded domains for these actions is linear.
CartanVerdict is_cartan_linear(const WeightMatrix& source, const WeightMatrix& target);

}  // namespace resonax
