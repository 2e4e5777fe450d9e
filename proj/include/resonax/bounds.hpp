#pragma once

#include <cstdint>
#include <vector>

#include "resonax/arith.hpp"
#include "resonax/weights.hpp"

namespace resonax {

/// Coarse rank-one bound m_n m'_n / (m_1 m'_1) next to the exact quasi-resonance order.
struct QuasiCircularBound {
  std::vector<std::size_t> source_permutation;  // sorted position -> original index
  std::vector<std::size_t> target_permutation;
  Rational coarse;
  BigInt coarse_degree;  // floor(coarse)
  std::uint64_t exact = 0;
};

QuasiCircularBound quasi_circular_bound(std::span<const std::int64_t> source_weights,
                                        std::span<const std::int64_t> target_weights);

/// Bounds |a_i||a_n|/|a_1|^2 for actions with nonnegative weights, |a| the row sum.
struct NonnegWeightBound {
  std::vector<std::size_t> permutation;  // ascending |a_i| (stable) -> original index
  std::vector<BigInt> row_sums;          // original order
  std::vector<Rational> bounds;          // original order
  Rational global_bound;                 // |a_n|^2 / |a_1|^2
  std::vector<std::uint64_t> exact;      // nu_i, original order
  std::uint64_t exact_global = 0;
};

NonnegWeightBound nonneg_weight_bound(const WeightMatrix& a);

}  // namespace resonax
