#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "resonax/arith.hpp"
#include "resonax/weights.hpp"

namespace resonax {

/// Monomial basis of V_k: every alpha in N^n with alpha^T A = k, in lexicographic order.
struct WeightSpace {
  Character character;
  std::vector<MultiIndex> basis;
  std::uint64_t min_degree = 0;  // d_k
  std::uint64_t max_degree = 0;  // D_k

  std::size_t dimension() const { return basis.size(); }
};

enum class EnumerationKernel {
  automatic,  // machine integers when provably overflow-free, exact otherwise
  exact,      // arbitrary-precision reference kernel
  machine,    // int64 kernel; throws OverflowError if the range guard fails
};

/// Depth-first solver for alpha^T A = k over N^n.
///
/// Coordinates are fixed in index order. Before fixing alpha_s the residual character is
/// tested against an integer positive functional of the suffix rows s..n-1, which bounds
/// alpha_s and prunes residuals that no nonnegative combination of the suffix can reach.
/// The functionals are computed once per matrix, so one enumerator serves many characters.
class WeightSpaceEnumerator {
 public:
  /// Throws InadmissibleError when A has a nonconstant invariant monomial.
  explicit WeightSpaceEnumerator(WeightMatrix a);

  const WeightMatrix& matrix() const { return a_; }

  std::optional<WeightSpace> enumerate(const Character& k,
                                       EnumerationKernel kernel = EnumerationKernel::automatic) const;

  /// Global functional lambda_0 (of all rows) scaled to integers.
  const std::vector<BigInt>& functional() const { return suffix_functionals_.front(); }

 private:
  struct Plan;
  bool machine_range_ok(const Character& k, std::vector<BigInt>& caps) const;
  std::vector<MultiIndex> run_exact(const Character& k, const std::vector<BigInt>& caps) const;
  std::vector<MultiIndex> run_machine(const Character& k, const std::vector<BigInt>& caps) const;

  WeightMatrix a_;
  std::vector<std::vector<BigInt>> suffix_functionals_;  // L_s, integer
  std::vector<std::vector<BigInt>> suffix_weights_;      // a_i . L_s for i >= s (positive)
};

std::optional<WeightSpace> enumerate_weight_space(const WeightMatrix& a, const Character& k);

/// (d_k, D_k), or nullopt when V_k = 0.
std::optional<std::pair<std::uint64_t, std::uint64_t>> degree_extremes(const WeightMatrix& a,
                                                                       const Character& k);

}  // namespace resonax
