#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "resonax/arith.hpp"

namespace resonax {

/// Exponent vector of a monomial z^alpha.
struct MultiIndex {
  std::vector<std::uint32_t> exponents;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<std::uint32_t> e) : exponents(std::move(e)) {}
  static MultiIndex zero(std::size_t n) { return MultiIndex(std::vector<std::uint32_t>(n, 0)); }

  std::size_t size() const { return exponents.size(); }
  std::uint32_t operator[](std::size_t i) const { return exponents[i]; }
  std::uint32_t& operator[](std::size_t i) { return exponents[i]; }

  /// |alpha|, the total degree.
  std::uint64_t degree() const;
  bool is_zero() const;

  /// Componentwise sum with overflow detection.
  MultiIndex operator+(const MultiIndex& other) const;

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
};

/// Torus character k in Z^r.
using Character = std::vector<BigInt>;

Character make_character(std::span<const std::int64_t> k);
bool is_zero(const Character& k);
std::string to_string(const Character& k);
std::string to_string(const MultiIndex& alpha);

/// n x r integer weight matrix of a diagonal torus action; row i is the weight of z_i.
class WeightMatrix {
 public:
  /// Throws InvalidInput on empty input or ragged rows.
  explicit WeightMatrix(std::vector<std::vector<std::int64_t>> rows);

  std::size_t n() const { return rows_.size(); }
  std::size_t r() const { return rows_.front().size(); }
  std::span<const std::int64_t> row(std::size_t i) const { return rows_[i]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  const std::vector<std::vector<std::int64_t>>& rows() const { return rows_; }

  /// alpha^T A, computed exactly.
  Character character_of(const MultiIndex& alpha) const;
  Character row_character(std::size_t i) const;

  /// Rank over Q by exact Gaussian elimination.
  std::size_t rank() const;

  WeightMatrix select_rows(std::span<const std::size_t> indices) const;

  /// Single-column matrix for a rank-one (quasi-circular) action.
  static WeightMatrix column(std::span<const std::int64_t> weights);

  friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

 private:
  std::vector<std::vector<std::int64_t>> rows_;
};

struct ValidatedMatrix {
  WeightMatrix matrix;
  std::vector<std::string> warnings;
};

/// Shape validation plus non-fatal diagnostics (rank deficiency, repeated rows).
ValidatedMatrix validate_weight_matrix(std::vector<std::vector<std::int64_t>> rows);

}  // namespace resonax
