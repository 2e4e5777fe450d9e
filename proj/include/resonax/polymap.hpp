#pragma once

#include <cstddef>
#include <vector>

#include "resonax/polynomial.hpp"
#include "resonax/weights.hpp"

namespace resonax {

/// Tuple of polynomials (f_1, ..., f_m) sharing one variable count.
class PolyMap {
 public:
  /// Throws InvalidInput if the components disagree on the variable count.
  PolyMap(std::vector<Polynomial> components);

  static PolyMap identity(std::size_t n);
  /// (z_1, z_2 + z_1^k, z_3, ..., z_n)
  static PolyMap shear(std::size_t n, std::uint32_t k);
  /// (w_1, w_2 - w_1^k, w_3, ..., w_n)
  static PolyMap shear_inverse(std::size_t n, std::uint32_t k);

  std::size_t size() const { return components_.size(); }
  std::size_t variables() const { return components_.front().variables(); }
  bool is_square() const { return size() == variables(); }
  const Polynomial& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<Polynomial>& components() const { return components_; }

  std::vector<GaussianRational> at_origin() const;
  Degree degree() const;

  friend bool operator==(const PolyMap&, const PolyMap&) = default;

 private:
  std::vector<Polynomial> components_;
};

/// p(g_1(z), ..., g_m(z)). Throws InvalidInput unless p has g.size() variables.
Polynomial compose(const Polynomial& p, const PolyMap& g);
/// f o g, componentwise.
PolyMap compose(const PolyMap& f, const PolyMap& g);

constexpr std::size_t kMaxJacobianSize = 8;

/// det(d f_i / d z_j) by cofactor expansion memoized on column subsets.
/// Throws InvalidInput for non-square maps and SizeLimitError beyond kMaxJacobianSize.
Polynomial jacobian_det(const PolyMap& f);

/// Terms of p whose monomial character alpha^T A equals k.
Polynomial project_character(const Polynomial& p, const WeightMatrix& a, const Character& k);

/// Characters realized by the monomials of p, lexicographic.
std::vector<Character> realized_characters(const Polynomial& p, const WeightMatrix& a);

}  // namespace resonax
