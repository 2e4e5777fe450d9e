#pragma once

// Batch arithmetic kernels for Monte Carlo integrands and domain membership.
//
// Points are stored structure-of-arrays: re[i][j] and im[i][j] hold coordinate i of point j.
// Every variant performs the same IEEE operations in the same order per point, so all
// variants return bit-identical results; tests compare them with exact equality.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "resonax/polynomial.hpp"

namespace resonax::kernels {

/// Polynomial with double coefficients laid out for batch evaluation.
struct CompiledPolynomial {
  std::size_t variables = 0;
  std::vector<std::uint32_t> exponents;  // term-major, `variables` entries per term
  std::vector<double> coef_re;
  std::vector<double> coef_im;

  std::size_t terms() const { return coef_re.size(); }
};

CompiledPolynomial compile(const Polynomial& p);

/// Read-only view of `count` points in `dims` complex coordinates.
struct PointsView {
  std::span<const double* const> re;
  std::span<const double* const> im;
  std::size_t count = 0;

  std::size_t dims() const { return re.size(); }
};

struct KernelTable {
  std::string_view name;
  /// out = p(z) for every point.
  void (*eval_poly)(const CompiledPolynomial& p, const PointsView& pts, double* out_re,
                    double* out_im);
  /// out = sum_i coeffs[i] * (|z_i|^2)^powers[i]; powers >= 1.
  void (*power_sum)(std::span<const double> coeffs, std::span<const std::uint32_t> powers,
                    const PointsView& pts, double* out);
  /// out = max_i |z_i|^2 * scales[i].
  void (*max_scaled_norm)(std::span<const double> scales, const PointsView& pts, double* out);
  /// out = a * conj(b), elementwise.
  void (*mul_conj)(const double* a_re, const double* a_im, const double* b_re, const double* b_im,
                   std::size_t count, double* out_re, double* out_im);
};

const KernelTable& scalar_kernels();
/// nullptr when the AVX2 variant was not built or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

/// Best table for this CPU. RESONAX_KERNEL=scalar|avx2 overrides the choice.
const KernelTable& active_kernels();

}  // namespace resonax::kernels
