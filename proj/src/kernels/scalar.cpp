#include "resonax/kernels.hpp"

namespace resonax::kernels {
namespace {

void eval_poly(const CompiledPolynomial& p, const PointsView& pts, double* out_re, double* out_im) {
  const std::size_t n = p.variables;
  const std::size_t terms = p.terms();
  for (std::size_t j = 0; j < pts.count; ++j) {
    double acc_re = 0.0;
    double acc_im = 0.0;
    for (std::size_t t = 0; t < terms; ++t) {
      double m_re = 1.0;
      double m_im = 0.0;
      const std::uint32_t* e = &p.exponents[t * n];
      for (std::size_t i = 0; i < n; ++i) {
        const double zr = pts.re[i][j];
        const double zi = pts.im[i][j];
        for (std::uint32_t k = 0; k < e[i]; ++k) {
          const double nr = m_re * zr - m_im * zi;
          const double ni = m_re * zi + m_im * zr;
          m_re = nr;
          m_im = ni;
        }
      }
      const double cr = p.coef_re[t];
      const double ci = p.coef_im[t];
      acc_re += cr * m_re - ci * m_im;
      acc_im += cr * m_im + ci * m_re;
    }
    out_re[j] = acc_re;
    out_im[j] = acc_im;
  }
}

void power_sum(std::span<const double> coeffs, std::span<const std::uint32_t> powers,
               const PointsView& pts, double* out) {
  for (std::size_t j = 0; j < pts.count; ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      const double zr = pts.re[i][j];
      const double zi = pts.im[i][j];
      const double m = zr * zr + zi * zi;
      double pw = m;
      for (std::uint32_t k = 1; k < powers[i]; ++k) pw = pw * m;
      acc = acc + coeffs[i] * pw;
    }
    out[j] = acc;
  }
}

void max_scaled_norm(std::span<const double> scales, const PointsView& pts, double* out) {
  for (std::size_t j = 0; j < pts.count; ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < scales.size(); ++i) {
      const double zr = pts.re[i][j];
      const double zi = pts.im[i][j];
      const double v = (zr * zr + zi * zi) * scales[i];
      acc = v > acc ? v : acc;
    }
    out[j] = acc;
  }
}

void mul_conj(const double* a_re, const double* a_im, const double* b_re, const double* b_im,
              std::size_t count, double* out_re, double* out_im) {
  for (std::size_t j = 0; j < count; ++j) {
    const double re = a_re[j] * b_re[j] + a_im[j] * b_im[j];
    const double im = a_im[j] * b_re[j] - a_re[j] * b_im[j];
    out_re[j] = re;
    out_im[j] = im;
  }
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", eval_poly, power_sum, max_scaled_norm, mul_conj};
  return table;
}

}  // namespace resonax::kernels
