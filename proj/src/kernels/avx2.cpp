// Compiled with -mavx2 (and without -mfma). Only reached after a runtime CPU check.

#include <immintrin.h>

#include "resonax/kernels.hpp"

namespace resonax::kernels {
namespace {

constexpr std::size_t kLanes = 4;

// Remaining points go through the scalar table, which performs identical operations.
PointsView tail_view(const PointsView& pts, std::size_t begin, std::vector<const double*>& re,
                     std::vector<const double*>& im) {
  re.clear();
  im.clear();
  for (std::size_t i = 0; i < pts.dims(); ++i) {
    re.push_back(pts.re[i] + begin);
    im.push_back(pts.im[i] + begin);
  }
  return {re, im, pts.count - begin};
}

void eval_poly(const CompiledPolynomial& p, const PointsView& pts, double* out_re, double* out_im) {
  const std::size_t n = p.variables;
  const std::size_t terms = p.terms();
  const std::size_t body = pts.count - pts.count % kLanes;
  const __m256d one = _mm256_set1_pd(1.0);
  for (std::size_t j = 0; j < body; j += kLanes) {
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    for (std::size_t t = 0; t < terms; ++t) {
      __m256d m_re = one;
      __m256d m_im = _mm256_setzero_pd();
      const std::uint32_t* e = &p.exponents[t * n];
      for (std::size_t i = 0; i < n; ++i) {
        if (e[i] == 0) continue;
        const __m256d zr = _mm256_loadu_pd(pts.re[i] + j);
        const __m256d zi = _mm256_loadu_pd(pts.im[i] + j);
        for (std::uint32_t k = 0; k < e[i]; ++k) {
          const __m256d nr = _mm256_sub_pd(_mm256_mul_pd(m_re, zr), _mm256_mul_pd(m_im, zi));
          const __m256d ni = _mm256_add_pd(_mm256_mul_pd(m_re, zi), _mm256_mul_pd(m_im, zr));
          m_re = nr;
          m_im = ni;
        }
      }
      const __m256d cr = _mm256_set1_pd(p.coef_re[t]);
      const __m256d ci = _mm256_set1_pd(p.coef_im[t]);
      acc_re = _mm256_add_pd(acc_re, _mm256_sub_pd(_mm256_mul_pd(cr, m_re), _mm256_mul_pd(ci, m_im)));
      acc_im = _mm256_add_pd(acc_im, _mm256_add_pd(_mm256_mul_pd(cr, m_im), _mm256_mul_pd(ci, m_re)));
    }
    _mm256_storeu_pd(out_re + j, acc_re);
    _mm256_storeu_pd(out_im + j, acc_im);
  }
  if (body < pts.count) {
    std::vector<const double*> re, im;
    scalar_kernels().eval_poly(p, tail_view(pts, body, re, im), out_re + body, out_im + body);
  }
}

void power_sum(std::span<const double> coeffs, std::span<const std::uint32_t> powers,
               const PointsView& pts, double* out) {
  const std::size_t body = pts.count - pts.count % kLanes;
  for (std::size_t j = 0; j < body; j += kLanes) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      const __m256d zr = _mm256_loadu_pd(pts.re[i] + j);
      const __m256d zi = _mm256_loadu_pd(pts.im[i] + j);
      const __m256d m = _mm256_add_pd(_mm256_mul_pd(zr, zr), _mm256_mul_pd(zi, zi));
      __m256d pw = m;
      for (std::uint32_t k = 1; k < powers[i]; ++k) pw = _mm256_mul_pd(pw, m);
      acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_set1_pd(coeffs[i]), pw));
    }
    _mm256_storeu_pd(out + j, acc);
  }
  if (body < pts.count) {
    std::vector<const double*> re, im;
    scalar_kernels().power_sum(coeffs, powers, tail_view(pts, body, re, im), out + body);
  }
}

void max_scaled_norm(std::span<const double> scales, const PointsView& pts, double* out) {
  const std::size_t body = pts.count - pts.count % kLanes;
  for (std::size_t j = 0; j < body; j += kLanes) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < scales.size(); ++i) {
      const __m256d zr = _mm256_loadu_pd(pts.re[i] + j);
      const __m256d zi = _mm256_loadu_pd(pts.im[i] + j);
      const __m256d m = _mm256_add_pd(_mm256_mul_pd(zr, zr), _mm256_mul_pd(zi, zi));
      const __m256d v = _mm256_mul_pd(m, _mm256_set1_pd(scales[i]));
      acc = _mm256_max_pd(v, acc);  // v > acc ? v : acc
    }
    _mm256_storeu_pd(out + j, acc);
  }
  if (body < pts.count) {
    std::vector<const double*> re, im;
    scalar_kernels().max_scaled_norm(scales, tail_view(pts, body, re, im), out + body);
  }
}

void mul_conj(const double* a_re, const double* a_im, const double* b_re, const double* b_im,
              std::size_t count, double* out_re, double* out_im) {
  const std::size_t body = count - count % kLanes;
  for (std::size_t j = 0; j < body; j += kLanes) {
    const __m256d ar = _mm256_loadu_pd(a_re + j);
    const __m256d ai = _mm256_loadu_pd(a_im + j);
    const __m256d br = _mm256_loadu_pd(b_re + j);
    const __m256d bi = _mm256_loadu_pd(b_im + j);
    _mm256_storeu_pd(out_re + j, _mm256_add_pd(_mm256_mul_pd(ar, br), _mm256_mul_pd(ai, bi)));
    _mm256_storeu_pd(out_im + j, _mm256_sub_pd(_mm256_mul_pd(ai, br), _mm256_mul_pd(ar, bi)));
  }
  scalar_kernels().mul_conj(a_re + body, a_im + body, b_re + body, b_im + body, count - body,
                            out_re + body, out_im + body);
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{"avx2", eval_poly, power_sum, max_scaled_norm, mul_conj};
  return table;
}

}  // namespace resonax::kernels
