#include <cstdlib>
#include <string_view>

#include "resonax/error.hpp"
#include "resonax/kernels.hpp"

namespace resonax::kernels {

#if defined(RESONAX_BUILD_AVX2)
const KernelTable& avx2_table();
#endif

CompiledPolynomial compile(const Polynomial& p) {
  CompiledPolynomial out;
  out.variables = p.variables();
  for (const auto& [alpha, c] : p.terms()) {
    out.exponents.insert(out.exponents.end(), alpha.exponents.begin(), alpha.exponents.end());
    const auto z = c.to_complex();
    out.coef_re.push_back(z.real());
    out.coef_im.push_back(z.imag());
  }
  return out;
}

const KernelTable* avx2_kernels() {
#if defined(RESONAX_BUILD_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active_kernels() {
  static const KernelTable* chosen = [] {
    const char* env = std::getenv("RESONAX_KERNEL");
    const std::string_view want = env ? env : "";
    if (want == "scalar") return &scalar_kernels();
    if (want == "avx2") {
      if (!avx2_kernels()) throw Error("RESONAX_KERNEL=avx2 but AVX2 kernels are unavailable");
      return avx2_kernels();
    }
    if (!want.empty()) throw Error("RESONAX_KERNEL must be scalar or avx2");
    return avx2_kernels() ? avx2_kernels() : &scalar_kernels();
  }();
  return *chosen;
}

}  // namespace resonax::kernels
