#include "acop/kernels.hpp"

#include <cmath>

namespace acop::kernels {

#if defined(ACOP_HAVE_AVX2_BUILD)
const Backend* avx2_impl();  // kernels_avx2.cpp
#endif

const Backend* avx2() {
#if defined(ACOP_HAVE_AVX2_BUILD)
  static const Backend* b = [] -> const Backend* {
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
      return avx2_impl();
    return nullptr;
  }();
  return b;
#else
  return nullptr;
#endif
}

const Backend& active() {
  static const Backend& b = [] -> const Backend& {
    if (const Backend* v = avx2()) return *v;
    return scalar();
  }();
  return b;
}

double log_sum_exp_affine(const double* a, const double* b, double s, double t,
                          std::size_t n) {
  if (n == 0) return -HUGE_VAL;
  const Backend& k = active();
  const double m = k.max_affine(a, b, s, t, n);
  if (!std::isfinite(m)) return m;
  return m + std::log(k.sum_exp_affine(a, b, s, t, m, n));
}

}  // namespace acop::kernels
