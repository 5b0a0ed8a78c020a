#pragma once

#include <cstddef>

namespace acop::kernels {

// Data-parallel inner loops behind the density / likelihood / Monte Carlo
// paths. Every kernel has a scalar reference implementation and an AVX2+FMA
// variant; the active set is chosen once at startup from CPUID and the two
// are equivalence-tested against each other. Inputs must be finite and,
// where a log is taken, positive normal doubles.

struct Backend {
  // sum_i log(x_i)
  double (*sum_log)(const double* x, std::size_t n);
  // sum_i log(-log(x_i)), x_i in (0,1)
  double (*sum_log_neg_log)(const double* x, std::size_t n);
  // sum_i x_i^p
  double (*sum_pow)(const double* x, double p, std::size_t n);
  // sum_i (-log x_i)^p, x_i in (0,1)
  double (*sum_pow_neg_log)(const double* x, double p, std::size_t n);
  // max_i (s*a_i + t*b_i)
  double (*max_affine)(const double* a, const double* b, double s, double t,
                       std::size_t n);
  // sum_i exp(s*a_i + t*b_i - shift)
  double (*sum_exp_affine)(const double* a, const double* b, double s,
                           double t, double shift, std::size_t n);
  const char* name;
};

/// Active backend (AVX2 when the CPU supports it, scalar otherwise).
const Backend& active();

/// Scalar reference backend, always available; the oracle the SIMD variants
/// are tested against.
const Backend& scalar();

/// AVX2 backend if compiled in and supported at runtime, else nullptr.
const Backend* avx2();

inline double sum_log(const double* x, std::size_t n) {
  return active().sum_log(x, n);
}
inline double sum_log_neg_log(const double* x, std::size_t n) {
  return active().sum_log_neg_log(x, n);
}
inline double sum_pow(const double* x, double p, std::size_t n) {
  return active().sum_pow(x, p, n);
}
inline double sum_pow_neg_log(const double* x, double p, std::size_t n) {
  return active().sum_pow_neg_log(x, p, n);
}

/// log sum_i exp(s*a_i + t*b_i), two-pass (max then shifted sum).
double log_sum_exp_affine(const double* a, const double* b, double s, double t,
                          std::size_t n);

}  // namespace acop::kernels
