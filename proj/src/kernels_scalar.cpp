#include <cmath>
#include <cstddef>

#include "acop/kernels.hpp"

// Scalar reference kernels. Plain loops over libm; the oracle the SIMD
// variants are equivalence-tested against.

namespace acop::kernels {
namespace {

double s_sum_log(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::log(x[i]);
  return acc;
}

double s_sum_log_neg_log(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::log(-std::log(x[i]));
  return acc;
}

double s_sum_pow(const double* x, double p, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::exp(p * std::log(x[i]));
  return acc;
}

double s_sum_pow_neg_log(const double* x, double p, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    acc += std::exp(p * std::log(-std::log(x[i])));
  return acc;
}

double s_max_affine(const double* a, const double* b, double s, double t,
                    std::size_t n) {
  double m = -HUGE_VAL;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = s * a[i] + t * b[i];
    if (v > m) m = v;
  }
  return m;
}

double s_sum_exp_affine(const double* a, const double* b, double s, double t,
                        double shift, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    acc += std::exp(s * a[i] + t * b[i] - shift);
  return acc;
}

}  // namespace

const Backend& scalar() {
  static const Backend b{s_sum_log,    s_sum_log_neg_log, s_sum_pow,
                         s_sum_pow_neg_log, s_max_affine,  s_sum_exp_affine,
                         "scalar"};
  return b;
}

}  // namespace acop::kernels
