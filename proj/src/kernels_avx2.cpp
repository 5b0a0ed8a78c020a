#include <cmath>
#include <cstddef>
#include <cstdint>

#include "acop/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

// AVX2+FMA kernels. exp/log are computed to ~2 ulp with the usual
// argument-reduction + polynomial scheme; inputs are finite positive normals
// per the kernel contract, so the special-case lanes (0, inf, nan,
// subnormal) are not handled here.

namespace acop::kernels {
namespace {

const __m256d kOne = _mm256_set1_pd(1.0);
const __m256d kHalf = _mm256_set1_pd(0.5);

// --- exp -------------------------------------------------------------------

const __m256d kLog2E = _mm256_set1_pd(1.4426950408889634074);
const __m256d kLn2Hi = _mm256_set1_pd(6.93147180369123816490e-01);
const __m256d kLn2Lo = _mm256_set1_pd(1.90821492927058770002e-10);
const __m256d kExpMax = _mm256_set1_pd(700.0);
const __m256d kExpMin = _mm256_set1_pd(-700.0);

// Taylor coefficients 1/k!, k = 2..13; |r| <= ln2/2 keeps the tail below
// one ulp of exp(r).
const double kExpC[12] = {
    1.0 / 2,        1.0 / 6,         1.0 / 24,        1.0 / 120,
    1.0 / 720,      1.0 / 5040,      1.0 / 40320,     1.0 / 362880,
    1.0 / 3628800,  1.0 / 39916800,  1.0 / 479001600, 1.0 / 6227020800.0};

inline __m256d exp_pd(__m256d x) {
  x = _mm256_min_pd(_mm256_max_pd(x, kExpMin), kExpMax);
  const __m256d k = _mm256_round_pd(_mm256_mul_pd(x, kLog2E),
                                    _MM_FROUND_TO_NEAREST_INT);
  __m256d r = _mm256_fnmadd_pd(k, kLn2Hi, x);
  r = _mm256_fnmadd_pd(k, kLn2Lo, r);

  __m256d p = _mm256_set1_pd(kExpC[11]);
  for (int i = 10; i >= 0; --i)
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(kExpC[i]));
  p = _mm256_mul_pd(p, _mm256_mul_pd(r, r));
  p = _mm256_add_pd(p, _mm256_add_pd(r, kOne));

  // scale by 2^k through the exponent bits
  const __m128i ki = _mm256_cvtpd_epi32(k);
  const __m256i ke = _mm256_cvtepi32_epi64(ki);
  const __m256i bits = _mm256_slli_epi64(
      _mm256_add_epi64(ke, _mm256_set1_epi64x(1023)), 52);
  return _mm256_mul_pd(p, _mm256_castsi256_pd(bits));
}

// --- log -------------------------------------------------------------------

const __m256d kSqrt2 = _mm256_set1_pd(1.4142135623730950488);

// atanh series: log(m) = 2z(1 + w/3 + w^2/5 + ...), z=(m-1)/(m+1), w=z^2.
const double kLogC[9] = {1.0 / 3,  1.0 / 5,  1.0 / 7,  1.0 / 9, 1.0 / 11,
                         1.0 / 13, 1.0 / 15, 1.0 / 17, 1.0 / 19};

inline __m256d log_pd(__m256d x) {
  const __m256i bits = _mm256_castpd_si256(x);
  const __m256i expo_bits = _mm256_srli_epi64(bits, 52);
  // mantissa in [1,2)
  const __m256i mant_bits = _mm256_or_si256(
      _mm256_and_si256(bits, _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL)),
      _mm256_set1_epi64x(0x3FF0000000000000LL));
  __m256d m = _mm256_castsi256_pd(mant_bits);
  // exponent as double (values are tiny integers; grab low 32 bits per lane)
  const __m256d e_raw = _mm256_castsi256_pd(expo_bits);
  alignas(32) std::int64_t ebuf[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(ebuf),
                     _mm256_castpd_si256(e_raw));
  __m256d e = _mm256_set_pd(static_cast<double>(ebuf[3] - 1023),
                            static_cast<double>(ebuf[2] - 1023),
                            static_cast<double>(ebuf[1] - 1023),
                            static_cast<double>(ebuf[0] - 1023));
  // fold m into [sqrt2/2, sqrt2)
  const __m256d too_big = _mm256_cmp_pd(m, kSqrt2, _CMP_GE_OQ);
  m = _mm256_blendv_pd(m, _mm256_mul_pd(m, kHalf), too_big);
  e = _mm256_blendv_pd(e, _mm256_add_pd(e, kOne), too_big);

  const __m256d f = _mm256_sub_pd(m, kOne);
  const __m256d z = _mm256_div_pd(f, _mm256_add_pd(f, _mm256_set1_pd(2.0)));
  const __m256d w = _mm256_mul_pd(z, z);
  __m256d p = _mm256_set1_pd(kLogC[8]);
  for (int i = 7; i >= 0; --i)
    p = _mm256_fmadd_pd(p, w, _mm256_set1_pd(kLogC[i]));
  const __m256d log_m =
      _mm256_fmadd_pd(_mm256_mul_pd(_mm256_add_pd(z, z), w), p,
                      _mm256_add_pd(z, z));

  __m256d r = _mm256_fmadd_pd(e, kLn2Lo, log_m);
  return _mm256_fmadd_pd(e, kLn2Hi, r);
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

inline double hmax(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_max_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_max_sd(s, _mm_unpackhi_pd(s, s)));
}

double v_sum_log(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_add_pd(acc, log_pd(_mm256_loadu_pd(x + i)));
  double r = hsum(acc);
  for (; i < n; ++i) r += std::log(x[i]);
  return r;
}

double v_sum_log_neg_log(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  const __m256d neg = _mm256_set1_pd(-0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d l = _mm256_xor_pd(log_pd(_mm256_loadu_pd(x + i)), neg);
    acc = _mm256_add_pd(acc, log_pd(l));
  }
  double r = hsum(acc);
  for (; i < n; ++i) r += std::log(-std::log(x[i]));
  return r;
}

double v_sum_pow(const double* x, double p, std::size_t n) {
  const __m256d vp = _mm256_set1_pd(p);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d l = log_pd(_mm256_loadu_pd(x + i));
    acc = _mm256_add_pd(acc, exp_pd(_mm256_mul_pd(vp, l)));
  }
  double r = hsum(acc);
  for (; i < n; ++i) r += std::exp(p * std::log(x[i]));
  return r;
}

double v_sum_pow_neg_log(const double* x, double p, std::size_t n) {
  const __m256d vp = _mm256_set1_pd(p);
  const __m256d neg = _mm256_set1_pd(-0.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d l = _mm256_xor_pd(log_pd(_mm256_loadu_pd(x + i)), neg);
    acc = _mm256_add_pd(acc, exp_pd(_mm256_mul_pd(vp, log_pd(l))));
  }
  double r = hsum(acc);
  for (; i < n; ++i) r += std::exp(p * std::log(-std::log(x[i])));
  return r;
}

double v_max_affine(const double* a, const double* b, double s, double t,
                    std::size_t n) {
  const __m256d vs = _mm256_set1_pd(s), vt = _mm256_set1_pd(t);
  __m256d m = _mm256_set1_pd(-HUGE_VAL);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_fmadd_pd(vs, _mm256_loadu_pd(a + i),
                                      _mm256_mul_pd(vt, _mm256_loadu_pd(b + i)));
    m = _mm256_max_pd(m, v);
  }
  double r = n >= 4 ? hmax(m) : -HUGE_VAL;
  for (; i < n; ++i) {
    const double v = s * a[i] + t * b[i];
    if (v > r) r = v;
  }
  return r;
}

double v_sum_exp_affine(const double* a, const double* b, double s, double t,
                        double shift, std::size_t n) {
  const __m256d vs = _mm256_set1_pd(s), vt = _mm256_set1_pd(t);
  const __m256d vsh = _mm256_set1_pd(shift);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = _mm256_fmadd_pd(vs, _mm256_loadu_pd(a + i),
                                _mm256_mul_pd(vt, _mm256_loadu_pd(b + i)));
    acc = _mm256_add_pd(acc, exp_pd(_mm256_sub_pd(v, vsh)));
  }
  double r = hsum(acc);
  for (; i < n; ++i) r += std::exp(s * a[i] + t * b[i] - shift);
  return r;
}

}  // namespace

const Backend* avx2_impl() {
  static const Backend b{v_sum_log,    v_sum_log_neg_log, v_sum_pow,
                         v_sum_pow_neg_log, v_max_affine,  v_sum_exp_affine,
                         "avx2"};
  return &b;
}

}  // namespace acop::kernels

#endif  // x86_64
