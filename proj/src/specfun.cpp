#include "acop/specfun.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_bessel.h>

#include <atomic>
#include <cmath>
#include <mutex>

#include "acop/common.hpp"
#include "acop/quadrature.hpp"

namespace acop {

StirlingTables::StirlingTables(int max_n) : max_n_(max_n) {
  require(max_n >= 1, "stirling_tables: max_n must be >= 1");
  const std::size_t total = idx(max_n, max_n) + 1;
  log_c_.assign(total, kNegInf);
  log_s2_.assign(total, kNegInf);
  log_c_[idx(0, 0)] = 0.0;
  log_s2_[idx(0, 0)] = 0.0;
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 1; k <= n; ++k) {
      // |s(n,k)| = |s(n-1,k-1)| + (n-1)|s(n-1,k)|  (same-signed in log space)
      const double prev_c =
          (k <= n - 1) ? log_c_[idx(n - 1, k)] : kNegInf;
      log_c_[idx(n, k)] = logaddexp(log_c_[idx(n - 1, k - 1)],
                                    std::log(n - 1.0) + prev_c);
      const double prev_s2 =
          (k <= n - 1) ? log_s2_[idx(n - 1, k)] : kNegInf;
      log_s2_[idx(n, k)] = logaddexp(log_s2_[idx(n - 1, k - 1)],
                                     std::log(static_cast<double>(k)) + prev_s2);
    }
  }
}

double StirlingTables::log_abs_first(int n, int k) const {
  if (n < 0 || k < 0 || k > n || n > max_n_) return kNegInf;
  return log_c_[idx(n, k)];
}

double StirlingTables::log_second(int n, int k) const {
  if (n < 0 || k < 0 || k > n || n > max_n_) return kNegInf;
  return log_s2_[idx(n, k)];
}

SignedLog StirlingTables::first_kind(int n, int k) const {
  const double la = log_abs_first(n, k);
  if (la == kNegInf) return SignedLog::zero();
  return SignedLog::from_log(la, ((n - k) % 2 == 0) ? +1 : -1);
}

SignedLog StirlingTables::second_kind(int n, int k) const {
  const double la = log_second(n, k);
  if (la == kNegInf) return SignedLog::zero();
  return SignedLog::from_log(la, +1);
}

namespace {
std::mutex g_stirling_mutex;
std::shared_ptr<const StirlingTables> g_stirling;  // guarded by the mutex
}  // namespace

std::shared_ptr<const StirlingTables> stirling_tables(int max_n) {
  require(max_n >= 1, "stirling_tables: max_n must be >= 1");
  std::lock_guard<std::mutex> lock(g_stirling_mutex);
  if (!g_stirling || g_stirling->max_n() < max_n) {
    int grow = g_stirling ? g_stirling->max_n() : 32;
    while (grow < max_n) grow *= 2;
    g_stirling = std::make_shared<const StirlingTables>(grow);
  }
  return g_stirling;
}

SignedLog polylog_neg_log(int d, double log_z, double log1m_z) {
  require(d >= 0, "polylog_neg: order must be -d with d >= 0");
  require(log_z < 0.0 && log1m_z < 0.0, "polylog_neg: z must be in (0,1)");
  // Li_{-d}(z) = sum_{k=0}^{d} k! S(d+1,k+1) (z/(1-z))^{k+1}; every term
  // positive, so a plain log-sum-exp suffices.
  auto tab = stirling_tables(d + 1);
  const double log_y = log_z - log1m_z;
  double acc = kNegInf;
  for (int k = 0; k <= d; ++k) {
    const double term = std::lgamma(k + 1.0) + tab->log_second(d + 1, k + 1) +
                        (k + 1.0) * log_y;
    acc = logaddexp(acc, term);
  }
  return SignedLog::from_log(acc, +1);
}

SignedLog polylog_neg(int d, double z) {
  require(z > 0.0 && z < 1.0, "polylog_neg: z must be in (0,1)");
  return polylog_neg_log(d, std::log(z), std::log1p(-z));
}

double log_gamma_ratio(double a, double b) {
  require(a > 0.0 && b > 0.0, "log_gamma_ratio: arguments must be positive");
  return std::lgamma(a) - std::lgamma(b);
}

double debye1(double theta) {
  require(theta > 0.0, "debye1: theta must be positive");
  if (theta < 1e-4) {
    // 1 - x/4 + x^2/36 - x^4/3600 + x^6/211680
    const double x2 = theta * theta;
    return 1.0 - theta / 4.0 + x2 / 36.0 - x2 * x2 / 3600.0;
  }
  auto integrand = [](double t) { return t / std::expm1(t); };
  const QuadResult q = integrate(integrand, 0.0, theta, 1e-13, 1e-13, 4000);
  if (!q.converged) throw numeric_error("debye1: quadrature did not converge");
  return q.value / theta;
}

double log_bessel_k(double nu, double t) {
  require(t > 0.0, "log_bessel_k: t must be positive");
  static std::once_flag off;
  std::call_once(off, [] { gsl_set_error_handler_off(); });
  gsl_sf_result res;
  const int status = gsl_sf_bessel_lnKnu_e(std::fabs(nu), t, &res);
  if (status != GSL_SUCCESS || !std::isfinite(res.val))
    throw numeric_error("log_bessel_k: evaluation failed at nu=" +
                        std::to_string(nu) + ", t=" + std::to_string(t));
  return res.val;
}

}  // namespace acop
