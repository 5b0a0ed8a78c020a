#pragma once

#include <memory>
#include <vector>

#include "acop/signed_log.hpp"

namespace acop {

/// Triangular tables of Stirling numbers up to row max_n, held in log space
/// so that rows far beyond the 64-bit integer range (n ~ 200) stay exact in
/// sign and accurate in magnitude. Immutable after construction.
class StirlingTables {
 public:
  explicit StirlingTables(int max_n);

  int max_n() const { return max_n_; }

  /// Signed Stirling number of the first kind s(n,k); zero outside 0<=k<=n.
  SignedLog first_kind(int n, int k) const;

  /// Stirling number of the second kind S(n,k); zero outside 0<=k<=n.
  SignedLog second_kind(int n, int k) const;

  /// log |s(n,k)|, -inf outside the triangle. The sign of s(n,k) is
  /// (-1)^(n-k) wherever it is non-zero.
  double log_abs_first(int n, int k) const;
  double log_second(int n, int k) const;

 private:
  int max_n_;
  std::vector<double> log_c_;  // |s(n,k)| (unsigned first kind)
  std::vector<double> log_s2_; // S(n,k)
  std::size_t idx(int n, int k) const {
    return static_cast<std::size_t>(n) * (n + 1) / 2 + k;
  }
};

/// Process-wide table, grown on demand; safe to call from multiple threads.
std::shared_ptr<const StirlingTables> stirling_tables(int max_n);

/// Polylogarithm of negative integer order, Li_{-d}(z), for z in (0,1),
/// evaluated through the Stirling finite sum in log space. Strictly positive.
SignedLog polylog_neg(int d, double z);

/// Same, but taking log(z) and log(1-z) so callers near z -> 1 can supply
/// the accurate complement themselves.
SignedLog polylog_neg_log(int d, double log_z, double log1m_z);

/// log Gamma(a) - log Gamma(b), a, b > 0.
double log_gamma_ratio(double a, double b);

/// Debye function of order one, D_1(theta) = (1/theta) int_0^theta t/(e^t-1) dt.
double debye1(double theta);

/// log K_nu(t), the modified Bessel function of the third kind; finite for
/// t in [1e-12, 700] and |nu| <= 50. Even in nu.
double log_bessel_k(double nu, double t);

}  // namespace acop
