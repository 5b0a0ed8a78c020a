#pragma once

#include <optional>

#include "acop/copula_spec.hpp"
#include "acop/sampling.hpp"

namespace acop {

/// Rank-transformed sample; every entry lies in {1/(n+1), ..., n/(n+1)}.
struct PseudoSample {
  Matrix u;
  std::size_t n() const { return u.n; }
  std::size_t d() const { return u.d; }
};

/// Column-wise ranks scaled by 1/(n+1); ties get average ranks.
PseudoSample pseudo_observations(const Matrix& x);

struct LikelihoodDiag {
  int bad_rows = 0;  // rows whose density was non-finite
};

/// sum_i log c(u_i); -inf (with diagnostics) when any row fails.
double log_likelihood(const CopulaSpec& spec, const Matrix& u,
                      LikelihoodDiag* diag = nullptr);

/// Sample Kendall's tau of two columns, O(n log n) merge counting,
/// tie-corrected (tau-b; equals tau-a without ties).
double kendall_tau_pair(std::span<const double> x, std::span<const double> y);

/// Mean of the d(d-1)/2 pairwise sample taus.
double pairwise_tau_hat(const Matrix& u);

/// Explicit Gumbel diagonal MLE, log d / (log n - log sum_i(-log Y_i)),
/// Y_i the row maxima; clamped to >= 1.
double gumbel_diag_mle(const Matrix& u);

/// Default tau estimate: pairwise tau for d <= 20, the Gumbel-diagonal
/// route above.
double tau_hat_default(const Matrix& u);

struct Interval {
  double lower = 0.0, upper = 0.0;
};

/// The one-parameter initial interval
/// [tau^{-1}(max(tau_hat-h, .)), tau^{-1}(min(tau_hat+h, .))] with the tau
/// targets clamped to an interior truncation of the attainable range.
Interval initial_interval_1p(FamilyId f, double tau_hat, double h,
                             double epsilon = 0.005);

/// Two-parameter initial box.
struct InitialBox {
  ParamVector lower, upper;
  double tau_hat = 0.0;
  double h_minus = 0.0, h_plus = 0.0, epsilon = 0.0;
};

/// Outer power Clayton box (closed-form tau inversions); parameter order
/// (theta, beta).
InitialBox initial_box_opc(double tau_hat, double h_minus, double h_plus,
                           double epsilon = 0.005);

/// GIG box (monotone root finds on gig_tau); parameter order (nu, theta).
InitialBox initial_box_gig(double tau_hat, double h_minus, double h_plus,
                           double epsilon = 0.005);

struct FitResult {
  CopulaSpec spec;           // fitted model with estimated parameters
  double loglik = 0.0;
  int iterations = 0;
  bool converged = false;
  bool at_boundary = false;
  Interval interval;         // one-parameter fits
  InitialBox box;            // two-parameter fits
  int failed_rows = 0;
};

/// Bounded scalar likelihood maximization on the interval (Brent).
FitResult mle_1p(FamilyId f, const PseudoSample& u, const Interval& interval);

/// Box-constrained Nelder-Mead with restarts from three corners + center.
FitResult mle_2p(CopulaSpec::Kind kind, const PseudoSample& u,
                 const InitialBox& box);

/// Convenience: tau-hat -> interval/box -> fit.
FitResult fit_auto(const CopulaSpec& proto, const PseudoSample& u,
                   double h = 0.15);

}  // namespace acop
