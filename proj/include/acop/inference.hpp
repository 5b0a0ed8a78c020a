#pragma once

#include <array>

#include "acop/estimation.hpp"

namespace acop {

enum class CiMethod {
  expected_info,    // I(theta_hat) by Monte Carlo
  score_outer,      // I^(1): mean outer product of observed scores
  observed_info,    // I^(2): mean negative Hessian (Clayton)
  likelihood_ratio, // W-based interval
  profile           // profile likelihood (two-parameter families)
};

const char* ci_method_name(CiMethod m);

/// Estimate of the Fisher information (p = 1 here; the two-parameter
/// families go through likelihood-ratio / profile constructions).
struct InfoEstimate {
  CiMethod kind = CiMethod::expected_info;
  double value = 0.0;      // scalar information estimate
  double std_error = 0.0;  // Monte Carlo SE (expected_info only)
  int mc_size = 0;
};

struct CiResult {
  CiMethod method;
  double level = 0.95;
  double lower = 0.0, upper = 0.0;
  bool contains_estimate = true;
  bool lower_censored = false;  // endpoint hit the parameter domain boundary
  bool upper_censored = false;
};

/// I(theta_hat) = (1/m) sum s(U_k)^2 over fresh draws U_k ~ C_{theta_hat}.
InfoEstimate info_expected_mc(const CopulaSpec& spec, int d, int m,
                              RandomStream& rng);

/// I^(1) = (1/n) sum_i s(u_i)^2 on the observed sample.
InfoEstimate info_score_outer(const CopulaSpec& spec, const Matrix& u);

/// I^(2) = (1/n) sum_i -d2/dtheta2 l(theta; u_i); Clayton only.
InfoEstimate info_observed(const CopulaSpec& spec, const Matrix& u);

/// theta_hat +/- z_{1-alpha/2} / sqrt(n * I_hat).
CiResult ci_information(double theta_hat, const InfoEstimate& info,
                        std::size_t n, double level);

/// {theta : l(theta) >= l(theta_hat) - q_{chi2_1}(level)/2}, endpoints by
/// bracketed root finds; domain-boundary hits are flagged as censored.
CiResult ci_likelihood_ratio(const CopulaSpec& spec, const Matrix& u,
                             const FitResult& fit, double level);

/// Likelihood-ratio region membership (any p).
bool region_membership_lr(const CopulaSpec& spec, const Matrix& u,
                          const FitResult& fit, const ParamVector& theta_test,
                          double level);

/// Information-based quadratic-form membership (p = 1).
bool region_membership_info(double theta_hat, const InfoEstimate& info,
                            std::size_t n, double theta_test, double level);

/// Profile-likelihood interval for one coordinate of a two-parameter family.
CiResult profile_ci(CopulaSpec::Kind kind, const Matrix& u,
                    const FitResult& fit, int coordinate, double level);

/// Standard normal and chi-square quantiles (GSL-backed).
double normal_quantile(double p);
double chisq_quantile(double p, int dof);

}  // namespace acop
