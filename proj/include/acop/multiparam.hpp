#pragma once

#include <span>
#include <utility>

#include "acop/families.hpp"

namespace acop {

/// Outer power Clayton: generator psi~(t) = (1 + t^{1/beta})^{-1/theta}.
struct OuterPowerClaytonParams {
  double theta = 1.0;  // inner Clayton parameter, > 0
  double beta = 1.0;   // outer power, >= 1
};

void check_params(const OuterPowerClaytonParams& p);

double op_psi(const OuterPowerClaytonParams& p, double t);
double op_psi_inv(const OuterPowerClaytonParams& p, double u);
double op_log_psi_inv_neg_deriv(const OuterPowerClaytonParams& p, double u);

/// log((-1)^d psi~^{(d)}(t)) via the Schloemilch composition with the
/// Gumbel polynomial coefficients at beta.
double op_log_gen_deriv(const OuterPowerClaytonParams& p, int d, double t);

double op_log_density(const OuterPowerClaytonParams& p,
                      std::span<const double> u);

/// tau = 1 - 2/(beta(theta+2)).
double op_tau(const OuterPowerClaytonParams& p);
std::pair<double, double> op_tail_dependence(const OuterPowerClaytonParams& p);

/// Closed-form inversions of the tau formula in one coordinate.
double op_theta_for_tau(double tau, double beta);
double op_beta_for_tau(double tau, double theta);

/// Archimedean GIG family: psi(t) = (1+t)^{-nu/2} K_nu(theta sqrt(1+t)) / K_nu(theta).
struct GigParams {
  double nu = 0.0;     // order; >= 0 for estimation, > -1/2 for psi_inv
  double theta = 1.0;  // > 0
};

void check_params(const GigParams& p);

double gig_psi(const GigParams& p, double t);

/// Inverse by bracketed root find inside [0, (1 - log(u)/theta)^2 - 1].
double gig_psi_inv(const GigParams& p, double u);

double gig_log_psi_inv_neg_deriv(const GigParams& p, double u);

/// log((-1)^d psi^{(d)}(t)) = log h_{nu+d,nu,theta}(t) - d log 2 - (nu+d) log(1+t).
double gig_log_gen_deriv(const GigParams& p, int d, double t);

/// The displayed closed-form log density.
double gig_log_density(const GigParams& p, std::span<const double> u);

/// Generic Eq.-(2) composition (cross-check route).
double gig_log_density_generic(const GigParams& p, std::span<const double> u);

/// Kendall's tau by adaptive quadrature of the Bessel integral; switches to
/// the Clayton limit 1/(1+2 nu) for theta < 1e-4.
double gig_tau(const GigParams& p);

std::pair<double, double> gig_tail_dependence(const GigParams& p);

/// log h_{nu1,nu2,theta}(t) = nu1 log(theta sqrt(1+t)) + log K_nu1(theta sqrt(1+t))
///                            - nu2 log(theta) - log K_nu2(theta).
double gig_log_h(double nu1, double nu2, double theta, double t);

}  // namespace acop
