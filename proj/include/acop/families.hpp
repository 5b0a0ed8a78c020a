#pragma once

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "acop/rng.hpp"
#include "acop/signed_log.hpp"

namespace acop {

/// The five one-parameter Archimedean families.
enum class FamilyId { amh, clayton, frank, gumbel, joe };

const char* family_name(FamilyId f);
FamilyId family_from_name(const std::string& name);

/// Admissible parameter range of a family.
struct ParamDomain {
  FamilyId family;
  double lower, upper;
  bool lower_open, upper_open;

  bool contains(double theta) const {
    if (theta < lower || (lower_open && theta == lower)) return false;
    if (theta > upper || (upper_open && theta == upper)) return false;
    return true;
  }
  /// True when theta sits exactly on a closed boundary that makes the
  /// family the independence copula (AMH theta=0, Gumbel/Joe theta=1).
  bool at_independence(double theta) const {
    return !lower_open && theta == lower;
  }
};

ParamDomain param_domain(FamilyId f);
void check_theta(FamilyId f, double theta);

// -- generator ---------------------------------------------------------------

/// psi_theta(t) on t in [0, inf].
double psi(FamilyId f, double theta, double t);

/// psi^{-1}(u) on u in (0,1].
double psi_inv(FamilyId f, double theta, double u);

/// log(-(psi^{-1})'(u)), the Jacobian factor of the generic density.
double log_psi_inv_neg_deriv(FamilyId f, double theta, double u);

/// log((-1)^d psi_theta^{(d)}(t)). d = 0 gives log psi(t).
double log_gen_deriv(FamilyId f, double theta, int d, double t);

// -- Gumbel / Joe derivative polynomials -------------------------------------

/// Coefficients a_dk of the Gumbel derivative polynomial
/// P_{d,theta}(x) = sum_k a_dk x^k; all strictly positive.
struct GumbelPolyCoeffs {
  int d = 0;
  double theta = 1.0;
  std::vector<SignedLog> coeff;  // index k-1 holds a_dk
  bool escalated = false;        // high-precision construction was needed

  /// log P(x) evaluated at log_x = log(x).
  double log_poly(double log_x) const;
};

/// Construct via the Stirling double sum (cross-checked against the binomial
/// form for d <= 40; escalates to exact-integer/MPFR arithmetic when the
/// tracked cancellation is too deep).
GumbelPolyCoeffs gumbel_coeffs(int d, double theta);

/// Binomial-form construction, used by the cross-check and by tests.
GumbelPolyCoeffs gumbel_coeffs_binomial(int d, double theta, bool exact = false);

/// Stirling-form construction at forced high precision (test oracle).
GumbelPolyCoeffs gumbel_coeffs_exact(int d, double theta);

/// Coefficients of the Joe derivative polynomial
/// P_{d,theta}(x) = sum_k a_dk x^{k-1}; all strictly positive.
struct JoePolyCoeffs {
  int d = 0;
  double theta = 1.0;
  std::vector<SignedLog> coeff;  // index k-1 holds a_dk

  double log_poly(double log_x) const;
};

JoePolyCoeffs joe_coeffs(int d, double theta);

// -- density, score, dependence measures -------------------------------------

/// log c_theta(u) via the family-specific closed form.
double log_density(FamilyId f, double theta, std::span<const double> u);

/// log c_theta(u) via the generic composition
/// log((-1)^d psi^{(d)}(t(u))) + sum_j log(-(psi^{-1})'(u_j)).
double log_density_generic(FamilyId f, double theta, std::span<const double> u);

/// d/dtheta log c_theta(u), analytic.
double score(FamilyId f, double theta, std::span<const double> u);

/// d^2/dtheta^2 of the Clayton log density (explicit Hessian).
double clayton_loglik_hessian(double theta, std::span<const double> u);

/// Population Kendall's tau.
double tau(FamilyId f, double theta);

/// Attainable tau range (lower, upper) of the family.
std::pair<double, double> tau_range(FamilyId f);

/// theta with tau(theta) = tau_target; closed form for Clayton/Gumbel,
/// bracketed root find otherwise.
double tau_inverse(FamilyId f, double tau_target);

/// (lambda_L, lambda_U).
std::pair<double, double> tail_dependence(FamilyId f, double theta);

// -- Monte Carlo derivative approximation ------------------------------------

struct McDerivEstimate {
  double log_value;   // log of the mean of V^d e^{-Vt}
  double std_error;   // standard error of the mean, linear scale
  double value() const;
};

/// (1/m) sum_k V_k^d exp(-V_k t) with V_k drawn from F = LS^{-1}[psi].
McDerivEstimate mc_gen_deriv(FamilyId f, double theta, int d, double t,
                             int m, RandomStream& rng);

// -- Khoudraji transform ------------------------------------------------------

/// log density of the Khoudraji-transformed copula
/// C(u) = C_psi(u_1^a_1,...,u_d^a_d) * Pi(u_1^{1-a_1},...,u_d^{1-a_d}),
/// exact 2^d subset sum; d <= 20.
double khoudraji_log_density(FamilyId f, double theta,
                             std::span<const double> alphas,
                             std::span<const double> u);

}  // namespace acop
