#pragma once

#include <cstddef>
#include <vector>

#include "acop/copula_spec.hpp"
#include "acop/rng.hpp"

namespace acop {

/// Row-major n x d matrix of doubles.
struct Matrix {
  std::size_t n = 0, d = 0;
  std::vector<double> a;

  Matrix() = default;
  Matrix(std::size_t n_, std::size_t d_) : n(n_), d(d_), a(n_ * d_, 0.0) {}

  double& operator()(std::size_t i, std::size_t j) { return a[i * d + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a[i * d + j]; }

  std::span<const double> row(std::size_t i) const {
    return {a.data() + i * d, d};
  }
  std::span<double> row(std::size_t i) { return {a.data() + i * d, d}; }
};

/// One draw from the frailty distribution F = LS^{-1}[psi] of a
/// one-parameter family (Table-1 laws).
double sample_frailty(FamilyId f, double theta, RandomStream& rng);

/// Outer power Clayton frailty V~ = S V^beta, S positive stable, V gamma.
double sample_op_frailty(const OuterPowerClaytonParams& p, RandomStream& rng);

/// GIG frailty V = X/2 with X ~ GIG(nu, 1, theta^2).
double sample_gig_frailty(const GigParams& p, RandomStream& rng);

double sample_frailty(const CopulaSpec& spec, RandomStream& rng);

/// One-sided positive stable variate with Laplace transform exp(-s^alpha),
/// alpha in (0,1]; alpha = 1 is the unit point mass.
double sample_positive_stable(double alpha, RandomStream& rng);

/// Sibuya(alpha) variate, alpha in (0,1]; returned as a double because the
/// law is heavy-tailed beyond the 64-bit integer range for small alpha.
double sample_sibuya(double alpha, RandomStream& rng);

/// Logarithmic-series variate with parameter p = 1 - e^{-theta}, passed as
/// theta so the complement stays exact (Kemp's second accelerated method).
double sample_logarithmic(double theta, RandomStream& rng);

/// Geometric on {1,2,...} with success probability 1-theta.
double sample_geometric_amh(double theta, RandomStream& rng);

/// X ~ GIG(nu, phi=1, chi) via log-concave envelope rejection in log space.
double sample_gig(double nu, double chi, RandomStream& rng);

/// n rows of the copula via the frailty construction U_j = psi(E_j / V);
/// all entries strictly inside (0,1).
Matrix sample_copula(const CopulaSpec& spec, std::size_t n, std::size_t d,
                     RandomStream& rng);

}  // namespace acop
