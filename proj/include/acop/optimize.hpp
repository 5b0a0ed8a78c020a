#pragma once

#include <array>
#include <functional>

namespace acop {

struct ScalarMinResult {
  double x = 0.0;
  double fx = 0.0;
  int evaluations = 0;
  bool converged = false;
};

/// Brent minimization (golden section + parabolic interpolation) of f on
/// [a,b]. Derivative-free; tol is the absolute x tolerance.
ScalarMinResult brent_minimize(const std::function<double(double)>& f,
                               double a, double b, double tol = 1e-8,
                               int max_evals = 200);

struct RootResult {
  double x = 0.0;
  int evaluations = 0;
  bool converged = false;
};

/// Brent root find on a bracketing interval [a,b] with f(a)*f(b) <= 0.
RootResult brent_root(const std::function<double(double)>& f, double a,
                      double b, double x_tol = 1e-12, int max_iter = 200);

/// Locate a bracket for a root of f by scanning a monotone function over
/// [lo, hi] with geometric steps from x0; returns false if none found.
bool expand_bracket(const std::function<double(double)>& f, double lo,
                    double hi, double& a, double& b, int max_steps = 200);

struct BoxMinResult {
  std::array<double, 2> x{0.0, 0.0};
  double fx = 0.0;
  int evaluations = 0;
  bool converged = false;
  bool at_boundary = false;
};

/// Nelder-Mead minimization of f over the box [lower, upper] (candidates
/// are clamped into the box). One run from the given start point.
BoxMinResult nelder_mead_box(
    const std::function<double(const std::array<double, 2>&)>& f,
    const std::array<double, 2>& lower, const std::array<double, 2>& upper,
    const std::array<double, 2>& start, double x_tol = 1e-6,
    double f_tol = 1e-8, int max_evals = 2000);

}  // namespace acop
