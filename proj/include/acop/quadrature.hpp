#pragma once

#include <functional>
#include <vector>

namespace acop {

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;
  int evaluations = 0;
  bool converged = false;
};

/// Adaptive Gauss-Kronrod (G7,K15) integration of f over [a,b].
QuadResult integrate(const std::function<double(double)>& f, double a,
                     double b, double abs_tol = 1e-12, double rel_tol = 1e-10,
                     int max_intervals = 2000);

/// Same, with caller-chosen initial subdivision points (must lie in (a,b)).
QuadResult integrate_segmented(const std::function<double(double)>& f,
                               double a, double b,
                               const std::vector<double>& breakpoints,
                               double abs_tol = 1e-12, double rel_tol = 1e-10,
                               int max_intervals = 2000);

}  // namespace acop
