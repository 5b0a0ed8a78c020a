#include "acop/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace acop {

ScalarMinResult brent_minimize(const std::function<double(double)>& f,
                               double a, double b, double tol, int max_evals) {
  constexpr double kGold = 0.3819660112501051;  // (3 - sqrt(5))/2
  ScalarMinResult res;
  double x = a + kGold * (b - a), w = x, v = x;
  double fx = f(x), fw = fx, fv = fx;
  res.evaluations = 1;
  double d = 0.0, e = 0.0;

  while (res.evaluations < max_evals) {
    const double m = 0.5 * (a + b);
    const double tol1 = tol * std::fabs(x) + 1e-12;
    const double tol2 = 2.0 * tol1;
    if (std::fabs(x - m) <= tol2 - 0.5 * (b - a)) {
      res.converged = true;
      break;
    }
    double u;
    bool parabolic = false;
    if (std::fabs(e) > tol1) {
      // parabola through (v,fv), (w,fw), (x,fx)
      const double r = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::fabs(q);
      const double e_old = e;
      e = d;
      if (std::fabs(p) < std::fabs(0.5 * q * e_old) && p > q * (a - x) &&
          p < q * (b - x)) {
        d = p / q;
        u = x + d;
        if (u - a < tol2 || b - u < tol2) d = (x < m) ? tol1 : -tol1;
        parabolic = true;
      }
    }
    if (!parabolic) {
      e = (x < m) ? b - x : a - x;
      d = kGold * e;
    }
    u = (std::fabs(d) >= tol1) ? x + d : x + (d > 0.0 ? tol1 : -tol1);
    const double fu = f(u);
    ++res.evaluations;
    if (fu <= fx) {
      if (u < x) b = x; else a = x;
      v = w; fv = fw;
      w = x; fw = fx;
      x = u; fx = fu;
    } else {
      if (u < x) a = u; else b = u;
      if (fu <= fw || w == x) {
        v = w; fv = fw;
        w = u; fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u; fv = fu;
      }
    }
  }
  res.x = x;
  res.fx = fx;
  return res;
}

RootResult brent_root(const std::function<double(double)>& f, double a,
                      double b, double x_tol, int max_iter) {
  RootResult res;
  double fa = f(a), fb = f(b);
  res.evaluations = 2;
  if (fa == 0.0) { res.x = a; res.converged = true; return res; }
  if (fb == 0.0) { res.x = b; res.converged = true; return res; }
  if ((fa > 0.0) == (fb > 0.0)) { res.x = 0.5 * (a + b); return res; }

  double c = a, fc = fa, d = b - a, e = d;
  for (int it = 0; it < max_iter; ++it) {
    if ((fb > 0.0) == (fc > 0.0)) { c = a; fc = fa; d = e = b - a; }
    if (std::fabs(fc) < std::fabs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 = 2.0 * 1e-16 * std::fabs(b) + 0.5 * x_tol;
    const double xm = 0.5 * (c - b);
    if (std::fabs(xm) <= tol1 || fb == 0.0) {
      res.x = b;
      res.converged = true;
      return res;
    }
    if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
      double p, q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc, r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::fabs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::fabs(tol1 * q),
                             std::fabs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::fabs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
    fb = f(b);
    ++res.evaluations;
  }
  res.x = b;
  return res;
}

bool expand_bracket(const std::function<double(double)>& f, double lo,
                    double hi, double& a, double& b, int max_steps) {
  // geometric scan of [lo, hi] looking for a sign change
  const int n = std::min(max_steps, 64);
  double prev_x = lo, prev_f = f(lo);
  if (prev_f == 0.0) { a = b = lo; return true; }
  for (int i = 1; i <= n; ++i) {
    const double x = lo + (hi - lo) * (std::pow(2.0, i) - 1.0) /
                              (std::pow(2.0, n) - 1.0);
    const double fx = f(x);
    if (fx == 0.0 || (fx > 0.0) != (prev_f > 0.0)) {
      a = prev_x;
      b = x;
      return true;
    }
    prev_x = x;
    prev_f = fx;
  }
  return false;
}

BoxMinResult nelder_mead_box(
    const std::function<double(const std::array<double, 2>&)>& f,
    const std::array<double, 2>& lower, const std::array<double, 2>& upper,
    const std::array<double, 2>& start, double x_tol, double f_tol,
    int max_evals) {
  using P = std::array<double, 2>;
  auto clamp = [&](P p) {
    for (int j = 0; j < 2; ++j)
      p[j] = std::min(std::max(p[j], lower[j]), upper[j]);
    return p;
  };
  BoxMinResult res;
  auto eval = [&](const P& p) {
    ++res.evaluations;
    return f(p);
  };

  // initial simplex: start plus steps of 5% of the box edge per coordinate
  P verts[3];
  double fval[3];
  verts[0] = clamp(start);
  for (int j = 0; j < 2; ++j) {
    P p = verts[0];
    double step = 0.05 * (upper[j] - lower[j]);
    if (step <= 0.0) step = 1e-6;
    p[j] = (p[j] + step <= upper[j]) ? p[j] + step : p[j] - step;
    verts[j + 1] = clamp(p);
  }
  for (int i = 0; i < 3; ++i) fval[i] = eval(verts[i]);

  auto order = [&] {
    int idx[3] = {0, 1, 2};
    std::sort(idx, idx + 3, [&](int i, int j) { return fval[i] < fval[j]; });
    P tv[3];
    double tf[3];
    for (int i = 0; i < 3; ++i) { tv[i] = verts[idx[i]]; tf[i] = fval[idx[i]]; }
    for (int i = 0; i < 3; ++i) { verts[i] = tv[i]; fval[i] = tf[i]; }
  };

  while (res.evaluations < max_evals) {
    order();
    const double size = std::max(
        std::max(std::fabs(verts[1][0] - verts[0][0]),
                 std::fabs(verts[2][0] - verts[0][0])),
        std::max(std::fabs(verts[1][1] - verts[0][1]),
                 std::fabs(verts[2][1] - verts[0][1])));
    if (size < x_tol && std::fabs(fval[2] - fval[0]) < f_tol) {
      res.converged = true;
      break;
    }
    P centroid{0.5 * (verts[0][0] + verts[1][0]),
               0.5 * (verts[0][1] + verts[1][1])};
    auto blend = [&](double coef) {
      return clamp(P{centroid[0] + coef * (centroid[0] - verts[2][0]),
                     centroid[1] + coef * (centroid[1] - verts[2][1])});
    };
    const P xr = blend(1.0);
    const double fr = eval(xr);
    if (fr < fval[0]) {
      const P xe = blend(2.0);
      const double fe = eval(xe);
      if (fe < fr) { verts[2] = xe; fval[2] = fe; }
      else { verts[2] = xr; fval[2] = fr; }
    } else if (fr < fval[1]) {
      verts[2] = xr;
      fval[2] = fr;
    } else {
      const P xc = blend(fr < fval[2] ? 0.5 : -0.5);
      const double fc = eval(xc);
      if (fc < std::min(fr, fval[2])) {
        verts[2] = xc;
        fval[2] = fc;
      } else {  // shrink toward the best vertex
        for (int i = 1; i < 3; ++i) {
          verts[i] = clamp(P{0.5 * (verts[i][0] + verts[0][0]),
                             0.5 * (verts[i][1] + verts[0][1])});
          fval[i] = eval(verts[i]);
        }
      }
    }
  }
  order();
  res.x = verts[0];
  res.fx = fval[0];
  for (int j = 0; j < 2; ++j)
    if (res.x[j] <= lower[j] + 1e-12 || res.x[j] >= upper[j] - 1e-12)
      res.at_boundary = true;
  return res;
}

}  // namespace acop
