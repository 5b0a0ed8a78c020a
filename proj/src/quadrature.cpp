#include "acop/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "acop/common.hpp"

namespace acop {
namespace {

// 15-point Kronrod nodes/weights on [-1,1] with the embedded 7-point Gauss
// rule (positive half; symmetric).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kXgk[i]);
    fv[14 - i] = f(c + h * kXgk[i]);
  }
  fv[7] = f(c);
  double kron = kWgk[7] * fv[7];
  double gauss = kWg[3] * fv[7];
  for (int i = 0; i < 7; ++i) {
    kron += kWgk[i] * (fv[i] + fv[14 - i]);
    if (i % 2 == 1) gauss += kWg[i / 2] * (fv[i] + fv[14 - i]);
  }
  Segment s;
  s.a = a;
  s.b = b;
  s.value = kron * h;
  s.error = std::fabs((kron - gauss) * h);
  return s;
}

}  // namespace

QuadResult integrate_segmented(const std::function<double(double)>& f,
                               double a, double b,
                               const std::vector<double>& breakpoints,
                               double abs_tol, double rel_tol,
                               int max_intervals) {
  std::priority_queue<Segment> heap;
  std::vector<double> pts;
  pts.push_back(a);
  for (double p : breakpoints)
    if (p > a && p < b) pts.push_back(p);
  pts.push_back(b);
  std::sort(pts.begin(), pts.end());

  QuadResult r;
  double total = 0.0, err = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    Segment s = gk15(f, pts[i], pts[i + 1]);
    r.evaluations += 15;
    total += s.value;
    err += s.error;
    heap.push(s);
  }

  int used = static_cast<int>(heap.size());
  while (err > std::max(abs_tol, rel_tol * std::fabs(total)) &&
         used < max_intervals) {
    Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {  // interval at double resolution
      heap.push(Segment{worst.a, worst.b, worst.value, 0.0});
      err -= worst.error;
      continue;
    }
    Segment l = gk15(f, worst.a, mid), rgt = gk15(f, mid, worst.b);
    r.evaluations += 30;
    total += l.value + rgt.value - worst.value;
    err += l.error + rgt.error - worst.error;
    heap.push(l);
    heap.push(rgt);
    ++used;
  }

  r.value = total;
  r.abs_error = err;
  r.converged = err <= std::max(abs_tol, rel_tol * std::fabs(total));
  return r;
}

QuadResult integrate(const std::function<double(double)>& f, double a,
                     double b, double abs_tol, double rel_tol,
                     int max_intervals) {
  return integrate_segmented(f, a, b, {}, abs_tol, rel_tol, max_intervals);
}

}  // namespace acop
