#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace acop {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kLn2 = 0.69314718055994530942;

/// Thrown when a computation produced an unusable value (overflow, failed
/// bracket, non-finite intermediate) as opposed to a caller error.
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// log(1 - exp(-a)) for a > 0.
inline double log1mexp(double a) {
  if (!(a > 0.0)) {
    if (a == 0.0) return kNegInf;
    return std::numeric_limits<double>::quiet_NaN();
  }
  return a <= kLn2 ? std::log(-std::expm1(-a)) : std::log1p(-std::exp(-a));
}

/// log(exp(a) + exp(b)); tolerates -inf operands.
inline double logaddexp(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double m = a > b ? a : b;
  return m + std::log1p(std::exp(-std::fabs(a - b)));
}

/// log(exp(a) - exp(b)) for a >= b; returns -inf when a == b.
inline double logsubexp(double a, double b) {
  if (b == kNegInf) return a;
  if (a == b) return kNegInf;
  return a + log1mexp(a - b);
}

inline double sq(double x) { return x * x; }

inline void require(bool cond, const char* msg) {
  if (!cond) throw std::domain_error(msg);
}

}  // namespace acop
