#pragma once

#include <cmath>
#include <cstdlib>

#include "acop/common.hpp"

namespace acop {

/// A real number stored as sign * exp(log_abs). The carrier for alternating
/// sums whose terms span hundreds of orders of magnitude.
struct SignedLog {
  int sign = 0;             // -1, 0, +1
  double log_abs = kNegInf; // natural log of |value|; -inf iff sign == 0

  static SignedLog zero() { return {}; }

  static SignedLog from_log(double la, int sg = +1) {
    if (la == kNegInf || sg == 0) return {};
    return {sg, la};
  }

  static SignedLog from_value(double v) {
    if (v == 0.0) return {};
    return {v > 0.0 ? +1 : -1, std::log(std::fabs(v))};
  }

  bool is_zero() const { return sign == 0; }
  bool positive() const { return sign > 0; }

  double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

  SignedLog operator*(const SignedLog& o) const {
    if (sign == 0 || o.sign == 0) return {};
    return {sign * o.sign, log_abs + o.log_abs};
  }

  SignedLog operator-() const { return {-sign, log_abs}; }

  SignedLog operator+(const SignedLog& o) const {
    if (sign == 0) return o;
    if (o.sign == 0) return *this;
    if (sign == o.sign) return {sign, logaddexp(log_abs, o.log_abs)};
    if (log_abs == o.log_abs) return {};
    return log_abs > o.log_abs
               ? SignedLog{sign, logsubexp(log_abs, o.log_abs)}
               : SignedLog{o.sign, logsubexp(o.log_abs, log_abs)};
  }

  SignedLog operator-(const SignedLog& o) const { return *this + (-o); }
};

/// Signed log-domain accumulator that tracks the largest magnitude the
/// running sum ever reached. peak - |result| measures how many digits the
/// cancellation destroyed, which drives the high-precision escalation in the
/// Gumbel coefficient construction.
class SignedLogAccumulator {
 public:
  void add(const SignedLog& t) {
    acc_ = acc_ + t;
    if (t.sign != 0 && t.log_abs > peak_) peak_ = t.log_abs;
    if (acc_.sign != 0 && acc_.log_abs > peak_) peak_ = acc_.log_abs;
  }

  const SignedLog& sum() const { return acc_; }

  /// Decimal digits lost to cancellation (0 when nothing cancelled).
  double digits_lost() const {
    if (peak_ == kNegInf) return 0.0;
    if (acc_.sign == 0) return kInf;
    const double lost = (peak_ - acc_.log_abs) / 2.302585092994046;
    return lost > 0.0 ? lost : 0.0;
  }

 private:
  SignedLog acc_{};
  double peak_ = kNegInf;
};

}  // namespace acop
