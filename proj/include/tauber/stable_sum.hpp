#pragma once

#include <cmath>
#include <limits>

namespace tauber {

// Neumaier-compensated accumulator. Tracks the sum of |terms| so callers can
// attach a rounding bound to the result: the compensated sum is accurate to
// 2*eps*abs_sum (first order in eps).
class StableSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
    abs_ += std::fabs(x);
  }

  double value() const { return sum_ + comp_; }
  double abs_sum() const { return abs_; }

  double error_bound() const {
    return 2.0 * std::numeric_limits<double>::epsilon() * abs_;
  }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
  double abs_ = 0.0;
};

}  // namespace tauber
