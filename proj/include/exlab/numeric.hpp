#pragma once

#include <cmath>

namespace exlab {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  CompensatedSum& operator+=(double x) noexcept {
    add(x);
    return *this;
  }

  [[nodiscard]] double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// log(1 + x) - x, accurate for small |x|.
inline double log1pmx(double x) {
  if (std::fabs(x) < 0.25) {
    // -x^2/2 + x^3/3 - x^4/4 + ...
    double term = x;
    double sum = 0.0;
    for (int k = 2; k < 200; ++k) {
      term *= -x;
      const double add = term / k;
      sum += add;
      if (std::fabs(add) <= 1e-18 * std::fabs(sum)) break;
    }
    return sum;
  }
  return std::log1p(x) - x;
}

}  // namespace exlab
