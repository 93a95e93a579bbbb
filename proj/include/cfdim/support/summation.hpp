#pragma once

#include <cmath>

namespace cfdim {

/// Neumaier (improved Kahan) compensated accumulator.
///
/// The result depends only on the order values are added in, so callers that
/// fix a traversal order get bit-identical sums on every run.
template <typename Real = long double>
class compensated_sum {
 public:
  compensated_sum& operator+=(Real v) {
    const Real t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  compensated_sum& operator+=(const compensated_sum& other) {
    *this += other.sum_;
    *this += other.comp_;
    return *this;
  }

  Real value() const { return sum_ + comp_; }

 private:
  Real sum_{0};
  Real comp_{0};
};

}  // namespace cfdim
