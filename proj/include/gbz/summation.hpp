// summation.hpp
//
// Compensated and pairwise accumulation. Zero sums and variance sweeps add
// many terms of mixed magnitude; the pairwise reducer gives a summation tree
// that depends only on the input length, so block-parallel reductions are
// reproducible bit for bit.

#pragma once

#include <cstddef>
#include <span>

namespace gbz {

// Neumaier variant of Kahan summation.
class KahanSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if ((sum_ >= 0 ? sum_ : -sum_) >= (x >= 0 ? x : -x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  KahanSum& operator+=(double x) noexcept {
    add(x);
    return *this;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Recursive halving down to blocks of 8, which are summed left to right.
inline double pairwise_sum(std::span<const double> xs) noexcept {
  if (xs.size() <= 8) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s;
  }
  const std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

}  // namespace gbz
