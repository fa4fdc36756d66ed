#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace bornsim {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// C(n, k), exact for any n. Division is exact at every step of the
// multiplicative recurrence.
inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return BigInt(0);
  if (k > n - k) k = n - k;
  BigInt result(1);
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

inline BigInt pow2(int n) { return BigInt(1) << n; }

// r^k for k >= 0, with the convention 0^0 == 1.
inline BigRational rational_pow(const BigRational& r, int k) {
  BigRational acc(1);
  for (int i = 0; i < k; ++i) acc *= r;
  return acc;
}

// x^k for k >= 0 by repeated squaring. std::pow is not required to be
// correctly rounded, this keeps outputs bit-stable.
inline double dpow(double x, int k) {
  double acc = 1.0;
  double base = x;
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

// Kahan compensated accumulator for long sums of non-exact weights.
class KahanSum {
 public:
  void add(double x) {
    const double y = x - compensation_;
    const double t = sum_ + y;
    compensation_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace bornsim
