#pragma once

#include <cmath>
#include <cstdio>
#include <string>

namespace ffdinfo {

// Compensated (Kahan) accumulator. Summation order is the caller's
// responsibility; all library sums go ascending for reproducibility.
template <typename T = double>
class KahanSum {
 public:
  void add(T x) {
    T y = x - carry_;
    T t = sum_ + y;
    carry_ = (t - sum_) - y;
    sum_ = t;
  }
  T value() const { return sum_; }

 private:
  T sum_ = 0;
  T carry_ = 0;
};

// log(exp(a) + exp(b)) for finite a, b.
inline double log_add(double a, double b) {
  if (a < b) std::swap(a, b);
  return a + std::log1p(std::exp(b - a));
}

inline long double log_add(long double a, long double b) {
  if (a < b) std::swap(a, b);
  return a + std::log1p(std::expl(b - a));
}

// CSV floats carry 12 significant digits, human-facing tables 4.
inline std::string format_sig(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

inline std::string csv_num(double v) { return format_sig(v, 12); }

}  // namespace ffdinfo
