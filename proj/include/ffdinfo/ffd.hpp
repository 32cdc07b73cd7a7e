#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace ffdinfo {

// Distribution of the number of distinct blocks in an m-element sample
// partition, parameter theta > 0. Support is {1, ..., m}.
struct FfdSpec {
  std::int64_t m;
  double theta;

  FfdSpec(std::int64_t m_, double theta_);
};

// L_m(theta) = sum_{i=1}^m 1/(theta+i-1),
// ell_m(theta) = sum_{i=1}^m (i-1)/(theta+i-1)^2.
struct AuxSums {
  double L;
  double ell;
};

AuxSums aux_sums(std::int64_t m, double theta);

// log (theta)_m = sum_{i=0}^{m-1} log(theta + i).
double log_rising_factorial(double theta, std::int64_t m);

constexpr std::int64_t kDefaultStirlingCap = 10000;

// Lower-triangular table of log s(k, x), 1 <= x <= k <= m, where s(k, x)
// is the unsigned Stirling number of the first kind (coefficient of
// theta^x in the rising factorial). Memory is O(m^2)/2 doubles; use
// for_each_stirling_log_row for large scans.
class StirlingLogTable {
 public:
  explicit StirlingLogTable(std::int64_t m, std::int64_t cap = kDefaultStirlingCap);

  std::int64_t max_m() const { return max_m_; }
  double log_value(std::int64_t k, std::int64_t x) const;
  std::span<const double> row(std::int64_t k) const;

 private:
  std::int64_t max_m_;
  std::vector<double> data_;  // row k starts at k(k-1)/2, k entries (x = 1..k)
};

inline StirlingLogTable stirling_log_table(std::int64_t m,
                                           std::int64_t cap = kDefaultStirlingCap) {
  return StirlingLogTable(m, cap);
}

// Streams rows k = 1..max_m of log s(k, .) without storing the triangle;
// row[x-1] = log s(k, x).
void for_each_stirling_log_row(
    std::int64_t max_m,
    const std::function<void(std::int64_t k, std::span<const long double>)>& fn);

struct PmfTable {
  FfdSpec spec;
  std::vector<double> log_probs;  // index x-1 holds log pr(X = x)

  double log_prob(std::int64_t x) const { return log_probs[static_cast<std::size_t>(x - 1)]; }
  double prob(std::int64_t x) const;
};

// pmf via log s(m, x) + x log theta - log (theta)_m. Requires m <= cap.
PmfTable pmf_stirling(const FfdSpec& spec, std::int64_t cap = kDefaultStirlingCap);

// pmf of 1 + sum_{j=2}^{m} Bernoulli(theta/(theta+j-1)) by sequential
// convolution in log space. No cap; cost O(m^2).
PmfTable pmf_bernoulli_dp(const FfdSpec& spec);

struct Moments {
  double mean;
  double variance;
};

// mean = theta L_m(theta), variance = theta ell_m(theta).
Moments moments(const FfdSpec& spec);

}  // namespace ffdinfo
