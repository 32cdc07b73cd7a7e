#pragma once

#include <cstdint>

namespace ffdinfo {

// psi(x) for x > 0; recurrence shift below 8, Bernoulli series above.
double digamma(double x);

// psi'(x) for x > 0.
double trigamma(double x);

// psi(theta + m) - psi(theta), evaluated without cancellation when
// m << theta (the plain difference loses all digits there).
double digamma_diff(double theta, double m);

// psi'(theta) - psi'(theta + m), same contract.
double trigamma_diff(double theta, double m);

// sum_{i=1}^{m} (i-1)/(theta+i-1)^2 assembled from the asymptotic series
// without forming the cancelling difference L - theta*S2. Requires
// m/theta < 0.25 and theta >= 8.
double ell_series_large_theta(double theta, double m);

// Standard normal CDF.
double normal_cdf(double x);

// Regularized upper incomplete gamma Q(a, x); used for chi-square
// tail probabilities.
double gamma_q(double a, double x);

}  // namespace ffdinfo
