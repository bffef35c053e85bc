#pragma once

// Test-only oracles. Everything here is computed independently of the
// library's evaluation paths (lgamma products and fixed-length naive sums,
// no term-ratio recursions), so agreement is a two-route check.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace oracle {

inline double rho_lgamma(const std::vector<double>& alpha,
                         const std::vector<double>& beta, int n) {
  double lr = std::lgamma(n + 1.0);
  for (double b : beta) lr += std::lgamma(b + n) - std::lgamma(b);
  for (double a : alpha) lr -= std::lgamma(a + n) - std::lgamma(a);
  return std::exp(lr);
}

// sum_{nu} x^{nu k + j} / rho(nu k + j), fixed number of addends
inline double sector_series(const std::vector<double>& alpha,
                            const std::vector<double>& beta, int k, int j,
                            double x, int terms = 600) {
  double s = 0.0;
  for (int nu = terms - 1; nu >= 0; --nu) {
    const int n = nu * k + j;
    s += std::pow(x, n) / rho_lgamma(alpha, beta, n);
  }
  return s;
}

inline std::complex<double> full_series_complex(const std::vector<double>& alpha,
                                                const std::vector<double>& beta,
                                                std::complex<double> w,
                                                int terms = 400) {
  std::complex<double> s = 0.0;
  for (int n = terms - 1; n >= 0; --n)
    s += std::pow(w, n) / rho_lgamma(alpha, beta, n);
  return s;
}

}  // namespace oracle
