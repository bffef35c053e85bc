#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "hypercat/series.hpp"

namespace hypercat {

using Complex = std::complex<double>;

// Finite complex amplitude vector over number states; index = photon number.
struct FockVector {
  std::vector<Complex> amp;

  int dim() const { return static_cast<int>(amp.size()); }

  double norm_sq() const {
    detail::Kahan acc;
    for (const Complex& a : amp) acc.add(std::norm(a));
    return acc.value();
  }
  double norm() const { return std::sqrt(norm_sq()); }

  FockVector& operator*=(Complex c) {
    for (Complex& a : amp) a *= c;
    return *this;
  }
};

inline FockVector basis_state(int n, int dim) {
  FockVector v;
  v.amp.assign(static_cast<size_t>(dim), Complex{0.0, 0.0});
  v.amp[static_cast<size_t>(n)] = 1.0;
  return v;
}

// <a|b>, compensated; vectors of unequal dim are padded with zeros.
inline Complex inner(const FockVector& a, const FockVector& b) {
  detail::KahanC acc;
  const size_t n = std::min(a.amp.size(), b.amp.size());
  for (size_t i = 0; i < n; ++i) acc.add(std::conj(a.amp[i]) * b.amp[i]);
  return acc.value();
}

inline double distance(const FockVector& a, const FockVector& b) {
  detail::Kahan acc;
  const size_t n = std::max(a.amp.size(), b.amp.size());
  for (size_t i = 0; i < n; ++i) {
    const Complex va = i < a.amp.size() ? a.amp[i] : Complex{};
    const Complex vb = i < b.amp.size() ? b.amp[i] : Complex{};
    acc.add(std::norm(va - vb));
  }
  return std::sqrt(acc.value());
}

// Global-phase gauge: rotate so the first amplitude carrying weight is
// positive-real. Comparisons of states defined only up to phase use this.
inline FockVector& fix_global_phase(FockVector& v) {
  const double scale = v.norm();
  for (const Complex& a : v.amp) {
    if (std::abs(a) > 1e-13 * scale) {
      Complex u = std::conj(a) / std::abs(a);
      v *= u;
      return v;
    }
  }
  return v;
}

}  // namespace hypercat
