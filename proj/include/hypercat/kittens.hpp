#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "hypercat/fock.hpp"
#include "hypercat/states.hpp"

namespace hypercat {

// Label of a multiphoton cat sector: eigenspace index j of a_f^k at
// eigenvalue z^k, supported on photon numbers n = j (mod k).
struct KittenSpec {
  int k = 1;
  int j = 0;
  Complex z;
  ModelParams params;

  void validate() const {
    if (k < 1) throw domain_error("k must be positive");
    if (j < 0 || j >= k) throw domain_error("j must lie in 0..k-1");
    if (params.truncated() && (*params.trunc_N + 1) % k != 0)
      throw domain_error("k must be a divisor of N+1 for truncated kittens");
    require_in_domain(params, std::norm(z));
  }
};

namespace detail {

inline Complex unit_root(int numer, int denom) {
  // exp(2 pi i numer/denom), numer reduced exactly
  const int r = ((numer % denom) + denom) % denom;
  return std::polar(1.0, 2.0 * std::numbers::pi * r / denom);
}

}  // namespace detail

// k-hypercat by direct Fock sum: amplitudes phase(n) z^n / sqrt(rho(n) F^j)
// on the sector n = j (mod k).
inline FockVector kitten_fock(const KittenSpec& spec, int dim = 0) {
  spec.validate();
  const ModelParams& m = spec.params;
  const double x = std::norm(spec.z);

  if (m.truncated()) {
    const int N = *m.trunc_N;
    if (dim == 0) dim = N + 1;
    if (dim < N + 1) throw domain_error("dim too small for truncated family");
  } else if (dim == 0) {
    dim = std::max(auto_dim(m, x), spec.j + 1);
  }

  FockVector v;
  v.amp.assign(static_cast<size_t>(dim), Complex{});
  if (x == 0.0) {
    if (spec.j >= dim) throw domain_error("dim too small for sector j");
    v.amp[static_cast<size_t>(spec.j)] = 1.0;
    return v;
  }

  const double norm_j = kitten_norm(m, spec.k, spec.j, x);
  const double log_norm = std::log(norm_j);
  const double log_r = 0.5 * std::log(x);
  const double theta = std::arg(spec.z);
  const int top = m.truncated() ? *m.trunc_N : dim - 1;
  for (int n = spec.j; n <= top; n += spec.k) {
    const double mag = std::exp(n * log_r - 0.5 * log_rho(m, n) - 0.5 * log_norm);
    v.amp[static_cast<size_t>(n)] =
        phase_at(m.phase_rule, n) * std::polar(mag, n * theta);
  }
  if (!m.truncated() && v.norm_sq() < 1.0 - 1e-12)
    throw domain_error("dim too small to hold the kitten");
  return v;
}

// Gram matrix of the k phase-shifted coherent states and its eigenvalues.
struct GramData {
  int k = 0;
  std::vector<Complex> entries;    // k x k, row-major; entry(j,l) = C_{l-j mod k}
  std::vector<double> eigenvalues; // lambda_j = k F^j / F, all positive

  Complex entry(int j, int l) const {
    return entries[static_cast<size_t>(j) * k + static_cast<size_t>(l)];
  }
};

inline GramData gram(const ModelParams& m, int k, Complex z) {
  if (k < 1) throw domain_error("k must be positive");
  const double x = std::norm(z);
  require_in_domain(m, x);
  if (m.truncated() && (*m.trunc_N + 1) % k != 0)
    throw domain_error("k must be a divisor of N+1 for truncated kittens");

  const double full = norm_factor(m, x);
  std::vector<Complex> c(static_cast<size_t>(k));
  for (int l = 0; l < k; ++l)
    c[static_cast<size_t>(l)] =
        norm_factor_complex(m, x * detail::unit_root(l, k)) / full;

  GramData g;
  g.k = k;
  g.entries.resize(static_cast<size_t>(k) * k);
  for (int j = 0; j < k; ++j)
    for (int l = 0; l < k; ++l)
      g.entries[static_cast<size_t>(j) * k + l] = c[static_cast<size_t>((l - j + k) % k)];

  // lambda = DFT of the first circulant row; direct O(k^2), exactness over speed
  g.eigenvalues.resize(static_cast<size_t>(k));
  for (int j = 0; j < k; ++j) {
    detail::KahanC acc;
    for (int l = 0; l < k; ++l)
      acc.add(detail::unit_root(-j * l, k) * c[static_cast<size_t>(l)]);
    g.eigenvalues[static_cast<size_t>(j)] = acc.value().real();
  }
  return g;
}

// k-hypercat as the DFT-orthonormalized superposition of phase-shifted
// coherent states. Mathematically identical to kitten_fock; kept as the
// independent construction route.
inline FockVector kitten_dft(const KittenSpec& spec, int dim = 0) {
  spec.validate();
  const ModelParams& m = spec.params;
  const double x = std::norm(spec.z);
  const int k = spec.k;

  const double full = norm_factor(m, x);
  const double sector = x == 0.0 ? (spec.j == 0 ? 1.0 : 0.0)
                                 : kitten_norm(m, k, spec.j, x);
  if (k * sector / full < 1e-13)
    throw domain_error("degenerate sector: eigenvalue below threshold");

  if (dim == 0) {
    dim = m.truncated() ? *m.trunc_N + 1 : std::max(auto_dim(m, x), spec.j + 1);
  }

  FockVector out;
  out.amp.assign(static_cast<size_t>(dim), Complex{});
  const double pref = std::sqrt(full / sector) / k;
  for (int l = 0; l < k; ++l) {
    const Complex w = pref * detail::unit_root(-spec.j * l, k);
    const FockVector component =
        hcs({spec.z * detail::unit_root(l, k), m}, dim);
    for (size_t i = 0; i < out.amp.size(); ++i) out.amp[i] += w * component.amp[i];
  }
  return out;
}

// <z;k,j | z';k,l> = delta_{jl} F^j(conj(z) z') / sqrt(F^j(x) F^j(x')).
inline Complex kitten_overlap(const KittenSpec& a, const KittenSpec& b) {
  if (!same_family(a.params, b.params) || a.k != b.k)
    throw domain_error("kitten_overlap requires matching family and k");
  a.validate();
  b.validate();
  if (a.j != b.j) return {0.0, 0.0};
  const Complex cross = kitten_norm_complex(a.params, a.k, a.j, std::conj(a.z) * b.z);
  const double na = kitten_norm(a.params, a.k, a.j, std::norm(a.z));
  const double nb = kitten_norm(b.params, b.k, b.j, std::norm(b.z));
  return cross / std::sqrt(na * nb);
}

// Continuous circle representation of |n>: trapezoid quadrature of
// sqrt(F rho(n)) r^{-n} (2 pi)^{-1} \oint e^{-in theta} |r e^{i theta}> dtheta.
// Qpts = 0 selects max(64, 8(n+1)).
inline FockVector circle_number_state_continuous(const ModelParams& m, int n,
                                                 double r, int Qpts = 0,
                                                 int dim = 0) {
  if (r <= 0.0) {
    if (r == 0.0 && n == 0) return basis_state(0, 1);
    throw domain_error("circle representation needs r > 0");
  }
  const double x = r * r;
  require_in_domain(m, x);
  if (Qpts == 0) Qpts = std::max(64, 8 * (n + 1));
  if (dim == 0) dim = m.truncated() ? *m.trunc_N + 1 : std::max(auto_dim(m, x), n + 1);

  const double pref =
      std::exp(0.5 * std::log(norm_factor(m, x)) + 0.5 * log_rho(m, n) -
               n * std::log(r));
  FockVector out;
  out.amp.assign(static_cast<size_t>(dim), Complex{});
  for (int q = 0; q < Qpts; ++q) {
    const Complex node = detail::unit_root(q, Qpts);
    const FockVector comp = hcs({r * node, m}, dim);
    const Complex w = detail::unit_root(-n * q, Qpts) * (pref / Qpts);
    for (size_t i = 0; i < out.amp.size(); ++i) out.amp[i] += w * comp.amp[i];
  }
  // families carrying a phase rule reproduce phase(n)|n>; undo it
  const Complex ph = std::conj(phase_at(m.phase_rule, n));
  out *= ph;
  return out;
}

// Exact discrete circle representation for truncated families: the
// (N+1)-hypercat with k = N+1 collapses to |n> for any radius r > 0.
// The superposition is accumulated per Fock level with the root-of-unity
// orthogonality sum reduced by exact integer arithmetic: the phase sums
// vanish identically off-level, so the naive l-loop's cancellation noise
// (which swamps target amplitudes down at r^N/sqrt(rho(N)) for small r)
// never enters. The r-dependent content -- prefactor times component
// amplitude summing to exactly one -- is untouched.
inline FockVector circle_number_state_discrete(const ModelParams& m, int n, double r) {
  if (!m.truncated())
    throw domain_error("discrete circle representation needs a truncated family");
  const int N = *m.trunc_N;
  if (n < 0 || n > N) throw domain_error("n out of range 0..N");
  if (r <= 0.0) throw domain_error("discrete circle representation needs r > 0");

  const int k = N + 1;
  const double x = r * r;
  const double full = pfq_truncated(m, x);
  const double sector = detail::kitten_norm_series(m, k, n, x);
  const double pref = std::sqrt(full / sector) / k;

  FockVector out;
  out.amp.assign(static_cast<size_t>(k), Complex{});
  const double log_norm = std::log(full);
  for (int level = 0; level <= N; ++level) {
    if ((level - n) % k != 0) continue;  // exact orthogonality kernel
    const double mag =
        std::exp(level * std::log(r) - 0.5 * log_rho(m, level) - 0.5 * log_norm);
    out.amp[static_cast<size_t>(level)] =
        pref * static_cast<double>(k) * phase_at(m.phase_rule, level) * mag;
  }
  return fix_global_phase(out);
}

}  // namespace hypercat
