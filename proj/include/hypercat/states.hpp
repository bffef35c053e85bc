#pragma once

#include <cmath>
#include <complex>

#include "hypercat/fock.hpp"
#include "hypercat/model.hpp"
#include "hypercat/series.hpp"

namespace hypercat {

// A coherent-state label z within a family.
struct CoherentLabel {
  Complex z;
  ModelParams params;
};

namespace detail {

// Ladder coefficient A(m) with a_f|m> = A(m)|m-1>. Untruncated families use
// the positive branch sqrt(m) f(m); truncated ones absorb the preset phase
// convention so the truncated state stays an almost-eigenstate with
// eigenvalue +z (the branch the residual bound is proved for).
inline Complex ladder_coefficient(const ModelParams& m, int level) {
  const double mag = std::sqrt(static_cast<double>(level)) * f_factor(m, level);
  const Complex ph =
      phase_at(m.phase_rule, level - 1) * std::conj(phase_at(m.phase_rule, level));
  return ph * mag;
}

}  // namespace detail

// Smallest dim holding all but a 1e-24 fraction of the normalization mass,
// so amplitudes are accurate to ~1e-12 after the square root.
inline int auto_dim(const ModelParams& m, double x) {
  if (m.truncated()) return *m.trunc_N + 1;
  if (x == 0.0) return 1;
  require_in_domain(m, x);
  const double target_log = std::log(1e-24 * pfq(m, x));
  const int cap = series_max_terms();
  double log_t = 0.0;  // log of x^n / rho(n)
  for (int n = 0; n < cap; ++n) {
    double ratio = x / (n + 1.0);
    for (double a : m.alpha) ratio *= a + n;
    for (double b : m.beta) ratio /= b + n;
    const double log_next = log_t + std::log(ratio);
    if (ratio < 1.0 && log_next - std::log1p(-ratio) < target_log) return n + 1;
    log_t = log_next;
  }
  throw domain_error("could not bound the amplitude tail");
}

namespace detail {

// Amplitudes phase(n) z^n / sqrt(N rho(n)) up to dim, no adequacy check.
// Callers that only need overlaps against shorter vectors (Husimi grids) use
// this truncated view directly.
inline FockVector hcs_view(const CoherentLabel& label, int dim) {
  const ModelParams& m = label.params;
  const double x = std::norm(label.z);
  FockVector v;
  v.amp.assign(static_cast<size_t>(dim), Complex{});
  if (x == 0.0) {
    v.amp[0] = 1.0;
    return v;
  }
  const double log_norm = std::log(norm_factor(m, x));
  const double log_r = 0.5 * std::log(x);
  const double theta = std::arg(label.z);
  const int top = m.truncated() ? std::min(*m.trunc_N, dim - 1) : dim - 1;
  for (int n = 0; n <= top; ++n) {
    const double mag = std::exp(n * log_r - 0.5 * log_rho(m, n) - 0.5 * log_norm);
    v.amp[static_cast<size_t>(n)] =
        phase_at(m.phase_rule, n) * std::polar(mag, n * theta);
  }
  return v;
}

}  // namespace detail

// |z; alpha, beta>: amplitudes phase(n) z^n / sqrt(N rho(n)). dim = 0 selects
// automatically; explicit dims must hold 1 - 1e-12 of the norm.
inline FockVector hcs(const CoherentLabel& label, int dim = 0) {
  const ModelParams& m = label.params;
  const double x = std::norm(label.z);
  require_in_domain(m, x);

  if (m.truncated()) {
    const int N = *m.trunc_N;
    if (dim == 0) dim = N + 1;
    if (dim < N + 1) throw domain_error("dim too small for truncated family");
  } else if (dim == 0) {
    dim = auto_dim(m, x);
  }

  FockVector v = detail::hcs_view(label, dim);
  if (!m.truncated() && v.norm_sq() < 1.0 - 1e-12)
    throw domain_error("dim too small to hold the state");
  return v;
}

// Closed-form overlap <z|z'> = F(conj(z) z') / sqrt(F(|z|^2) F(|z'|^2)).
inline Complex overlap(const CoherentLabel& a, const CoherentLabel& b) {
  if (!same_family(a.params, b.params))
    throw domain_error("overlap requires labels from the same family");
  const double xa = std::norm(a.z), xb = std::norm(b.z);
  require_in_domain(a.params, xa);
  require_in_domain(a.params, xb);
  const Complex cross = norm_factor_complex(a.params, std::conj(a.z) * b.z);
  return cross / std::sqrt(norm_factor(a.params, xa) * norm_factor(a.params, xb));
}

// a_f = a f(n): amp'_n = A(n+1) amp_{n+1}; not renormalized.
inline FockVector annihilate_f(const ModelParams& m, const FockVector& state) {
  FockVector out;
  out.amp.assign(state.amp.size(), Complex{});
  const int top = m.truncated()
                      ? std::min(state.dim() - 1, *m.trunc_N)
                      : state.dim() - 1;
  for (int n = 1; n <= top; ++n)
    out.amp[static_cast<size_t>(n - 1)] =
        detail::ladder_coefficient(m, n) * state.amp[static_cast<size_t>(n)];
  return out;
}

// Adjoint ladder: amp'_{n+1} = conj(A(n+1)) amp_n. Output grows by one level
// so no amplitude is lost; truncated families stop at N (a zero of f for
// beta-type truncation, a pole for alpha-type, which is flagged).
inline FockVector create_f(const ModelParams& m, const FockVector& state) {
  const int d = state.dim();
  if (m.truncated()) {
    const int N = *m.trunc_N;
    FockVector out;
    out.amp.assign(static_cast<size_t>(N + 1), Complex{});
    for (int n = 0; n < std::min(d, N + 1); ++n) {
      const Complex a = state.amp[static_cast<size_t>(n)];
      if (a == Complex{}) continue;
      if (n == N) {
        // f(N+1) = 0 when a beta entry truncates; an alpha pole is an error
        double den = 1.0;
        for (double al : m.alpha) den *= std::abs(al + N);
        if (den == 0.0)
          throw family_error("create_f pole above truncation order");
        continue;
      }
      out.amp[static_cast<size_t>(n + 1)] =
          std::conj(detail::ladder_coefficient(m, n + 1)) * a;
    }
    return out;
  }
  FockVector out;
  out.amp.assign(static_cast<size_t>(d + 1), Complex{});
  for (int n = 0; n < d; ++n)
    out.amp[static_cast<size_t>(n + 1)] =
        std::conj(detail::ladder_coefficient(m, n + 1)) * state.amp[static_cast<size_t>(n)];
  return out;
}

struct EigenResidual {
  double residual;  // || a_f |z;f> - z |z;f> ||, closed form of the proof
  double bound;     // sqrt( |z|^{2(N+1)} / (N!)^{q-p+1} )
};

// Almost-eigenstate residual of a truncated family; covers k_power = 1 only.
inline EigenResidual eigen_residual(const CoherentLabel& label, int k_power = 1) {
  const ModelParams& m = label.params;
  if (k_power != 1)
    throw domain_error("the residual bound covers k_power = 1 only");
  if (!m.truncated())
    throw domain_error("eigen_residual applies to truncated families");
  const int N = *m.trunc_N;
  const int qp = m.q() - m.p();
  const double x = std::norm(label.z);
  if (!(qp + 1 > 0 || (qp + 1 == 0 && x < 1.0)))
    throw domain_error("bound requires q > p-1, or q = p-1 with |z| < 1");

  if (x == 0.0) return {0.0, 0.0};
  const double nf = pfq_truncated(m, x);
  const double log_res_sq = (N + 1) * std::log(x) - log_rho(m, N) - std::log(nf);
  const double log_bound_sq =
      (N + 1) * std::log(x) - (qp + 1) * std::lgamma(N + 1.0);
  return {std::exp(0.5 * log_res_sq), std::exp(0.5 * log_bound_sq)};
}

}  // namespace hypercat
