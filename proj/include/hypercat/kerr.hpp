#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

#include "hypercat/kittens.hpp"
#include "hypercat/quadrature.hpp"
#include "hypercat/states.hpp"

namespace hypercat {

// Kerr phase schedule phi_n = Omega t n^kappa. At rational fractions of the
// revival time tau = 2 pi / Omega the phases are computed with exact integer
// modular arithmetic; generic times fall back to the double route.
struct KerrParams {
  int kappa = 2;
  // t / tau as a reduced fraction (a, k); set for fractional-revival runs
  std::optional<std::pair<long long, long long>> revival_fraction;
  double omega_t = 0.0;  // Omega * t, used when no fraction is given

  static KerrParams fraction(long long a, long long k, int kappa = 2) {
    KerrParams kp;
    kp.kappa = kappa;
    kp.revival_fraction = {a, k};
    return kp;
  }
};

namespace detail {

inline long long pow_mod(long long base, int exp, long long mod) {
  base %= mod;
  if (base < 0) base += mod;
  long long r = 1 % mod;
  for (int e = 0; e < exp; ++e) r = (r * base) % mod;
  return r;
}

inline Complex kerr_phase(const KerrParams& kp, int n) {
  if (kp.revival_fraction) {
    const auto [a, k] = *kp.revival_fraction;
    const long long residue = (a % k * pow_mod(n, kp.kappa, k)) % k;
    return std::polar(1.0, -2.0 * std::numbers::pi * residue / k);
  }
  return std::polar(1.0, -kp.omega_t * std::pow(static_cast<double>(n),
                                                static_cast<double>(kp.kappa)));
}

}  // namespace detail

// Diagonal unitary e^{-i Omega t n^kappa} applied to a coherent state.
inline FockVector kerr_evolve(const CoherentLabel& label, const KerrParams& kp,
                              int dim = 0) {
  if (kp.kappa < 1) throw domain_error("kappa must be >= 1");
  FockVector v = hcs(label, dim);
  for (int n = 0; n < v.dim(); ++n)
    v.amp[static_cast<size_t>(n)] *= detail::kerr_phase(kp, n);
  return v;
}

// Coefficients of the evolved state at t = tau/k on the k-hypercat basis:
// c_j = sqrt(F^j / F) e^{-2 pi i j^2 / k}   (kappa = 2).
inline std::vector<Complex> kitten_decomposition(const CoherentLabel& label, int k) {
  if (k < 1) throw domain_error("k must be positive");
  const double x = std::norm(label.z);
  require_in_domain(label.params, x);
  const double full = norm_factor(label.params, x);
  std::vector<Complex> c(static_cast<size_t>(k));
  for (int j = 0; j < k; ++j) {
    const double fj = x == 0.0 ? (j == 0 ? 1.0 : 0.0)
                               : kitten_norm(label.params, k, j, x);
    c[static_cast<size_t>(j)] =
        std::sqrt(fj / full) * detail::unit_root(-(j * j), k);
  }
  return c;
}

// Component count of the kappa = 2 fractional revival at t = tau/k.
struct ComponentLayout {
  int m = 1;
  double rotation_offset = 0.0;
  enum class Case { odd, mult4, even_not4 } case_tag = Case::odd;
};

inline ComponentLayout component_layout(int k) {
  if (k < 1) throw domain_error("k must be positive");
  ComponentLayout c;
  if (k % 2 == 1) {
    c.m = k;
    c.rotation_offset = 0.0;
    c.case_tag = ComponentLayout::Case::odd;
  } else if (k % 4 == 0) {
    c.m = k / 2;
    c.rotation_offset = 0.0;
    c.case_tag = ComponentLayout::Case::mult4;
  } else {
    c.m = k / 2;
    c.rotation_offset = 2.0 * std::numbers::pi / k;
    c.case_tag = ComponentLayout::Case::even_not4;
  }
  return c;
}

// Weights of the evolved state on the circle states |z0 e^{2 pi i l / k}>:
// w_l = (1/k) sum_j e^{-2 pi i j (j + l) / k}  (a Gauss sum).
inline std::vector<Complex> circle_superposition_form(const CoherentLabel& label,
                                                      int k) {
  if (k < 1) throw domain_error("k must be positive");
  require_in_domain(label.params, std::norm(label.z));
  std::vector<Complex> w(static_cast<size_t>(k));
  for (int l = 0; l < k; ++l) {
    detail::KahanC acc;
    for (int j = 0; j < k; ++j) acc.add(detail::unit_root(-(j * (j + l)), k));
    w[static_cast<size_t>(l)] = acc.value() / static_cast<double>(k);
  }
  return w;
}

// Rectangular phase-space window with per-cell Husimi values; cells outside
// a disk family's domain hold NaN and serialize as empty fields.
struct HusimiGrid {
  double x_min = 0, x_max = 0, y_min = 0, y_max = 0;
  int nx = 0, ny = 0;
  std::vector<double> values;  // row-major over (iy, ix)

  double cell_x(int ix) const {
    return nx == 1 ? x_min : x_min + (x_max - x_min) * ix / (nx - 1);
  }
  double cell_y(int iy) const {
    return ny == 1 ? y_min : y_min + (y_max - y_min) * iy / (ny - 1);
  }
  double& at(int iy, int ix) { return values[static_cast<size_t>(iy) * nx + ix]; }
  double at(int iy, int ix) const {
    return values[static_cast<size_t>(iy) * nx + ix];
  }
};

struct GridSpec {
  double x_min = -3.5, x_max = 3.5, y_min = -3.5, y_max = 3.5;
  int nx = 281, ny = 281;
};

// Q_psi(z) = |<psi | z; alpha, beta>|^2 via Fock inner products.
inline HusimiGrid husimi(const FockVector& state, const ModelParams& m,
                         const GridSpec& spec) {
  HusimiGrid g;
  g.x_min = spec.x_min;
  g.x_max = spec.x_max;
  g.y_min = spec.y_min;
  g.y_max = spec.y_max;
  g.nx = spec.nx;
  g.ny = spec.ny;
  g.values.assign(static_cast<size_t>(spec.nx) * spec.ny,
                  std::numeric_limits<double>::quiet_NaN());
  const auto dom = convergence_domain(m);
  for (int iy = 0; iy < spec.ny; ++iy) {
    for (int ix = 0; ix < spec.nx; ++ix) {
      const Complex z{g.cell_x(ix), g.cell_y(iy)};
      if (!dom.admits(std::norm(z))) continue;
      const FockVector cs = detail::hcs_view({z, m}, state.dim());
      g.at(iy, ix) = std::norm(inner(state, cs));
    }
  }
  return g;
}

// Same quantity for a circle superposition sum_l w_l |z0 e^{2 pi i l/k}>,
// through the closed-form overlap. A deterministic 1% of cells is
// spot-checked against the Fock route.
inline HusimiGrid husimi_circle(const ModelParams& m, Complex z0,
                                const std::vector<Complex>& weights,
                                const GridSpec& spec, double spot_tol = 1e-8) {
  const int k = static_cast<int>(weights.size());
  const double x0 = std::norm(z0);
  require_in_domain(m, x0);
  const double f0 = norm_factor(m, x0);

  HusimiGrid g;
  g.x_min = spec.x_min;
  g.x_max = spec.x_max;
  g.y_min = spec.y_min;
  g.y_max = spec.y_max;
  g.nx = spec.nx;
  g.ny = spec.ny;
  g.values.assign(static_cast<size_t>(spec.nx) * spec.ny,
                  std::numeric_limits<double>::quiet_NaN());
  const auto dom = convergence_domain(m);

  std::vector<Complex> conj_z(static_cast<size_t>(k));
  for (int l = 0; l < k; ++l)
    conj_z[static_cast<size_t>(l)] = std::conj(z0 * detail::unit_root(l, k));

  FockVector state_for_spots;
  const size_t spot_stride = 101;  // ~1% of cells, scattered across rows

  for (int iy = 0; iy < spec.ny; ++iy) {
    for (int ix = 0; ix < spec.nx; ++ix) {
      const Complex z{g.cell_x(ix), g.cell_y(iy)};
      const double xz = std::norm(z);
      if (!dom.admits(xz)) continue;
      detail::KahanC acc;
      for (int l = 0; l < k; ++l)
        acc.add(std::conj(weights[static_cast<size_t>(l)]) *
                norm_factor_complex(m, conj_z[static_cast<size_t>(l)] * z));
      const Complex amp = acc.value() / std::sqrt(f0 * norm_factor(m, xz));
      const double q = std::norm(amp);
      g.at(iy, ix) = q;

      const size_t idx = static_cast<size_t>(iy) * spec.nx + ix;
      if (idx % spot_stride == 0) {
        if (state_for_spots.dim() == 0) {
          state_for_spots.amp.assign(static_cast<size_t>(auto_dim(m, x0)), Complex{});
          for (int l = 0; l < k; ++l) {
            const FockVector comp =
                hcs({z0 * detail::unit_root(l, k), m}, state_for_spots.dim());
            for (size_t i = 0; i < state_for_spots.amp.size(); ++i)
              state_for_spots.amp[i] += weights[static_cast<size_t>(l)] * comp.amp[i];
          }
        }
        const FockVector cs = detail::hcs_view({z, m}, state_for_spots.dim());
        const double q_fock = std::norm(inner(state_for_spots, cs));
        if (std::abs(q - q_fock) > spot_tol)
          throw domain_error("husimi closed-form/Fock spot check failed");
      }
    }
  }
  return g;
}

// Width of the confluent-family amplitude profile f(x) ~ 1F1(a, b; x^2)^{-1/2}
// on the line; sigma^2 is its normalized second moment. Panels of fixed
// Gauss-Legendre order are appended until the tail is negligible.
inline double width_sigma(double a, double b) {
  const ModelParams m = ModelParams::make({a}, {b});
  auto profile = [&](double x) {
    return 1.0 / std::sqrt(detail::pfq_series(m, x * x));
  };
  const int order = 64;
  double norm = 0.0, second = 0.0;
  double lo = 0.0;
  for (int panel = 0; panel < 400; ++panel) {
    const double hi = lo + 1.0;
    const double dn = integrate_interval(profile, lo, hi, order);
    const double ds = integrate_interval(
        [&](double x) { return x * x * profile(x); }, lo, hi, order);
    norm += dn;
    second += ds;
    lo = hi;
    if (panel > 3 && dn < 1e-12 * norm && ds < 1e-12 * second) {
      return std::sqrt(second / norm);
    }
  }
  throw domain_error("width integrals did not settle");
}

// m <= 2 pi r / (3 sigma), at least one component.
inline int max_distinguishable(double r, double sigma) {
  if (r <= 0.0 || sigma <= 0.0) throw domain_error("r and sigma must be positive");
  const int m = static_cast<int>(std::floor(2.0 * std::numbers::pi * r / (3.0 * sigma)));
  return std::max(1, m);
}

}  // namespace hypercat
