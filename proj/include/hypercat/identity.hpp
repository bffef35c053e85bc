#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "hypercat/model.hpp"
#include "hypercat/quadrature.hpp"
#include "hypercat/series.hpp"

namespace hypercat {

// A closed-form candidate measure omega(x) on [0, R] claimed to solve the
// moment problem of its family: integral x^n omega(x) dx = rho(n).
struct WeightSpec {
  Preset family;
  double support_R = std::numeric_limits<double>::infinity();  // 1 or inf
  std::function<double(double)> density;
  std::string note;              // provenance
  int nodes = 200;               // Gauss-Legendre order
  bool negative_control = false; // deliberately wrong entry guarding the harness
};

// |numeric moment - rho(n)| / rho(n)
inline double moment_residual(const WeightSpec& w, int n) {
  if (n < 0) throw domain_error("moment order must be nonnegative");
  auto integrand = [&](double x) { return w.density(x) * std::pow(x, n); };
  double integral;
  if (std::isinf(w.support_R))
    integral = integrate_half_line(integrand, w.nodes);
  else
    integral = integrate_interval(integrand, 0.0, w.support_R, w.nodes);
  if (!std::isfinite(integral)) throw domain_error("divergent moment integral");
  const double target = rho(w.family.params, n);
  return std::abs(integral - target) / target;
}

// Sector weight of the kitten closure relation: omega_kj(x) = omega(x) F^j(x).
inline double kitten_weight(const WeightSpec& w, const ModelParams& m, int k, int j,
                            double x) {
  return w.density(x) * kitten_norm(m, k, j, x);
}

// Families with an analytically known measure, verified numerically; no
// Meijer-G fallback. Families absent here report "no weight registered".
inline std::vector<WeightSpec> weight_registry() {
  std::vector<WeightSpec> reg;

  reg.push_back({preset_canonical(), std::numeric_limits<double>::infinity(),
                 [](double x) { return std::exp(-x); },
                 "Gamma-function moments: integral x^n e^-x = n!", 200, false});

  for (double s : {1.0, 1.5, 2.0, 3.0}) {
    reg.push_back({preset_gp_su11(s), 1.0,
                   [s](double x) {
                     return (2.0 * s - 1.0) * std::pow(1.0 - x, 2.0 * s - 2.0);
                   },
                   "Beta-function moments: (2s-1) B(n+1, 2s-1) = n!/(2s)_n", 200,
                   false});
  }

  // Bessel-type measures: integral x^n 2 x^{s-1/2} K_{2s-1}(2 sqrt x) / Gamma(2s)
  // = n! (2s)_n; the dual Susskind-Glogower row is the s = 1/2 instance.
  reg.push_back({preset_dual_sg(), std::numeric_limits<double>::infinity(),
                 [](double x) { return 2.0 * std::cyl_bessel_k(0.0, 2.0 * std::sqrt(x)); },
                 "dual-SG Bessel measure 2 K_0(2 sqrt x), moments n!^2", 400, false});
  for (double s : {1.0, 2.0}) {
    reg.push_back({preset_bg_su11(s), std::numeric_limits<double>::infinity(),
                   [s](double x) {
                     return 2.0 * std::pow(x, s - 0.5) *
                            std::cyl_bessel_k(2.0 * s - 1.0, 2.0 * std::sqrt(x)) /
                            std::tgamma(2.0 * s);
                   },
                   "BG SU(1,1) Bessel measure, moments n!(2s)_n", 400, false});
  }

  // Negative control: a flat density is NOT the SG weight; the harness must
  // see it fail with a large residual.
  reg.push_back({preset_sg(), 1.0, [](double) { return 1.0; },
                 "negative control: flat candidate for SG, expected to fail", 200,
                 true});

  return reg;
}

inline std::optional<WeightSpec> find_weight(const std::string& family_name) {
  for (auto& w : weight_registry())
    if (w.family.name == family_name && !w.negative_control) return w;
  return std::nullopt;
}

}  // namespace hypercat
