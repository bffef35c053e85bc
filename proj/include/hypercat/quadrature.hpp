#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>
#include <vector>

namespace hypercat {

struct GaussLegendre {
  std::vector<double> nodes;    // on (-1, 1)
  std::vector<double> weights;
};

// Nodes by Newton iteration on P_n with the Bonnet recurrence; cached per n.
inline const GaussLegendre& gauss_legendre(int n) {
  static std::map<int, GaussLegendre> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  GaussLegendre g;
  g.nodes.resize(static_cast<size_t>(n));
  g.weights.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int m = 2; m <= n; ++m) {
        double p2 = ((2.0 * m - 1.0) * x * p1 - (m - 1.0) * p0) / m;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    g.nodes[static_cast<size_t>(i)] = x;
    g.weights[static_cast<size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return cache.emplace(n, std::move(g)).first->second;
}

template <typename Fn>
double integrate_interval(Fn f, double a, double b, int n) {
  const GaussLegendre& g = gauss_legendre(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (size_t i = 0; i < g.nodes.size(); ++i)
    s += g.weights[i] * f(mid + half * g.nodes[i]);
  return s * half;
}

// [0, inf) via x = v^4 over unit panels in v. The quartic map damps the
// log singularity of Bessel-type kernels at the origin (the u/(1-u) map
// leaves it in place and stalls near 1e-6 accuracy); panels stop once their
// contribution is negligible. n is the per-panel Gauss-Legendre order.
template <typename Fn>
double integrate_half_line(Fn f, int n) {
  const int order = std::min(n, 64);
  double total = 0.0;
  for (double lo = 0.0; lo < 30.0; lo += 1.0) {
    const double part = integrate_interval(
        [&](double v) {
          const double v3 = v * v * v;
          return 4.0 * v3 * f(v3 * v);
        },
        lo, lo + 1.0, order);
    total += part;
    if (lo > 4.0 && std::abs(part) < 1e-17 * std::abs(total)) break;
  }
  return total;
}

}  // namespace hypercat
