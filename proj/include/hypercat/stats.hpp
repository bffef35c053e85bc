#pragma once

#include <cmath>
#include <string>

#include "hypercat/kittens.hpp"
#include "hypercat/series.hpp"

namespace hypercat {

enum class Classification { sub, poisson, super };

inline const char* to_string(Classification c) {
  switch (c) {
    case Classification::sub: return "sub";
    case Classification::poisson: return "poisson";
    default: return "super";
  }
}

struct StatReport {
  double mean_n = 0.0;
  double std_n = 0.0;
  double mandel_q = 0.0;
  double fano = 1.0;
  Classification classification = Classification::poisson;
};

namespace detail {

inline Classification classify(double q) {
  if (std::abs(q) < 1e-12) return Classification::poisson;
  return q < 0.0 ? Classification::sub : Classification::super;
}

inline StatReport report_from(double mean, double variance) {
  StatReport r;
  r.mean_n = mean;
  r.std_n = std::sqrt(std::max(variance, 0.0));
  if (mean == 0.0 && variance == 0.0) {
    r.mandel_q = 0.0;  // vacuum-limit convention
  } else {
    r.mandel_q = (variance - mean) / mean;
  }
  r.fano = r.mandel_q + 1.0;
  r.classification = classify(r.mandel_q);
  return r;
}

// Sector weights w_m = x^m / |rho(m)| on m = j, j+k, ...; accumulates any
// function of the level in one pass. The tail past the break point is bounded
// geometrically (step ratio decreasing once past the weight peak).
template <typename Fn>
double sector_sum(const ModelParams& m, int k, int j, double x, Fn value) {
  Kahan acc;
  const int N = m.truncated() ? *m.trunc_N : -1;
  if (m.truncated() && j > N) return 0.0;
  double w = (j == 0) ? 1.0 : std::exp(j * std::log(x) - log_rho(m, j));
  acc.add(w * value(j));
  const int cap = series_max_terms();
  for (int level = j + k; m.truncated() ? level <= N : level < cap; level += k) {
    double step = 1.0;
    for (int i = level - k + 1; i <= level; ++i)
      step *= x / (i * f_squared_abs(m, i));
    w *= step;
    acc.add(w * value(level));
    if (!m.truncated() && level > x && step < 1.0) {
      const double tail =
          w * step * (level + k) * (level + k) / (1.0 - step);
      if (tail < 1e-17 * std::abs(acc.value())) break;
    }
  }
  return acc.value();
}

}  // namespace detail

// Photon number distribution of a k-hypercat at level m.
inline double photon_pdf(const KittenSpec& spec, int m) {
  spec.validate();
  if (m < 0 || m % spec.k != spec.j) return 0.0;
  const ModelParams& p = spec.params;
  if (p.truncated() && m > *p.trunc_N) return 0.0;
  const double x = std::norm(spec.z);
  if (x == 0.0) return m == spec.j ? 1.0 : 0.0;
  const double fj = kitten_norm(p, spec.k, spec.j, x);
  return std::exp(m * std::log(x) - log_rho(p, m)) / fj;
}

// True photon-number mean of the sector state, by series moments.
inline double mean_n(const ModelParams& m, int k, int j, double x) {
  if (x < 0.0) throw domain_error("x must be nonnegative");
  if (k < 1 || j < 0 || j >= k) throw domain_error("invalid (k, j)");
  require_in_domain(m, x);
  if (x == 0.0) return static_cast<double>(j);
  const double s0 = detail::sector_sum(m, k, j, x, [](int) { return 1.0; });
  const double s1 =
      detail::sector_sum(m, k, j, x, [](int lvl) { return static_cast<double>(lvl); });
  return s1 / s0;
}

// Photon-number standard deviation; centered second moment for stability.
inline double std_n(const ModelParams& m, int k, int j, double x) {
  if (x < 0.0) throw domain_error("x must be nonnegative");
  if (k < 1 || j < 0 || j >= k) throw domain_error("invalid (k, j)");
  require_in_domain(m, x);
  if (x == 0.0) return 0.0;
  const double mu = mean_n(m, k, j, x);
  const double s0 = detail::sector_sum(m, k, j, x, [](int) { return 1.0; });
  const double s2c = detail::sector_sum(
      m, k, j, x, [mu](int lvl) { return (lvl - mu) * (lvl - mu); });
  return std::sqrt(std::max(s2c / s0, 0.0));
}

// Mandel parameter of the k-hypercat; x = 0 is the analytic limit
// Q(k,0;0) = k-1, Q(k,j!=0;0) = -1.
inline StatReport mandel(const ModelParams& m, int k, int j, double x) {
  if (x < 0.0) throw domain_error("x must be nonnegative");
  if (k < 1 || j < 0 || j >= k) throw domain_error("invalid (k, j)");
  require_in_domain(m, x);
  StatReport r;
  if (x == 0.0) {
    r.mean_n = static_cast<double>(j);
    r.std_n = 0.0;
    const bool second_level = !m.truncated() || j + k <= *m.trunc_N;
    if (!second_level)
      r.mandel_q = j == 0 ? 0.0 : -1.0;  // lone number state in the sector
    else
      r.mandel_q = j == 0 ? static_cast<double>(k - 1) : -1.0;
    r.fano = r.mandel_q + 1.0;
    r.classification = detail::classify(r.mandel_q);
    return r;
  }
  const double mu = mean_n(m, k, j, x);
  const double s0 = detail::sector_sum(m, k, j, x, [](int) { return 1.0; });
  const double s2c = detail::sector_sum(
      m, k, j, x, [mu](int lvl) { return (lvl - mu) * (lvl - mu); });
  return detail::report_from(mu, s2c / s0);
}

// Appendix-style statistics of the deformed number operator n_f = a_f^+ a_f,
// where the mod-k sector ratio identities are exact:
//   <n_f>   = x F^{j-1}/F^j,   <a_f^+2 a_f^2> = x^2 F^{j-2}/F^j,
//   Q_f     = x (F^{j-2}/F^{j-1} - F^{j-1}/F^j).
inline StatReport mandel_nf(const ModelParams& m, int k, int j, double x) {
  if (k < 3) throw domain_error("n_f statistics are defined for k >= 3");
  if (j < 0 || j >= k) throw domain_error("invalid (k, j)");
  if (x < 0.0) throw domain_error("x must be nonnegative");
  if (m.truncated())
    throw family_error("n_f sector identities hold for untruncated families");
  require_in_domain(m, x);

  double e1, e2;  // <n_f>, <a_f^+2 a_f^2>
  if (x == 0.0) {
    e1 = j >= 1 ? j * detail::f_squared_abs(m, j) : 0.0;
    e2 = j >= 2 ? j * (j - 1) * detail::f_squared_abs(m, j) *
                      detail::f_squared_abs(m, j - 1)
                : 0.0;
    StatReport r;
    r.mean_n = e1;
    const double e2_over_e1 =
        j >= 2 ? (j - 1) * detail::f_squared_abs(m, j - 1)
               : (j == 0 ? (k - 1) * detail::f_squared_abs(m, k - 1) : 0.0);
    r.mandel_q = e2_over_e1 - e1;
    r.std_n = std::sqrt(std::max(e2 + e1 - e1 * e1, 0.0));
    r.fano = r.mandel_q + 1.0;
    r.classification = detail::classify(r.mandel_q);
    return r;
  }

  const double fj = kitten_norm(m, k, j, x);
  const double fjm1 = kitten_norm(m, k, ((j - 1) % k + k) % k, x);
  const double fjm2 = kitten_norm(m, k, ((j - 2) % k + k) % k, x);
  e1 = x * fjm1 / fj;
  e2 = x * x * fjm2 / fj;
  StatReport r;
  r.mean_n = e1;
  r.std_n = std::sqrt(std::max(e2 + e1 - e1 * e1, 0.0));
  r.mandel_q = e2 / e1 - e1;
  r.fano = r.mandel_q + 1.0;
  r.classification = detail::classify(r.mandel_q);
  return r;
}

namespace detail {

// Symbol Pi(x) = T(x)/F(x) of the projector onto the first k number states,
// T the head of the normalization series. The inflection condition is
// evaluated in Wronskian form: with W = T'F - TF' (head-tail cross terms
// only, so no O(1) cancellation against an O(x^k) result),
//   Pi'' = 0  <=>  W'(x) F(x) - 2 W(x) F'(x) = 0.
// With head sums T_r = sum_{a<k} a^r x^a/rho(a) and tail sums
// A_r = sum_{b>=k} b^r x^b/rho(b):
//   x W    = T1 A0 - T0 A1,
//   x^2 W' = (T2 - T1) A0 + T0 (A1 - A2).
struct ProjectorSymbol {
  const ModelParams& m;
  int k;

  // curvature sign proxy: x^2 (W'F - 2WF'), same zeros as Pi'' for x > 0
  double curvature(double x) const {
    Kahan t0, t1, t2;        // head sums a^r x^a / rho(a), a < k
    Kahan a0, a1, a2;        // tail sums b^r x^b / rho(b), b >= k
    const int cap = series_max_terms();
    const int N = m.truncated() ? *m.trunc_N : cap;
    double w = 1.0;  // x^n / rho(n), by recursion
    for (int n = 0; n <= N && n < cap; ++n) {
      if (n > 0) w *= x / (n * f_squared_abs(m, n));
      const double dn = static_cast<double>(n);
      if (n < k) {
        t0.add(w);
        t1.add(dn * w);
        t2.add(dn * dn * w);
      } else {
        a0.add(w);
        a1.add(dn * w);
        a2.add(dn * dn * w);
        if (n > x + 2 && w * dn * dn * (dn + 1) < 1e-18 * (a2.value() + 1.0))
          break;
      }
    }
    const double T0 = t0.value(), T1 = t1.value(), T2 = t2.value();
    const double A0 = a0.value(), A1 = a1.value(), A2 = a2.value();
    // x W = sum_a t_a (a A0 - A1) = T1 A0 - T0 A1
    const double xW = T1 * A0 - T0 * A1;
    // x^2 W' = sum_a t_a ((a^2 - a) A0 + A1 - A2) = (T2 - T1) A0 + T0 (A1 - A2)
    const double x2Wp = (T2 - T1) * A0 + T0 * (A1 - A2);
    const double F = T0 + A0;
    const double xFp = T1 + A1;
    return x2Wp * F - 2.0 * xW * xFp;
  }
};

}  // namespace detail

// Critical displacement z_c: the positive root of d^2 Pi_k/dx^2 = 0, with
// Pi_k the symbol of the projector onto the first k number states. Bracketed
// bisection with term-wise analytic derivatives.
inline double critical_z(const ModelParams& m, int k) {
  if (k < 1) throw domain_error("k must be positive");
  detail::ProjectorSymbol sym{m, k};
  const auto dom = convergence_domain(m);
  if (dom.kind == DomainKind::empty) throw family_error("ill-defined family (R=0)");

  const double lo = 1e-6;
  const double glo = sym.curvature(lo);
  if (glo == 0.0) return std::sqrt(lo);

  // bracket the sign change; disk families probe toward 1, whole-plane
  // families double outward while the symbol stays finite
  double prev = lo, hi = 0.0, ghi = 0.0;
  bool bracketed = false;
  if (dom.kind == DomainKind::whole_plane) {
    for (double h = std::max(4.0 * (k + 1), 16.0); h <= 1e5; h *= 2.0) {
      const double g = sym.curvature(h);
      if (!std::isfinite(g)) break;
      if (g == 0.0) return std::sqrt(h);
      if (g * glo < 0.0) {
        hi = h;
        ghi = g;
        bracketed = true;
        break;
      }
      prev = h;
    }
  } else {
    for (double h : {0.5, 0.9, 0.99, 0.999}) {
      double g;
      try {
        g = sym.curvature(h);
      } catch (const error&) {
        break;  // too close to the boundary for the term cap
      }
      if (!std::isfinite(g)) break;
      if (g == 0.0) return std::sqrt(h);
      if (g * glo < 0.0) {
        hi = h;
        ghi = g;
        bracketed = true;
        break;
      }
      prev = h;
    }
  }
  if (!bracketed) throw domain_error("no sign change found (flat symbol)");
  (void)ghi;

  double a = prev, b = hi, ga = sym.curvature(a);
  while (b - a > 1e-10) {
    const double mid = 0.5 * (a + b);
    const double gm = sym.curvature(mid);
    if (gm == 0.0) return std::sqrt(mid);
    if (gm * ga < 0.0)
      b = mid;
    else {
      a = mid;
      ga = gm;
    }
  }
  return std::sqrt(0.5 * (a + b));
}

}  // namespace hypercat
