#pragma once

#include <cmath>
#include <complex>
#include <cstdlib>
#include <limits>
#include <vector>

#include "hypercat/model.hpp"

namespace hypercat {

namespace detail {

// Neumaier-compensated accumulator; complex gets one per component.
struct Kahan {
  double sum = 0.0, comp = 0.0;
  void add(double v) {
    double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

struct KahanC {
  Kahan re, im;
  void add(std::complex<double> v) {
    re.add(v.real());
    im.add(v.imag());
  }
  std::complex<double> value() const { return {re.value(), im.value()}; }
};

template <typename Scalar>
struct accumulator;
template <>
struct accumulator<double> {
  using type = Kahan;
};
template <>
struct accumulator<std::complex<double>> {
  using type = KahanC;
};

}  // namespace detail

// Hard cap on series terms; HYPERCAT_MAX_TERMS overrides.
inline int series_max_terms() {
  static const int cap = [] {
    if (const char* env = std::getenv("HYPERCAT_MAX_TERMS")) {
      int v = std::atoi(env);
      if (v > 0) return v;
    }
    return 10000;
  }();
  return cap;
}

// Sum t_0 + t_1 + ... with t_{n+1} = t_n * ratio(n). Stops once
// |term|/|partial sum| < 1e-15 for three consecutive terms.
template <typename Scalar, typename RatioFn>
Scalar sum_series(Scalar t0, RatioFn ratio) {
  typename detail::accumulator<Scalar>::type acc;
  Scalar term = t0;
  acc.add(term);
  int small_streak = 0;
  const int cap = series_max_terms();
  for (int n = 0; n < cap; ++n) {
    term *= ratio(n);
    acc.add(term);
    const double mag = std::abs(acc.value());
    if (std::abs(term) < 1e-15 * (mag > 0.0 ? mag : 1.0)) {
      if (++small_streak >= 3) return acc.value();
    } else {
      small_streak = 0;
    }
  }
  throw domain_error("series did not converge within the term cap");
}

// Rising factorial (a)_n = a(a+1)...(a+n-1). Direct product while safe,
// log-magnitude route with separate sign for long products.
inline double pochhammer(double a, int n) {
  if (n <= 30) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= a + i;
    return r;
  }
  double log_abs = 0.0;
  int sign = 1;
  for (int i = 0; i < n; ++i) {
    const double v = a + i;
    if (v == 0.0) return 0.0;
    if (v < 0.0) sign = -sign;
    log_abs += std::log(std::abs(v));
  }
  return sign * std::exp(log_abs);
}

// list (a+m)/b, m = 0..i-1
inline std::vector<double> delta_list(double a, int b, int i) {
  std::vector<double> out(static_cast<size_t>(i));
  for (int m = 0; m < i; ++m) out[static_cast<size_t>(m)] = (a + m) / b;
  return out;
}

namespace detail {

// |f(n)|^2 = prod |beta_j + n - 1| / prod |alpha_j + n - 1|. Throws when an
// untruncated pole is hit or the truncation range is exceeded.
inline double f_squared_abs(const ModelParams& m, int n) {
  if (m.truncated() && n > *m.trunc_N)
    throw domain_error("level index beyond truncation order N");
  double num = 1.0, den = 1.0;
  for (double b : m.beta) num *= std::abs(b + n - 1);
  for (double a : m.alpha) den *= std::abs(a + n - 1);
  if (den == 0.0) throw family_error("pole of f at level n (invalid parameters)");
  return num / den;
}

}  // namespace detail

// f(n) per the weight definition; absolute values for truncated families
// (phases are the caller's business).
inline double f_factor(const ModelParams& m, int n) {
  return std::sqrt(detail::f_squared_abs(m, n));
}

// rho(n) = n! f(n)!^2, computed by the recursion rho(n) = rho(n-1) * n * f(n)^2.
// Absolute values under truncation. Overflows double near n ~ 170 for
// factorial-type families; amplitude code uses log_rho instead.
inline double rho(const ModelParams& m, int n) {
  double r = 1.0;
  for (int i = 1; i <= n; ++i) r *= i * detail::f_squared_abs(m, i);
  return r;
}

// log rho(n) via lgamma for positive parameters; explicit product of logs for
// truncated ones (small N, sign-free magnitudes).
inline double log_rho(const ModelParams& m, int n) {
  if (n == 0) return 0.0;
  if (m.truncated()) {
    if (n > *m.trunc_N) throw domain_error("level index beyond truncation order N");
    double lr = std::lgamma(n + 1.0);
    for (double b : m.beta) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += std::log(std::abs(b + i));
      lr += s;
    }
    for (double a : m.alpha) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += std::log(std::abs(a + i));
      lr -= s;
    }
    return lr;
  }
  double lr = std::lgamma(n + 1.0);
  for (double b : m.beta) lr += std::lgamma(b + n) - std::lgamma(b);
  for (double a : m.alpha) lr -= std::lgamma(a + n) - std::lgamma(a);
  return lr;
}

// E_n = omega * n * |f(n)|^2
inline double energy_level(const ModelParams& m, double omega, int n) {
  if (n == 0) return 0.0;
  return omega * n * detail::f_squared_abs(m, n);
}

namespace detail {

// term ratio t_{n+1}/t_n = w * prod(alpha_j + n) / (prod(beta_j + n) * (n+1))
template <typename Scalar>
Scalar pfq_ratio(const ModelParams& m, Scalar w, int n) {
  Scalar r = w / static_cast<double>(n + 1);
  for (double a : m.alpha) r *= a + n;
  for (double b : m.beta) r /= b + n;
  return r;
}

template <typename Scalar>
Scalar pfq_series(const ModelParams& m, Scalar w) {
  return sum_series<Scalar>(Scalar{1.0}, [&](int n) { return pfq_ratio(m, w, n); });
}

// Truncated normalization sum_{n<=N} w^n / |rho(n)| at a (possibly complex)
// argument; absolute-value Pochhammer magnitudes throughout.
template <typename Scalar>
Scalar pfq_truncated_series(const ModelParams& m, Scalar w) {
  const int N = *m.trunc_N;
  typename accumulator<Scalar>::type acc;
  Scalar term{1.0};
  acc.add(term);
  for (int n = 1; n <= N; ++n) {
    term *= w / (n * f_squared_abs(m, n));
    acc.add(term);
  }
  return acc.value();
}

// Sector series sum_nu w^{nu k + j} / |rho(nu k + j)|, the k-hypercat
// normalization factor evaluated at real or complex argument.
template <typename Scalar>
Scalar kitten_norm_series(const ModelParams& m, int k, int j, Scalar w) {
  if (k < 1) throw domain_error("k must be positive");
  if (j < 0 || j >= k) throw domain_error("sector index j out of range");
  if (m.truncated()) {
    const int N = *m.trunc_N;
    typename accumulator<Scalar>::type acc;
    if (j > N) return Scalar{0.0};
    Scalar term = (j == 0) ? Scalar{1.0} : std::pow(w, j) * std::exp(-log_rho(m, j));
    acc.add(term);
    for (int n = j + k; n <= N; n += k) {
      // t_n / t_{n-k} = prod_{i=n-k+1}^{n} w / (i |f(i)|^2)
      Scalar step{1.0};
      for (int i = n - k + 1; i <= n; ++i) step *= w / (i * f_squared_abs(m, i));
      term *= step;
      acc.add(term);
    }
    return acc.value();
  }
  Scalar t0;
  if (j == 0) {
    t0 = Scalar{1.0};
  } else {
    if (std::abs(w) == 0.0) return Scalar{0.0};
    t0 = std::pow(w, j) * std::exp(-log_rho(m, j));
  }
  auto ratio = [&](int nu) {
    Scalar r{1.0};
    for (int i = 1; i <= k; ++i) {
      const int level = nu * k + j + i;
      Scalar f = w / static_cast<double>(level);
      for (double a : m.alpha) f *= a + level - 1;
      for (double b : m.beta) f /= b + level - 1;
      r *= f;
    }
    return r;
  };
  return sum_series<Scalar>(t0, ratio);
}

}  // namespace detail

// Generalized hypergeometric normalization sum x^n / rho(n) for positive
// parameters, summed to the termination rule.
inline double pfq(const ModelParams& m, double x) {
  if (m.truncated())
    throw family_error("pfq requires positive parameters; use pfq_truncated");
  if (x < 0.0) throw domain_error("pfq argument must be nonnegative");
  require_in_domain(m, x);
  return detail::pfq_series(m, x);
}

// Analytic continuation by direct summation at complex argument.
inline std::complex<double> pfq_complex(const ModelParams& m, std::complex<double> w) {
  if (m.truncated())
    throw family_error("pfq_complex requires positive parameters");
  require_in_domain(m, std::abs(w));
  return detail::pfq_series(m, w);
}

// Truncated normalization (normfactN): N+1 positive addends with
// absolute-value Pochhammers; the (-1)^sigma sign convention is absorbed here.
inline double pfq_truncated(const ModelParams& m, double x) {
  if (!m.truncated())
    throw family_error("pfq_truncated requires a truncated family");
  if (x < 0.0) throw domain_error("pfq_truncated argument must be nonnegative");
  return detail::pfq_truncated_series(m, x);
}

inline std::complex<double> pfq_truncated_complex(const ModelParams& m,
                                                  std::complex<double> w) {
  if (!m.truncated())
    throw family_error("pfq_truncated requires a truncated family");
  return detail::pfq_truncated_series(m, w);
}

// Normalization of either kind, dispatching on truncation.
inline double norm_factor(const ModelParams& m, double x) {
  return m.truncated() ? pfq_truncated(m, x) : pfq(m, x);
}

inline std::complex<double> norm_factor_complex(const ModelParams& m,
                                                std::complex<double> w) {
  return m.truncated() ? pfq_truncated_complex(m, w) : pfq_complex(m, w);
}

// Sector normalization F^j. For truncated families k must divide N+1.
inline double kitten_norm(const ModelParams& m, int k, int j, double x) {
  if (x < 0.0) throw domain_error("kitten_norm argument must be nonnegative");
  if (m.truncated()) {
    if ((*m.trunc_N + 1) % k != 0)
      throw domain_error("k must be a divisor of N+1 for truncated kittens");
  } else {
    require_in_domain(m, x);
  }
  return detail::kitten_norm_series(m, k, j, x);
}

inline std::complex<double> kitten_norm_complex(const ModelParams& m, int k, int j,
                                                std::complex<double> w) {
  if (m.truncated()) {
    if ((*m.trunc_N + 1) % k != 0)
      throw domain_error("k must be a divisor of N+1 for truncated kittens");
  } else {
    require_in_domain(m, std::abs(w));
  }
  return detail::kitten_norm_series(m, k, j, w);
}

// F^j through the single large {pk+1}F{(q+1)k} evaluation built from
// Delta_k parameter blocks, at transformed argument (x k^{p-q-1})^k.
// Cross-check oracle for kitten_norm on untruncated families.
inline double kitten_norm_appendix(const ModelParams& m, int k, int j, double x) {
  if (m.truncated())
    throw family_error("appendix normalization applies to untruncated families");
  if (k < 1 || j < 0 || j >= k) throw domain_error("invalid (k, j)");
  require_in_domain(m, x);
  if (x == 0.0) return j == 0 ? 1.0 : 0.0;

  std::vector<double> num, den;
  for (double a : m.alpha)
    for (double v : delta_list(a + j, k, k)) num.push_back(v);
  num.push_back(1.0);  // Delta_1[1]
  for (double b : m.beta)
    for (double v : delta_list(b + j, k, k)) den.push_back(v);
  for (double v : delta_list(j + 1.0, k, k)) den.push_back(v);

  const int p = m.p(), q = m.q();
  const double y = std::pow(x * std::pow(static_cast<double>(k), p - q - 1),
                            static_cast<double>(k));

  double pref = std::pow(x, j) / std::tgamma(j + 1.0);
  for (double a : m.alpha) pref *= pochhammer(a, j);
  for (double b : m.beta) pref /= pochhammer(b, j);

  auto ratio = [&](int n) {
    double r = y / (n + 1.0);
    for (double a : num) r *= a + n;
    for (double b : den) r /= b + n;
    return r;
  };
  return pref * sum_series<double>(1.0, ratio);
}

}  // namespace hypercat
