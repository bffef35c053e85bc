#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "hypercat/identity.hpp"
#include "hypercat/kerr.hpp"
#include "hypercat/kittens.hpp"
#include "hypercat/states.hpp"
#include "hypercat/stats.hpp"

namespace hypercat {

struct Check {
  std::string name;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
  bool expected_fail = false;  // negative controls: pass means "failed as designed"
};

namespace detail {

inline Check make_check(std::string name, double residual, double tol) {
  Check c;
  c.name = std::move(name);
  c.residual = residual;
  c.tol = tol;
  c.pass = residual < tol;
  return c;
}

inline std::vector<Preset> sweep_presets() {
  return {preset_canonical(),      preset_gp_su11(1.0),
          preset_gp_su11(3.0),     preset_bg_su11(1.0),
          preset_sg(),             preset_dual_sg(),
          preset_dual_inverse_bosonic(), preset_hydrogen(),
          preset_confluent(1.0, 3.0),    preset_confluent(3.0, 1.0)};
}

// Truncated preset/k pairs with k | N+1.
inline std::vector<std::pair<Preset, int>> truncated_sweep() {
  return {{preset_bg_su2(1.5), 2}, {preset_gp_su2(1.5), 4},
          {preset_bg_su2(2.0), 5}, {preset_gp_su2(3.5), 8},
          {preset_bg_su2(4.0), 3}, {preset_gp_su2(2.0), 5}};
}

inline Complex random_z(std::mt19937& rng, const ModelParams& m, double plane_r = 2.0) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const auto dom = convergence_domain(m);
  const double rmax =
      dom.kind == DomainKind::whole_plane ? plane_r : 0.85;
  const double r = (0.1 + 0.9 * u(rng)) * rmax;
  const double th = 2.0 * M_PI * u(rng);
  return std::polar(r, th);
}

}  // namespace detail

// ---- series -----------------------------------------------------------

inline std::vector<Check> verify_series() {
  std::vector<Check> out;
  std::mt19937 rng(20240711u);
  std::uniform_real_distribution<double> u(0.0, 1.0);

  {  // sector partition: sum_j F^j = F
    double worst = 0.0;
    for (const Preset& p : detail::sweep_presets()) {
      const auto dom = convergence_domain(p.params);
      for (int rep = 0; rep < 4; ++rep) {
        const int k = 2 + static_cast<int>(u(rng) * 7);
        const double x =
            dom.kind == DomainKind::whole_plane ? 4.0 * u(rng) : 0.9 * u(rng);
        const double full = pfq(p.params, x);
        detail::Kahan acc;
        for (int j = 0; j < k; ++j) acc.add(kitten_norm(p.params, k, j, x));
        worst = std::max(worst, std::abs(acc.value() - full) / full);
      }
    }
    out.push_back(detail::make_check("series/sector-partition", worst, 1e-12));
  }

  {  // appendix-A route equals the direct sector series
    double worst = 0.0;
    std::uniform_real_distribution<double> param(0.3, 5.0);
    for (int rep = 0; rep < 60; ++rep) {
      const int p = static_cast<int>(u(rng) * 3);
      int q = static_cast<int>(u(rng) * 3);
      if (p > q + 1) q = p - 1;
      std::vector<double> a(static_cast<size_t>(p)), b(static_cast<size_t>(q));
      for (auto& v : a) v = param(rng);
      for (auto& v : b) v = param(rng);
      const auto m = ModelParams::make(a, b);
      const int k = 1 + static_cast<int>(u(rng) * 5);
      const int j = static_cast<int>(u(rng) * k);
      const double x =
          p == q + 1 ? 0.05 + 0.85 * u(rng) : 0.05 + 2.95 * u(rng);
      const double direct = kitten_norm(m, k, j, x);
      const double appendix = kitten_norm_appendix(m, k, j, x);
      worst = std::max(worst, std::abs(direct - appendix) / direct);
    }
    out.push_back(detail::make_check("series/appendix-equivalence", worst, 1e-10));
  }

  {  // (-m)_n = (-1)^n m!/(m-n)!
    double worst = 0.0;
    for (int mm = 1; mm <= 12; ++mm)
      for (int n = 0; n <= mm; ++n) {
        const double lhs = pochhammer(-mm, n);
        double falling = 1.0;
        for (int i = 0; i < n; ++i) falling *= mm - i;
        const double rhs = (n % 2 ? -1.0 : 1.0) * falling;
        worst = std::max(worst, std::abs(lhs - rhs));
      }
    out.push_back(detail::make_check("series/pochhammer-sign-identity", worst, 1e-30));
  }

  {  // rho recursion, exact as computed
    double worst = 0.0;
    for (const Preset& p : detail::sweep_presets()) {
      const int top = 25;
      for (int n = 1; n <= top; ++n) {
        const double lhs = rho(p.params, n);
        const double rhs = rho(p.params, n - 1) * (n * detail::f_squared_abs(p.params, n));
        worst = std::max(worst, std::abs(lhs - rhs));
      }
    }
    out.push_back(detail::make_check("series/rho-recursion-exact", worst, 1e-300));
  }

  {  // partial sums of pfq nondecreasing for positive parameters, x > 0
    double worst = 0.0;
    for (const Preset& p : detail::sweep_presets()) {
      const auto dom = convergence_domain(p.params);
      const double x = dom.kind == DomainKind::whole_plane ? 2.5 : 0.7;
      double term = 1.0, partial = 1.0;
      for (int n = 0; n < 200; ++n) {
        term *= detail::pfq_ratio(p.params, x, n);
        if (term < 0.0) worst = std::max(worst, -term);
        const double next = partial + term;
        if (next < partial) worst = std::max(worst, partial - next);
        partial = next;
      }
    }
    out.push_back(detail::make_check("series/monotone-truncation", worst, 1e-300));
  }

  return out;
}

// ---- states -----------------------------------------------------------

inline std::vector<Check> verify_states() {
  std::vector<Check> out;
  std::mt19937 rng(53417u);

  {  // a_f |z> = z |z> for untruncated families
    double worst = 0.0;
    for (const Preset& p : detail::sweep_presets()) {
      for (int rep = 0; rep < 20; ++rep) {
        const Complex z = detail::random_z(rng, p.params);
        const FockVector s = hcs({z, p.params});
        FockVector lhs = annihilate_f(p.params, s);
        for (size_t i = 0; i < lhs.amp.size(); ++i) lhs.amp[i] -= z * s.amp[i];
        // the top level loses one amplitude to the cutoff; it is part of the
        // truncation tail the dim rule already bounds
        worst = std::max(worst, lhs.norm());
      }
    }
    out.push_back(detail::make_check("states/barut-girardello-eigenstate", worst, 1e-9));
  }

  {  // closed-form overlap == Fock inner product
    double worst = 0.0;
    auto presets = detail::sweep_presets();
    for (const Preset& p : presets) {
      for (int rep = 0; rep < 6; ++rep) {
        const Complex za = detail::random_z(rng, p.params);
        const Complex zb = detail::random_z(rng, p.params);
        const Complex closed = overlap({za, p.params}, {zb, p.params});
        const int dim = std::max(auto_dim(p.params, std::norm(za)),
                                 auto_dim(p.params, std::norm(zb)));
        const Complex fock = inner(hcs({za, p.params}, dim), hcs({zb, p.params}, dim));
        worst = std::max(worst, std::abs(closed - fock));
      }
    }
    for (const auto& [p, k] : detail::truncated_sweep()) {
      const Complex za = detail::random_z(rng, p.params, 1.5);
      const Complex zb = detail::random_z(rng, p.params, 1.5);
      const Complex closed = overlap({za, p.params}, {zb, p.params});
      const Complex fock = inner(hcs({za, p.params}), hcs({zb, p.params}));
      worst = std::max(worst, std::abs(closed - fock));
    }
    out.push_back(detail::make_check("states/overlap-consistency", worst, 1e-10));
  }

  {  // Susskind-Glogower partial isometry
    const ModelParams sg = preset_sg().params;
    double worst = 0.0;
    const int dim = 24;
    for (int n = 0; n < dim - 2; ++n) {
      const FockVector e = basis_state(n, dim);
      const FockVector vdag_v = annihilate_f(sg, create_f(sg, e));
      worst = std::max(worst, distance(vdag_v, e));  // V V^+ = 1
      const FockVector v_vdag = create_f(sg, annihilate_f(sg, e));
      const FockVector want = n == 0 ? FockVector{std::vector<Complex>(
                                           static_cast<size_t>(dim + 1))}
                                     : basis_state(n, dim + 1);
      worst = std::max(worst, distance(v_vdag, want));  // V^+ V = 1 - |0><0|
    }
    out.push_back(detail::make_check("states/sg-partial-isometry", worst, 1e-14));
  }

  {  // duality: |amp_dual(n)| |amp(n)| = x^n / (n! sqrt(N N_dual)), term-wise
    double worst = 0.0;
    for (const Preset& p :
         {preset_sg(), preset_bg_su11(1.0), preset_confluent(1.0, 3.0)}) {
      const ModelParams d = dual(p.params);
      const ModelParams dd = dual(d);
      if (!same_family(dd, p.params)) worst = 1.0;  // involution
      const double x = 0.36;
      const Complex z{0.6, 0.0};
      const auto dom_d = convergence_domain(d);
      if (!dom_d.admits(x)) continue;
      const FockVector a = hcs({z, p.params});
      const FockVector b = hcs({z, d});
      const double scale =
          1.0 / std::sqrt(norm_factor(p.params, x) * norm_factor(d, x));
      const int top = std::min(a.dim(), b.dim());
      for (int n = 0; n < top; ++n) {
        const double lhs = std::abs(a.amp[static_cast<size_t>(n)]) *
                           std::abs(b.amp[static_cast<size_t>(n)]);
        const double rhs =
            std::exp(n * std::log(x) - std::lgamma(n + 1.0)) * scale;
        if (rhs > 1e-200)
          worst = std::max(worst, std::abs(lhs - rhs) / rhs);
      }
    }
    out.push_back(detail::make_check("states/duality-roundtrip", worst, 1e-10));
  }

  {  // truncated residual strictly decreasing along the BG SU(2) spin ladder
    double worst = 0.0;
    for (double z : {0.4, 0.8}) {
      double prev = 1e300;
      for (int s = 1; s <= 6; ++s) {
        const double r = eigen_residual({Complex{z, 0.0}, preset_bg_su2(s).params})
                             .residual;
        if (r >= prev) worst = std::max(worst, r - prev + 1e-30);
        prev = r;
      }
    }
    out.push_back(detail::make_check("states/residual-decay", worst, 1e-300));
  }

  {  // Proposition-1 closed form equals the direct Fock residual. The direct
     // double evaluation carries ~eps * ||z psi|| round-off, which exceeds
     // 1e-12 * res once res itself sits at noise scale; a 5e-15 floor covers
     // that (the acceptance twin of this check resolves it in quad precision).
    double worst = 0.0;
    for (int s = 1; s <= 6; ++s) {
      for (double zr : {0.3, 0.5, 0.9}) {
        for (const Preset& p : {preset_bg_su2(s), preset_gp_su2(s)}) {
          const CoherentLabel lab{Complex{zr, 0.0}, p.params};
          const auto[res, bound] = eigen_residual(lab);
          const FockVector st = hcs(lab);
          FockVector d = annihilate_f(p.params, st);
          for (size_t i = 0; i < d.amp.size(); ++i) d.amp[i] -= lab.z * st.amp[i];
          const double direct = d.norm();
          worst = std::max(worst,
                           std::abs(direct - res) / (1e-12 * res + 5e-15) * 1e-12);
          if (res * res >= bound * bound) worst = std::max(worst, 1.0);
        }
      }
    }
    out.push_back(detail::make_check("states/residual-closed-form", worst, 1e-12));
  }

  return out;
}

// ---- kittens ----------------------------------------------------------

inline std::vector<Check> verify_kittens() {
  std::vector<Check> out;
  std::mt19937 rng(771234u);

  {  // DFT and Fock constructions agree
    double worst = 0.0;
    for (const Preset& p : detail::sweep_presets()) {
      for (int k : {2, 3, 5, 8}) {
        for (int rep = 0; rep < 5; ++rep) {
          const Complex z = detail::random_z(rng, p.params);
          const int j = static_cast<int>(rep % k);
          const KittenSpec spec{k, j, z, p.params};
          const FockVector a = kitten_fock(spec);
          const FockVector b = kitten_dft(spec, a.dim());
          worst = std::max(worst, distance(a, b));
        }
      }
    }
    for (const auto& [p, k] : detail::truncated_sweep()) {
      const Complex z = detail::random_z(rng, p.params, 1.5);
      for (int j = 0; j < k; ++j) {
        const KittenSpec spec{k, j, z, p.params};
        worst = std::max(worst, distance(kitten_fock(spec), kitten_dft(spec)));
      }
    }
    out.push_back(detail::make_check("kittens/dft-fock-equivalence", worst, 1e-10));
  }

  {  // support only on n = j (mod k)
    double worst = 0.0;
    const KittenSpec spec{3, 1, Complex{1.1, 0.4}, preset_canonical().params};
    const FockVector v = kitten_fock(spec);
    for (int n = 0; n < v.dim(); ++n)
      if (n % 3 != 1) worst = std::max(worst, std::abs(v.amp[static_cast<size_t>(n)]));
    out.push_back(detail::make_check("kittens/sector-support", worst, 1e-300));
  }

  {  // kittens are eigenstates of a_f^k with eigenvalue z^k. Extra dim
     // headroom: the auto rule bounds tail MASS, not the top amplitude, and
     // k ladder steps amplify whatever sits at the cutoff.
    double worst = 0.0;
    for (const Preset& p : detail::sweep_presets()) {
      for (int k : {2, 3, 5}) {
        const Complex z = detail::random_z(rng, p.params, 1.6);
        const KittenSpec spec{k, k - 1, z, p.params};
        const int dim = kitten_fock(spec).dim() + 2 * k + 8;
        const FockVector v = kitten_fock(spec, dim);
        FockVector w = v;
        for (int i = 0; i < k; ++i) w = annihilate_f(p.params, w);
        const Complex zk = std::pow(z, k);
        for (size_t i = 0; i < w.amp.size(); ++i) w.amp[i] -= zk * v.amp[i];
        worst = std::max(worst, w.norm());
      }
    }
    out.push_back(detail::make_check("kittens/af-power-eigenstate", worst, 1e-9));
  }

  {  // Gram spectrum: lambda_j > 0, sum = k, DFT route == norm-ratio route
    double worst = 0.0;
    for (const Preset& p : detail::sweep_presets()) {
      for (int k : {2, 5}) {
        const Complex z = detail::random_z(rng, p.params, 1.5);
        const double x = std::norm(z);
        const GramData g = gram(p.params, k, z);
        detail::Kahan tr;
        const double full = pfq(p.params, x);
        for (int j = 0; j < k; ++j) {
          const double lam = g.eigenvalues[static_cast<size_t>(j)];
          if (lam <= 0.0) worst = std::max(worst, 1.0);
          tr.add(lam);
          const double route2 = k * kitten_norm(p.params, k, j, x) / full;
          worst = std::max(worst, std::abs(lam - route2));
        }
        worst = std::max(worst, std::abs(tr.value() - k));
      }
    }
    out.push_back(detail::make_check("kittens/gram-spectral-identity", worst, 1e-12));
  }

  {  // exact discrete circle representation
    double worst = 0.0;
    for (double s = 0.5; s <= 6.0; s += 0.5) {
      for (const Preset& p : {preset_bg_su2(s), preset_gp_su2(s)}) {
        const int N = *p.params.trunc_N;
        for (double r : {0.2, 1.0, 5.0}) {
          for (int n = 0; n <= N; ++n) {
            const FockVector v = circle_number_state_discrete(p.params, n, r);
            const double fid = std::abs(inner(basis_state(n, N + 1), v)) / v.norm();
            worst = std::max(worst, 1.0 - fid);
          }
        }
      }
    }
    out.push_back(detail::make_check("kittens/discrete-circle-fidelity", worst, 1e-10));
  }

  {  // DFT orthogonality kernel
    double worst = 0.0;
    for (int k = 1; k <= 64; ++k) {
      for (int d : {0, 1, k / 2, k - 1, k, 3 * k + 2}) {
        detail::KahanC acc;
        for (int l = 0; l < k; ++l) acc.add(detail::unit_root(d * l, k));
        const double want = (d % k == 0) ? k : 0.0;
        worst = std::max(worst, std::abs(acc.value() - want));
      }
    }
    out.push_back(detail::make_check("kittens/dft-orthogonality-kernel", worst, 1e-12));
  }

  {  // continuous circle representation: residual, and decay in Qpts
    const ModelParams can = preset_canonical().params;
    const FockVector v0 = circle_number_state_continuous(can, 0, 1.0, 64);
    double worst = distance(v0, basis_state(0, v0.dim()));
    const FockVector a = circle_number_state_continuous(can, 2, 1.5, 24);
    const FockVector b = circle_number_state_continuous(can, 2, 1.5, 48);
    const double ra = distance(a, basis_state(2, a.dim()));
    const double rb = distance(b, basis_state(2, b.dim()));
    if (rb >= ra) worst = std::max(worst, 1.0);
    out.push_back(detail::make_check("kittens/continuous-circle-residual", worst, 1e-10));
  }

  return out;
}

// ---- stats ------------------------------------------------------------

inline std::vector<Check> verify_stats() {
  std::vector<Check> out;
  std::mt19937 rng(90321u);
  std::uniform_real_distribution<double> u(0.0, 1.0);

  {  // kitten interpolates between number and coherent state. The coherent
     // edge is family-adaptive: deep in the coherent region means mean >> k,
     // so whole-plane families push x until the k=1 mean reaches ~40 (cheap
     // for fast-decay weights); disk families approach x -> 1- where the
     // sector split washes out like (1-x)^eta, so the residual trend is
     // checked together with a bound at the Fig. 2-3 grid edge.
    double worst = 0.0;
    const int k = 5;
    for (const Preset& p : detail::sweep_presets()) {
      const auto dom = convergence_domain(p.params);
      for (int j = 0; j < k; ++j)
        worst = std::max(worst, std::abs(mean_n(p.params, k, j, 0.0) - j) / 1e-12);
      auto rel_diff = [&](double x) {
        const double m1 = mean_n(p.params, 1, 0, x);
        return std::abs(mean_n(p.params, k, 0, x) - m1) / m1;
      };
      if (dom.kind == DomainKind::whole_plane) {
        double edge = 10.0;
        while (mean_n(p.params, 1, 0, edge) < 60.0 && edge < 1e6) edge *= 2.0;
        worst = std::max(worst, rel_diff(edge) / 1e-4);
      } else {
        const double r90 = rel_diff(0.90), r95 = rel_diff(0.95), r99 = rel_diff(0.99);
        if (!(r99 < r95 && r95 < r90)) worst = std::max(worst, 2.0);
        worst = std::max(worst, r99 / 0.05);
      }
    }
    out.push_back(detail::make_check("stats/interpolation", worst, 1.0));
  }

  {  // ratio-free moments match brute-force pdf sums
    double worst = 0.0;
    std::uniform_real_distribution<double> param(0.4, 4.0);
    for (int rep = 0; rep < 40; ++rep) {
      const int p = static_cast<int>(u(rng) * 3);
      int q = static_cast<int>(u(rng) * 3);
      if (p > q + 1) q = p - 1;
      std::vector<double> a(static_cast<size_t>(p)), b(static_cast<size_t>(q));
      for (auto& v : a) v = param(rng);
      for (auto& v : b) v = param(rng);
      const auto m = ModelParams::make(a, b);
      const int k = 1 + static_cast<int>(u(rng) * 6);
      const int j = static_cast<int>(u(rng) * k);
      const double x = p == q + 1 ? 0.05 + 0.8 * u(rng) : 0.1 + 3.9 * u(rng);
      const KittenSpec spec{k, j, std::sqrt(x), m};
      detail::Kahan s0, s1, s2;
      for (int lvl = j; lvl < 4000; lvl += k) {
        const double pdf = photon_pdf(spec, lvl);
        s0.add(pdf);
        s1.add(lvl * pdf);
        s2.add(static_cast<double>(lvl) * lvl * pdf);
        if (lvl > x && pdf * lvl * lvl < 1e-19) break;
      }
      const double mean_o = s1.value() / s0.value();
      const double var_o = s2.value() / s0.value() - mean_o * mean_o;
      const StatReport r = mandel(m, k, j, x);
      worst = std::max(worst, std::abs(r.mean_n - mean_o) / std::max(1.0, mean_o));
      worst = std::max(worst, std::abs(r.std_n - std::sqrt(std::max(var_o, 0.0))) /
                                  std::max(1.0, r.std_n));
      const double q_o = (var_o - mean_o) / mean_o;
      worst = std::max(worst, std::abs(r.mandel_q - q_o) / std::max(1.0, std::abs(q_o)));
    }
    out.push_back(detail::make_check("stats/moment-oracle", worst, 1e-9));
  }

  {  // pdf at m = j is monotone decreasing in x
    double worst = 0.0;
    for (const Preset& p : detail::sweep_presets()) {
      const auto dom = convergence_domain(p.params);
      const double hi = dom.kind == DomainKind::whole_plane ? 8.0 : 0.95;
      const int k = 5, j = 2;
      double prev = 2.0;
      for (int i = 0; i <= 40; ++i) {
        const double x = hi * i / 40.0;
        const double v = photon_pdf({k, j, std::sqrt(x), p.params}, j);
        if (v > prev + 1e-15) worst = std::max(worst, v - prev);
        prev = v;
      }
    }
    out.push_back(detail::make_check("stats/pdf-step-monotone", worst, 1e-300));
  }

  {  // confluent sign pattern: alpha < beta super, alpha > beta sub
    double worst = 0.0;
    for (auto [a, b] : {std::pair{1.0, 2.0}, {1.0, 4.0}, {2.0, 1.0}, {4.0, 1.0}}) {
      const ModelParams m = ModelParams::make({a}, {b});
      const double sign = a < b ? 1.0 : -1.0;
      for (int i = 1; i <= 20; ++i) {
        const double x = 0.5 * i;
        const double qv = mandel(m, 1, 0, x).mandel_q;
        if (sign * qv <= 0.0) worst = std::max(worst, std::abs(qv) + 1e-15);
      }
      // k = 5 cats approach the k = 1 sign at the right edge of the grid
      for (int j = 0; j < 5; ++j) {
        const double qv = mandel(m, 5, j, 10.0).mandel_q;
        if (sign * qv <= 0.0) worst = std::max(worst, std::abs(qv) + 1e-15);
      }
    }
    out.push_back(detail::make_check("stats/mandel-sign-pattern", worst, 1e-300));
  }

  {  // pdf maxima sit near the predicted displacements
    double worst = 0.0;
    const int k = 5;
    const ModelParams can = preset_canonical().params;
    for (int nu = 3; nu <= 5; ++nu) {
      const int m = nu * k;
      double best_x = 0.0, best = -1.0;
      for (int i = 1; i <= 1200; ++i) {
        const double x = 40.0 * i / 1200.0;
        const double v = photon_pdf({k, 0, std::sqrt(x), can}, m);
        if (v > best) {
          best = v;
          best_x = x;
        }
      }
      worst = std::max(worst, std::abs(best_x - m) / m - 0.05);
    }
    const ModelParams per = preset_gp_su11(3.0).params;  // 2s = 6
    {
      const int m = k;  // nu = 1
      double best_x = 0.0, best = -1.0;
      for (int i = 1; i <= 2000; ++i) {
        const double x = 0.999 * i / 2000.0;
        const double v = photon_pdf({k, 0, std::sqrt(x), per}, m);
        if (v > best) {
          best = v;
          best_x = x;
        }
      }
      const double pred = (m - 1.0) / (m + 6.0 - 2.0);
      worst = std::max(worst, std::abs(best_x - pred) / pred - 0.05);
    }
    out.push_back(detail::make_check("stats/pdf-maxima-placement", std::max(worst, 0.0), 1e-9));
  }

  {  // saddle-point anchors of the implemented procedure
    double worst = 0.0;
    for (int k = 2; k <= 8; ++k) {
      const double zc = critical_z(preset_canonical().params, k);
      worst = std::max(worst, std::abs(zc * zc - (k - 1.0)));
      for (double s : {1.0, 3.0}) {
        const double zp = critical_z(preset_gp_su11(s).params, k);
        const double want = (k - 1.0) / (k + 2.0 * s - 2.0);
        worst = std::max(worst, std::abs(zp * zp - want));
      }
    }
    out.push_back(detail::make_check("stats/saddle-roots", worst, 1e-8));
  }

  {  // Appendix-C n_f statistics against direct Fock sums
    double worst = 0.0;
    for (const Preset& p : detail::sweep_presets()) {
      const auto dom = convergence_domain(p.params);
      for (int k : {3, 5}) {
        for (int j = 0; j < k; ++j) {
          const double x = dom.kind == DomainKind::whole_plane ? 1.7 : 0.55;
          const StatReport r = mandel_nf(p.params, k, j, x);
          const KittenSpec spec{k, j, std::sqrt(x), p.params};
          detail::Kahan e1, e2, s0;
          for (int lvl = j; lvl < 3000; lvl += k) {
            const double pdf = photon_pdf(spec, lvl);
            s0.add(pdf);
            if (lvl >= 1)
              e1.add(pdf * lvl * detail::f_squared_abs(p.params, lvl));
            if (lvl >= 2)
              e2.add(pdf * lvl * (lvl - 1) * detail::f_squared_abs(p.params, lvl) *
                     detail::f_squared_abs(p.params, lvl - 1));
            if (lvl > x && pdf * lvl * lvl < 1e-19) break;
          }
          const double E1 = e1.value(), E2 = e2.value();
          const double q_o = E2 / E1 - E1;
          worst = std::max(worst, std::abs(r.mean_n - E1) / std::max(1.0, E1));
          worst = std::max(worst, std::abs(r.mandel_q - q_o) / std::max(1.0, std::abs(q_o)));
        }
      }
    }
    out.push_back(detail::make_check("stats/nf-moment-oracle", worst, 1e-9));
  }

  return out;
}

// ---- kerr -------------------------------------------------------------

inline std::vector<Check> verify_kerr() {
  std::vector<Check> out;
  std::mt19937 rng(440011u);

  const std::vector<std::pair<double, double>> confluent_rows = {
      {1.0, 3.0}, {1.0, 1.0}, {3.0, 1.0}};

  {  // diagonal unitarity
    double worst = 0.0;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int rep = 0; rep < 8; ++rep) {
      KerrParams kp;
      kp.kappa = 1 + rep % 4;
      kp.omega_t = 7.3 * u(rng);
      const FockVector v =
          kerr_evolve({Complex{1.4, 0.3}, preset_canonical().params}, kp);
      worst = std::max(worst, std::abs(v.norm() - 1.0));
    }
    out.push_back(detail::make_check("kerr/unitarity", worst, 1e-13));
  }

  {  // two half revivals = identity
    double worst = 0.0;
    const CoherentLabel lab{Complex{2.0, 0.0}, preset_confluent(1.0, 3.0).params};
    const FockVector init = hcs(lab);
    FockVector v = kerr_evolve(lab, KerrParams::fraction(1, 2), init.dim());
    for (int n = 0; n < v.dim(); ++n)
      v.amp[static_cast<size_t>(n)] *= detail::kerr_phase(KerrParams::fraction(1, 2), n);
    worst = distance(v, init);
    out.push_back(detail::make_check("kerr/double-revival", worst, 1e-12));
  }

  {  // evolved state == kitten superposition == circle superposition
    double worst = 0.0;
    for (auto [a, b] : confluent_rows) {
      const CoherentLabel lab{Complex{2.0, 0.0}, preset_confluent(a, b).params};
      for (int k : {2, 3, 4, 5, 6, 8, 15}) {
        const FockVector evolved = kerr_evolve(lab, KerrParams::fraction(1, k));
        const int dim = evolved.dim();

        const auto coef = kitten_decomposition(lab, k);
        FockVector via_kittens;
        via_kittens.amp.assign(static_cast<size_t>(dim), Complex{});
        double csum = 0.0;
        for (int j = 0; j < k; ++j) {
          csum += std::norm(coef[static_cast<size_t>(j)]);
          const FockVector kj = kitten_fock({k, j, lab.z, lab.params}, dim);
          for (size_t i = 0; i < via_kittens.amp.size(); ++i)
            via_kittens.amp[i] += coef[static_cast<size_t>(j)] * kj.amp[i];
        }
        worst = std::max(worst, std::abs(csum - 1.0));
        worst = std::max(worst, distance(evolved, via_kittens));

        const auto w = circle_superposition_form(lab, k);
        FockVector via_circle;
        via_circle.amp.assign(static_cast<size_t>(dim), Complex{});
        for (int l = 0; l < k; ++l) {
          if (std::abs(w[static_cast<size_t>(l)]) < 1e-15) continue;
          const FockVector cl =
              hcs({lab.z * detail::unit_root(l, k), lab.params}, dim);
          for (size_t i = 0; i < via_circle.amp.size(); ++i)
            via_circle.amp[i] += w[static_cast<size_t>(l)] * cl.amp[i];
        }
        worst = std::max(worst, distance(evolved, via_circle));
      }
    }
    // disk-family spot checks at small displacement
    for (const Preset& p : {preset_sg(), preset_gp_su11(1.0)}) {
      const CoherentLabel lab{Complex{0.55, 0.2}, p.params};
      for (int k : {2, 3, 5}) {
        const FockVector evolved = kerr_evolve(lab, KerrParams::fraction(1, k));
        const auto w = circle_superposition_form(lab, k);
        FockVector via_circle;
        via_circle.amp.assign(static_cast<size_t>(evolved.dim()), Complex{});
        for (int l = 0; l < k; ++l) {
          const FockVector cl =
              hcs({lab.z * detail::unit_root(l, k), lab.params}, evolved.dim());
          for (size_t i = 0; i < via_circle.amp.size(); ++i)
            via_circle.amp[i] += w[static_cast<size_t>(l)] * cl.amp[i];
        }
        worst = std::max(worst, distance(evolved, via_circle));
      }
    }
    out.push_back(detail::make_check("kerr/three-way-identity", worst, 1e-10));
  }

  {  // nonzero circle weights reproduce the component layout
    double worst = 0.0;
    const CoherentLabel lab{Complex{2.0, 0.0}, preset_canonical().params};
    for (int k = 1; k <= 32; ++k) {
      const auto w = circle_superposition_form(lab, k);
      const ComponentLayout lay = component_layout(k);
      int nonzero = 0;
      for (int l = 0; l < k; ++l) {
        const double mag = std::abs(w[static_cast<size_t>(l)]);
        if (mag > 1e-12) {
          ++nonzero;
          // the surviving l must sit on the predicted ring positions
          const double ang = 2.0 * M_PI * l / k - lay.rotation_offset;
          const double per = 2.0 * M_PI / lay.m;
          const double frac = std::abs(std::remainder(ang, per));
          worst = std::max(worst, frac);
          worst = std::max(worst, std::abs(mag - 1.0 / std::sqrt(lay.m)));
        }
      }
      if (nonzero != lay.m) worst = std::max(worst, 1.0);
    }
    out.push_back(detail::make_check("kerr/component-layout", worst, 1e-12));
  }

  {  // Husimi: bound, self-overlap, and peak geometry for one Fig.-6 cell
    double worst = 0.0;
    const ModelParams m = preset_confluent(3.0, 1.0).params;
    const CoherentLabel lab{Complex{2.0, 0.0}, m};
    const int k = 8;
    const auto w = circle_superposition_form(lab, k);
    GridSpec spec;
    spec.nx = spec.ny = 141;
    const HusimiGrid g = husimi_circle(m, lab.z, w, spec);
    double gmax = 0.0;
    for (double v : g.values)
      if (std::isfinite(v)) gmax = std::max(gmax, v);
    worst = std::max(worst, gmax - (1.0 + 1e-12));

    const ComponentLayout lay = component_layout(k);
    const double max_shift = 0.2 * (2.0 * 2.0 * std::sin(M_PI / lay.m));
    int found = 0;
    for (int iy = 1; iy + 1 < g.ny; ++iy)
      for (int ix = 1; ix + 1 < g.nx; ++ix) {
        const double v = g.at(iy, ix);
        if (!(v > 0.05 * gmax)) continue;
        bool strict = true;
        for (int sy = -1; sy <= 1 && strict; ++sy)
          for (int sx = -1; sx <= 1; ++sx) {
            if (!sx && !sy) continue;
            const double nb = g.at(iy + sy, ix + sx);
            if (!(std::isnan(nb) || nb < v)) {
              strict = false;
              break;
            }
          }
        if (!strict) continue;
        ++found;
        double best = 1e9;
        for (int l = 0; l < lay.m; ++l) {
          const double ang = 2.0 * M_PI * l / lay.m + lay.rotation_offset;
          const Complex c = std::abs(lab.z) * std::polar(1.0, ang);
          best = std::min(best, std::hypot(g.cell_x(ix) - c.real(),
                                           g.cell_y(iy) - c.imag()));
        }
        worst = std::max(worst, best - max_shift);
      }
    if (found != lay.m) worst = std::max(worst, 1.0);
    out.push_back(detail::make_check("kerr/husimi-peak-geometry", std::max(worst, 0.0), 1e-9));
  }

  {  // distinguishability widths and counts
    double worst = 0.0;
    const double s11 = width_sigma(1, 1), s13 = width_sigma(1, 3), s31 = width_sigma(3, 1);
    worst = std::max(worst, std::abs(s11 - 1.0) - 0.01);
    worst = std::max(worst, std::abs(s13 - 1.32) - 0.01);
    worst = std::max(worst, std::abs(s31 - 0.75) - 0.01);
    if (max_distinguishable(2.0, s11) != 4) worst = std::max(worst, 1.0);
    if (max_distinguishable(2.0, s13) != 3) worst = std::max(worst, 1.0);
    if (max_distinguishable(2.0, s31) != 5) worst = std::max(worst, 1.0);
    out.push_back(detail::make_check("kerr/width-estimates", std::max(worst, 0.0), 1e-9));
  }

  return out;
}

// ---- identity ---------------------------------------------------------

inline std::vector<Check> verify_identity() {
  std::vector<Check> out;
  for (const WeightSpec& w : weight_registry()) {
    double worst = 0.0;
    for (int n = 0; n <= 20; ++n) worst = std::max(worst, moment_residual(w, n));
    Check c;
    c.name = "identity/moments-" + w.family.name +
             (w.negative_control ? "(negative-control)" : "");
    c.residual = worst;
    if (w.negative_control) {
      c.tol = 1e-2;
      c.pass = worst > 1e-2;  // must fail loudly
      c.expected_fail = true;
    } else {
      c.tol = 1e-8;
      c.pass = worst < c.tol;
    }
    out.push_back(c);
  }

  {  // kitten closure diagonal: <m| LHS |m> = 1, canonical k = 2
    const WeightSpec w = *find_weight("canonical");
    const ModelParams can = preset_canonical().params;
    double worst = 0.0;
    for (int m = 0; m <= 6; ++m) {
      const int j = m % 2;
      auto integrand = [&](double x) {
        if (x > 600.0) return 0.0;  // tail < e^-600; F^j overflows past ~710
        const double fj = kitten_norm(can, 2, j, x);
        return kitten_weight(w, can, 2, j, x) *
               std::exp(m * std::log(x) - log_rho(can, m)) / fj;
      };
      const double val = integrate_half_line(integrand, 400);
      worst = std::max(worst, std::abs(val - 1.0));
    }
    out.push_back(detail::make_check("identity/kitten-closure-diagonal", worst, 1e-8));
  }

  {  // composed sector weight value
    const WeightSpec w = *find_weight("canonical");
    const ModelParams can = preset_canonical().params;
    double worst = 0.0;
    for (double x : {0.3, 1.0, 2.5}) {
      const double got = kitten_weight(w, can, 2, 0, x);
      const double want = std::exp(-x) * std::cosh(x);
      worst = std::max(worst, std::abs(got - want) / want);
    }
    out.push_back(detail::make_check("identity/kitten-weight-form", worst, 1e-12));
  }

  return out;
}

// Per-moment verification report of the weight registry; families with no
// registered closed form appear once with status "no weight registered".
struct MomentRow {
  std::string family;
  int n = -1;  // -1 marks a status-only row
  double residual = 0.0;
  std::string status;
};

inline std::vector<MomentRow> identity_report(int max_n = 20) {
  std::vector<MomentRow> rows;
  for (const WeightSpec& w : weight_registry()) {
    for (int n = 0; n <= max_n; ++n) {
      const double r = moment_residual(w, n);
      std::string status;
      if (w.negative_control)
        status = r > 1e-2 ? "expected-fail" : "control-broken";
      else
        status = r < 1e-8 ? "ok" : "fail";
      rows.push_back({w.family.name + (w.negative_control ? "(control)" : ""),
                      n, r, status});
    }
  }
  for (const char* name :
       {"sg", "bg-su2", "gp-su2", "hydrogen", "dual-inverse-bosonic", "confluent"}) {
    rows.push_back({name, -1, 0.0, "no weight registered"});
  }
  return rows;
}

inline std::vector<Check> verify_suite(const std::string& which) {
  if (which == "series") return verify_series();
  if (which == "states") return verify_states();
  if (which == "kittens") return verify_kittens();
  if (which == "stats") return verify_stats();
  if (which == "kerr") return verify_kerr();
  if (which == "identity") return verify_identity();
  if (which == "all") {
    std::vector<Check> all;
    for (const char* s : {"series", "states", "kittens", "stats", "kerr", "identity"}) {
      auto v = verify_suite(s);
      all.insert(all.end(), v.begin(), v.end());
    }
    return all;
  }
  throw domain_error("unknown verify suite: " + which);
}

}  // namespace hypercat
