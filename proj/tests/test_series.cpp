#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "hypercat/series.hpp"
#include "oracle.hpp"

using namespace hypercat;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("pochhammer basics and sign identity", "[series]") {
  CHECK(pochhammer(3.0, 0) == 1.0);
  CHECK(pochhammer(2.0, 2) == 6.0);
  CHECK(pochhammer(-4.0, 3) == -24.0);

  // (-m)_n = (-1)^n m!/(m-n)! for 0 <= n <= m
  for (int m = 1; m <= 12; ++m) {
    for (int n = 0; n <= m; ++n) {
      double falling = 1.0;
      for (int i = 0; i < n; ++i) falling *= m - i;
      CHECK(pochhammer(-m, n) == (n % 2 ? -falling : falling));
    }
  }

  // log-space branch agrees with lgamma for positive a
  CHECK_THAT(pochhammer(2.5, 40),
             WithinRel(std::exp(std::lgamma(42.5) - std::lgamma(2.5)), 1e-12));
}

TEST_CASE("f_factor on the named families", "[series]") {
  CHECK(f_factor(preset_canonical().params, 7) == 1.0);
  CHECK_THAT(f_factor(preset_sg().params, 4), WithinRel(0.5, 1e-15));  // 1/sqrt(n)
  CHECK_THAT(f_factor(preset_bg_su11(1.0).params, 3),
             WithinRel(2.0, 1e-15));  // sqrt(2s+n-1)
  CHECK_THROWS_AS(f_factor(preset_bg_su2(1.0).params, 3), domain_error);
}

TEST_CASE("rho values and recursion", "[series]") {
  const auto can = preset_canonical().params;
  CHECK(rho(can, 4) == 24.0);
  CHECK(rho(can, 0) == 1.0);
  CHECK(rho(preset_sg().params, 9) == 1.0);
  CHECK_THAT(rho(preset_bg_su11(1.0).params, 2), WithinRel(12.0, 1e-14));

  for (const Preset& p : {preset_confluent(1.5, 2.5), preset_bg_su11(2.0)}) {
    for (int n = 1; n <= 20; ++n) {
      const double expect =
          rho(p.params, n - 1) * (n * detail::f_squared_abs(p.params, n));
      CHECK(rho(p.params, n) == expect);  // exact, by construction
      CHECK_THAT(rho(p.params, n),
                 WithinRel(oracle::rho_lgamma(p.params.alpha, p.params.beta, n),
                           1e-11));
    }
  }
}

TEST_CASE("pfq closed forms and domain handling", "[series]") {
  CHECK_THAT(pfq(preset_canonical().params, 1.0), WithinRel(std::exp(1.0), 1e-14));
  CHECK_THAT(pfq(preset_gp_su11(1.0).params, 0.5), WithinRel(4.0, 1e-13));
  CHECK_THAT(pfq(preset_sg().params, 0.5), WithinRel(2.0, 1e-13));

  CHECK_THROWS_AS(pfq(preset_sg().params, 1.0), domain_error);
  CHECK_THROWS_AS(pfq(preset_inverse_bosonic().params, 0.1), family_error);
  CHECK(pfq(preset_inverse_bosonic().params, 0.0) == 1.0);  // only n = 0 survives

  // partial sums nondecreasing for positive parameters
  const auto m = preset_confluent(0.7, 2.3).params;
  double term = 1.0, partial = 1.0;
  for (int n = 0; n < 120; ++n) {
    term *= detail::pfq_ratio(m, 1.8, n);
    CHECK(term >= 0.0);
    CHECK(partial + term >= partial);
    partial += term;
  }
}

TEST_CASE("pfq_complex", "[series]") {
  const auto can = preset_canonical().params;
  const std::complex<double> ipi{0.0, M_PI};
  CHECK_THAT(std::abs(pfq_complex(can, ipi) - std::complex<double>{-1.0, 0.0}),
             WithinAbs(0.0, 1e-13));
  CHECK(pfq_complex(preset_bg_su11(2.0).params, {0.0, 0.0}) ==
        std::complex<double>{1.0, 0.0});

  const std::complex<double> w{0.3, 0.4};
  const auto got = pfq_complex(preset_sg().params, w);
  const auto want = 1.0 / (1.0 - w);  // geometric series
  CHECK_THAT(std::abs(got - want), WithinAbs(0.0, 1e-13));
}

TEST_CASE("pfq_truncated against Table-II closed forms", "[series]") {
  const auto gp2 = preset_gp_su2(1.0).params;
  CHECK_THAT(pfq_truncated(gp2, 0.5), WithinRel(2.25, 1e-15));  // (1+x)^{2s}
  CHECK(pfq_truncated(gp2, 0.0) == 1.0);

  // three-addend hand sum 1 + x/rho(1) + x^2/rho(2) for BG SU(2), s = 1
  const auto bg2 = preset_bg_su2(1.0).params;
  const double x = 0.3;
  const double hand = 1.0 + x / rho(bg2, 1) + x * x / rho(bg2, 2);
  CHECK_THAT(pfq_truncated(bg2, x), WithinRel(hand, 1e-15));
  CHECK_THAT(hand, WithinRel(1.1725, 1e-15));

  CHECK_THROWS_AS(pfq_truncated(preset_sg().params, 0.5), family_error);
  CHECK_THROWS_AS(pfq(gp2, 0.5), family_error);
}

TEST_CASE("kitten_norm closed forms", "[series]") {
  const auto can = preset_canonical().params;
  CHECK_THAT(kitten_norm(can, 2, 0, 1.0), WithinRel(std::cosh(1.0), 1e-14));
  CHECK_THAT(kitten_norm(can, 2, 1, 1.0), WithinRel(std::sinh(1.0), 1e-14));

  const auto sg = preset_sg().params;
  const double x = 0.25;
  CHECK_THAT(kitten_norm(sg, 3, 1, x),
             WithinRel(x / (1.0 - x * x * x), 1e-13));

  // truncated: k = N+1 leaves the single addend x^j/|rho(j)|
  const auto gp2 = preset_gp_su2(1.5).params;  // N = 3
  CHECK_THAT(kitten_norm(gp2, 4, 2, 0.7),
             WithinRel(std::pow(0.7, 2) / rho(gp2, 2), 1e-14));
  CHECK_THROWS_AS(kitten_norm(gp2, 3, 1, 0.7), domain_error);  // 3 does not divide 4
}

TEST_CASE("kitten_norm sector partition", "[series]") {
  std::mt19937 rng(7321u);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const Preset& p :
       {preset_canonical(), preset_bg_su11(1.5), preset_sg(), preset_hydrogen()}) {
    const bool disk = convergence_domain(p.params).kind != DomainKind::whole_plane;
    for (int rep = 0; rep < 6; ++rep) {
      const int k = 1 + static_cast<int>(u(rng) * 8);
      const double x = disk ? 0.9 * u(rng) : 5.0 * u(rng);
      double sum = 0.0;
      for (int j = 0; j < k; ++j) sum += kitten_norm(p.params, k, j, x);
      CHECK_THAT(sum, WithinRel(pfq(p.params, x), 1e-12));
    }
  }
}

TEST_CASE("appendix normalization route", "[series]") {
  const auto can = preset_canonical().params;
  CHECK_THAT(kitten_norm_appendix(can, 2, 0, 1.0), WithinRel(std::cosh(1.0), 1e-13));

  // Perelomov s = 3, k = 2, j = 0: 2F1(s, s+1/2; 1/2; x^2)
  const auto per = preset_gp_su11(3.0).params;
  const double x = 0.25;
  double f21 = 0.0;
  for (int n = 40; n >= 0; --n) {
    f21 += pochhammer(3.0, n) * pochhammer(3.5, n) /
           (pochhammer(0.5, n) * std::tgamma(n + 1.0)) * std::pow(x * x, n);
  }
  CHECK_THAT(kitten_norm_appendix(per, 2, 0, x), WithinRel(f21, 1e-12));

  const auto conf = preset_confluent(1.0, 3.0).params;
  CHECK_THAT(kitten_norm_appendix(conf, 5, 2, 0.8),
             WithinRel(kitten_norm(conf, 5, 2, 0.8), 1e-12));

  // randomized two-route agreement
  std::mt19937 rng(99120u);
  std::uniform_real_distribution<double> u(0.0, 1.0), par(0.3, 5.0);
  for (int rep = 0; rep < 60; ++rep) {
    const int p = static_cast<int>(u(rng) * 3);
    int q = static_cast<int>(u(rng) * 3);
    if (p > q + 1) q = p - 1;
    std::vector<double> a(p), b(q);
    for (auto& v : a) v = par(rng);
    for (auto& v : b) v = par(rng);
    const auto m = ModelParams::make(a, b);
    const int k = 1 + static_cast<int>(u(rng) * 5);
    const int j = static_cast<int>(u(rng) * k);
    const double xx = (p == q + 1) ? 0.05 + 0.85 * u(rng) : 0.05 + 2.95 * u(rng);
    CHECK_THAT(kitten_norm_appendix(m, k, j, xx),
               WithinRel(kitten_norm(m, k, j, xx), 1e-10));
  }
}

TEST_CASE("delta_list", "[series]") {
  CHECK(delta_list(1.0, 3, 3) == std::vector<double>{1.0 / 3, 2.0 / 3, 1.0});
  CHECK(delta_list(1.0, 1, 1) == std::vector<double>{1.0});
  CHECK(delta_list(2.0, 2, 2) == std::vector<double>{1.0, 1.5});
}

TEST_CASE("convergence domains", "[series]") {
  CHECK(convergence_domain(preset_canonical().params).kind == DomainKind::whole_plane);
  CHECK(convergence_domain(preset_gp_su11(1.0).params).kind == DomainKind::unit_disk);
  CHECK(convergence_domain(preset_inverse_bosonic().params).kind == DomainKind::empty);
  CHECK(convergence_domain(preset_gp_su2(2.0).params).kind == DomainKind::whole_plane);

  // p = q+1 with eta < 0 admits the boundary
  const auto soft = ModelParams::make({0.5, 0.5}, {2.0});
  const auto d = convergence_domain(soft);
  CHECK(d.kind == DomainKind::unit_disk_with_boundary);
  CHECK(d.eta == -1.0);
  CHECK(d.admits(1.0));
  CHECK_FALSE(convergence_domain(preset_sg().params).admits(1.0));
}

TEST_CASE("energy levels", "[series]") {
  CHECK(energy_level(preset_canonical().params, 1.0, 3) == 3.0);
  CHECK_THAT(energy_level(preset_hydrogen().params, 1.0, 4), WithinRel(0.96, 1e-14));
  CHECK(energy_level(preset_bg_su11(2.0).params, 1.0, 0) == 0.0);
}

TEST_CASE("family construction rules", "[series]") {
  CHECK_THROWS_AS(ModelParams::make({-2.5}, {}), family_error);
  CHECK_THROWS_AS(ModelParams::make({0.0}, {}), family_error);
  const auto m = ModelParams::make({-4.0}, {-6.0});
  CHECK(m.sign_count == 2);
  CHECK(m.trunc_N == 4);  // the entry closest to zero caps the ladder
}
