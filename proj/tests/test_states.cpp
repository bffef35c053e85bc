#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "hypercat/states.hpp"
#include "oracle.hpp"

using namespace hypercat;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("hcs amplitudes and normalization", "[states]") {
  // z = 0 is the vacuum exactly
  const FockVector vac = hcs({{0.0, 0.0}, preset_canonical().params});
  REQUIRE(vac.dim() == 1);
  CHECK(vac.amp[0] == Complex{1.0, 0.0});

  // Susskind-Glogower at z = 0.6: amplitudes sqrt(1-x) z^n
  const FockVector sg = hcs({{0.6, 0.0}, preset_sg().params});
  CHECK_THAT(sg.norm(), WithinAbs(1.0, 1e-10));
  const double pref = std::sqrt(1.0 - 0.36);
  for (int n = 0; n < 12; ++n)
    CHECK_THAT(sg.amp[n].real(), WithinRel(pref * std::pow(0.6, n), 1e-12));

  // GP SU(2) s=1 at z=0.5: binom(2,n)^{1/2} (iz)^n / (1+x)^s
  const auto gp2 = preset_gp_su2(1.0).params;
  const FockVector v = hcs({{0.5, 0.0}, gp2});
  REQUIRE(v.dim() == 3);
  const double x = 0.25;
  const double nf = 1.0 + x;
  const double binom[3] = {1.0, 2.0, 1.0};
  for (int n = 0; n < 3; ++n) {
    const Complex want = phase_at(PhaseRule::i_to_n, n) *
                         (std::sqrt(binom[n]) * std::pow(0.5, n) / nf);
    CHECK_THAT(std::abs(v.amp[n] - want), WithinAbs(0.0, 1e-14));
  }
  CHECK_THAT(v.norm(), WithinAbs(1.0, 1e-12));

  CHECK_THROWS_AS(hcs({{0.5, 0.0}, preset_canonical().params}, 2), domain_error);
  CHECK_THROWS_AS(hcs({{1.2, 0.0}, preset_sg().params}), domain_error);
}

TEST_CASE("overlap closed form vs Fock sums", "[states]") {
  const auto can = preset_canonical().params;
  CHECK_THAT(std::abs(overlap({{1.0, 0.0}, can}, {{1.0, 0.0}, can})),
             WithinRel(1.0, 1e-12));

  // canonical z=1, z'=i: modulus e^{-1}
  const Complex o = overlap({{1.0, 0.0}, can}, {{0.0, 1.0}, can});
  CHECK_THAT(std::abs(o), WithinRel(std::exp(-1.0), 1e-12));
  const Complex fock = inner(hcs({{1.0, 0.0}, can}, 60), hcs({{0.0, 1.0}, can}, 60));
  CHECK_THAT(std::abs(o - fock), WithinAbs(0.0, 1e-12));

  // SG closed form
  const auto sg = preset_sg().params;
  const Complex o2 = overlap({{0.5, 0.0}, sg}, {{0.25, 0.0}, sg});
  CHECK_THAT(o2.real(),
             WithinRel(std::sqrt(0.75) * std::sqrt(0.9375) / (1.0 - 0.125), 1e-12));

  CHECK_THROWS_AS(overlap({{0.5, 0.0}, sg}, {{0.5, 0.0}, can}), domain_error);
}

TEST_CASE("dual swaps the parameter lists", "[states]") {
  const auto can = preset_canonical().params;
  CHECK(same_family(dual(can), can));  // self-dual

  const auto sg = preset_sg().params;
  const auto d = dual(sg);
  CHECK(d.p() == 0);
  CHECK(d.q() == 1);
  CHECK(d.beta == std::vector<double>{1.0});
  CHECK(same_family(dual(d), sg));

  // f -> 1/f term-wise: |amp_dual(n)| |amp(n)| = x^n/(n! sqrt(N N_dual))
  const Complex z{0.6, 0.0};
  const double x = 0.36;
  const FockVector a = hcs({z, sg});
  const FockVector b = hcs({z, d});
  const double scale = 1.0 / std::sqrt(pfq(sg, x) * pfq(d, x));
  for (int n = 0; n < std::min(a.dim(), b.dim()); ++n) {
    const double want = std::exp(n * std::log(x) - std::lgamma(n + 1.0)) * scale;
    if (want < 1e-250) break;
    CHECK_THAT(std::abs(a.amp[n]) * std::abs(b.amp[n]), WithinRel(want, 1e-11));
  }
}

TEST_CASE("ladder operators", "[states]") {
  const auto can = preset_canonical().params;
  const FockVector one = basis_state(1, 4);
  CHECK_THAT(distance(annihilate_f(can, one), basis_state(0, 4)),
             WithinAbs(0.0, 1e-15));
  const FockVector zero = basis_state(0, 4);
  CHECK_THAT(distance(create_f(can, zero), basis_state(1, 5)), WithinAbs(0.0, 1e-15));

  // SG ladder has unit matrix elements
  const auto sg = preset_sg().params;
  for (int n = 1; n <= 6; ++n) {
    CHECK_THAT(distance(annihilate_f(sg, basis_state(n, 8)), basis_state(n - 1, 8)),
               WithinAbs(0.0, 1e-15));
    CHECK_THAT(distance(create_f(sg, basis_state(n, 8)), basis_state(n + 1, 9)),
               WithinAbs(0.0, 1e-15));
  }

  // adjointness on random vectors
  std::mt19937 rng(5150u);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (const Preset& p : {preset_canonical(), preset_bg_su11(1.5), preset_sg()}) {
    FockVector phi, psi;
    phi.amp.resize(14);
    psi.amp.resize(14);
    for (int i = 0; i < 14; ++i) {
      phi.amp[i] = {u(rng), u(rng)};
      psi.amp[i] = {u(rng), u(rng)};
    }
    const Complex lhs = inner(phi, create_f(p.params, psi));
    const Complex rhs = std::conj(inner(psi, annihilate_f(p.params, phi)));
    CHECK_THAT(std::abs(lhs - rhs), WithinAbs(0.0, 1e-12));
  }

  // eigenstate property on a coherent state
  const CoherentLabel lab{{1.3, 0.7}, preset_bg_su11(1.0).params};
  const FockVector s = hcs(lab);
  FockVector r = annihilate_f(lab.params, s);
  for (size_t i = 0; i < r.amp.size(); ++i) r.amp[i] -= lab.z * s.amp[i];
  CHECK_THAT(r.norm(), WithinAbs(0.0, 1e-10));
}

TEST_CASE("truncated ladders and the residual bound", "[states]") {
  // create_f stops cleanly at the top of a beta-truncated space
  const auto bg2 = preset_bg_su2(1.0).params;  // N = 2
  const FockVector top = basis_state(2, 3);
  CHECK(create_f(bg2, top).norm() == 0.0);
  const auto gp2 = preset_gp_su2(1.0).params;
  CHECK_THROWS_AS(create_f(gp2, top), family_error);

  // Proposition bound: BG SU(2) s=2, z=0.5
  const auto e = eigen_residual({{0.5, 0.0}, preset_bg_su2(2.0).params});
  CHECK(e.residual * e.residual < std::pow(0.5, 10) / (24.0 * 24.0));
  CHECK_THAT(e.bound * e.bound, WithinRel(std::pow(0.5, 10) / (24.0 * 24.0), 1e-12));

  // z = 0: exact eigenstate
  CHECK(eigen_residual({{0.0, 0.0}, preset_bg_su2(1.0).params}).residual == 0.0);

  // closed form equals the direct Fock computation, GP SU(2) s=3 z=0.3
  const CoherentLabel lab{{0.3, 0.0}, preset_gp_su2(3.0).params};
  const auto r = eigen_residual(lab);
  const FockVector st = hcs(lab);
  FockVector d = annihilate_f(lab.params, st);
  for (size_t i = 0; i < d.amp.size(); ++i) d.amp[i] -= lab.z * st.amp[i];
  CHECK_THAT(d.norm(), WithinRel(r.residual, 1e-12));

  CHECK_THROWS_AS(eigen_residual({{0.5, 0.0}, preset_canonical().params}),
                  domain_error);
  CHECK_THROWS_AS(eigen_residual({{1.5, 0.0}, preset_gp_su2(1.0).params}),
                  domain_error);  // q = p-1 needs |z| < 1
  CHECK_THROWS_AS(eigen_residual({{0.5, 0.0}, preset_bg_su2(1.0).params}, 2),
                  domain_error);
}

TEST_CASE("truncated hcs overlap matches Fock product", "[states]") {
  const auto bg2 = preset_bg_su2(1.5).params;
  const CoherentLabel a{{0.7, 0.2}, bg2}, b{{-0.3, 0.5}, bg2};
  const Complex closed = overlap(a, b);
  const Complex fock = inner(hcs(a), hcs(b));
  CHECK_THAT(std::abs(closed - fock), WithinAbs(0.0, 1e-13));
}

TEST_CASE("auto dim captures the tail", "[states]") {
  for (const Preset& p : {preset_canonical(), preset_bg_su11(1.0)}) {
    const double x = 4.0;
    const int d = auto_dim(p.params, x);
    const FockVector v = hcs({{2.0, 0.0}, p.params}, d);
    CHECK_THAT(v.norm(), WithinAbs(1.0, 1e-11));
    // the last retained amplitude is already tiny
    CHECK(std::abs(v.amp[d - 1]) < 1e-11);
  }
}
