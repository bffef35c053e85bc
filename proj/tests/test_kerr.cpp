#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "hypercat/kerr.hpp"

using namespace hypercat;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

FockVector superpose(const std::vector<Complex>& w, const ModelParams& m,
                     Complex z, int k, int dim) {
  FockVector out;
  out.amp.assign(static_cast<size_t>(dim), Complex{});
  for (int l = 0; l < k; ++l) {
    const FockVector c = hcs({z * detail::unit_root(l, k), m}, dim);
    for (size_t i = 0; i < out.amp.size(); ++i)
      out.amp[i] += w[static_cast<size_t>(l)] * c.amp[i];
  }
  return out;
}

}  // namespace

TEST_CASE("kerr evolution phases", "[kerr]") {
  const auto can = preset_canonical().params;
  const CoherentLabel lab{{1.4, 0.0}, can};
  const FockVector init = hcs(lab);

  // full revival: t = tau returns the state
  const FockVector full = kerr_evolve(lab, KerrParams::fraction(1, 1), init.dim());
  CHECK_THAT(distance(full, init), WithinAbs(0.0, 1e-14));

  // half revival: parity image z -> -z
  const FockVector half = kerr_evolve(lab, KerrParams::fraction(1, 2), init.dim());
  const FockVector flipped = hcs({{-1.4, 0.0}, can}, init.dim());
  CHECK_THAT(distance(half, flipped), WithinAbs(0.0, 1e-13));

  // t = tau/k phases are k-periodic in n
  const int k = 5;
  const FockVector frac = kerr_evolve(lab, KerrParams::fraction(1, k), init.dim());
  for (int n = 0; n + k < init.dim(); ++n) {
    const Complex r1 = frac.amp[n] / init.amp[n];
    const Complex r2 = frac.amp[n + k] / init.amp[n + k];
    CHECK_THAT(std::abs(r1 - r2), WithinAbs(0.0, 1e-12));
  }

  // unitarity for generic kappa and t
  KerrParams kp;
  kp.kappa = 3;
  kp.omega_t = 0.937;
  CHECK_THAT(kerr_evolve(lab, kp).norm(), WithinAbs(1.0, 1e-13));

  // double half-revival identity
  FockVector twice = kerr_evolve(lab, KerrParams::fraction(1, 2), init.dim());
  for (int n = 0; n < twice.dim(); ++n)
    twice.amp[n] *= detail::kerr_phase(KerrParams::fraction(1, 2), n);
  CHECK_THAT(distance(twice, init), WithinAbs(0.0, 1e-14));
}

TEST_CASE("kitten decomposition of the evolved state", "[kerr]") {
  // k = 1: single coefficient 1
  const auto can = preset_canonical().params;
  const auto c1 = kitten_decomposition({{1.0, 0.0}, can}, 1);
  REQUIRE(c1.size() == 1);
  CHECK_THAT(std::abs(c1[0] - Complex{1.0, 0.0}), WithinAbs(0.0, 1e-14));

  // canonical k = 2, x = 1: |c0|^2 = cosh(1)/e, |c1|^2 = sinh(1)/e
  const auto c2 = kitten_decomposition({{1.0, 0.0}, can}, 2);
  CHECK_THAT(std::norm(c2[0]), WithinRel(std::cosh(1.0) / M_E, 1e-12));
  CHECK_THAT(std::norm(c2[1]), WithinRel(std::sinh(1.0) / M_E, 1e-12));

  // reconstruction for confluent (1,3), k = 6, z0 = 2
  const CoherentLabel lab{{2.0, 0.0}, preset_confluent(1.0, 3.0).params};
  const int k = 6;
  const FockVector evolved = kerr_evolve(lab, KerrParams::fraction(1, k));
  const auto coef = kitten_decomposition(lab, k);
  double total = 0.0;
  FockVector recon;
  recon.amp.assign(evolved.amp.size(), Complex{});
  for (int j = 0; j < k; ++j) {
    total += std::norm(coef[j]);
    const FockVector kj = kitten_fock({k, j, lab.z, lab.params}, evolved.dim());
    for (size_t i = 0; i < recon.amp.size(); ++i)
      recon.amp[i] += coef[j] * kj.amp[i];
  }
  CHECK_THAT(total, WithinAbs(1.0, 1e-12));
  CHECK_THAT(distance(recon, evolved), WithinAbs(0.0, 1e-10));
}

TEST_CASE("circle superposition weights", "[kerr]") {
  const auto can = preset_canonical().params;
  const CoherentLabel lab{{2.0, 0.0}, can};

  // k = 2: only l = 1 survives (parity flip)
  const auto w2 = circle_superposition_form(lab, 2);
  CHECK_THAT(std::abs(w2[0]), WithinAbs(0.0, 1e-14));
  CHECK_THAT(std::abs(w2[1]), WithinAbs(1.0, 1e-14));

  // k = 3: all weights of magnitude 1/sqrt(3)
  const auto w3 = circle_superposition_form(lab, 3);
  for (const Complex& w : w3)
    CHECK_THAT(std::abs(w), WithinRel(1.0 / std::sqrt(3.0), 1e-13));

  // k = 8: exactly four nonzero weights, on even l
  const auto w8 = circle_superposition_form(lab, 8);
  int nonzero = 0;
  for (int l = 0; l < 8; ++l) {
    if (std::abs(w8[l]) > 1e-12) {
      ++nonzero;
      CHECK(l % 2 == 0);
    }
  }
  CHECK(nonzero == 4);

  // layout classification
  CHECK(component_layout(15).m == 15);
  CHECK(component_layout(15).rotation_offset == 0.0);
  CHECK(component_layout(8).m == 4);
  CHECK(component_layout(8).rotation_offset == 0.0);
  CHECK(component_layout(6).m == 3);
  CHECK_THAT(component_layout(6).rotation_offset, WithinRel(M_PI / 3.0, 1e-15));
  CHECK(component_layout(2).m == 1);

  // weight support equals the layout for k <= 32
  for (int k = 1; k <= 32; ++k) {
    const auto w = circle_superposition_form(lab, k);
    const ComponentLayout lay = component_layout(k);
    int cnt = 0;
    for (int l = 0; l < k; ++l)
      if (std::abs(w[l]) > 1e-12) ++cnt;
    CHECK(cnt == lay.m);
  }

  // three-way identity at k = 4 for the Poissonian row
  const CoherentLabel conf{{2.0, 0.0}, preset_confluent(1.0, 1.0).params};
  const FockVector evolved = kerr_evolve(conf, KerrParams::fraction(1, 4));
  const auto w4 = circle_superposition_form(conf, 4);
  const FockVector recon = superpose(w4, conf.params, conf.z, 4, evolved.dim());
  CHECK_THAT(distance(evolved, recon), WithinAbs(0.0, 1e-10));
}

TEST_CASE("husimi grids", "[kerr]") {
  const auto can = preset_canonical().params;

  // self-overlap is 1 at the label
  GridSpec one;
  one.x_min = one.x_max = 2.0;
  one.y_min = one.y_max = 0.0;
  one.nx = one.ny = 1;
  const FockVector s = hcs({{2.0, 0.0}, can});
  const HusimiGrid g1 = husimi(s, can, one);
  CHECK_THAT(g1.at(0, 0), WithinRel(1.0, 1e-11));

  // canonical hcs(2) at the origin: e^{-4}
  GridSpec zero = one;
  zero.x_min = zero.x_max = 0.0;
  const HusimiGrid g0 = husimi(s, can, zero);
  CHECK_THAT(g0.at(0, 0), WithinRel(std::exp(-4.0), 1e-10));

  // closed-form circle route equals the Fock route
  const CoherentLabel lab{{2.0, 0.0}, preset_confluent(3.0, 1.0).params};
  const int k = 8;
  const auto w = circle_superposition_form(lab, k);
  GridSpec spec;
  spec.nx = spec.ny = 41;
  const HusimiGrid fast = husimi_circle(lab.params, lab.z, w, spec);
  const FockVector evolved = kerr_evolve(lab, KerrParams::fraction(1, k));
  const HusimiGrid slow = husimi(evolved, lab.params, spec);
  double worst = 0.0, peak = 0.0;
  for (size_t i = 0; i < fast.values.size(); ++i) {
    worst = std::max(worst, std::abs(fast.values[i] - slow.values[i]));
    peak = std::max(peak, fast.values[i]);
  }
  CHECK(worst < 1e-9);
  CHECK(peak <= 1.0 + 1e-12);

  // disk families mark out-of-domain cells as nulls
  GridSpec wide;
  wide.nx = wide.ny = 21;
  const FockVector sg_state = hcs({{0.5, 0.0}, preset_sg().params});
  const HusimiGrid gd = husimi(sg_state, preset_sg().params, wide);
  CHECK(std::isnan(gd.at(0, 0)));          // corner, |z| > 1
  CHECK(std::isfinite(gd.at(10, 10)));     // center
}

TEST_CASE("width estimates", "[kerr]") {
  CHECK_THAT(width_sigma(1, 1), WithinAbs(1.0, 0.01));
  CHECK_THAT(width_sigma(1, 3), WithinAbs(1.32, 0.01));
  CHECK_THAT(width_sigma(3, 1), WithinAbs(0.75, 0.01));

  CHECK(max_distinguishable(2.0, 1.0) == 4);
  CHECK(max_distinguishable(2.0, 0.75) == 5);
  CHECK(max_distinguishable(2.0, 1.32) == 3);
  CHECK(max_distinguishable(0.1, 5.0) == 1);
}
